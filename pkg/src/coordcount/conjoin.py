"""Cross-conjunct inequalities on registers and the LL x RR product filter."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .occurrence import Register, Side
from .typealg import Basic, as_basic


class Violation(enum.Enum):
    LAMBDA_VS_SATARG_R = "LambdaVsSatargR"
    RHO_VS_SATARG_L = "RhoVsSatargL"
    NEG_LAMBDA_VS_SATHEAD_L = "NegLambdaVsSatheadL"
    NEG_RHO_VS_SATHEAD_R = "NegRhoVsSatheadR"


class SideMismatch(ValueError):
    pass


def _check_sides(reg_l: Register, reg_r: Register):
    if reg_l.side is not Side.LEFT or reg_r.side is not Side.RIGHT:
        raise SideMismatch(
            f"expected (left, right) registers, got ({reg_l.side.value}, {reg_r.side.value})")


def lambda_rho(x, reg_l: Register, reg_r: Register):
    _check_sides(reg_l, reg_r)
    x = as_basic(x)
    ql, qr = reg_l[x], reg_r[x]
    return ql.freehead - qr.freearg, qr.freehead - ql.freearg


def conjoinable_for(x, reg_l: Register, reg_r: Register) -> frozenset:
    """The inequalities that fail for basic type ``x``; empty when x-conjoinable.

    The two ``-lambda``/``-rho`` bounds compare against every head saturated
    inside the conjunct, not only those under an away-facing slash: with the
    narrower count, derivable strings such as ``y/y s & s y\\s s\\y`` are
    rejected.
    """
    lam, rho = lambda_rho(x, reg_l, reg_r)
    x = as_basic(x)
    ql, qr = reg_l[x], reg_r[x]
    bad = set()
    if lam > qr.satarg:
        bad.add(Violation.LAMBDA_VS_SATARG_R)
    if rho > ql.satarg:
        bad.add(Violation.RHO_VS_SATARG_L)
    if -lam > reg_l.saturated_heads(x):
        bad.add(Violation.NEG_LAMBDA_VS_SATHEAD_L)
    if -rho > reg_r.saturated_heads(x):
        bad.add(Violation.NEG_RHO_VS_SATHEAD_R)
    return frozenset(bad)


@dataclass(frozen=True)
class TypeDetail:
    lam: int
    rho: int
    violations: frozenset


@dataclass(frozen=True)
class PairVerdict:
    conjoinable: bool
    details: dict  # Basic -> TypeDetail

    def render(self) -> str:
        lines = []
        for x in sorted(self.details):
            d = self.details[x]
            if d.violations:
                names = ",".join(sorted(v.value for v in d.violations))
                lines.append(f"{x}: λ={d.lam} ρ={d.rho} violated=[{names}]")
        return "\n".join(lines)


def conjoinable(reg_l: Register, reg_r: Register, goal) -> PairVerdict:
    """Check every basic type in either register except the goal."""
    _check_sides(reg_l, reg_r)
    goal = as_basic(goal)
    details = {}
    for x in set(reg_l.basics()) | set(reg_r.basics()):
        if x == goal:
            continue
        lam, rho = lambda_rho(x, reg_l, reg_r)
        details[x] = TypeDetail(lam, rho, conjoinable_for(x, reg_l, reg_r))
    return PairVerdict(all(not d.violations for d in details.values()), details)


def _pair_ok(reg_l: Register, reg_r: Register, goal: Basic) -> bool:
    # same arithmetic as conjoinable(), without building diagnostics
    left, right = reg_l.bounds, reg_r.bounds
    zero = (0, 0, 0, 0)
    for x in left.keys() | right.keys():
        if x == goal:
            continue
        sh_l, sa_l, fh_l, fa_l = left.get(x, zero)
        sh_r, sa_r, fh_r, fa_r = right.get(x, zero)
        lam = fh_l - fa_r
        rho = fh_r - fa_l
        if lam > sa_r or rho > sa_l or -lam > sh_l or -rho > sh_r:
            return False
    return True


def sci(value, digits: int = 2) -> str:
    """Render like ``6.0e3`` / ``3.3e-1``; exact zero renders as ``0``."""
    if value == 0:
        return "0"
    mantissa, exp = f"{float(value):.{digits - 1}e}".split("e")
    return f"{mantissa}e{int(exp)}"


def sci_count(n: int) -> str:
    """Counts drop the second digit when one digit is already exact (``2e1``)."""
    short = sci(n, 1)
    if n == 0 or float(short) == n:
        return short
    return sci(n, 2)


@dataclass(frozen=True)
class FilterStats:
    pa: int
    ll: int
    rr: int
    aa: int

    @property
    def cp(self) -> int:
        return self.ll * self.rr

    @staticmethod
    def _ratio(num, den) -> Optional[Fraction]:
        return Fraction(num, den) if den else None

    @property
    def cp_pa(self):
        return self._ratio(self.cp, self.pa)

    @property
    def aa_cp(self):
        return self._ratio(self.aa, self.cp)

    @property
    def aa_pa(self):
        return self._ratio(self.aa, self.pa)

    def percentages(self):
        """CP/PA, AA/CP and AA/PA as percentages (None where undefined)."""
        return tuple(None if r is None else r * 100 for r in (self.cp_pa, self.aa_cp, self.aa_pa))


def filter_product(ll: list, rr: list, goal, pa: Optional[int] = None):
    """Keep the (left, right) pairs whose registers are conjoinable.

    ``ll`` and ``rr`` hold ``(assignment, register)`` pairs.  Survivors come
    back in row-major order of (left index, right index).
    """
    goal = as_basic(goal)
    for _, reg in ll:
        if reg.side is not Side.LEFT:
            raise SideMismatch("LL contains a non-left register")
    for _, reg in rr:
        if reg.side is not Side.RIGHT:
            raise SideMismatch("RR contains a non-right register")
    survivors = [(l, r) for l in ll for r in rr if _pair_ok(l[1], r[1], goal)]
    stats = FilterStats(pa if pa is not None else len(ll) * len(rr),
                        len(ll), len(rr), len(survivors))
    return survivors, stats
