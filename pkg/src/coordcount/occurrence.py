"""Signed basic-type occurrences and per-conjunct saturation registers.

Within one conjunct every argument occurrence of a basic type is matched to a
head occurrence of the same type lying on the side the argument points to
(see :func:`can_saturate` for heads nested in complex arguments).  The
matching is maximum-cardinality; among maximum matchings the one that
saturates the most arguments facing away from the coordinator is kept, which
makes ``sathead`` as large as possible and the free counts as small as
possible.  An argument never matches a head inside its own token.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .typealg import LEFT, RIGHT, Basic, CatType, Frac, as_seq


class Polarity(enum.Enum):
    HEAD = "+"
    ARG = "-"


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def facing(self) -> str:
        """Slash of arguments that point towards the coordinator."""
        return RIGHT if self is Side.LEFT else LEFT

    @property
    def away(self) -> str:
        return LEFT if self is Side.LEFT else RIGHT


@dataclass(frozen=True)
class Occurrence:
    basic: Basic
    polarity: Polarity
    direction: Optional[str]  # "/", "\\" or None for top-level heads
    token: int = 0
    rank: int = 0

    @property
    def position(self):
        return (self.token, self.rank)

    def __str__(self):
        d = {None: "", RIGHT: "/", LEFT: "\\"}[self.direction]
        return f"{self.polarity.value}{d}{self.basic}@{self.token}.{self.rank}"


def occurrences(t: CatType, token: int = 0) -> list:
    """Pre-order leaves of ``t`` with polarity and effective direction.

    The direction of a nested occurrence is taken from the outermost slash
    that introduced an argument above it.
    """
    out = []

    def walk(node, polarity, direction):
        if isinstance(node, Basic):
            out.append(Occurrence(node, polarity, direction, token, len(out)))
            return
        walk(node.result, polarity, direction)
        flipped = Polarity.ARG if polarity is Polarity.HEAD else Polarity.HEAD
        walk(node.argument, flipped, direction or node.slash)

    walk(t, Polarity.HEAD, None)
    return out


def seq_occurrences(s) -> list:
    out = []
    for i, t in enumerate(as_seq(s)):
        out.extend(occurrences(t, i))
    return out


class Quadruple(NamedTuple):
    sathead: int = 0
    satarg: int = 0
    freehead: int = 0
    freearg: int = 0

    def __str__(self):
        return "<{},{},{},{}>".format(*self)


ZERO = Quadruple()


@dataclass(frozen=True)
class Register:
    """Quadruples of one conjunct, keyed by basic type.

    ``matched_heads`` counts, per type, the heads saturated inside the
    conjunct by an argument of either direction.  The quadruple's
    ``sathead`` only counts those saturated by arguments facing away from the
    coordinator; the conjoinability bounds use the wider count.
    """
    side: Side
    entries: tuple  # sorted ((Basic, Quadruple), ...)
    matched_heads: tuple = ()  # sorted ((Basic, int), ...), zeros omitted

    def __post_init__(self):
        quads = dict(self.entries)
        matched = dict(self.matched_heads)
        object.__setattr__(self, "_quads", quads)
        object.__setattr__(self, "_matched", matched)
        # (saturated heads, satarg, freehead, freearg), read by the product filter
        object.__setattr__(self, "bounds", {
            x: (matched.get(x, 0), q.satarg, q.freehead, q.freearg)
            for x, q in quads.items()})

    @classmethod
    def build(cls, side: Side, quads: dict, matched: Optional[dict] = None) -> "Register":
        matched = {x: n for x, n in (matched or {}).items() if n}
        return cls(side, tuple(sorted(quads.items())), tuple(sorted(matched.items())))

    def __getitem__(self, x: Basic) -> Quadruple:
        return self._quads.get(x, ZERO)

    def saturated_heads(self, x: Basic) -> int:
        return self._matched.get(x, 0)

    def basics(self):
        return self._quads.keys()

    def render(self) -> str:
        return "\n".join(f"{x}: {q}" for x, q in self.entries)


class FailReason(enum.Enum):
    FREE_LEFTWARD_ARG_IN_LEFT = "FreeLeftwardArgInLeft"
    FREE_RIGHTWARD_ARG_IN_RIGHT = "FreeRightwardArgInRight"


@dataclass(frozen=True)
class SideVerdict:
    ok: bool
    reason: Optional[FailReason] = None
    offender: Optional[Occurrence] = None

    def __str__(self):
        if self.ok:
            return "Ok"
        return f"Fail {self.reason.value} ({self.offender})"


OK = SideVerdict(True)


def _points_at(direction: Optional[str], source: int, target: int) -> bool:
    if direction == RIGHT:
        return target > source
    if direction == LEFT:
        return target < source
    return False


def can_saturate(arg: Occurrence, head: Occurrence) -> bool:
    """Whether ``head`` may saturate ``arg`` (never within one token).

    Either the argument points at the head's token, or the head sits inside
    a complex argument whose slot faces the argument's token: that slot
    consumes a whole type there, and the head cancels an argument of it.
    """
    if arg.token == head.token:
        return False
    return (_points_at(arg.direction, arg.token, head.token)
            or _points_at(head.direction, head.token, arg.token))


def match_type(args: list, heads: list, first: str) -> dict:
    """Maximum direction-respecting matching between ``args`` and ``heads``.

    Arguments whose direction is ``first`` are augmented before the others.
    Augmenting never unmatches a vertex, so the result is a maximum matching
    that also saturates as many ``first`` arguments as any matching can.
    Returns a mapping arg index -> head index.
    """
    adj = [[j for j, h in enumerate(heads) if can_saturate(a, h)] for a in args]
    head_owner = {}

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in head_owner or augment(head_owner[j], seen):
                head_owner[j] = i
                return True
        return False

    order = sorted(range(len(args)), key=lambda i: args[i].direction != first)
    for i in order:
        augment(i, set())
    return {i: j for j, i in head_owner.items()}


def saturate(s, side: Side):
    """Build the register of ``s`` as a conjunct on ``side`` plus its verdict."""
    occ = seq_occurrences(s)
    by_type = defaultdict(lambda: ([], []))
    for o in occ:
        by_type[o.basic][o.polarity is Polarity.HEAD].append(o)

    entries, saturated = {}, {}
    verdict = OK
    for x, (args, heads) in by_type.items():
        matched = match_type(args, heads, side.away)
        sathead = satarg = freearg = 0
        for i, a in enumerate(args):
            if a.direction == side.facing:
                if i in matched:
                    satarg += 1
                else:
                    freearg += 1
            elif i in matched:
                sathead += 1
            elif verdict.ok or a.position < verdict.offender.position:
                reason = (FailReason.FREE_LEFTWARD_ARG_IN_LEFT if side is Side.LEFT
                          else FailReason.FREE_RIGHTWARD_ARG_IN_RIGHT)
                verdict = SideVerdict(False, reason, a)
        entries[x] = Quadruple(sathead, satarg, len(heads) - len(matched), freearg)
        saturated[x] = len(matched)
    return Register.build(side, entries, saturated), verdict


def quad(reg: Register, x) -> Quadruple:
    if isinstance(x, str):
        x = Basic(x)
    return reg[x]


def mirror(t: CatType) -> CatType:
    """Flip every slash in ``t``."""
    if isinstance(t, Basic):
        return t
    slash = LEFT if t.slash == RIGHT else RIGHT
    return Frac(mirror(t.result), slash, mirror(t.argument))
