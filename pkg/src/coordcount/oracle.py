"""Brute-force AB (application-only) derivability, with and without coordination.

This is the ground truth the count filters are checked against.  A
coordination ``L & R => goal`` holds when some non-empty suffix of ``L`` and
some non-empty prefix of ``R`` both reduce to one type ``c`` and the string
with the shared material collapsed to a single ``c`` reduces to the goal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .typealg import LEFT, RIGHT, CatType, Frac, as_seq, as_type, format_type


def _combine(a: CatType, b: CatType):
    if isinstance(a, Frac) and a.slash == RIGHT and a.argument == b:
        yield a.result
    if isinstance(b, Frac) and b.slash == LEFT and b.argument == a:
        yield b.result


@lru_cache(maxsize=1 << 16)
def _chart_top(s: tuple) -> frozenset:
    n = len(s)
    chart = {(i, i + 1): {t} for i, t in enumerate(s)}
    for width in range(2, n + 1):
        for i in range(n - width + 1):
            j = i + width
            cell = set()
            for k in range(i + 1, j):
                for a in chart[i, k]:
                    for b in chart[k, j]:
                        cell.update(_combine(a, b))
            chart[i, j] = cell
    return frozenset(chart[0, n])


def derivable_types(s) -> frozenset:
    """Every type the whole of ``s`` reduces to by rightward/leftward application."""
    s = as_seq(s)
    if not s:
        raise ValueError("empty sequence")
    return _chart_top(s)


def ab_derive(s, goal) -> bool:
    return as_type(goal) in derivable_types(s)


@dataclass(frozen=True)
class CoordWitness:
    y_prime: tuple
    c1: tuple
    c2: tuple
    z_prime: tuple
    c: CatType

    def __str__(self):
        fmt = lambda seq: " ".join(map(format_type, seq)) or "ε"
        return (f"Y'=[{fmt(self.y_prime)}] C1=[{fmt(self.c1)}] C2=[{fmt(self.c2)}] "
                f"Z'=[{fmt(self.z_prime)}] c={format_type(self.c)}")


def coord_derive(left, right, goal):
    """Return ``(True, witness)`` for the first coordination witness, else ``(False, None)``.

    Witness order: longest C1, then longest C2, then ``c`` by its notation.
    """
    left, right, goal = as_seq(left), as_seq(right), as_type(goal)
    if not left or not right:
        raise ValueError("both conjuncts must be non-empty")
    for i in range(len(left)):
        y_prime, c1 = left[:i], left[i:]
        top1 = _chart_top(c1)
        for j in range(len(right), 0, -1):
            c2, z_prime = right[:j], right[j:]
            shared = top1 & _chart_top(c2)
            for c in sorted(shared, key=format_type):
                if goal in _chart_top(y_prime + (c,) + z_prime):
                    return True, CoordWitness(y_prime, c1, c2, z_prime, c)
    return False, None


def check_witness(w: CoordWitness, goal) -> bool:
    return (ab_derive(w.c1, w.c) and ab_derive(w.c2, w.c)
            and ab_derive(w.y_prime + (w.c,) + w.z_prime, goal))
