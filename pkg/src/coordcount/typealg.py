"""Categorial types, their text notation, and the count protocol.

Notation is result-first: ``a/b`` looks for ``b`` on its right and ``a\\b``
looks for ``b`` on its left.  Both slashes share one precedence level and
associate to the left, so ``z\\x\\u`` reads as ``(z\\x)\\u``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

RIGHT = "/"
LEFT = "\\"

_ATOM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class TypeSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1} in {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True, order=True)
class Basic:
    name: str

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(f"illegal basic type name {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Frac:
    result: "CatType"
    slash: str
    argument: "CatType"

    def __post_init__(self):
        if self.slash not in (RIGHT, LEFT):
            raise ValueError(f"unknown slash {self.slash!r}")

    def __str__(self):
        return format_type(self)


CatType = Union[Basic, Frac]


def _tokenize(text: str):
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in "()/\\":
            yield ch, pos
            pos += 1
        else:
            m = _ATOM_RE.match(text, pos)
            if not m:
                raise TypeSyntaxError(f"illegal character {ch!r}", text, pos)
            yield m.group(), pos
            pos = m.end()
    yield None, len(text)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        left = self.operand()
        while self.peek()[0] in (RIGHT, LEFT):
            slash, _ = self.take()
            left = Frac(left, slash, self.operand())
        return left

    def operand(self):
        tok, pos = self.take()
        if tok == "(":
            inner = self.expr()
            close, cpos = self.take()
            if close != ")":
                raise TypeSyntaxError("expected ')'", self.text, cpos)
            return inner
        if tok is None or tok in "()/\\":
            raise TypeSyntaxError("expected a type", self.text, pos)
        return Basic(tok)


def parse_type(text: str) -> CatType:
    """Parse type notation such as ``(s\\np)/np`` into a :data:`CatType`."""
    if not text or not text.strip():
        raise TypeSyntaxError("empty type", text, 0)
    parser = _Parser(text)
    t = parser.expr()
    tok, pos = parser.peek()
    if tok is not None:
        raise TypeSyntaxError(f"unexpected {tok!r}", text, pos)
    return t


def format_type(t: CatType) -> str:
    if isinstance(t, Basic):
        return t.name
    arg = format_type(t.argument)
    if isinstance(t.argument, Frac):
        arg = f"({arg})"
    return f"{format_type(t.result)}{t.slash}{arg}"


def as_type(t) -> CatType:
    return parse_type(t) if isinstance(t, str) else t


def as_seq(items: Iterable) -> tuple:
    return tuple(as_type(t) for t in items)


def as_basic(x) -> Basic:
    if isinstance(x, Basic):
        return x
    t = parse_type(x)
    if not isinstance(t, Basic):
        raise ValueError(f"expected a basic type, got {x!r}")
    return t


def depth(t: CatType) -> int:
    if isinstance(t, Basic):
        return 0
    return 1 + max(depth(t.result), depth(t.argument))


def _signed_leaves(t: CatType, sign: int, acc: Counter):
    if isinstance(t, Basic):
        acc[t] += sign
    else:
        _signed_leaves(t.result, sign, acc)
        _signed_leaves(t.argument, -sign, acc)


def counts(s: Sequence[CatType]) -> Counter:
    """Count of every basic type in ``s`` (zero entries included)."""
    acc = Counter()
    for t in s:
        _signed_leaves(t, 1, acc)
    return acc


def count(x, t) -> int:
    x = as_basic(x)
    t = as_type(t)
    if isinstance(t, Basic):
        return 1 if t == x else 0
    # both slashes subtract the argument count
    return count(x, t.result) - count(x, t.argument)


def count_seq(x, s) -> int:
    return sum(count(x, t) for t in as_seq(s))


def basics_of(s) -> frozenset:
    out = set()
    stack = list(as_seq(s))
    while stack:
        t = stack.pop()
        if isinstance(t, Basic):
            out.add(t)
        else:
            stack.append(t.result)
            stack.append(t.argument)
    return frozenset(out)


def count_invariance_holds(s, goal) -> bool:
    """Necessary (not sufficient) condition for ``s => goal`` with basic goal.

    Every basic type other than the goal must balance to zero and the goal
    itself must count one.
    """
    s = as_seq(s)
    goal = as_basic(goal)
    if not s:
        raise ValueError("count invariance needs a non-empty sequence")
    c = counts(s)
    return all(c[x] == (1 if x == goal else 0) for x in basics_of(s) | {goal})
