"""Lexicon files, coordinator splitting and per-side assignment enumeration."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .occurrence import Register, Side, saturate
from .typealg import TypeSyntaxError, format_type, parse_type


class LexiconError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownWord(KeyError):
    def __init__(self, word):
        super().__init__(word)
        self.word = word

    def __str__(self):
        return f"unknown word {self.word!r}"


class CoordinationError(ValueError):
    pass


class NoCoordinator(CoordinationError):
    pass


class MultipleCoordinators(CoordinationError):
    pass


class EmptySide(CoordinationError):
    pass


@dataclass(frozen=True)
class Lexicon:
    # word -> types, deduplicated and ordered by their textual form
    entries: dict

    def types_of(self, word: str) -> tuple:
        try:
            return self.entries[word]
        except KeyError:
            raise UnknownWord(word) from None

    def __contains__(self, word):
        return word in self.entries

    @classmethod
    def from_mapping(cls, mapping: dict) -> "Lexicon":
        entries = {}
        for word, types in mapping.items():
            parsed = {parse_type(t) if isinstance(t, str) else t for t in types}
            if not parsed:
                raise LexiconError(f"word {word!r} has no types")
            entries[word] = tuple(sorted(parsed, key=format_type))
        return cls(entries)


def load_lexicon(text: str) -> Lexicon:
    """Read ``word<TAB>type,type,...`` lines; ``#`` starts a comment line."""
    merged = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise LexiconError("expected word<TAB>types", lineno)
        word, _, rest = line.partition("\t")
        word = word.strip()
        if not word:
            raise LexiconError("empty word", lineno)
        cells = [c.strip() for c in rest.split(",")]
        if not any(cells):
            raise LexiconError(f"no types for {word!r}", lineno)
        for cell in cells:
            try:
                merged.setdefault(word, set()).add(parse_type(cell))
            except TypeSyntaxError as exc:
                raise LexiconError(str(exc), lineno) from None
    return Lexicon.from_mapping(merged)


@dataclass(frozen=True)
class Assignment:
    words: tuple
    types: tuple

    def __post_init__(self):
        if len(self.words) != len(self.types):
            raise ValueError("words and types differ in length")

    def __str__(self):
        return " ".join(format_type(t) for t in self.types)


@dataclass(frozen=True)
class CoordSplit:
    left: tuple
    coordinator: str
    right: tuple


def tokenize(sentence: str) -> list:
    return sentence.split()


def possible_assignments_count(words: Iterable[str], lex: Lexicon) -> int:
    return math.prod(len(lex.types_of(w)) for w in words)


def split_coordination(words, coord: str = "&") -> CoordSplit:
    words = list(words)
    hits = [i for i, w in enumerate(words) if w == coord]
    if not hits:
        raise NoCoordinator(f"no coordinator {coord!r} in sentence")
    if len(hits) > 1:
        raise MultipleCoordinators(f"{len(hits)} occurrences of {coord!r}")
    i = hits[0]
    if i == 0 or i == len(words) - 1:
        raise EmptySide(f"coordinator {coord!r} leaves an empty conjunct")
    return CoordSplit(tuple(words[:i]), coord, tuple(words[i + 1:]))


@dataclass
class SideSet:
    """Surviving assignments of one conjunct with their registers."""
    side: Side
    members: list = field(default_factory=list)
    truncated: bool = False
    inspected: int = 0

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def enumerate_side(words, lex: Lexicon, side: Side, cap: Optional[int] = None,
                   accept: Optional[Callable] = None) -> SideSet:
    """Stream the product of type choices, keeping those with an Ok verdict.

    Candidates are visited in lexicographic order of per-word type indices.
    ``accept(types, register)`` can veto additional candidates.  With ``cap``
    the enumeration stops at the first survivor beyond it and the result is
    flagged as truncated.
    """
    words = tuple(words)
    if not words:
        raise ValueError("cannot enumerate an empty conjunct")
    choices = [lex.types_of(w) for w in words]
    out = SideSet(side)
    for types in itertools.product(*choices):
        out.inspected += 1
        reg, verdict = saturate(types, side)
        if not verdict.ok or (accept is not None and not accept(types, reg)):
            continue
        if cap is not None and len(out.members) >= cap:
            out.truncated = True
            break
        out.members.append((Assignment(words, types), reg))
    return out
