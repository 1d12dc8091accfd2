"""
Labeling schemes: the word of signed letters read along a polygon boundary.

Positions are 0-based here; the CLI converts from the 1-based indices used
on the command line.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

from .exceptions import GlueIndexError, SchemeError, SchemeParseError


INVERSE_SUFFIX = "^-1"
ALPHABET_SIZE = 26

# a0 and a are the same letter; a01 is a1
_TOKEN_RE = re.compile(r"^([a-z])([0-9]*)(\^-1|')?$")


def letter_name(index: int) -> str:
    """Render a letter index: a..z, then a1..z1, a2.. and so on."""
    if index < 0:
        raise SchemeError(f"negative letter index: {index}")
    base = chr(ord("a") + index % ALPHABET_SIZE)
    cycle = index // ALPHABET_SIZE
    return base if cycle == 0 else f"{base}{cycle}"


def letter_index(name: str) -> int:
    m = _TOKEN_RE.match(name)
    if m is None or m.group(3) is not None:
        raise SchemeParseError(f"malformed letter name: '{name}'", token=name)
    cycle = int(m.group(2)) if m.group(2) else 0
    return cycle * ALPHABET_SIZE + (ord(m.group(1)) - ord("a"))


@dataclass(frozen=True)
class Side:
    letter: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.exponent not in (1, -1):
            raise SchemeError(f"exponent must be +1 or -1, got {self.exponent}")
        if self.letter < 0:
            raise SchemeError(f"negative letter index: {self.letter}")

    @property
    def sort_key(self) -> Tuple[int, int]:
        # +1 sorts before -1
        return (self.letter, 0 if self.exponent == 1 else 1)

    def inverse(self) -> "Side":
        return Side(self.letter, -self.exponent)

    def __str__(self) -> str:
        name = letter_name(self.letter)
        return name if self.exponent == 1 else name + INVERSE_SUFFIX


@dataclass(frozen=True)
class Scheme:
    sides: Tuple[Side, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.sides, tuple):
            object.__setattr__(self, "sides", tuple(self.sides))
        if len(self.sides) == 0:
            raise SchemeError("scheme must have at least one side")
        counts = Counter(s.letter for s in self.sides)
        for letter, count in counts.items():
            if count > 2:
                raise SchemeError(
                    f"letter '{letter_name(letter)}' appears {count} times (at most 2 allowed)"
                )

    @staticmethod
    def free(length: int) -> "Scheme":
        """The unglued polygon a b c ... with `length` sides."""
        if length < 1:
            raise SchemeError(f"scheme length must be positive, got {length}")
        return Scheme(tuple(Side(i, 1) for i in range(length)))

    def __len__(self) -> int:
        return len(self.sides)

    def __iter__(self) -> Iterator[Side]:
        return iter(self.sides)

    def __getitem__(self, i: int) -> Side:
        return self.sides[i]

    def __str__(self) -> str:
        return format_scheme(self)

    @property
    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(s.sort_key for s in self.sides)

    @cached_property
    def _positions(self) -> Dict[int, Tuple[int, ...]]:
        positions: Dict[int, List[int]] = {}
        for i, side in enumerate(self.sides):
            positions.setdefault(side.letter, []).append(i)
        return {k: tuple(v) for k, v in positions.items()}

    def partner(self, i: int) -> Optional[int]:
        """Position glued to position i, or None when side i is free."""
        occurrences = self._positions[self.sides[i].letter]
        if len(occurrences) == 1:
            return None
        return occurrences[1] if occurrences[0] == i else occurrences[0]

    def is_free(self, i: int) -> bool:
        return len(self._positions[self.sides[i].letter]) == 1

    @property
    def free_positions(self) -> Tuple[int, ...]:
        return tuple(i for i in range(len(self.sides)) if self.is_free(i))

    @property
    def glued_pairs(self) -> Tuple[Tuple[int, int], ...]:
        pairs = [p for p in self._positions.values() if len(p) == 2]
        return tuple(sorted((p[0], p[1]) for p in pairs))

    @property
    def letter_count(self) -> int:
        return len(self._positions)


def parse_scheme(text: str) -> Scheme:
    """Parse whitespace-separated tokens such as ``a b a^-1 b'``."""
    tokens = text.split()
    if not tokens:
        raise SchemeParseError("empty scheme")
    sides: List[Side] = []
    for token in tokens:
        m = _TOKEN_RE.match(token)
        if m is None:
            raise SchemeParseError(f"malformed token: '{token}'", token=token)
        index = letter_index(m.group(1) + (m.group(2) or ""))
        sides.append(Side(index, -1 if m.group(3) else 1))
    return Scheme(tuple(sides))


def format_scheme(s: Scheme) -> str:
    return " ".join(str(side) for side in s.sides)


def relabel(w: Scheme) -> Scheme:
    """Standard labeling: letters by first appearance, first occurrences positive."""
    out: List[Optional[Side]] = [None] * len(w)
    next_letter = 0
    for i, side in enumerate(w.sides):
        if out[i] is not None:
            continue
        out[i] = Side(next_letter, 1)
        j = w.partner(i)
        if j is not None:
            same = w.sides[j].exponent == side.exponent
            out[j] = Side(next_letter, 1 if same else -1)
        next_letter += 1
    return Scheme(tuple(s for s in out if s is not None))


def permute(w: Scheme, k: int) -> Scheme:
    """Rotate the word left by k positions."""
    if not 0 <= k < len(w):
        raise SchemeError(f"rotation {k} out of range for scheme of length {len(w)}")
    return Scheme(w.sides[k:] + w.sides[:k])


def flip(w: Scheme) -> Scheme:
    """Reverse the word and invert every exponent."""
    return Scheme(tuple(side.inverse() for side in reversed(w.sides)))


def glue(w: Scheme, i1: int, i2: int, orientable: bool) -> Scheme:
    """Glue the free sides at positions i1 and i2, then relabel.

    orientable=True identifies with opposite exponents (g(x) ~ h(x)), False
    with equal exponents (g(x) ~ h(1-x)).
    """
    m = len(w)
    for i in (i1, i2):
        if not 0 <= i < m:
            raise GlueIndexError(f"position {i} out of range for scheme of length {m}")
    if i1 == i2:
        raise GlueIndexError(f"cannot glue position {i1} to itself")
    for i in (i1, i2):
        if not w.is_free(i):
            raise GlueIndexError(f"side at position {i} ('{w[i]}') is already glued")
    e = w[i1]
    sides = list(w.sides)
    sides[i2] = e.inverse() if orientable else e
    return relabel(Scheme(tuple(sides)))
