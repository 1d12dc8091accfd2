"""
Exhaustive enumeration of edge gluings of a configuration.

The raw stream lists every set of k >= 1 disjoint side pairs with both
orientation choices per pair; canonical forms under the configuration's
symmetry group pick one representative per class.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterable, Iterator, List, Sequence, Set, Tuple

from glue_core.classify import GluedComplex, SurfaceType, classify, is_connected
from glue_core.exceptions import EnumerationError, InvariantViolation
from glue_core.scheme import Scheme, glue
from glue_core.symmetry import SymmetryGroup, canonical_form, full_dihedral

from .configurations import Configuration

logger = logging.getLogger(__name__)

EQUIVALENCES = ("stabilizer", "dihedral")

Pair = Tuple[int, int]


@dataclass(frozen=True)
class GluingClass:
    representative: Scheme
    configuration: Configuration
    surface: SurfaceType


def partial_matchings(positions: Sequence[int], k: int) -> Iterator[Tuple[Pair, ...]]:
    """Sets of k disjoint pairs, in lexicographic order."""
    if k == 0:
        yield ()
        return
    for idx, i in enumerate(positions):
        rest = positions[idx + 1 :]
        if len(rest) < 2 * k - 1:
            return
        for j in rest:
            remaining = tuple(x for x in rest if x != j)
            for tail in partial_matchings(remaining, k - 1):
                yield ((i, j),) + tail


def raw_stream_size(m: int) -> int:
    return sum(
        factorial(m) // (factorial(k) * factorial(m - 2 * k)) for k in range(1, m // 2 + 1)
    )


def raw_gluings(m: int) -> Iterator[Scheme]:
    """Every gluing of an m-gon with at least one glued pair."""
    base = Scheme.free(m)
    positions = tuple(range(m))
    for k in range(1, m // 2 + 1):
        for pairs in partial_matchings(positions, k):
            # orientable before non-orientable
            for orientations in product((True, False), repeat=k):
                w = base
                for (i, j), orientable in zip(pairs, orientations):
                    w = glue(w, i, j, orientable)
                yield w


def equivalence_group(c: Configuration, equivalence: str = "stabilizer") -> SymmetryGroup:
    if equivalence == "stabilizer":
        return c.symmetries
    if equivalence == "dihedral":
        return full_dihedral(c.polygon_size)
    raise EnumerationError(f"unknown equivalence '{equivalence}' (expected one of {EQUIVALENCES})")


def canonicalize_slice(schemes: Iterable[Scheme], group: SymmetryGroup) -> Set[Scheme]:
    return {canonical_form(w, group) for w in schemes}


def merge_canonical_sets(parts: Iterable[Set[Scheme]]) -> List[Scheme]:
    merged: Set[Scheme] = set()
    for part in parts:
        merged |= part
    return sorted(merged, key=lambda s: s.sort_key)


def _slices(items: List[Scheme], count: int) -> List[List[Scheme]]:
    size = -(-len(items) // count)
    return [items[i : i + size] for i in range(0, len(items), size)]


def canonical_representatives(
    c: Configuration, equivalence: str = "stabilizer", workers: int = 1
) -> List[Scheme]:
    group = equivalence_group(c, equivalence)
    m = c.polygon_size
    if workers <= 1:
        parts = [canonicalize_slice(raw_gluings(m), group)]
    else:
        raw = list(raw_gluings(m))
        chunks = _slices(raw, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(canonicalize_slice, chunks, [group] * len(chunks)))
    representatives = merge_canonical_sets(parts)
    logger.debug(
        "configuration %s: %d raw gluings -> %d classes (group order %d)",
        c.chords,
        raw_stream_size(m),
        len(representatives),
        group.order,
    )
    return representatives


def enumerate_gluings(
    c: Configuration, equivalence: str = "stabilizer", workers: int = 1
) -> List[GluingClass]:
    classes = []
    for rep in canonical_representatives(c, equivalence, workers):
        complex_ = GluedComplex(rep, frozenset(c.chords), c.quad_count)
        if not is_connected(complex_):
            raise InvariantViolation(f"disconnected complex for '{rep}'")
        classes.append(GluingClass(rep, c, classify(complex_)))
    return classes


def count_distinct(c: Configuration, equivalence: str = "stabilizer") -> int:
    return len(enumerate_gluings(c, equivalence))
