"""
Ways to assemble a (2n+2)-gon from n quadrilaterals.

A configuration is a set of non-crossing chords cutting the polygon into
quadrilaterals, taken up to the dihedral group. Its symmetry group is the
stabilizer of the chord set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Any, Dict, FrozenSet, List, Tuple

from glue_core.classify import Chord, normalize_chords
from glue_core.exceptions import EnumerationError, InvariantViolation
from glue_core.symmetry import Symmetry, SymmetryGroup, full_dihedral

logger = logging.getLogger(__name__)

MAX_QUADS = 6

ChordSet = Tuple[Chord, ...]


def check_quad_count(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_QUADS:
        raise EnumerationError(f"quad count must be between 1 and {MAX_QUADS}, got {n}")


def map_chords(chords: ChordSet, g: Symmetry, m: int) -> ChordSet:
    mapped = normalize_chords((g.corner_image(a, m), g.corner_image(b, m)) for a, b in chords)
    return tuple(sorted(mapped))


def _split_faces(poly: Tuple[int, ...], chords: ChordSet) -> List[Tuple[int, ...]]:
    k = len(poly)
    for a, b in chords:
        if a in poly and b in poly:
            ia, ib = sorted((poly.index(a), poly.index(b)))
            if ib - ia in (1, k - 1):
                continue
            return _split_faces(poly[ia : ib + 1], chords) + _split_faces(
                poly[ib:] + poly[: ia + 1], chords
            )
    return [poly]


@dataclass(frozen=True)
class Configuration:
    quad_count: int
    chords: ChordSet
    symmetries: SymmetryGroup

    def __post_init__(self) -> None:
        object.__setattr__(self, "chords", tuple(sorted(normalize_chords(self.chords))))
        m = self.polygon_size
        if self.symmetries.polygon_size != m:
            raise InvariantViolation(
                f"symmetry group acts on a {self.symmetries.polygon_size}-gon, expected {m}"
            )
        if len(self.chords) != self.quad_count - 1:
            raise InvariantViolation(
                f"{self.quad_count} quadrilaterals need {self.quad_count - 1} chords"
            )
        bad = [f for f in self.faces() if len(f) != 4]
        if bad:
            raise InvariantViolation(f"chords {self.chords} leave non-quadrilateral faces {bad}")

    @property
    def polygon_size(self) -> int:
        return 2 * self.quad_count + 2

    def faces(self) -> List[Tuple[int, ...]]:
        """Corner cycles of the faces cut out by the chords."""
        return _split_faces(tuple(range(self.polygon_size)), self.chords)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quads": self.quad_count,
            "polygon_size": self.polygon_size,
            "chords": [list(c) for c in self.chords],
            "faces": [list(f) for f in self.faces()],
            "symmetry_order": self.symmetries.order,
            "symmetries": [g.to_dict() for g in self.symmetries],
        }


@lru_cache(maxsize=None)
def _quadrangulations(poly: Tuple[int, ...]) -> Tuple[FrozenSet[Chord], ...]:
    k = len(poly)
    if k in (2, 4):
        return (frozenset(),)
    result: List[FrozenSet[Chord]] = []
    first, last = poly[0], poly[-1]
    # the face on side (last, first) is (first, poly[i], poly[j], last)
    for i in range(1, k - 1):
        for j in range(i + 1, k - 1):
            parts = (poly[: i + 1], poly[i : j + 1], poly[j:])
            if any(len(p) != 2 and (len(p) < 4 or len(p) % 2) for p in parts):
                continue
            own = {(p[0], p[-1]) for p in parts if len(p) > 2}
            for sub in product(*(_quadrangulations(p) for p in parts)):
                result.append(frozenset(own).union(*sub))
    return tuple(result)


def canonical_chords(chords: ChordSet, m: int) -> ChordSet:
    return min(map_chords(chords, g, m) for g in full_dihedral(m))


def stabilizer(chords: ChordSet, m: int) -> SymmetryGroup:
    target = tuple(sorted(normalize_chords(chords)))
    return SymmetryGroup.from_elements(
        m, (g for g in full_dihedral(m) if map_chords(target, g, m) == target)
    )


def generate_configurations(n: int) -> List[Configuration]:
    check_quad_count(n)
    m = 2 * n + 2
    seen = set()
    for chords in _quadrangulations(tuple(range(m))):
        seen.add(canonical_chords(tuple(sorted(chords)), m))
    configurations = [Configuration(n, chords, stabilizer(chords, m)) for chords in sorted(seen)]
    logger.info(
        "n=%d: %d configuration(s), symmetry orders %s",
        n,
        len(configurations),
        [c.symmetries.order for c in configurations],
    )
    return configurations
