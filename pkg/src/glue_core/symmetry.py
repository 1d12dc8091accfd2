"""
Dihedral symmetries of a polygon acting on labeling schemes.

An element (rotation r, reflected) moves corner c to (s*c - r) mod m, with
s = -1 for reflections. On words this is permute(w, r) or
permute(flip(w), r).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Set, Tuple

from .exceptions import SymmetryError
from .scheme import Scheme, flip, permute, relabel


@dataclass(frozen=True, order=True)
class Symmetry:
    rotation: int
    reflected: bool = False

    @property
    def is_identity(self) -> bool:
        return self.rotation == 0 and not self.reflected

    def corner_image(self, corner: int, m: int) -> int:
        c = -corner if self.reflected else corner
        return (c - self.rotation) % m

    def to_dict(self) -> dict:
        return {"rotation": self.rotation, "reflected": self.reflected}


IDENTITY = Symmetry(0, False)


def compose(g2: Symmetry, g1: Symmetry, m: int) -> Symmetry:
    """g2 after g1."""
    s2 = -1 if g2.reflected else 1
    return Symmetry((s2 * g1.rotation + g2.rotation) % m, g1.reflected != g2.reflected)


def inverse(g: Symmetry, m: int) -> Symmetry:
    s = -1 if g.reflected else 1
    return Symmetry((-s * g.rotation) % m, g.reflected)


@dataclass(frozen=True)
class SymmetryGroup:
    polygon_size: int
    elements: Tuple[Symmetry, ...]

    def __post_init__(self) -> None:
        m = self.polygon_size
        if m < 1:
            raise SymmetryError(f"polygon size must be positive, got {m}")
        elements = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elements)
        for g in elements:
            if not 0 <= g.rotation < m:
                raise SymmetryError(f"rotation {g.rotation} out of range for {m}-gon")
        if IDENTITY not in elements:
            raise SymmetryError("symmetry group must contain the identity")
        self.check_closed()

    @staticmethod
    def from_elements(m: int, elements: Iterable[Symmetry]) -> "SymmetryGroup":
        return SymmetryGroup(m, tuple(elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def compose(self, g2: Symmetry, g1: Symmetry) -> Symmetry:
        return compose(g2, g1, self.polygon_size)

    def inverse(self, g: Symmetry) -> Symmetry:
        return inverse(g, self.polygon_size)

    def check_closed(self) -> None:
        members: Set[Symmetry] = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                if self.compose(a, b) not in members:
                    raise SymmetryError(
                        f"elements do not form a group: {a} * {b} is missing"
                    )


def full_dihedral(m: int) -> SymmetryGroup:
    """All 2m rotations and reflections of the m-gon."""
    return SymmetryGroup(
        m, tuple(Symmetry(r, refl) for refl in (False, True) for r in range(m))
    )


def trivial_group(m: int) -> SymmetryGroup:
    return SymmetryGroup(m, (IDENTITY,))


def _check_size(w: Scheme, m: int) -> None:
    if len(w) != m:
        raise SymmetryError(
            f"scheme of length {len(w)} does not match polygon size {m}"
        )


def apply_symmetry(w: Scheme, g: Symmetry, m: int | None = None) -> Scheme:
    if m is not None:
        _check_size(w, m)
    if not 0 <= g.rotation < len(w):
        raise SymmetryError(f"rotation {g.rotation} out of range for {len(w)}-gon")
    base = flip(w) if g.reflected else w
    return permute(base, g.rotation)


def orbit(w: Scheme, group: SymmetryGroup) -> Set[Scheme]:
    """Relabeled images of w under every group element."""
    _check_size(w, group.polygon_size)
    return {relabel(apply_symmetry(w, g)) for g in group}


def canonical_form(w: Scheme, group: SymmetryGroup) -> Scheme:
    """Smallest relabeled image of w under the group."""
    _check_size(w, group.polygon_size)
    return min(
        (relabel(apply_symmetry(w, g)) for g in group), key=lambda s: s.sort_key
    )


def schemes_equivalent(w1: Scheme, w2: Scheme, group: SymmetryGroup) -> bool:
    _check_size(w1, group.polygon_size)
    _check_size(w2, group.polygon_size)
    return canonical_form(w1, group) == canonical_form(w2, group)
