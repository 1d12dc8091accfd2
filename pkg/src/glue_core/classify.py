"""
Surface classification of glued polygons.

A GluedComplex is the boundary word of a (2n+2)-gon together with the chords
left by assembling it from n quadrilaterals. Chords join existing corners, so
they add edges and faces but never merge vertex classes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Tuple

import networkx as nx

from .exceptions import ClassificationError, InvariantViolation
from .scheme import Scheme, Side
from .symmetry import canonical_form, full_dihedral
from .vertices import boundary_components, class_letter, vertex_labeling

logger = logging.getLogger(__name__)

Chord = Tuple[int, int]


def normalize_chords(chords: Iterable[Chord]) -> FrozenSet[Chord]:
    out = set()
    for a, b in chords:
        out.add((a, b) if a < b else (b, a))
    return frozenset(out)


@dataclass(frozen=True)
class GluedComplex:
    scheme: Scheme
    chords: FrozenSet[Chord] = field(default_factory=frozenset)
    face_count: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "chords", normalize_chords(self.chords))
        m = len(self.scheme)
        if self.face_count < 1:
            raise ClassificationError(f"face count must be positive, got {self.face_count}")
        if len(self.chords) != self.face_count - 1:
            raise ClassificationError(
                f"{self.face_count} faces need {self.face_count - 1} chords, got {len(self.chords)}"
            )
        if self.face_count > 1 and m != 2 * self.face_count + 2:
            raise ClassificationError(
                f"{self.face_count} quadrilaterals need a {2 * self.face_count + 2}-gon, got {m} sides"
            )
        for a, b in self.chords:
            if a == b or not (0 <= a < m and 0 <= b < m):
                raise ClassificationError(f"invalid chord ({a}, {b}) for {m}-gon")

    @staticmethod
    def chordless(w: Scheme) -> "GluedComplex":
        return GluedComplex(w, frozenset(), 1)

    @property
    def vertex_count(self) -> int:
        return vertex_labeling(self.scheme).class_count

    @property
    def edge_count(self) -> int:
        # one edge per letter: glued pairs and free sides alike
        return self.scheme.letter_count + len(self.chords)


def euler_characteristic(c: GluedComplex) -> int:
    return c.vertex_count - c.edge_count + c.face_count


def is_orientable(w: Scheme) -> bool:
    return all(w[i].exponent != w[j].exponent for i, j in w.glued_pairs)


def _genus(euler: int, orientable: bool, boundary: int) -> int:
    if orientable:
        doubled = 2 - euler - boundary
        if doubled < 0 or doubled % 2:
            raise ClassificationError(
                f"no orientable surface with euler={euler}, boundary={boundary}"
            )
        return doubled // 2
    genus = 2 - euler - boundary
    if genus < 1:
        raise ClassificationError(
            f"no non-orientable surface with euler={euler}, boundary={boundary}"
        )
    return genus


@dataclass(frozen=True)
class SurfaceType:
    euler: int
    orientable: bool
    boundary: int
    genus: int

    def __post_init__(self) -> None:
        if self.boundary < 0 or self.genus < 0:
            raise ClassificationError(f"negative invariant in {self}")
        if _genus(self.euler, self.orientable, self.boundary) != self.genus:
            raise ClassificationError(
                f"genus {self.genus} inconsistent with euler={self.euler}, "
                f"orientable={self.orientable}, boundary={self.boundary}"
            )

    @staticmethod
    def from_invariants(euler: int, orientable: bool, boundary: int) -> "SurfaceType":
        return SurfaceType(euler, orientable, boundary, _genus(euler, orientable, boundary))

    @property
    def key(self) -> Tuple[int, bool, int]:
        return (self.euler, self.orientable, self.boundary)

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        # euler descending, orientable first, then boundary count
        return (-self.euler, 0 if self.orientable else 1, self.boundary)

    @property
    def name(self) -> str:
        return surface_name(self)

    def euler_from_genus(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    def to_dict(self) -> Dict[str, Any]:
        return {
            "euler": self.euler,
            "orientable": self.orientable,
            "boundary": self.boundary,
            "genus": self.genus,
            "name": self.name,
        }


def surface_name(t: SurfaceType) -> str:
    if t.euler_from_genus() != t.euler:
        raise ClassificationError(f"inconsistent invariant triple: {t}")
    g, b = t.genus, t.boundary
    if t.orientable:
        if g == 0 and b == 1:
            return "disc"
        if g == 0 and b == 2:
            return "annulus"
        if g == 0:
            base = "sphere"
        elif g == 1:
            base = "torus"
        else:
            base = f"connected sum of {g} tori"
    else:
        if g == 1 and b == 1:
            return "Möbius band"
        base = "projective plane" if g == 1 else f"connected sum of {g} projective planes"
    if b == 0:
        return base
    return f"{base} with {b} boundary component{'s' if b > 1 else ''}"


def classify(c: GluedComplex) -> SurfaceType:
    euler = euler_characteristic(c)
    if euler == 2:
        return SurfaceType(2, True, 0, 0)
    orientable = is_orientable(c.scheme)
    boundary = boundary_components(c.scheme)
    try:
        return SurfaceType.from_invariants(euler, orientable, boundary)
    except ClassificationError as e:
        raise InvariantViolation(f"classification of '{c.scheme}' failed: {e}") from e


def standard_scheme(t: SurfaceType) -> Scheme:
    """Standard closed labeling: a a^-1, a b a^-1 b^-1 ..., or a a b b ..."""
    if t.boundary > 0:
        raise ClassificationError(f"no standard closed scheme for boundary={t.boundary}")
    if t.orientable and t.genus == 0:
        return Scheme((Side(0, 1), Side(0, -1)))
    sides = []
    if t.orientable:
        for i in range(t.genus):
            a, b = 2 * i, 2 * i + 1
            sides += [Side(a, 1), Side(b, 1), Side(a, -1), Side(b, -1)]
    else:
        for i in range(t.genus):
            sides += [Side(i, 1), Side(i, 1)]
    return Scheme(tuple(sides))


def embedded_graph(c: GluedComplex) -> nx.MultiGraph:
    """Image of the polygon sides and chords in the quotient surface."""
    labeling = vertex_labeling(c.scheme)
    m = len(c.scheme)
    graph = nx.MultiGraph()
    graph.add_nodes_from(class_letter(k) for k in range(labeling.class_count))
    done = set()
    for i, side in enumerate(c.scheme):
        if side.letter in done:
            continue
        done.add(side.letter)
        tail = class_letter(labeling.classes[i])
        head = class_letter(labeling.classes[(i + 1) % m])
        graph.add_edge(tail, head, kind="glued" if c.scheme.partner(i) is not None else "free")
    for a, b in sorted(c.chords):
        graph.add_edge(
            class_letter(labeling.classes[a]), class_letter(labeling.classes[b]), kind="chord"
        )
    return graph


def is_connected(c: GluedComplex) -> bool:
    return nx.is_connected(embedded_graph(c))


@dataclass(frozen=True)
class ClassificationRecord:
    scheme: Scheme
    canonical_scheme: Scheme
    vertex_classes: Tuple[str, ...]
    vertices: int
    edges: int
    faces: int
    surface: SurfaceType

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scheme": str(self.scheme),
            "canonical_scheme": str(self.canonical_scheme),
            "vertex_classes": list(self.vertex_classes),
            "V": self.vertices,
            "E": self.edges,
            "F": self.faces,
            **self.surface.to_dict(),
        }


def classification_record(c: GluedComplex) -> ClassificationRecord:
    labeling = vertex_labeling(c.scheme)
    surface = classify(c)
    logger.debug("classified %s as %s", c.scheme, surface.name)
    return ClassificationRecord(
        scheme=c.scheme,
        canonical_scheme=canonical_form(c.scheme, full_dihedral(len(c.scheme))),
        vertex_classes=labeling.letters,
        vertices=labeling.class_count,
        edges=c.edge_count,
        faces=c.face_count,
        surface=surface,
    )
