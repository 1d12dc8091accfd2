"""
Vertex classes and boundary circles of the quotient of a labeled polygon.

Corner i sits between side i-1 and side i. Side i runs from its tail
corner i to its head corner i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .exceptions import InvariantViolation
from .scheme import ALPHABET_SIZE, Scheme


TAIL = 0
HEAD = 1

Endpoint = Tuple[int, int]  # (side position, TAIL|HEAD)


def class_letter(index: int) -> str:
    base = chr(ord("A") + index % ALPHABET_SIZE)
    cycle = index // ALPHABET_SIZE
    return base if cycle == 0 else f"{base}{cycle}"


def endpoint_corner(w: Scheme, endpoint: Endpoint) -> int:
    side, end = endpoint
    return (side + end) % len(w)


def identified_endpoint(w: Scheme, endpoint: Endpoint) -> Optional[Endpoint]:
    """Endpoint of the partner side glued onto `endpoint`, None for free sides.

    Opposite exponents: tail(p)~head(q), head(p)~tail(q).
    Equal exponents: tail(p)~tail(q), head(p)~head(q).
    """
    side, end = endpoint
    partner = w.partner(side)
    if partner is None:
        return None
    if w[side].exponent == w[partner].exponent:
        return (partner, end)
    return (partner, 1 - end)


def corner_endpoints(w: Scheme, corner: int) -> Tuple[Endpoint, Endpoint]:
    """The two side endpoints meeting at a corner: head of side c-1, tail of side c."""
    m = len(w)
    return ((corner - 1) % m, HEAD), (corner % m, TAIL)


@dataclass(frozen=True)
class VertexLabeling:
    classes: Tuple[int, ...]
    class_count: int

    @property
    def letters(self) -> Tuple[str, ...]:
        return tuple(class_letter(c) for c in self.classes)

    def __str__(self) -> str:
        return " ".join(self.letters)


def vertex_labeling(w: Scheme) -> VertexLabeling:
    m = len(w)
    labels: List[Optional[int]] = [None] * m
    next_class = 0
    for start in range(m):
        if labels[start] is not None:
            continue
        labels[start] = next_class
        work = [start]
        while work:
            corner = work.pop()
            for endpoint in corner_endpoints(w, corner):
                other = identified_endpoint(w, endpoint)
                if other is None:
                    continue
                j = endpoint_corner(w, other)
                if labels[j] is None:
                    labels[j] = next_class
                    work.append(j)
        next_class += 1
    return VertexLabeling(tuple(c for c in labels if c is not None), next_class)


def _pivot(w: Scheme, exit_endpoint: Endpoint) -> Endpoint:
    """Walk around a vertex from a free side's exit end to the next free side.

    Returns the endpoint through which the walk enters that free side.
    """
    m = len(w)
    current = exit_endpoint
    for _ in range(2 * m + 1):
        side, end = current
        # the other endpoint sharing this corner sector
        nxt: Endpoint = ((side + 1) % m, TAIL) if end == HEAD else ((side - 1) % m, HEAD)
        across = identified_endpoint(w, nxt)
        if across is None:
            return nxt
        current = across
    raise InvariantViolation(f"boundary walk did not close for scheme '{w}'")


def boundary_cycles(w: Scheme) -> List[Tuple[int, ...]]:
    """Free side positions grouped by the boundary circle they lie on."""
    cycles: List[Tuple[int, ...]] = []
    seen = set()
    for start in w.free_positions:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        side, end = _pivot(w, (start, HEAD))
        while side != start:
            if side in seen:
                raise InvariantViolation(f"boundary walk revisited side {side} in '{w}'")
            cycle.append(side)
            seen.add(side)
            side, end = _pivot(w, (side, 1 - end))
        if end != TAIL:
            raise InvariantViolation(f"boundary circle reversed at side {start} in '{w}'")
        cycles.append(tuple(cycle))
    return cycles


def boundary_components(w: Scheme) -> int:
    return len(boundary_cycles(w))
