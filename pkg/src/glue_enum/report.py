from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from glue_core.classify import Chord, SurfaceType
from glue_core.exceptions import InvariantViolation
from glue_core.scheme import Scheme

from .configurations import generate_configurations
from .gluings import enumerate_gluings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representative:
    """A canonical gluing together with the 1-based index of its configuration."""

    configuration: int
    chords: Tuple[Chord, ...]
    scheme: Scheme

    def __str__(self) -> str:
        return f"{self.configuration}:{self.scheme}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "configuration": self.configuration,
            "chords": [list(c) for c in self.chords],
            "scheme": str(self.scheme),
        }


@dataclass(frozen=True)
class ReportRow:
    surface: SurfaceType
    count: int
    representatives: Tuple[Representative, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.representatives)) != len(self.representatives):
            raise InvariantViolation(f"{self.surface.name}: representative listed twice")
        if self.representatives and len(self.representatives) != self.count:
            raise InvariantViolation(
                f"{self.surface.name}: count {self.count} but "
                f"{len(self.representatives)} representatives"
            )

    def to_dict(self, with_representatives: bool = False) -> Dict[str, Any]:
        d: Dict[str, Any] = {**self.surface.to_dict(), "count": self.count}
        if with_representatives:
            d["representatives"] = [r.to_dict() for r in self.representatives]
        return d


@dataclass(frozen=True)
class EnumerationReport:
    quad_count: int
    rows: Tuple[ReportRow, ...]
    equivalence: str = "stabilizer"
    configuration_count: int = 1
    total: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "total", sum(r.count for r in self.rows))
        keys = [r.surface.key for r in self.rows]
        if len(keys) != len(set(keys)):
            raise InvariantViolation("surface type listed in more than one report row")

    def row_for(self, euler: int, orientable: bool, boundary: int) -> ReportRow | None:
        for row in self.rows:
            if row.surface.key == (euler, orientable, boundary):
                return row
        return None

    def to_dict(self, with_representatives: bool = False) -> Dict[str, Any]:
        return {
            "quads": self.quad_count,
            "equivalence": self.equivalence,
            "configurations": self.configuration_count,
            "total": self.total,
            "rows": [r.to_dict(with_representatives) for r in self.rows],
        }


def tabulate(n: int, equivalence: str = "stabilizer", workers: int = 1) -> EnumerationReport:
    configurations = generate_configurations(n)
    grouped: Dict[Tuple[int, bool, int], List[Representative]] = {}
    surfaces: Dict[Tuple[int, bool, int], SurfaceType] = {}
    for index, config in enumerate(configurations, start=1):
        for cls in enumerate_gluings(config, equivalence, workers):
            rep = Representative(index, tuple(config.chords), cls.representative)
            grouped.setdefault(cls.surface.key, []).append(rep)
            surfaces[cls.surface.key] = cls.surface
    rows = [
        ReportRow(surfaces[key], len(reps), tuple(reps))
        for key, reps in grouped.items()
    ]
    rows.sort(key=lambda r: r.surface.sort_key)
    report = EnumerationReport(n, tuple(rows), equivalence, len(configurations))
    logger.info("n=%d: %d classes over %d surface types", n, report.total, len(rows))
    return report
