"""
Published per-surface class counts and comparison against computed reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from glue_core.classify import SurfaceType
from glue_core.exceptions import ClassificationError, EnumerationError

from .report import EnumerationReport, Representative

REFERENCE_VERSION = "reference-tables-v1"

SurfaceKey = Tuple[int, bool, int]


@dataclass(frozen=True)
class ReferenceTables:
    version: str
    tables: Dict[int, Dict[SurfaceKey, int]]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReferenceTables":
        if "version" not in data:
            raise EnumerationError("reference tables missing required 'version' field")
        if data["version"] != REFERENCE_VERSION:
            raise EnumerationError(f"unsupported reference tables version: {data['version']}")
        if not isinstance(data.get("tables"), dict) or not data["tables"]:
            raise EnumerationError("reference tables missing 'tables' mapping")

        tables: Dict[int, Dict[SurfaceKey, int]] = {}
        for n_text, rows in data["tables"].items():
            try:
                n = int(n_text)
            except ValueError:
                raise EnumerationError(f"invalid quad count key: '{n_text}'")
            table: Dict[SurfaceKey, int] = {}
            for row in rows:
                try:
                    key = (int(row["euler"]), bool(row["orientable"]), int(row["boundary"]))
                    count = int(row["count"])
                except (KeyError, TypeError, ValueError) as e:
                    raise EnumerationError(f"invalid reference row for n={n}: {row} ({e})")
                try:
                    SurfaceType.from_invariants(*key)
                except ClassificationError as e:
                    raise EnumerationError(f"reference row for n={n} is not a surface: {e}")
                if key in table:
                    raise EnumerationError(f"duplicate reference row for n={n}: {key}")
                if count < 0:
                    raise EnumerationError(f"negative count in reference row for n={n}: {row}")
                table[key] = count
            tables[n] = table
        return cls(version=data["version"], tables=tables)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ReferenceTables":
        path = Path(path)
        if not path.exists():
            raise EnumerationError(f"reference tables file not found: {path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise EnumerationError(f"invalid JSON in reference tables file: {e}")
        return cls.from_dict(data)

    @classmethod
    def bundled(cls) -> "ReferenceTables":
        text = resources.files("glue_enum").joinpath("data/reference_tables.json").read_text(
            encoding="utf-8"
        )
        return cls.from_dict(json.loads(text))

    def table(self, n: int) -> Optional[Dict[SurfaceKey, int]]:
        return self.tables.get(n)


@dataclass(frozen=True)
class DiscrepancyRow:
    surface: SurfaceType
    reference_count: int
    computed_count: int
    representatives: Tuple[Representative, ...]

    @property
    def matches(self) -> bool:
        return self.reference_count == self.computed_count

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.surface.to_dict(),
            "reference_count": self.reference_count,
            "computed_count": self.computed_count,
            "matches": self.matches,
            "representatives": [r.to_dict() for r in self.representatives],
        }


@dataclass(frozen=True)
class Discrepancy:
    quad_count: int
    equivalence: str
    rows: Tuple[DiscrepancyRow, ...]

    @property
    def reference_total(self) -> int:
        return sum(r.reference_count for r in self.rows)

    @property
    def computed_total(self) -> int:
        return sum(r.computed_count for r in self.rows)

    @property
    def matches(self) -> bool:
        return all(r.matches for r in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quads": self.quad_count,
            "equivalence": self.equivalence,
            "matches": self.matches,
            "reference_total": self.reference_total,
            "computed_total": self.computed_total,
            "rows": [r.to_dict() for r in self.rows],
        }


def compare_with_reference(report: EnumerationReport, tables: ReferenceTables) -> Discrepancy:
    table = tables.table(report.quad_count)
    if table is None:
        raise EnumerationError(f"no reference table for n={report.quad_count}")
    keys = set(table) | {r.surface.key for r in report.rows}
    rows: List[DiscrepancyRow] = []
    for key in keys:
        row = report.row_for(*key)
        rows.append(
            DiscrepancyRow(
                surface=row.surface if row else SurfaceType.from_invariants(*key),
                reference_count=table.get(key, 0),
                computed_count=row.count if row else 0,
                representatives=row.representatives if row else (),
            )
        )
    rows.sort(key=lambda r: r.surface.sort_key)
    return Discrepancy(report.quad_count, report.equivalence, tuple(rows))
