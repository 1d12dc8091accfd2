from __future__ import annotations

import csv
import io
import json
from typing import Any, Dict, List, Sequence

from glue_enum.reference import Discrepancy
from glue_enum.report import EnumerationReport

CSV_HEADER = ["euler", "orientable", "boundary", "genus", "name", "count"]
TABLE_HEADER = ["χ", "orientable", "boundary", "genus", "name", "count"]


def canonical_json(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def write_canonical_json(path: str, obj: Dict[str, Any]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(canonical_json(obj))
        f.write("\n")


def read_json(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def aligned_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = []
    for row in [list(header)] + [list(r) for r in rows]:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def report_rows(report: EnumerationReport, with_representatives: bool) -> List[List[str]]:
    rows = []
    for row in report.rows:
        s = row.surface
        cells = [str(s.euler), _bool(s.orientable), str(s.boundary), str(s.genus), s.name, str(row.count)]
        if with_representatives:
            cells.append(";".join(str(r) for r in row.representatives))
        rows.append(cells)
    return rows


def report_csv(report: EnumerationReport, with_representatives: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER + (["representatives"] if with_representatives else []))
    writer.writerows(report_rows(report, with_representatives))
    return buf.getvalue()


def report_table(report: EnumerationReport, with_representatives: bool = False) -> str:
    header = TABLE_HEADER + (["representatives"] if with_representatives else [])
    body = aligned_table(header, report_rows(report, with_representatives))
    footer = (
        f"total: {report.total} classes, {len(report.rows)} surface types, "
        f"{report.configuration_count} configuration(s), n={report.quad_count}\n"
    )
    return body + footer


DISCREPANCY_HEADER = ["euler", "orientable", "boundary", "name", "reference", "computed", "match"]


def _discrepancy_rows(d: Discrepancy) -> List[List[str]]:
    return [
        [
            str(r.surface.euler),
            _bool(r.surface.orientable),
            str(r.surface.boundary),
            r.surface.name,
            str(r.reference_count),
            str(r.computed_count),
            _bool(r.matches),
        ]
        for r in d.rows
    ]


def discrepancy_csv(d: Discrepancy) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DISCREPANCY_HEADER)
    writer.writerows(_discrepancy_rows(d))
    return buf.getvalue()


def discrepancy_table(d: Discrepancy) -> str:
    body = aligned_table(DISCREPANCY_HEADER, _discrepancy_rows(d))
    return body + (
        f"reference total: {d.reference_total}, computed total: {d.computed_total}, "
        f"matches: {_bool(d.matches)}\n"
    )


def record_table(record: Dict[str, Any]) -> str:
    keys = sorted(record)
    width = max(len(k) for k in keys)
    lines = []
    for key in keys:
        value = record[key]
        if isinstance(value, bool):
            text = _bool(value)
        elif isinstance(value, list):
            text = " ".join(str(v) for v in value)
        else:
            text = str(value)
        lines.append(f"{key.ljust(width)}  {text}")
    return "\n".join(lines) + "\n"
