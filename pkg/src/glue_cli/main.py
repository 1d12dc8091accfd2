from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Callable, Dict, List, TextIO

from glue_core import __version__
from glue_core.classify import GluedComplex, classification_record
from glue_core.exceptions import GluingError, InvariantViolation
from glue_core.scheme import Scheme, glue, parse_scheme
from glue_core.symmetry import canonical_form, full_dihedral
from glue_core.vertices import vertex_labeling
from glue_enum.configurations import generate_configurations
from glue_enum.reference import ReferenceTables, compare_with_reference
from glue_enum.report import tabulate
from lib.report_serializer import (
    discrepancy_csv,
    discrepancy_table,
    record_table,
    report_csv,
    report_table,
)
from lib.scheme_loader import load_schemes

from .config import EQUIVALENCES, FORMATS, CliConfig

logger = logging.getLogger(__name__)

RECORD_FIELDS = [
    "scheme",
    "canonical_scheme",
    "vertex_classes",
    "V",
    "E",
    "F",
    "euler",
    "orientable",
    "boundary",
    "genus",
    "name",
]


def _print_json(out: TextIO, obj: Dict[str, Any]) -> None:
    out.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def _records_csv(records: List[Dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for record in records:
        writer.writerow([_csv_cell(record[k]) for k in RECORD_FIELDS])
    return buf.getvalue()


def _scheme(config: CliConfig) -> Scheme:
    assert config.scheme_arg is not None
    return parse_scheme(config.scheme_arg)


def cmd_classify(config: CliConfig, out: TextIO) -> int:
    if config.scheme_file is not None:
        schemes = load_schemes(config.scheme_file)
    else:
        schemes = [_scheme(config)]
    records = [classification_record(GluedComplex.chordless(w)).to_dict() for w in schemes]
    if config.format == "json":
        if config.scheme_file is not None:
            _print_json(out, {"records": records})
        else:
            _print_json(out, records[0])
    elif config.format == "csv":
        out.write(_records_csv(records))
    else:
        out.write("\n".join(record_table(r) for r in records))
    return 0


def cmd_canon(config: CliConfig, out: TextIO) -> int:
    w = _scheme(config)
    group = full_dihedral(len(w))
    canon = canonical_form(w, group)
    if config.format == "json":
        _print_json(
            out,
            {"scheme": str(w), "canonical_scheme": str(canon), "group_order": group.order},
        )
    else:
        out.write(f"{canon}\n")
    return 0


def cmd_vertices(config: CliConfig, out: TextIO) -> int:
    w = _scheme(config)
    labeling = vertex_labeling(w)
    if config.format == "json":
        _print_json(
            out,
            {"scheme": str(w), "vertex_classes": list(labeling.letters), "V": labeling.class_count},
        )
    else:
        out.write(f"{labeling}\n")
    return 0


def cmd_glue(config: CliConfig, out: TextIO) -> int:
    w = _scheme(config)
    assert config.index1 is not None and config.index2 is not None
    orientable = not config.non_orientable
    glued = glue(w, config.index1 - 1, config.index2 - 1, orientable)
    if config.format == "json":
        _print_json(
            out,
            {
                "scheme": str(w),
                "indices": [config.index1, config.index2],
                "orientable": orientable,
                "glued": str(glued),
            },
        )
    else:
        out.write(f"{glued}\n")
    return 0


def cmd_enumerate(config: CliConfig, out: TextIO) -> int:
    assert config.quads is not None
    report = tabulate(config.quads, config.equivalence, config.workers)
    discrepancy = None
    if config.compare:
        tables = (
            ReferenceTables.from_file(config.reference)
            if config.reference
            else ReferenceTables.bundled()
        )
        discrepancy = compare_with_reference(report, tables)
        if not discrepancy.matches:
            logger.warning(
                "n=%d: computed total %d differs from reference total %d",
                config.quads,
                discrepancy.computed_total,
                discrepancy.reference_total,
            )

    with_reps = config.list_representatives
    if config.format == "json":
        obj = report.to_dict(with_reps)
        if discrepancy is not None:
            obj["discrepancy"] = discrepancy.to_dict()
        _print_json(out, obj)
    elif config.format == "csv":
        out.write(report_csv(report, with_reps))
        if discrepancy is not None:
            out.write("\n" + discrepancy_csv(discrepancy))
    else:
        out.write(report_table(report, with_reps))
        if discrepancy is not None:
            out.write("\ncomparison with reference table:\n" + discrepancy_table(discrepancy))
    return 0


def cmd_configs(config: CliConfig, out: TextIO) -> int:
    assert config.quads is not None
    configurations = generate_configurations(config.quads)
    if config.format == "json":
        _print_json(
            out,
            {"quads": config.quads, "configurations": [c.to_dict() for c in configurations]},
        )
    elif config.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "chords", "symmetry_order", "faces"])
        for i, c in enumerate(configurations, start=1):
            writer.writerow(
                [
                    i,
                    " ".join(f"{a}-{b}" for a, b in c.chords),
                    c.symmetries.order,
                    " ".join("-".join(map(str, f)) for f in c.faces()),
                ]
            )
        out.write(buf.getvalue())
    else:
        for i, c in enumerate(configurations, start=1):
            chords = " ".join(f"{a}-{b}" for a, b in c.chords) or "none"
            out.write(
                f"configuration {i}: {c.polygon_size}-gon, chords {chords}, "
                f"{c.symmetries.order} symmetries\n"
            )
    return 0


HANDLERS: Dict[str, Callable[[CliConfig, TextIO], int]] = {
    "classify": cmd_classify,
    "canon": cmd_canon,
    "vertices": cmd_vertices,
    "glue": cmd_glue,
    "enumerate": cmd_enumerate,
    "configs": cmd_configs,
}


def _report_error(out: TextIO, fmt: str, message: str) -> None:
    if fmt == "json":
        _print_json(out, {"status": "error", "error": message})
    else:
        sys.stderr.write(f"Error: {message}\n")


def run(config: CliConfig, out: TextIO = sys.stdout) -> int:
    try:
        return HANDLERS[config.command](config, out)
    except InvariantViolation as e:
        _report_error(out, config.format, f"internal invariant violated: {e}")
        return 2
    except GluingError as e:
        _report_error(out, config.format, str(e))
        return 1
    except OSError as e:
        _report_error(out, config.format, str(e))
        return 1
    except Exception as e:
        _report_error(out, config.format, f"unexpected error: {e}")
        return 2


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 like other input errors."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_format(p: argparse.ArgumentParser, choices=FORMATS) -> None:
    p.add_argument("--format", choices=list(choices), default="table", help="Output format")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="quadglue",
        description="Labeling schemes, surface classification and quadrilateral gluing enumeration",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr (-vv for debug)")
    sub = p.add_subparsers(dest="command")

    pc = sub.add_parser("classify", help="Classify the surface of a chordless scheme")
    pc.add_argument("scheme", nargs="?", help='Scheme string, e.g. "a b a^-1 b^-1"')
    pc.add_argument("--file", required=False, help="Classify every scheme in a file, one per line")
    _add_format(pc)

    pn = sub.add_parser("canon", help="Canonical form under the full dihedral group")
    pn.add_argument("scheme", help="Scheme string")
    _add_format(pn, ("table", "json"))

    pv = sub.add_parser("vertices", help="Vertex class letters at each corner")
    pv.add_argument("scheme", help="Scheme string")
    _add_format(pv, ("table", "json"))

    pg = sub.add_parser("glue", help="Glue two free sides (1-based indices)")
    pg.add_argument("scheme", help="Scheme string")
    pg.add_argument("i1", type=int, help="First side, 1-based")
    pg.add_argument("i2", type=int, help="Second side, 1-based")
    pg.add_argument(
        "--non-orientable", action="store_true", help="Identify with equal exponents"
    )
    _add_format(pg, ("table", "json"))

    pe = sub.add_parser("enumerate", help="Classify all gluings of n quadrilaterals")
    pe.add_argument("--quads", type=int, required=True, help="Number of quadrilaterals n")
    pe.add_argument("--list", action="store_true", help="Include canonical representatives")
    pe.add_argument("--compare", action="store_true", help="Compare with the reference table")
    pe.add_argument("--reference", required=False, help="Reference tables JSON (default: bundled)")
    pe.add_argument(
        "--equivalence",
        choices=list(EQUIVALENCES),
        default="stabilizer",
        help="Symmetries identifying gluings",
    )
    pe.add_argument("--workers", type=int, default=1, help="Worker processes for canonicalization")
    _add_format(pe)

    pf = sub.add_parser("configs", help="List quadrilateral configurations of the (2n+2)-gon")
    pf.add_argument("--quads", type=int, required=True, help="Number of quadrilaterals n")
    _add_format(pf)

    return p


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def cli() -> None:
    # Entry point for console_script if installed
    sys.exit(main())


def main(argv: List[str] | None = None) -> int:
    if isinstance(sys.stdout, io.TextIOWrapper):
        sys.stdout.reconfigure(encoding="utf-8", newline="\n")
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_help()
        return 1
    _configure_logging(args.verbose)
    try:
        config = CliConfig.from_namespace(args)
    except GluingError as e:
        _report_error(sys.stdout, getattr(args, "format", "table"), str(e))
        return 1
    return run(config, sys.stdout)
