import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from glue_enum.reference import ReferenceTables, compare_with_reference  # noqa: E402
from glue_enum.report import tabulate  # noqa: E402
from lib.report_serializer import write_canonical_json  # noqa: E402


def write_reports(out_dir: Path, max_quads: int = 3, workers: int = 1):
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = ReferenceTables.bundled()
    for n in range(1, max_quads + 1):
        for equivalence in ("stabilizer", "dihedral"):
            report = tabulate(n, equivalence, workers)
            obj = report.to_dict(with_representatives=True)
            if tables.table(n) is not None:
                obj["discrepancy"] = compare_with_reference(report, tables).to_dict()
            path = out_dir / f"report_n{n}_{equivalence}.json"
            write_canonical_json(str(path), obj)
            print(f"Wrote {path} ({report.total} classes)")


if __name__ == "__main__":
    workers = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    write_reports(Path("out/reports").resolve(), workers=workers)
