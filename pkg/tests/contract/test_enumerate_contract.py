"""
Contract test for `quadglue enumerate` and `quadglue configs`
Based on specs/001-quad-gluing/contracts/enumerate.md
"""

import csv
import io
import json

import pytest

from tests.test_utils import run_cli


@pytest.mark.contract
class TestEnumerateContract:
    """Contract tests for the enumeration commands"""

    def test_square_csv(self):
        """7 data rows whose counts sum to 10"""
        result = run_cli("enumerate", "--quads", "1", "--format", "csv")
        assert result.returncode == 0, result.stderr
        lines = result.stdout.splitlines()
        assert lines[0] == "euler,orientable,boundary,genus,name,count"
        rows = list(csv.DictReader(io.StringIO(result.stdout)))
        assert len(rows) == 7
        assert sum(int(r["count"]) for r in rows) == 10

    def test_square_csv_list(self):
        result = run_cli("enumerate", "--quads", "1", "--format", "csv", "--list")
        rows = list(csv.DictReader(io.StringIO(result.stdout)))
        torus = next(r for r in rows if r["name"] == "torus")
        assert torus["representatives"] == "1:a b a^-1 b^-1"
        assert all(len(r["representatives"].split(";")) == int(r["count"]) for r in rows)

    def test_square_table(self):
        result = run_cli("enumerate", "--quads", "1")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0].split() == ["χ", "orientable", "boundary", "genus", "name", "count"]
        assert lines[-1].startswith("total: 10 classes, 7 surface types")

    def test_square_json(self):
        result = run_cli("enumerate", "--quads", "1", "--format", "json")
        report = json.loads(result.stdout)
        assert report["quads"] == 1
        assert report["total"] == 10
        assert report["equivalence"] == "stabilizer"
        assert report["rows"][0] == {
            "euler": 2,
            "orientable": True,
            "boundary": 0,
            "genus": 0,
            "name": "sphere",
            "count": 1,
        }

    def test_compare_square(self):
        result = run_cli("enumerate", "--quads", "1", "--compare", "--format", "csv")
        assert result.returncode == 0
        _, comparison = result.stdout.split("\n\n", 1)
        rows = list(csv.DictReader(io.StringIO(comparison)))
        assert len(rows) == 7
        assert all(r["match"] == "true" for r in rows)

    def test_custom_reference_file(self, tmp_path):
        path = tmp_path / "ref.json"
        path.write_text(
            json.dumps(
                {
                    "version": "reference-tables-v1",
                    "tables": {"1": [{"euler": 2, "orientable": True, "boundary": 0, "count": 1}]},
                }
            ),
            encoding="utf-8",
        )
        result = run_cli(
            "enumerate", "--quads", "1", "--compare", "--reference", str(path), "--format", "json"
        )
        assert result.returncode == 0
        d = json.loads(result.stdout)["discrepancy"]
        assert d["reference_total"] == 1
        assert d["computed_total"] == 10

    def test_configs_json(self):
        result = run_cli("configs", "--quads", "3", "--format", "json")
        assert result.returncode == 0
        configs = json.loads(result.stdout)["configurations"]
        assert [c["symmetry_order"] for c in configs] == [2, 4]

    @pytest.mark.parametrize("quads", ["0", "7", "-2"])
    def test_unsupported_quads_exit_1(self, quads):
        result = run_cli("enumerate", "--quads", quads)
        assert result.returncode == 1

    def test_missing_reference_exits_1(self, tmp_path):
        result = run_cli(
            "enumerate", "--quads", "1", "--compare", "--reference", str(tmp_path / "none.json")
        )
        assert result.returncode == 1

    def test_version(self):
        result = run_cli("--version")
        assert result.returncode == 0
        assert result.stdout.startswith("quadglue ")
