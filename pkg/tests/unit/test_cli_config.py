"""
In-process tests for CliConfig validation and the run() dispatcher.
"""

import io
import json

import pytest

from glue_cli.config import CliConfig
from glue_cli.main import build_parser, main, run
from glue_core.exceptions import EnumerationError, SchemeError


def _run(**kwargs):
    out = io.StringIO()
    code = run(CliConfig(**kwargs), out)
    return code, out.getvalue()


@pytest.mark.unit
class TestCliConfig:
    def test_scheme_required(self):
        with pytest.raises(SchemeError, match="requires a scheme"):
            CliConfig(command="classify")

    def test_file_replaces_scheme_for_classify(self):
        assert CliConfig(command="classify", scheme_file="x.txt").scheme_arg is None

    def test_glue_requires_indices(self):
        with pytest.raises(SchemeError):
            CliConfig(command="glue", scheme_arg="a b c d", index1=1)

    def test_quads_required_and_bounded(self):
        with pytest.raises(EnumerationError, match="--quads"):
            CliConfig(command="enumerate")
        with pytest.raises(EnumerationError):
            CliConfig(command="configs", quads=0)

    def test_unknown_values(self):
        with pytest.raises(SchemeError):
            CliConfig(command="draw")
        with pytest.raises(SchemeError):
            CliConfig(command="canon", scheme_arg="a", format="xml")
        with pytest.raises(EnumerationError):
            CliConfig(command="enumerate", quads=1, equivalence="pivot")
        with pytest.raises(EnumerationError):
            CliConfig(command="enumerate", quads=1, workers=0)

    def test_from_namespace(self):
        args = build_parser().parse_args(["glue", "a b c d", "1", "3", "--non-orientable"])
        config = CliConfig.from_namespace(args)
        assert (config.index1, config.index2, config.non_orientable) == (1, 3, True)
        assert config.format == "table"


@pytest.mark.unit
class TestRun:
    def test_classify_torus(self):
        code, text = _run(command="classify", scheme_arg="a b a^-1 b^-1", format="json")
        assert code == 0
        record = json.loads(text)
        assert (record["name"], record["euler"], record["boundary"]) == ("torus", 0, 0)

    def test_glue_uses_one_based_indices(self):
        assert _run(command="glue", scheme_arg="a b c d", index1=1, index2=3) == (
            0,
            "a b a^-1 c\n",
        )
        code, text = _run(
            command="glue", scheme_arg="a b c d", index1=1, index2=3, non_orientable=True
        )
        assert text == "a b a c\n"

    def test_vertices(self):
        assert _run(command="vertices", scheme_arg="a a b c") == (0, "A A A B\n")

    def test_canon(self):
        assert _run(command="canon", scheme_arg="b c a a^-1") == (0, "a a^-1 b c\n")

    def test_configs_csv(self):
        code, text = _run(command="configs", quads=3, format="csv")
        assert code == 0
        assert text.splitlines() == [
            "index,chords,symmetry_order,faces",
            "1,0-3 0-5,2,0-1-2-3 5-6-7-0 0-3-4-5",
            "2,0-3 4-7,4,0-1-2-3 4-5-6-7 7-0-3-4",
        ]

    def test_enumerate_square_json(self):
        code, text = _run(command="enumerate", quads=1, format="json", compare=True)
        assert code == 0
        report = json.loads(text)
        assert report["total"] == 10
        assert len(report["rows"]) == 7
        assert report["discrepancy"]["matches"] is True

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"command": "classify", "scheme_arg": "a b a b a"},
            {"command": "glue", "scheme_arg": "a a^-1 b c", "index1": 1, "index2": 2},
            {"command": "glue", "scheme_arg": "a b c d", "index1": 1, "index2": 9},
            {"command": "classify", "scheme_arg": "a B"},
        ],
    )
    def test_input_errors_exit_1(self, kwargs, capsys):
        code, _ = _run(**kwargs)
        assert code == 1
        assert capsys.readouterr().err.startswith("Error:")

    def test_json_errors_go_to_stdout(self):
        code, text = _run(command="classify", scheme_arg="a b a b a", format="json")
        assert code == 1
        assert json.loads(text)["status"] == "error"

    def test_missing_file_exits_1(self, tmp_path):
        code, _ = _run(command="classify", scheme_file=str(tmp_path / "none.txt"))
        assert code == 1


@pytest.mark.unit
class TestMain:
    def test_usage_error_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["glue", "a b c d", "one", "3"])
        assert exc.value.code == 1

    def test_unsupported_quads(self, capsys):
        assert main(["enumerate", "--quads", "9"]) == 1

    def test_no_command_prints_help(self, capsys):
        assert main([]) == 1
        assert "usage" in capsys.readouterr().out
