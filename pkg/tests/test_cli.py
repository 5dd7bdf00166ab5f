"""
End-to-end tests of the matlc command line through main(argv).
"""
import io
import json

import pytest

from matlc.cli import main
from matlc.config import MatlcConfig, set_config
from matlc.matroids import vamos

K4 = {"vertices": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]}
K3 = {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


class TestInvariants:
    """The invariants command."""

    def test_uniform(self, capsys):
        code, out = _run(capsys, ["invariants", "--uniform", "2,3"])
        assert code == 0
        report = json.loads(out)
        assert report["IN"]["h"] == ["1", "1", "1"]
        assert report["BC"][0]["f"] == ["1", "3", "2"]

    def test_random_orderings_are_reproducible(self, capsys, tmp_path):
        graph = _write(tmp_path, "k4.json", K4)
        argv = ["invariants", "--graph", graph, "--ordering", "random", "--seed", "7"]
        first = _run(capsys, argv)
        second = _run(capsys, argv)
        assert first == second
        assert first[0] == 0
        assert json.loads(first[1])["whitney"] == ["1", "6", "11", "6"]

    def test_random_ordering_needs_seed(self, capsys):
        code, _ = _run(capsys, ["invariants", "--uniform", "2,3", "--ordering", "random"])
        assert code == 2

    def test_circuits_input(self, capsys, tmp_path):
        path = _write(tmp_path, "vamos.json", {"labels": list(vamos().labels), "circuits": vamos().describe()["circuits"]})
        code, out = _run(capsys, ["invariants", "--circuits", path])
        assert code == 0
        assert json.loads(out)["label"] == "conjecture check (not Q-representable)"

    def test_fixture(self, capsys):
        code, out = _run(capsys, ["invariants", "--fixture", "fano"])
        assert code == 0
        assert json.loads(out)["chi"]["coeffs"] == ["-8", "14", "-7", "1"]

    def test_parse_error_as_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        code, out = _run(capsys, ["--json", "invariants", "--matrix", str(path)])
        assert code == 2
        assert json.loads(out)["error"] == "parse"

    def test_capacity(self, capsys):
        code, out = _run(capsys, ["--json", "--cap", "2", "invariants", "--uniform", "2,3"])
        assert code == 3
        assert json.loads(out)["error"] == "capacity"

    def test_bad_uniform_argument(self, capsys):
        code, _ = _run(capsys, ["invariants", "--uniform", "two"])
        assert code == 2


class TestCheck:
    """The check command."""

    def test_check_writes_reports(self, capsys, tmp_path):
        out_file = tmp_path / "reports" / "check.json"
        summary = tmp_path / "reports" / "summary.md"
        code, out = _run(capsys, [
            "check", "--uniform-upto", "4", "--graphs-upto", "3", "--orderings", "2", "--seed", "1",
            "--out", str(out_file), "--summary", str(summary),
        ])
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert json.loads(out_file.read_text(encoding="utf-8")) == payload
        assert "| theorem |" in summary.read_text(encoding="utf-8")

    def test_check_uniform_ones(self, capsys):
        code, out = _run(capsys, ["check", "--suite", "uniform-ones"])
        assert code == 0
        assert json.loads(out)["suites"][0]["cases"] == 7

    def test_check_output_is_reproducible(self, capsys):
        first = _run(capsys, ["check", "--suite", "uniform-ones"])
        second = _run(capsys, ["check", "--suite", "uniform-ones"])
        assert first == second
        assert "elapsed_s" not in first[1]

    def test_bare_report_names_go_to_report_dir(self, capsys, tmp_path):
        set_config(MatlcConfig(report_dir=str(tmp_path / "reports")))
        code, out = _run(capsys, ["check", "--suite", "uniform-ones", "--out", "check.json", "--summary", "summary.md"])
        assert code == 0
        assert json.loads((tmp_path / "reports" / "check.json").read_text(encoding="utf-8")) == json.loads(out)
        assert "| uniform-ones | 7 | 0 | 0 |" in (tmp_path / "reports" / "summary.md").read_text(encoding="utf-8")

    def test_check_orderings_need_seed(self, capsys):
        code, _ = _run(capsys, ["check", "--uniform-upto", "3", "--graphs-upto", "2", "--orderings", "2"])
        assert code == 2


class TestGraphCommands:
    """The chromatic and reliability commands."""

    def test_chromatic(self, capsys, tmp_path):
        code, out = _run(capsys, ["chromatic", "--graph", _write(tmp_path, "k3.json", K3)])
        assert code == 0
        assert json.loads(out)["coeffs"] == ["1", "-3", "2", "0"]

    def test_chromatic_both_methods(self, capsys, tmp_path):
        code, out = _run(capsys, ["chromatic", "--graph", _write(tmp_path, "k4.json", K4), "--method", "both"])
        assert code == 0
        assert json.loads(out)["sequence"] == ["1", "-6", "11", "-6"]

    def test_reliability(self, capsys, tmp_path):
        code, out = _run(capsys, ["reliability", "--graph", _write(tmp_path, "k3.json", K3)])
        assert code == 0
        assert json.loads(out)["h"] == ["1", "2"]

    def test_reliability_edge_list_on_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n0 2\n"))
        code, out = _run(capsys, ["reliability", "--graph", "-"])
        assert code == 0
        assert json.loads(out)["h"] == ["1", "2"]

    def test_reliability_disconnected(self, capsys, tmp_path):
        path = _write(tmp_path, "split.json", {"vertices": 3, "edges": [[0, 1]]})
        code, out = _run(capsys, ["--json", "reliability", "--graph", path])
        assert code == 2
        assert json.loads(out)["error"] == "domain"


class TestRegions:
    """The regions command."""

    def test_generic_lines(self, capsys, tmp_path):
        forms = [["1", "1", "1"], ["1", "2", "4"], ["1", "3", "9"], ["1", "4", "16"]]
        code, out = _run(capsys, ["regions", "--lines", _write(tmp_path, "generic4.json", {"forms": forms})])
        assert code == 0
        payload = json.loads(out)
        assert payload["bounded_regions"] == 3
        assert payload["agrees"] is True

    def test_central(self, capsys, tmp_path):
        forms = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"]]
        path = _write(tmp_path, "central.json", {"forms": forms})
        code, out = _run(capsys, ["regions", "--central", path, "--infinity", "0"])
        assert code == 0
        payload = json.loads(out)
        assert payload["bounded_regions"] == 1
        assert payload["decone_identity"] is True

    def test_central_needs_infinity(self, capsys, tmp_path):
        path = _write(tmp_path, "central.json", {"forms": [["1", "0"], ["0", "1"]]})
        code, _ = _run(capsys, ["regions", "--central", path])
        assert code == 2

    def test_rank_three_lines(self, capsys, tmp_path):
        path = _write(tmp_path, "planes.json", {"forms": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"]]})
        code, out = _run(capsys, ["--json", "regions", "--lines", path])
        assert code == 2
        assert json.loads(out)["error"] == "unsupported-rank"


def test_missing_command():
    with pytest.raises(SystemExit):
        main([])
