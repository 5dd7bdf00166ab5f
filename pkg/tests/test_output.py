import json

from matlc.output import render_json, write_json, write_summary


def test_report_files(tmp_path):
    payload = {"name": "théorème", "passed": True}
    write_json(tmp_path / "out" / "check.json", payload)
    text = (tmp_path / "out" / "check.json").read_text(encoding="utf-8")
    assert json.loads(text) == payload
    assert "théorème" in render_json(payload)

    suites = [{"name": "theorem", "cases": 3, "violations": [], "conjecture_violations": ["x"], "elapsed_s": 0.5}]
    write_summary(tmp_path / "summary.md", suites)
    assert "| theorem | 3 | 0 | 1 | 0.5 |" in (tmp_path / "summary.md").read_text(encoding="utf-8")
