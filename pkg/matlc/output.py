from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Iterable


def render_json(payload: Any) -> str:
    """Serialize a report; key order is insertion order, so output is stable."""
    return json.dumps(payload, ensure_ascii=False, indent=2)


def write_json(path: Path, payload: Any) -> None:
    """Write report JSON, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_json(payload) + "\n", encoding="utf-8")


def write_summary(path: Path, suites: Iterable[Dict[str, Any]]) -> None:
    """Write a markdown table with one row per suite."""
    lines = ["| suite | cases | violations | conjecture failures | seconds |", "|---|---|---|---|---|"]
    for s in suites:
        lines.append(
            f'| {s["name"]} | {s["cases"]} | {len(s["violations"])} '
            f'| {len(s["conjecture_violations"])} | {s["elapsed_s"]} |'
        )
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
