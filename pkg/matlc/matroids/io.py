"""
JSON input for matroids and graphs.

    {"type": "uniform", "rank": k, "size": n}
    {"type": "graph", "vertices": v, "edges": [[u, w, "label"], ...]}
    {"type": "matrix", "columns": [["1/2", "0", ...], ...], "labels": [...]}
    {"type": "circuits", "labels": [...], "circuits": [["a", "b"], ...]}
"""
from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Dict, List

from matlc.errors import ParseError
from matlc.matroids.base import Matroid
from matlc.matroids.explicit import ExplicitCircuitsMatroid
from matlc.matroids.graphic import GraphicMatroid, Multigraph
from matlc.matroids.linear import LinearMatroid
from matlc.matroids.uniform import UniformMatroid

MATROID_TYPES = ("uniform", "graph", "matrix", "circuits")


def _ensure_keys(data: Dict[str, Any], required: List[str]) -> Dict[str, Any]:
    for k in required:
        if k not in data:
            raise ParseError(f"missing:{k}")
    return data


def read_text(path: str) -> str:
    """File contents; '-' reads stdin."""
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def _parse_json(text: str, path: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"cannot read JSON from {path}: {e}") from e


def read_json(path: str) -> Any:
    """Load a JSON document; '-' reads stdin."""
    return _parse_json(read_text(path), path)


def graph_from_json(data: Dict[str, Any]) -> Multigraph:
    if not isinstance(data, dict):
        raise ParseError("graph JSON must be an object")
    _ensure_keys(data, ["vertices", "edges"])
    edges = []
    for i, edge in enumerate(data["edges"]):
        if not isinstance(edge, (list, tuple)) or len(edge) not in (2, 3):
            raise ParseError(f"edge {i}: expected [u, w] or [u, w, label]")
        try:
            u, w = int(edge[0]), int(edge[1])
        except (TypeError, ValueError):
            raise ParseError(f"edge {i}: endpoints must be integers") from None
        label = str(edge[2]) if len(edge) == 3 else f"e{i + 1}"
        edges.append((u, w, label))
    try:
        vertices = int(data["vertices"])
    except (TypeError, ValueError):
        raise ParseError("vertices must be an integer") from None
    return Multigraph(vertices, tuple(edges))


def load_graph(path: str) -> Multigraph:
    """Read a graph from JSON, or from plain "u w" lines when the input is not a JSON object."""
    text = read_text(path)
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return graph_from_json(_parse_json(text, path))
    return Multigraph.from_text(text)


def matroid_from_json(data: Dict[str, Any]) -> Matroid:
    if not isinstance(data, dict):
        raise ParseError("matroid JSON must be an object")
    _ensure_keys(data, ["type"])
    kind = data["type"]
    if kind == "uniform":
        _ensure_keys(data, ["rank", "size"])
        try:
            rank, size = int(data["rank"]), int(data["size"])
        except (TypeError, ValueError):
            raise ParseError("uniform rank and size must be integers") from None
        return UniformMatroid(rank, size, data.get("labels"))
    if kind == "graph":
        return GraphicMatroid(graph_from_json(data))
    if kind == "matrix":
        _ensure_keys(data, ["columns"])
        return LinearMatroid(data["columns"], data.get("labels"))
    if kind == "circuits":
        _ensure_keys(data, ["labels", "circuits"])
        return ExplicitCircuitsMatroid(data["labels"], data["circuits"])
    raise ParseError(f"unknown matroid type {kind!r}; expected one of {', '.join(MATROID_TYPES)}")


def load_matroid(path: str, expected: str | None = None) -> Matroid:
    """Read a matroid file; ``expected`` fills in a missing "type" key."""
    data = read_json(path)
    if isinstance(data, dict) and expected and "type" not in data:
        data = dict(data, type=expected)
    return matroid_from_json(data)
