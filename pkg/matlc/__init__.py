"""Exact matroid and graph invariants with log-concavity verdicts."""

__all__ = [
    "config",
    "errors",
    "linalg",
    "polynomial",
    "complexes",
    "lattice",
    "sequences",
    "report",
    "output",
    "cli",
]
