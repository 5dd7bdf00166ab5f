"""
Built-in fixture corpus.

Every fixture carries a stable key (report order is key order), a
representability label and a provenance note.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from matlc.errors import DomainError
from matlc.graphs.corpus import connected_graphs_upto
from matlc.graphs.cycles import cocycle_matroid, cycle_matroid
from matlc.matroids.base import Matroid
from matlc.matroids.explicit import fano, vamos
from matlc.matroids.linear import LinearMatroid
from matlc.matroids.uniform import UniformMatroid
from matlc.report import CONJECTURE, THEOREM

logger = logging.getLogger(__name__)


@dataclass
class Fixture:
    key: str
    matroid: Matroid
    provenance: str

    @property
    def label(self) -> str:
        return THEOREM if self.matroid.representable_over_q else CONJECTURE


# Small exact-rational samples; columns are elements.
MATRIX_SAMPLES: Dict[str, List[List[str]]] = {
    "generic-3x4": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"]],
    "k4-incidence": [
        ["1", "-1", "0", "0"], ["1", "0", "-1", "0"], ["1", "0", "0", "-1"],
        ["0", "1", "-1", "0"], ["0", "1", "0", "-1"], ["0", "0", "1", "-1"],
    ],
    "rational-3x6": [
        ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
        ["1/2", "1/3", "0"], ["0", "2/3", "-1/5"], ["1", "1", "1"],
    ],
    "parallel-2x5": [["1", "0"], ["2", "0"], ["0", "1"], ["1", "1"], ["-1/2", "-1/2"]],
    "rank4-sample": [
        ["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"],
        ["1", "1", "0", "0"], ["0", "1", "1", "1"], ["1", "-1", "2", "1/2"],
    ],
}


def uniform_fixtures(upto: int) -> List[Fixture]:
    return [
        Fixture(f"uniform/U{k}_{n}", UniformMatroid(k, n), f"uniform matroid U({k},{n})")
        for n in range(1, upto + 1)
        for k in range(1, n + 1)
    ]


def graph_fixtures(vmax: int) -> List[Fixture]:
    """Cycle and cocycle matroids of every connected simple graph on at most vmax vertices."""
    out = []
    counts: Dict[int, int] = {}
    for g in connected_graphs_upto(vmax):
        i = counts.get(g.vertices, 0)
        counts[g.vertices] = i + 1
        stem = f"graph/v{g.vertices}/{i:03d}"
        note = f"connected graph on {g.vertices} vertices with edges {g.simple_edges()}"
        out.append(Fixture(f"{stem}/cycle", cycle_matroid(g), f"cycle matroid of {note}"))
        out.append(Fixture(f"{stem}/cocycle", cocycle_matroid(g), f"cocycle matroid of {note}"))
    return out


def matrix_fixtures() -> List[Fixture]:
    return [
        Fixture(f"matrix/{name}", LinearMatroid(cols), "column matroid of a rational matrix")
        for name, cols in MATRIX_SAMPLES.items()
    ]


EXPLICIT: Dict[str, Callable[[], Matroid]] = {"fano": fano, "vamos": vamos}


def explicit_fixtures() -> List[Fixture]:
    return [
        Fixture(f"explicit/{name}", build(), f"{name} matroid from its circuits")
        for name, build in EXPLICIT.items()
    ]


def build_corpus(
    uniform_upto: Optional[int] = 9,
    graphs_upto: Optional[int] = 6,
    matrices: bool = True,
    explicit: bool = True,
) -> List[Fixture]:
    """Assemble the requested families, sorted by key."""
    fixtures: List[Fixture] = []
    if uniform_upto:
        fixtures.extend(uniform_fixtures(uniform_upto))
    if graphs_upto:
        fixtures.extend(graph_fixtures(graphs_upto))
    if matrices:
        fixtures.extend(matrix_fixtures())
    if explicit:
        fixtures.extend(explicit_fixtures())
    fixtures.sort(key=lambda f: f.key)
    logger.info(f"[FixtureCorpus] {len(fixtures)} fixtures")
    return fixtures


def find_fixture(name: str) -> Fixture:
    """Look a fixture up by key or by its last path component ("fano", "U2_3")."""
    for fixture in build_corpus(uniform_upto=9, graphs_upto=4):
        if name in (fixture.key, fixture.key.rsplit("/", 1)[-1]):
            return fixture
    raise DomainError(f"unknown fixture {name!r}")
