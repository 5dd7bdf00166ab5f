"""
Multigraphs and their cycle matroids.

Edges are matroid elements; a self-loop is a matroid loop and parallel edges
are parallel elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from matlc.errors import DomainError, ParseError
from matlc.matroids.base import GroundSet, Matroid, iter_bits

Edge = Tuple[int, int, str]


@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..v-1 and labelled edges; loops and parallel edges allowed."""
    vertices: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.vertices < 1:
            raise DomainError("a graph needs at least one vertex")
        edges = tuple((int(u), int(w), str(label)) for u, w, label in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, w, label in edges:
            if not (0 <= u < self.vertices and 0 <= w < self.vertices):
                raise DomainError(f"edge {label!r} has an endpoint outside 0..{self.vertices - 1}")
        GroundSet(tuple(label for _, _, label in edges))

    @classmethod
    def from_pairs(
        cls, vertices: int, pairs: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None
    ) -> "Multigraph":
        pairs = list(pairs)
        labels = list(labels) if labels is not None else [f"e{i + 1}" for i in range(len(pairs))]
        return cls(vertices, tuple((u, w, lab) for (u, w), lab in zip(pairs, labels)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Multigraph":
        """Relabel nodes to 0..v-1 in sorted order; edge labels e1, e2, ..."""
        nodes = sorted(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        pairs = sorted(tuple(sorted((index[u], index[w]))) for u, w in graph.edges())
        return cls.from_pairs(max(1, len(nodes)), pairs)

    @classmethod
    def complete(cls, v: int) -> "Multigraph":
        return cls.from_networkx(nx.complete_graph(v))

    @classmethod
    def cycle(cls, v: int) -> "Multigraph":
        return cls.from_networkx(nx.cycle_graph(v))

    @classmethod
    def from_text(cls, text: str) -> "Multigraph":
        """Parse plain "u w [label]" lines; '#' starts a comment."""
        pairs: List[Tuple[int, int]] = []
        labels: List[str] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                u, w = int(parts[0]), int(parts[1])
            except (IndexError, ValueError):
                raise ParseError(f"line {lineno}: expected 'u w [label]', got {raw!r}") from None
            pairs.append((u, w))
            labels.append(parts[2] if len(parts) > 2 else f"e{len(labels) + 1}")
        vertices = 1 + max((max(p) for p in pairs), default=0)
        return cls.from_pairs(vertices, pairs, labels)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(label for _, _, label in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_self_loop(self) -> bool:
        return any(u == w for u, w, _ in self.edges)

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertices))
        for u, w, label in self.edges:
            g.add_edge(u, w, key=label)
        return g

    def component_count(self) -> int:
        return nx.number_connected_components(self.to_networkx())

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def simple_edges(self) -> List[Tuple[int, int]]:
        """Distinct non-loop vertex pairs, each as (min, max)."""
        return sorted({(min(u, w), max(u, w)) for u, w, _ in self.edges if u != w})

    def to_json(self) -> Dict[str, object]:
        return {"type": "graph", "vertices": self.vertices, "edges": [list(e) for e in self.edges]}


def spanning_forest_size(vertices: int, ends: Sequence[Tuple[int, int]], mask: int) -> int:
    """Number of edges of a spanning forest of the edges selected by ``mask``."""
    parent = list(range(vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    size = 0
    for i in iter_bits(mask):
        u, w = ends[i]
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[ru] = rw
            size += 1
    return size


class GraphicMatroid(Matroid):
    """Cycle matroid: independent sets are the forests of the graph."""
    kind = "graph"

    def __init__(self, graph: Multigraph):
        super().__init__(GroundSet(graph.labels))
        self.graph = graph
        self._ends = [(u, w) for u, w, _ in graph.edges]

    @property
    def representable_over_q(self) -> bool:
        return True

    def _rank(self, mask: int) -> int:
        return spanning_forest_size(self.graph.vertices, self._ends, mask)

    def describe(self):
        out = super().describe()
        out.update(self.graph.to_json())
        out["kind"] = self.kind
        return out
