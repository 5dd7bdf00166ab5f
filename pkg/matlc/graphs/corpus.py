"""
Graph corpora for the acceptance suites.

Connected simple graphs are generated by vertex augmentation: every connected
graph on v vertices has a vertex whose deletion leaves it connected, so
joining a new vertex to a nonempty subset of each graph on v - 1 vertices
reaches all of them. Isomorphic copies are rejected with a Weisfeiler-Lehman
hash bucket followed by an exact isomorphism test.
"""
from __future__ import annotations

import itertools
import logging
import random
from typing import Dict, Iterator, List, Optional

import networkx as nx

from matlc.errors import DomainError
from matlc.matroids.graphic import Multigraph

logger = logging.getLogger(__name__)


def _augment(graph: nx.Graph, budget: int) -> List[nx.Graph]:
    n = graph.number_of_nodes()
    out = []
    for k in range(1, min(n, budget) + 1):
        for nbrs in itertools.combinations(range(n), k):
            h = graph.copy()
            h.add_node(n)
            h.add_edges_from((n, u) for u in nbrs)
            out.append(h)
    return out


def _layers(vmax: int, max_edges: Optional[int]) -> Iterator[List[nx.Graph]]:
    if vmax < 1:
        raise DomainError("graphs need at least one vertex")
    single = nx.Graph()
    single.add_node(0)
    layer = [single]
    yield layer
    for v in range(2, vmax + 1):
        buckets: Dict[str, List[nx.Graph]] = {}
        nxt: List[nx.Graph] = []
        for g in layer:
            budget = g.number_of_nodes() if max_edges is None else max_edges - g.number_of_edges()
            for h in _augment(g, budget):
                key = nx.weisfeiler_lehman_graph_hash(h)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                nxt.append(h)
        layer = nxt
        logger.debug(f"[connected_graphs] {len(layer)} connected graphs on {v} vertices")
        yield layer


def connected_graphs(v: int, max_edges: Optional[int] = None) -> List[nx.Graph]:
    """One representative of every connected simple graph on v vertices, up to isomorphism.

    With ``max_edges`` only graphs with at most that many edges are produced.
    Pruning every layer at the same bound loses nothing: deleting a non-cut
    vertex removes at least one edge.
    """
    *_, last = _layers(v, max_edges)
    return last


def connected_graphs_upto(vmax: int, max_edges: Optional[int] = None) -> List[Multigraph]:
    """Connected simple graphs on 1..vmax vertices, by vertex count then generation order."""
    out: List[Multigraph] = []
    for layer in _layers(vmax, max_edges):
        out.extend(Multigraph.from_networkx(g) for g in layer)
    return out


def random_connected_graph(rng: random.Random, v: int, p: float = 0.5) -> Multigraph:
    """G(v, p) samples drawn from ``rng`` until one is connected."""
    if v < 1:
        raise DomainError("graphs need at least one vertex")
    while True:
        g = nx.gnp_random_graph(v, p, seed=rng.randrange(2 ** 32))
        if nx.is_connected(g):
            return Multigraph.from_networkx(g)
