"""
Chromatic polynomials.

- Deletion-contraction on the underlying simple graph, memoized on a
  relabelled edge list (loops give zero, parallel edges collapse)
- The matroid path q^c * chi_{M(G)}(q) for graphs past the edge switch
- A brute-force proper-coloring counter used as an oracle
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from matlc.config import get_config, resolve_cap
from matlc.errors import DomainError, InvariantViolation
from matlc.graphs.cycles import cycle_matroid
from matlc.lattice import char_poly
from matlc.matroids.graphic import Multigraph
from matlc.polynomial import IntPolynomial
from matlc.sequences import LogConcavityVerdict, analyze_sequence, strip_trailing_zeros

logger = logging.getLogger(__name__)

SimpleEdges = Tuple[Tuple[int, int], ...]

METHODS = ("auto", "deletion-contraction", "matroid", "both")


@dataclass(frozen=True)
class ChromaticData:
    """chi_G(q) and the number of connected components c of G."""
    poly: IntPolynomial
    components: int
    method: str = "deletion-contraction"

    def to_json(self) -> Dict[str, object]:
        return {
            "coeffs": [str(c) for c in self.poly.descending()],
            "components": self.components,
            "method": self.method,
        }


def _relabel(n: int, edges: SimpleEdges) -> Tuple[int, SimpleEdges]:
    """Renumber vertices by (degree, sorted neighbour degrees, old index).

    The result is an exact relabelling of the input, so equal keys always
    describe isomorphic graphs. It is not a canonical form: ties broken by
    the old index can give isomorphic graphs different keys, which only
    costs a cache miss.
    """
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    deg = [len(a) for a in adj]
    order = sorted(range(n), key=lambda x: (deg[x], sorted(deg[y] for y in adj[x]), x))
    pos = {old: new for new, old in enumerate(order)}
    return n, tuple(sorted((min(pos[u], pos[w]), max(pos[u], pos[w])) for u, w in edges))


def _contract(n: int, edges: SimpleEdges, u: int, w: int) -> Tuple[int, SimpleEdges]:
    """Merge w into u (u < w); drop the resulting loop and parallel copies."""

    def image(x: int) -> int:
        if x == w:
            x = u
        return x - 1 if x > w else x

    merged = set()
    for a, b in edges:
        a, b = image(a), image(b)
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return n - 1, tuple(sorted(merged))


def _falling_factorial(n: int) -> IntPolynomial:
    out = IntPolynomial.constant(1)
    for i in range(n):
        out = out * IntPolynomial.linear(-i)
    return out


MEMO_SIZE = 1 << 16


@lru_cache(maxsize=MEMO_SIZE)
def _chromatic_key(n: int, edges: SimpleEdges) -> IntPolynomial:
    if not edges:
        return IntPolynomial.monomial(n)
    if len(edges) == n * (n - 1) // 2:
        return _falling_factorial(n)
    u, w = edges[-1]
    deleted = edges[:-1]
    return _chromatic(n, deleted) - _chromatic(*_contract(n, deleted, u, w))


def _chromatic(n: int, edges: SimpleEdges) -> IntPolynomial:
    return _chromatic_key(*_relabel(n, edges))


def deletion_contraction(graph: Multigraph) -> IntPolynomial:
    """chi_G by memoized deletion-contraction; zero when G has a self-loop."""
    if graph.has_self_loop():
        return IntPolynomial.zero()
    return _chromatic(graph.vertices, tuple(graph.simple_edges()))


def matroid_chromatic(graph: Multigraph, cap: Optional[int] = None) -> IntPolynomial:
    """q^c * chi_{M(G)}(q)."""
    chi = char_poly(cycle_matroid(graph), cap)
    return chi * IntPolynomial.monomial(graph.component_count())


def chromatic_polynomial(graph: Multigraph, method: str = "auto", cap: Optional[int] = None) -> ChromaticData:
    """Compute chi_G(q).

    Args:
        graph: input multigraph.
        method: "deletion-contraction", "matroid", "both" (run both and compare)
            or "auto", which takes the matroid path once the edge count passes
            the configured switch and still fits under the enumeration cap.
        cap: enumeration cap override for the matroid path.

    Returns:
        ChromaticData with the polynomial and component count.
    """
    if method not in METHODS:
        raise DomainError(f"unknown chromatic method {method!r}; expected one of {', '.join(METHODS)}")
    c = graph.component_count()
    if method == "auto":
        e = graph.edge_count
        use_matroid = e > get_config().chromatic_switch_edges and e <= resolve_cap(cap)
        method = "matroid" if use_matroid else "deletion-contraction"
    if method == "matroid":
        return ChromaticData(matroid_chromatic(graph, cap), c, method)
    poly = deletion_contraction(graph)
    if method == "both":
        other = matroid_chromatic(graph, cap)
        if other != poly:
            raise InvariantViolation(f"deletion-contraction gives {poly}, the cycle matroid gives {other}")
    return ChromaticData(poly, c, method)


def count_proper_colorings(graph: Multigraph, k: int) -> int:
    """Number of maps V -> {0..k-1} with distinct colours on every edge's ends."""
    if k < 0:
        raise DomainError("colour count must be nonnegative")
    if graph.has_self_loop():
        return 0
    edges = graph.simple_edges()
    return sum(
        1
        for colouring in itertools.product(range(k), repeat=graph.vertices)
        if all(colouring[u] != colouring[w] for u, w in edges)
    )


@dataclass(frozen=True)
class ChromaticReport:
    """Sign alternation, strict log-concavity and no internal zeros on the
    coefficients of chi_G with the q^c factor removed."""
    data: ChromaticData
    coefficients: Tuple[int, ...]
    verdict: LogConcavityVerdict

    @property
    def passed(self) -> bool:
        v = self.verdict
        return v.sign_alternating and v.strictly_log_concave and not v.internal_zeros

    def to_json(self) -> Dict[str, object]:
        out = self.data.to_json()
        out["sequence"] = [str(c) for c in self.coefficients]
        out["verdict"] = self.verdict.to_json()
        out["passed"] = self.passed
        return out


def chromatic_sequence(poly: IntPolynomial) -> Tuple[int, ...]:
    """Coefficients highest degree first, with the trailing zeros of q^c dropped."""
    return strip_trailing_zeros(poly.descending())


def chromatic_report(graph: Multigraph, method: str = "auto", cap: Optional[int] = None) -> ChromaticReport:
    data = chromatic_polynomial(graph, method, cap)
    seq = chromatic_sequence(data.poly)
    report = ChromaticReport(data, seq, analyze_sequence(seq))
    if not report.passed:
        logger.warning(f"[chromatic_report] coefficient sequence {seq} fails the verdict")
    return report


def check_deletion_contraction(graph: Multigraph, edge_label: str) -> bool:
    """chi_G = chi_{G-e} - chi_{G/e} for a non-loop edge e."""
    idx = graph.labels.index(edge_label) if edge_label in graph.labels else -1
    if idx < 0:
        raise DomainError(f"edge {edge_label!r} is not in the graph")
    u, w, _ = graph.edges[idx]
    if u == w:
        raise DomainError(f"edge {edge_label!r} is a loop")
    rest = graph.edges[:idx] + graph.edges[idx + 1:]
    deleted = Multigraph(graph.vertices, rest)
    lo, hi = min(u, w), max(u, w)

    def image(x: int) -> int:
        if x == hi:
            x = lo
        return x - 1 if x > hi else x

    contracted = Multigraph(
        max(1, graph.vertices - 1), tuple((image(a), image(b), lab) for a, b, lab in rest)
    )
    return deletion_contraction(graph) == deletion_contraction(deleted) - deletion_contraction(contracted)

