"""
All-terminal reliability with a common edge probability p.

f_i counts the i-edge sets whose removal keeps G connected. With d = e - v + 1,

    Rel_G(p) = sum_i f_i p^(e-i) (1-p)^i = p^(v-1) sum_i h_i (1-p)^i

and the h-sequence must equal the h-vector of IN(cocycle matroid of G).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from matlc.complexes import independence_complex
from matlc.config import resolve_cap
from matlc.errors import DomainError, check_capacity
from matlc.graphs.cycles import cocycle_matroid
from matlc.matroids.graphic import Multigraph, spanning_forest_size
from matlc.polynomial import IntPolynomial
from matlc.sequences import IntSeq, LogConcavityVerdict, analyze_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReliabilityData:
    fseq: IntSeq
    hseq: IntSeq
    edges: int
    vertices: int

    @property
    def corank(self) -> int:
        """e - v + 1, the top index of both sequences."""
        return self.edges - self.vertices + 1

    @property
    def spanning_trees(self) -> int:
        return self.fseq[-1]

    def polynomial(self) -> IntPolynomial:
        """Rel_G as a polynomial in p."""
        p = IntPolynomial.monomial(1)
        one_minus_p = IntPolynomial.constant(1) - p
        total = IntPolynomial.zero()
        for i, fi in enumerate(self.fseq):
            total = total + (p ** (self.edges - i)) * (one_minus_p ** i) * fi
        return total

    def to_json(self) -> Dict[str, object]:
        return {
            "edges": self.edges,
            "vertices": self.vertices,
            "f": [str(x) for x in self.fseq],
            "h": [str(x) for x in self.hseq],
            "rel": self.polynomial().to_json(),
        }


def _check_reliability_input(graph: Multigraph) -> None:
    if graph.has_self_loop():
        raise DomainError("reliability is not defined here for graphs with self-loops")
    if not graph.is_connected():
        raise DomainError("reliability needs a connected graph")


def removable_edge_sets(graph: Multigraph, cap: Optional[int] = None) -> List[int]:
    """Bitmasks of the edge sets whose removal leaves G connected.

    The family is closed under subsets, so it is grown one edge at a time.
    """
    e = graph.edge_count
    check_capacity(e, resolve_cap(cap), "reliability enumeration")
    ends = [(u, w) for u, w, _ in graph.edges]
    full = (1 << e) - 1
    tree = graph.vertices - 1
    found = [0]
    level = [0]
    while level:
        nxt = []
        for removed in level:
            for i in range(removed.bit_length(), e):
                cand = removed | (1 << i)
                if spanning_forest_size(graph.vertices, ends, full & ~cand) == tree:
                    nxt.append(cand)
        found.extend(nxt)
        level = nxt
    return found


def h_from_reliability_f(fseq: IntSeq) -> IntSeq:
    """Expand sum_i f_i x^i (1-x)^(d-i) and read off the coefficients of x^i."""
    d = len(fseq) - 1
    x = IntPolynomial.monomial(1)
    one_minus_x = IntPolynomial.constant(1) - x
    total = IntPolynomial.zero()
    for i, fi in enumerate(fseq):
        if fi:
            total = total + (x ** i) * (one_minus_x ** (d - i)) * fi
    return tuple(total.coefficient(i) for i in range(d + 1))


def reliability_data(graph: Multigraph, cap: Optional[int] = None) -> ReliabilityData:
    _check_reliability_input(graph)
    d = graph.edge_count - graph.vertices + 1
    counts = [0] * (d + 1)
    for removed in removable_edge_sets(graph, cap):
        counts[bin(removed).count("1")] += 1
    fseq = tuple(counts)
    logger.debug(f"[reliability_data] e={graph.edge_count} v={graph.vertices} f={fseq}")
    return ReliabilityData(fseq, h_from_reliability_f(fseq), graph.edge_count, graph.vertices)


def reliability_polynomial(graph: Multigraph, cap: Optional[int] = None) -> IntPolynomial:
    return reliability_data(graph, cap).polynomial()


def cocycle_h_vector(graph: Multigraph, cap: Optional[int] = None) -> IntSeq:
    """h-vector of IN(M*(G))."""
    return independence_complex(cocycle_matroid(graph), cap).h_vector()


@dataclass(frozen=True)
class ReliabilityReport:
    data: ReliabilityData
    cocycle_h: IntSeq
    verdict: LogConcavityVerdict

    @property
    def bridge_holds(self) -> bool:
        return self.data.hseq == self.cocycle_h

    @property
    def passed(self) -> bool:
        v = self.verdict
        return self.bridge_holds and v.log_concave and v.nonnegative and not v.internal_zeros

    def to_json(self) -> Dict[str, object]:
        out = self.data.to_json()
        out["cocycle_h"] = [str(x) for x in self.cocycle_h]
        out["bridge_holds"] = self.bridge_holds
        out["verdict"] = self.verdict.to_json()
        out["passed"] = self.passed
        return out


def reliability_report(graph: Multigraph, cap: Optional[int] = None) -> ReliabilityReport:
    """h-sequence verdict plus the comparison with the cocycle matroid complex."""
    data = reliability_data(graph, cap)
    report = ReliabilityReport(data, cocycle_h_vector(graph, cap), analyze_sequence(data.hseq))
    if not report.bridge_holds:
        logger.warning(f"[reliability_report] h={data.hseq} but IN(M*) gives h={report.cocycle_h}")
    return report
