"""Matroids given by their circuit family."""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

from matlc.config import get_config
from matlc.errors import DomainError
from matlc.matroids.base import GroundSet, Matroid, iter_bits, popcount, subset_sort_key

logger = logging.getLogger(__name__)


class ExplicitCircuitsMatroid(Matroid):
    """Matroid defined by an explicit antichain of circuits.

    The circuit axioms are validated at construction when the ground set has
    at most ``validation_cap`` elements; larger inputs are trusted.
    """
    kind = "circuits"

    def __init__(
        self,
        labels: Sequence[str],
        circuits: Iterable[Iterable[str]],
        representable_over_q: bool = False,
        validation_cap: Optional[int] = None,
    ):
        super().__init__(GroundSet(tuple(labels)))
        masks = sorted({self.ground.mask(c) for c in circuits}, key=subset_sort_key)
        self._circuits = masks
        self._representable = representable_over_q
        self._by_element: List[List[int]] = [[c for c in masks if c >> i & 1] for i in range(len(self))]
        cap = get_config().validation_cap if validation_cap is None else validation_cap
        if len(self) <= cap:
            self._validate()
        else:
            logger.info(f"[ExplicitCircuitsMatroid] {len(self)} elements > {cap}, circuit axioms trusted")

    @property
    def representable_over_q(self) -> bool:
        return self._representable

    def _validate(self) -> None:
        circuits = self._circuits
        if 0 in circuits:
            raise DomainError("the empty set cannot be a circuit")
        for a, b in combinations(circuits, 2):
            if a & b == a or a & b == b:
                raise DomainError(
                    f"circuits {sorted(self.ground.subset(a))} and {sorted(self.ground.subset(b))} are comparable"
                )
        for a, b in combinations(circuits, 2):
            union = a | b
            for e in iter_bits(a & b):
                rest = union & ~(1 << e)
                if not any(c & rest == c for c in circuits):
                    raise DomainError(
                        f"circuit elimination fails for {sorted(self.ground.subset(a))}, "
                        f"{sorted(self.ground.subset(b))} at {self.ground.labels[e]!r}"
                    )

    def _rank(self, mask: int) -> int:
        # Greedy growth is exact for matroids; only circuits through the new element matter.
        indep = 0
        for i in iter_bits(mask):
            cand = indep | (1 << i)
            if not any(c & cand == c for c in self._by_element[i]):
                indep = cand
        return popcount(indep)

    def describe(self):
        out = super().describe()
        out["circuits"] = [list(self.ground.sorted_labels(c)) for c in self._circuits]
        return out


def sparse_paving(
    labels: Sequence[str],
    rank: int,
    hyperplanes: Iterable[Iterable[str]],
    representable_over_q: bool = False,
) -> ExplicitCircuitsMatroid:
    """Sparse paving matroid from its circuit-hyperplanes.

    The circuits are the given rank-sized sets plus every (rank+1)-set that
    contains none of them.
    """
    ground = GroundSet(tuple(labels))
    hyper = [ground.mask(h) for h in hyperplanes]
    for h in hyper:
        if popcount(h) != rank:
            raise DomainError(f"circuit-hyperplane {sorted(ground.subset(h))} does not have {rank} elements")
    for a, b in combinations(hyper, 2):
        if popcount(a & b) >= rank - 1:
            raise DomainError("circuit-hyperplanes of a sparse paving matroid share fewer than rank-1 elements")
    circuits = [ground.subset(h) for h in hyper]
    for combo in combinations(range(len(ground)), rank + 1):
        m = sum(1 << i for i in combo)
        if not any(h & m == h for h in hyper):
            circuits.append(ground.subset(m))
    return ExplicitCircuitsMatroid(ground.labels, circuits, representable_over_q=representable_over_q)


def fano() -> ExplicitCircuitsMatroid:
    """The Fano plane F7; representable only in characteristic 2."""
    labels = [str(i) for i in range(1, 8)]
    lines = [[str((i + d) % 7 + 1) for d in (0, 1, 3)] for i in range(7)]
    return sparse_paving(labels, 3, lines)


def vamos() -> ExplicitCircuitsMatroid:
    """The Vámos matroid V8; not representable over any field."""
    labels = ["a", "a'", "b", "b'", "c", "c'", "d", "d'"]
    pairs = {x: [x, x + "'"] for x in "abcd"}
    hyper = [pairs[x] + pairs[y] for x, y in (("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"))]
    return sparse_paving(labels, 4, hyper)
