from __future__ import annotations

from typing import Optional, Sequence

from matlc.errors import DomainError
from matlc.matroids.base import GroundSet, Matroid, default_labels, popcount


class UniformMatroid(Matroid):
    """U_{k,n}: every set of at most k elements is independent."""
    kind = "uniform"

    def __init__(self, rank: int, size: int, labels: Optional[Sequence[str]] = None):
        if size < 0 or not 0 <= rank <= size:
            raise DomainError(f"uniform matroid needs 0 <= rank <= size, got U({rank},{size})")
        labels = tuple(labels) if labels is not None else default_labels(size)
        if len(labels) != size:
            raise DomainError(f"expected {size} labels, got {len(labels)}")
        super().__init__(GroundSet(labels))
        self.k = rank

    @property
    def representable_over_q(self) -> bool:
        return True

    def _rank(self, mask: int) -> int:
        return min(popcount(mask), self.k)

    def describe(self):
        out = super().describe()
        out["size"] = len(self)
        return out
