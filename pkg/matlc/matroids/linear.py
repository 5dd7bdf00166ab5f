from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from matlc.errors import DomainError
from matlc.linalg import format_rational, integer_rank, parse_rational, to_integer_vector
from matlc.matroids.base import GroundSet, Matroid, default_labels, iter_bits


class LinearMatroid(Matroid):
    """Column matroid of a matrix over Q, one column per element."""
    kind = "matrix"

    def __init__(self, columns: Sequence[Sequence[object]], labels: Optional[Sequence[str]] = None):
        cols: List[List[Fraction]] = [[parse_rational(x) for x in col] for col in columns]
        heights = {len(c) for c in cols}
        if len(heights) > 1:
            raise DomainError(f"columns have different lengths: {sorted(heights)}")
        labels = tuple(labels) if labels is not None else default_labels(len(cols))
        if len(labels) != len(cols):
            raise DomainError(f"expected {len(cols)} labels, got {len(labels)}")
        super().__init__(GroundSet(labels))
        self.columns = tuple(tuple(c) for c in cols)
        # Scaling a column by a nonzero integer does not change any rank.
        self._integer_columns = [to_integer_vector(c) for c in cols]

    @property
    def representable_over_q(self) -> bool:
        return True

    def _rank(self, mask: int) -> int:
        return integer_rank([self._integer_columns[i] for i in iter_bits(mask)])

    def describe(self):
        out = super().describe()
        out["columns"] = [[format_rational(x) for x in col] for col in self.columns]
        return out
