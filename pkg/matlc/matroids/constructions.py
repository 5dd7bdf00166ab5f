"""
Derived matroids as lazy wrappers over an inner rank oracle.

- DualMatroid: rank*(S) = |S| + rank(E \\ S) - rank(E)
- FreeExtension: a new element in general position
- Restriction / ParallelExtension: deletion and parallel copies
- simplify, free_dual_extension, materialize
"""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

from matlc.config import resolve_cap
from matlc.errors import check_capacity
from matlc.matroids.base import GroundSet, Matroid, iter_bits, popcount
from matlc.matroids.explicit import ExplicitCircuitsMatroid

logger = logging.getLogger(__name__)


class DualMatroid(Matroid):
    """The dual M*, same ground set and order."""
    kind = "dual"

    def __init__(self, inner: Matroid):
        super().__init__(inner.ground)
        self.inner = inner

    @property
    def representable_over_q(self) -> bool:
        return self.inner.representable_over_q

    def _rank(self, mask: int) -> int:
        full = self.ground.full_mask
        return popcount(mask) + self.inner.rank_mask(full & ~mask) - self.inner.full_rank

    def describe(self):
        out = super().describe()
        out["of"] = self.inner.describe()
        return out


class FreeExtension(Matroid):
    """M + p: p is added in general position without raising the rank.

    ``first`` places p before every other element, otherwise after them.
    """
    kind = "free-extension"

    def __init__(self, inner: Matroid, label: str, first: bool = False):
        super().__init__(inner.ground.with_label(label, first=first))
        self.inner = inner
        self.label = label
        self.first = first
        n = len(inner)
        self._p_bit = 1 if first else 1 << n
        self._inner_full = inner.ground.full_mask

    @property
    def representable_over_q(self) -> bool:
        return self.inner.representable_over_q

    def _split(self, mask: int) -> Tuple[int, bool]:
        if self.first:
            return mask >> 1, bool(mask & 1)
        return mask & self._inner_full, bool(mask & self._p_bit)

    def _rank(self, mask: int) -> int:
        inner_mask, has_p = self._split(mask)
        r = self.inner.rank_mask(inner_mask)
        if has_p and r < self.inner.full_rank:
            return r + 1
        return r

    def describe(self):
        out = super().describe()
        out["of"] = self.inner.describe()
        out["new_element"] = self.label
        return out


class Restriction(Matroid):
    """M restricted to a subset of its elements, keeping their relative order."""
    kind = "restriction"

    def __init__(self, inner: Matroid, keep: Sequence[str]):
        indices = sorted(inner.ground.index(label) for label in keep)
        super().__init__(GroundSet(tuple(inner.labels[i] for i in indices)))
        self.inner = inner
        self._inner_bits = [1 << i for i in indices]

    @property
    def representable_over_q(self) -> bool:
        return self.inner.representable_over_q

    def _rank(self, mask: int) -> int:
        inner_mask = 0
        for i in iter_bits(mask):
            inner_mask |= self._inner_bits[i]
        return self.inner.rank_mask(inner_mask)


class ParallelExtension(Matroid):
    """M with a new element parallel to an existing one, appended last."""
    kind = "parallel-extension"

    def __init__(self, inner: Matroid, of_label: str, new_label: str):
        super().__init__(inner.ground.with_label(new_label))
        self.inner = inner
        self._of_bit = 1 << inner.ground.index(of_label)
        self._new_bit = 1 << len(inner)
        self._inner_full = inner.ground.full_mask

    @property
    def representable_over_q(self) -> bool:
        return self.inner.representable_over_q

    def _rank(self, mask: int) -> int:
        inner_mask = mask & self._inner_full
        if mask & self._new_bit:
            inner_mask |= self._of_bit
        return self.inner.rank_mask(inner_mask)


def dual(matroid: Matroid) -> Matroid:
    return DualMatroid(matroid)


def free_extension(matroid: Matroid, label: str) -> Matroid:
    """M + p with p last in the ground-set order."""
    return FreeExtension(matroid, label)


def free_dual_extension(matroid: Matroid, label: str) -> Matroid:
    """M x p := (M* + p)*, with p the smallest element."""
    return DualMatroid(FreeExtension(DualMatroid(matroid), label, first=True))


def restriction(matroid: Matroid, keep: Sequence[str]) -> Matroid:
    return Restriction(matroid, keep)


def add_parallel(matroid: Matroid, of_label: str, new_label: str) -> Matroid:
    return ParallelExtension(matroid, of_label, new_label)


def loops_and_parallels(matroid: Matroid) -> Tuple[Tuple[str, ...], List[Tuple[str, ...]]]:
    """Loops, and the parallel classes of the non-loops in ground-set order."""
    loops = matroid.closure_mask(0)
    classes: List[List[int]] = []
    for e in range(len(matroid)):
        if loops >> e & 1:
            continue
        for cls in classes:
            if matroid.rank_mask((1 << cls[0]) | (1 << e)) == 1:
                cls.append(e)
                break
        else:
            classes.append([e])
    labels = matroid.labels
    return matroid.ground.sorted_labels(loops), [tuple(labels[i] for i in cls) for cls in classes]


def simplify(matroid: Matroid) -> Matroid:
    """Delete loops and all but the first element of each parallel class."""
    loops, classes = loops_and_parallels(matroid)
    if not loops and all(len(c) == 1 for c in classes):
        return matroid
    logger.debug(f"[simplify] dropping {len(loops)} loops and {sum(len(c) - 1 for c in classes)} parallels")
    return Restriction(matroid, [c[0] for c in classes])


def materialize(matroid: Matroid, cap: Optional[int] = None) -> ExplicitCircuitsMatroid:
    """Tabulate the circuits of a (possibly composite) matroid."""
    circuits = matroid.circuits(cap)
    return ExplicitCircuitsMatroid(
        matroid.labels, circuits, representable_over_q=matroid.representable_over_q
    )


def rank_oracles_equal(first: Matroid, second: Matroid, cap: Optional[int] = None) -> bool:
    """Compare rank functions on every subset, matching elements by position."""
    if len(first) != len(second):
        return False
    check_capacity(len(first), resolve_cap(cap), "rank comparison")
    return all(first.rank_mask(m) == second.rank_mask(m) for m in range(1 << len(first)))


def check_rank_axioms(matroid: Matroid, cap: Optional[int] = None) -> Optional[str]:
    """Exhaustively check the rank axioms; return a description of the first failure."""
    n = len(matroid)
    check_capacity(n, resolve_cap(cap), "rank axiom check")
    for s in range(1 << n):
        r = matroid.rank_mask(s)
        if not 0 <= r <= popcount(s):
            return f"rank {r} out of bounds on {sorted(matroid.ground.subset(s))}"
        for e in range(n):
            be = 1 << e
            if s & be:
                continue
            re_ = matroid.rank_mask(s | be)
            if re_ < r or re_ > r + 1:
                return f"unit increase fails adding {matroid.labels[e]!r} to {sorted(matroid.ground.subset(s))}"
            for f in range(e + 1, n):
                bf = 1 << f
                if s & bf:
                    continue
                if re_ + matroid.rank_mask(s | bf) < matroid.rank_mask(s | be | bf) + r:
                    return (
                        f"submodularity fails at {sorted(matroid.ground.subset(s))} "
                        f"with {matroid.labels[e]!r}, {matroid.labels[f]!r}"
                    )
    return None
