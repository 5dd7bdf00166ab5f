"""
Lattice of flats, Möbius function and characteristic polynomials.

chi_M(q) is computed three ways that must agree coefficient by coefficient:
the Möbius sum over flats, the Boolean expansion over all subsets, and the
signed NBC counts of the broken circuit complex.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from matlc.complexes import Ordering, bc_complex
from matlc.config import resolve_cap
from matlc.errors import DomainError, InvariantViolation, check_capacity
from matlc.matroids.base import GroundSet, Matroid, popcount, subset_sort_key
from matlc.polynomial import IntPolynomial
from matlc.sequences import IntSeq

logger = logging.getLogger(__name__)


@dataclass
class FlatLattice:
    """Flats grouped by rank, with mu(bottom, x) for every flat x."""
    ground: GroundSet
    flats_by_rank: Tuple[Tuple[int, ...], ...]
    mobius: Dict[int, int] = field(default_factory=dict)

    @property
    def bottom(self) -> int:
        return self.flats_by_rank[0][0]

    @property
    def top(self) -> int:
        return self.flats_by_rank[-1][0]

    @property
    def rank(self) -> int:
        return len(self.flats_by_rank) - 1

    @property
    def atoms(self) -> Tuple[int, ...]:
        return self.flats_by_rank[1] if self.rank >= 1 else ()

    def flats_of_rank(self, k: int) -> Tuple[int, ...]:
        return self.flats_by_rank[k]

    def __len__(self) -> int:
        return sum(len(level) for level in self.flats_by_rank)

    def flats(self) -> List[Tuple[int, int]]:
        """(rank, flat) pairs, bottom first."""
        return [(k, x) for k, level in enumerate(self.flats_by_rank) for x in level]

    def check_mobius_recursion(self) -> bool:
        """Sum of mu over the flats below any non-bottom flat x (x included) is zero."""
        pairs = self.flats()
        for k, x in pairs:
            if k == 0:
                continue
            if sum(self.mobius[y] for j, y in pairs if j <= k and y & ~x == 0) != 0:
                return False
        return True


def flat_lattice(matroid: Matroid, cap: Optional[int] = None) -> FlatLattice:
    """Flats as the distinct closures of independent sets; mu by the defining recursion."""
    by_rank: List[set] = [set() for _ in range(matroid.full_rank + 1)]
    for indep in matroid.independent_masks(cap):
        by_rank[popcount(indep)].add(matroid.closure_mask(indep))
    levels = tuple(tuple(sorted(level, key=subset_sort_key)) for level in by_rank)
    mobius: Dict[int, int] = {}
    below: List[int] = []
    for k, level in enumerate(levels):
        for x in level:
            if k == 0:
                mobius[x] = 1
            else:
                mobius[x] = -sum(mobius[y] for y in below if y & ~x == 0)
        below.extend(level)
    logger.debug(f"[FlatLattice] {len(mobius)} flats over {len(matroid)} elements")
    return FlatLattice(matroid.ground, levels, mobius)


def char_poly(matroid: Matroid, cap: Optional[int] = None) -> IntPolynomial:
    """chi_M(q) = sum over flats x of mu(bottom, x) q^(rank(E) - rank(x)); zero with a loop."""
    if matroid.has_loop():
        return IntPolynomial.zero()
    lattice = flat_lattice(matroid, cap)
    d = lattice.rank
    coeffs = [0] * (d + 1)
    for k, x in lattice.flats():
        coeffs[d - k] += lattice.mobius[x]
    return IntPolynomial(tuple(coeffs))


def char_poly_boolean(matroid: Matroid, cap: Optional[int] = None) -> IntPolynomial:
    """Independent oracle: sum over all subsets S of (-1)^|S| q^(rank(E) - rank(S))."""
    n = len(matroid)
    check_capacity(n, resolve_cap(cap), "Boolean expansion")
    d = matroid.full_rank
    coeffs = [0] * (d + 1)
    for s in range(1 << n):
        coeffs[d - matroid.rank_mask(s)] += -1 if popcount(s) & 1 else 1
    return IntPolynomial(tuple(coeffs))


@dataclass(frozen=True)
class WhitneyNumbers:
    """Unsigned coefficients of chi_M, highest degree first; all zero with a loop."""
    values: IntSeq
    has_loop: bool = False


def whitney_from_chi(chi: IntPolynomial, d: int) -> WhitneyNumbers:
    """Whitney numbers of a matroid of rank ``d`` from its chi; the zero polynomial means a loop."""
    if chi.is_zero():
        logger.debug("[whitney_numbers] matroid has a loop; Whitney numbers are reported as zero")
        return WhitneyNumbers(tuple([0] * (d + 1)), has_loop=True)
    return WhitneyNumbers(tuple((-1) ** i * chi.coefficient(d - i) for i in range(d + 1)))


def whitney_numbers(matroid: Matroid, cap: Optional[int] = None) -> WhitneyNumbers:
    return whitney_from_chi(char_poly(matroid, cap), matroid.full_rank)


def nbc_counts(matroid: Matroid, ordering: Ordering = None, cap: Optional[int] = None) -> IntSeq:
    """Number of NBC sets of each cardinality for the given ordering."""
    return bc_complex(matroid, ordering, cap).f_vector()


def reduced_char_poly(matroid: Matroid, cap: Optional[int] = None) -> IntPolynomial:
    """chi_M(q) / (q - 1); the zero polynomial when M has a loop."""
    if not len(matroid):
        raise DomainError("the reduced characteristic polynomial needs a nonempty ground set")
    return reduce_chi(char_poly(matroid, cap))


def reduce_chi(chi: IntPolynomial) -> IntPolynomial:
    """Divide chi by q - 1 exactly; zero stays zero."""
    if chi.is_zero():
        return chi
    quotient, remainder = chi.divmod(IntPolynomial.linear(-1))
    if not remainder.is_zero():
        raise InvariantViolation(f"chi_M(q) = {chi} is not divisible by q - 1")
    return quotient


def bc_h_from_charpoly(matroid: Matroid, cap: Optional[int] = None) -> IntSeq:
    """h-vector of BC(M) read off reduced chi at q + 1, with h_(r+1) = 0 appended."""
    return bc_h_from_reduced(reduced_char_poly(matroid, cap), matroid.full_rank)


def bc_h_from_reduced(reduced: IntPolynomial, d: int) -> IntSeq:
    r = d - 1
    shifted = reduced.shift(1)
    if shifted.is_zero():
        return tuple([0] * (d + 1))
    return tuple((-1) ** i * shifted.coefficient(r - i) for i in range(r + 1)) + (0,)
