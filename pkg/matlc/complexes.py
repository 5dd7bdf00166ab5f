"""
Simplicial complexes of a matroid and their face numbers.

- IN(M): the independent sets
- BC(M): sets containing no broken circuit, for a given element ordering
- reduced BC(M): faces of BC(M) avoiding the least element
- f-vectors, and h-vectors through
      sum_i f_i (q-1)^(r+1-i) = sum_i h_i q^(r+1-i)
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set

from matlc.errors import DomainError, InvariantViolation
from matlc.matroids.base import GroundSet, Matroid, iter_bits, popcount, subset_sort_key
from matlc.polynomial import IntPolynomial
from matlc.sequences import IntSeq

logger = logging.getLogger(__name__)

Ordering = Optional[Sequence[str]]


@dataclass(frozen=True)
class FaceComplex:
    """Explicit downward-closed family of subsets, as bitmasks over ``ground``.

    ``dim`` is fixed by the construction (rank - 1 for IN and BC), so an empty
    family still reports a full-length zero f-vector.
    """
    ground: GroundSet
    faces: FrozenSet[int]
    dim: int

    def __len__(self) -> int:
        return len(self.faces)

    def is_empty(self) -> bool:
        return not self.faces

    def __contains__(self, labels: object) -> bool:
        return self.ground.mask(labels) in self.faces  # type: ignore[arg-type]

    def f_vector(self) -> IntSeq:
        counts = [0] * (self.dim + 2)
        for face in self.faces:
            k = popcount(face)
            if k >= len(counts):
                raise InvariantViolation(f"face of size {k} in a complex of dimension {self.dim}")
            counts[k] += 1
        return tuple(counts)

    def h_vector(self) -> IntSeq:
        return f_to_h(self.f_vector(), self.dim)

    def facets(self) -> List[int]:
        n = len(self.ground)
        facets = [
            f for f in self.faces
            if all(f >> e & 1 or (f | (1 << e)) not in self.faces for e in range(n))
        ]
        return sorted(facets, key=subset_sort_key)

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets()}) <= 1

    def is_downward_closed(self) -> bool:
        return all((face & ~(1 << e)) in self.faces for face in self.faces for e in iter_bits(face))

    def face_sets(self) -> Set[FrozenSet[str]]:
        return {self.ground.subset(f) for f in self.faces}

    def to_json(self) -> Dict[str, object]:
        return {
            "f": [str(x) for x in self.f_vector()],
            "h": [str(x) for x in self.h_vector()],
            "dim": self.dim,
            "pure": self.is_pure(),
        }


@dataclass(frozen=True)
class FHVector:
    """f- and h-vector pair of a complex, both of length r+2."""
    f: IntSeq
    h: IntSeq

    @classmethod
    def of(cls, complex_: FaceComplex) -> "FHVector":
        f = complex_.f_vector()
        return cls(f, f_to_h(f, complex_.dim))


def f_to_h(f: Sequence[int], r: int) -> IntSeq:
    """Expand sum_i f_i (q-1)^(r+1-i) and read h_i off the coefficient of q^(r+1-i)."""
    d = r + 1
    if len(f) > d + 1:
        raise DomainError(f"f-vector of length {len(f)} is too long for dimension {r}")
    padded = list(f) + [0] * (d + 1 - len(f))
    minus_one = IntPolynomial.linear(-1)
    total = IntPolynomial.zero()
    for i, fi in enumerate(padded):
        if fi:
            total = total + (minus_one ** (d - i)) * fi
    return tuple(total.coefficient(d - k) for k in range(d + 1))


def h_to_f(h: Sequence[int], r: int) -> IntSeq:
    """Inverse of f_to_h: expand sum_i h_i (q+1)^(r+1-i)."""
    d = r + 1
    if len(h) > d + 1:
        raise DomainError(f"h-vector of length {len(h)} is too long for dimension {r}")
    padded = list(h) + [0] * (d + 1 - len(h))
    plus_one = IntPolynomial.linear(1)
    total = IntPolynomial.zero()
    for i, hi in enumerate(padded):
        if hi:
            total = total + (plus_one ** (d - i)) * hi
    return tuple(total.coefficient(d - k) for k in range(d + 1))


def element_positions(matroid: Matroid, ordering: Ordering) -> List[int]:
    """Position of each ground-set element in ``ordering`` (identity when omitted)."""
    n = len(matroid)
    if ordering is None:
        return list(range(n))
    ordering = list(ordering)
    if len(ordering) != n or set(ordering) != set(matroid.labels):
        raise DomainError("ordering must be a permutation of the ground set")
    pos = [0] * n
    for p, label in enumerate(ordering):
        pos[matroid.ground.index(label)] = p
    return pos


def least_element(matroid: Matroid, ordering: Ordering) -> int:
    if not len(matroid):
        raise DomainError("an empty ground set has no least element")
    pos = element_positions(matroid, ordering)
    return min(range(len(matroid)), key=pos.__getitem__)


def broken_circuit_masks(matroid: Matroid, ordering: Ordering = None, cap: Optional[int] = None) -> List[int]:
    pos = element_positions(matroid, ordering)
    out = set()
    for circuit in matroid.circuit_masks(cap):
        least = min(iter_bits(circuit), key=pos.__getitem__)
        out.add(circuit & ~(1 << least))
    return sorted(out, key=subset_sort_key)


def broken_circuits(matroid: Matroid, ordering: Ordering = None, cap: Optional[int] = None) -> List[FrozenSet[str]]:
    """Each circuit minus its least element under ``ordering``, deduplicated."""
    return [matroid.ground.subset(b) for b in broken_circuit_masks(matroid, ordering, cap)]


def independence_complex(matroid: Matroid, cap: Optional[int] = None) -> FaceComplex:
    """IN(M)."""
    return FaceComplex(matroid.ground, frozenset(matroid.independent_masks(cap)), matroid.full_rank - 1)


def bc_complex(matroid: Matroid, ordering: Ordering = None, cap: Optional[int] = None) -> FaceComplex:
    """BC(M): empty when M has a loop, since then the empty set is a broken circuit."""
    dim = matroid.full_rank - 1
    broken = broken_circuit_masks(matroid, ordering, cap)
    if 0 in broken:
        return FaceComplex(matroid.ground, frozenset(), dim)
    n = len(matroid)
    through: List[List[int]] = [[b for b in broken if b >> e & 1] for e in range(n)]
    faces: List[int] = [0]
    level = [0]
    while level:
        nxt = []
        for face in level:
            for e in range(face.bit_length(), n):
                cand = face | (1 << e)
                if not any(b & cand == b for b in through[e]):
                    nxt.append(cand)
        faces.extend(nxt)
        level = nxt
    logger.debug(f"[bc_complex] {len(faces)} NBC sets from {len(broken)} broken circuits")
    return FaceComplex(matroid.ground, frozenset(faces), dim)


def reduced_bc_complex(matroid: Matroid, ordering: Ordering = None, cap: Optional[int] = None) -> FaceComplex:
    """Faces of BC(M) that avoid the least element."""
    least = 1 << least_element(matroid, ordering)
    full = bc_complex(matroid, ordering, cap)
    return FaceComplex(full.ground, frozenset(f for f in full.faces if not f & least), full.dim - 1)


def cone(complex_: FaceComplex, apex: str) -> FaceComplex:
    """Cone over a complex with the given apex element."""
    bit = 1 << complex_.ground.index(apex)
    faces = set(complex_.faces)
    faces.update(f | bit for f in complex_.faces)
    return FaceComplex(complex_.ground, frozenset(faces), complex_.dim + 1)
