"""
Deconing a central arrangement and the characteristic polynomial of the result.

The chosen form phi_0 is completed to a basis with unit vectors; every other
form is rewritten in that basis and dehomogenized by setting the phi_0
coordinate to 1.
"""
from __future__ import annotations

import logging
from typing import List, Optional

from matlc.arrangements.model import AffineArrangement, CentralArrangement, Form
from matlc.config import resolve_cap
from matlc.errors import DomainError, InvariantViolation, check_capacity
from matlc.lattice import reduced_char_poly
from matlc.linalg import complete_basis, rational_rank, solve
from matlc.matroids.base import iter_bits, popcount
from matlc.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


def decone(arrangement: CentralArrangement, infinity: int) -> AffineArrangement:
    """Send form ``infinity`` to the hyperplane at infinity."""
    if not 0 <= infinity < len(arrangement):
        raise DomainError(f"infinity index {infinity} outside 0..{len(arrangement) - 1}")
    if len(arrangement) < 2:
        raise DomainError("deconing needs at least two hyperplanes")
    phi0 = arrangement.forms[infinity]
    if not any(phi0):
        raise DomainError("the hyperplane at infinity has a zero form")
    dim = arrangement.dim
    basis = complete_basis(phi0, dim)
    forms: List[Form] = []
    labels: List[str] = []
    for i, phi in enumerate(arrangement.forms):
        if i == infinity:
            continue
        coords = solve(basis, phi)
        if coords is None:
            raise InvariantViolation("completed basis is singular")
        # phi = c_0 y_0 + sum c_j y_j with y_0 = 1 gives sum c_j y_j = -c_0.
        forms.append(tuple(coords[1:]) + (-coords[0],))
        labels.append(arrangement.labels[i])
    logger.debug(f"[decone] {len(forms)} affine hyperplanes in dimension {dim - 1}")
    return AffineArrangement(tuple(forms), tuple(labels), arrangement.labels[infinity])


def _consistent(arrangement: AffineArrangement, mask: int, normal_rank: int) -> bool:
    rows = [arrangement.forms[i] for i in iter_bits(mask)]
    return rational_rank(rows) == normal_rank


def affine_char_poly(arrangement: AffineArrangement, cap: Optional[int] = None) -> IntPolynomial:
    """chi_A(q) = sum over subsets S with a common point of (-1)^|S| q^(rank(A) - rank(S)).

    Using rank(A) rather than the ambient dimension computes chi on the
    essentialization, so non-essential arrangements are accepted.
    """
    n = len(arrangement)
    check_capacity(n, resolve_cap(cap), "affine Boolean expansion")
    normals = arrangement.normals()
    top = arrangement.rank
    coeffs = [0] * (top + 1)
    for s in range(1 << n):
        r = rational_rank([normals[i] for i in iter_bits(s)])
        if s and not _consistent(arrangement, s, r):
            continue
        coeffs[top - r] += -1 if popcount(s) & 1 else 1
    return IntPolynomial(tuple(coeffs))


def decone_identity_holds(arrangement: CentralArrangement, infinity: int, cap: Optional[int] = None) -> bool:
    """chi of the decone equals the reduced chi of the column matroid."""
    return affine_char_poly(decone(arrangement, infinity), cap) == reduced_char_poly(arrangement.matroid(), cap)


def varchenko_count(arrangement: AffineArrangement, cap: Optional[int] = None) -> int:
    """(-1)^r chi_A(1), with r the rank of the arrangement."""
    return (-1) ** arrangement.rank * affine_char_poly(arrangement, cap)(1)
