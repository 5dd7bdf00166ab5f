"""
Exact linear algebra over the rationals.

- Rational parsing from "num/den" strings
- Fraction-free (Bareiss) elimination for ranks
- Gauss-Jordan over Fraction for coordinate changes
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

from matlc.errors import DomainError, ParseError

Vector = Sequence[Fraction]


def parse_rational(value: object) -> Fraction:
    """Parse an int or a "num/den" / decimal string into a normalized Fraction."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if "j" in text.lower():
            raise DomainError(f"non-real input is not supported: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational {value!r}: {e}") from e
    raise ParseError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a Fraction the way inputs are written."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_integer_vector(vec: Vector) -> List[int]:
    """Scale a rational vector by the lcm of its denominators."""
    scale = lcm(*(Fraction(x).denominator for x in vec)) if vec else 1
    return [int(Fraction(x) * scale) for x in vec]


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            row = m[i]
            prow = m[rank]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * p - a * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rational_rank(vectors: Sequence[Vector]) -> int:
    """Rank of a family of rational vectors."""
    return integer_rank([to_integer_vector(v) for v in vectors])


def is_proportional(u: Vector, v: Vector) -> bool:
    """True iff u and v span the same line (both nonzero)."""
    if not any(u) or not any(v):
        return False
    return rational_rank([u, v]) == 1


def solve(matrix: Sequence[Vector], rhs: Vector) -> Optional[List[Fraction]]:
    """Solve ``x · matrix = rhs`` for a square invertible matrix given by rows.

    Returns None when the matrix is singular.
    """
    n = len(matrix)
    # Work on the transpose so the unknowns are columns: matrix^T x^T = rhs^T.
    aug = [[Fraction(matrix[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [aug[i][n] for i in range(n)]


def complete_basis(first: Vector, dim: int) -> List[List[Fraction]]:
    """Extend a nonzero vector to a basis of Q^dim with standard unit vectors."""
    if len(first) != dim or not any(first):
        raise DomainError("cannot complete a zero vector to a basis")
    basis: List[List[Fraction]] = [[Fraction(x) for x in first]]
    for i in range(dim):
        unit = [Fraction(int(i == j)) for j in range(dim)]
        if rational_rank(basis + [unit]) == len(basis) + 1:
            basis.append(unit)
        if len(basis) == dim:
            break
    return basis
