"""
Dense univariate polynomials with arbitrary-precision integer coefficients.

Ring operations are done directly on coefficient tuples; division and the
Taylor shift q -> q + a go through sympy's ZZ polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from sympy import Poly, ZZ, symbols

from matlc.errors import DomainError, ParseError

_q = symbols("q")


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(int(c) for c in out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (c,))

    @classmethod
    def linear(cls, a: int) -> "IntPolynomial":
        """Return q + a."""
        return cls((a, 1))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from coefficients written highest degree first."""
        return cls(tuple(reversed(list(coeffs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def descending(self) -> Tuple[int, ...]:
        """Coefficients highest degree first."""
        return tuple(reversed(self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _to_sympy(self) -> Poly:
        return Poly(list(self.descending()) or [0], _q, domain=ZZ)

    @classmethod
    def _from_sympy(cls, poly: Poly) -> "IntPolynomial":
        coeffs = poly.all_coeffs()
        if not all(c.is_integer for c in coeffs):
            raise DomainError(f"non-integer coefficients in {poly}")
        return cls.from_descending(int(c) for c in coeffs)

    def divmod(self, other: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder; ``other`` must be monic for integer results."""
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        quo, rem = self._to_sympy().div(other._to_sympy())
        return IntPolynomial._from_sympy(quo), IntPolynomial._from_sympy(rem)

    def shift(self, a: int) -> "IntPolynomial":
        """Return p(q + a)."""
        if self.is_zero():
            return self
        return IntPolynomial._from_sympy(self._to_sympy().shift(a))

    def to_json(self) -> Dict[str, List[str]]:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "IntPolynomial":
        try:
            return cls(tuple(int(str(c)) for c in data["coeffs"]))  # type: ignore[union-attr]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad polynomial JSON: {e}") from e

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return str(self._to_sympy().as_expr())
