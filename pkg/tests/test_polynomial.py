from math import comb

import pytest

from matlc.errors import DomainError, ParseError
from matlc.polynomial import IntPolynomial


def test_normal_form():
    assert IntPolynomial((1, 0, 0)) == IntPolynomial((1,))
    assert IntPolynomial.zero().degree == -1
    assert IntPolynomial.from_descending((1, -3, 2)) == IntPolynomial((2, -3, 1))
    assert IntPolynomial((2, -3, 1)).descending() == (1, -3, 2)


def test_ring_operations():
    product = IntPolynomial.linear(-1) * IntPolynomial.linear(-2)
    assert product == IntPolynomial.from_descending((1, -3, 2))
    assert IntPolynomial.linear(1) ** 3 == IntPolynomial.from_descending((1, 3, 3, 1))
    assert 3 * IntPolynomial.linear(1) == IntPolynomial((3, 3))
    assert product - product == IntPolynomial.zero()


def test_evaluation():
    chi_k3 = IntPolynomial.from_descending((1, -3, 2, 0))
    assert chi_k3(3) == 6
    assert chi_k3(1) == 0


def test_big_coefficients_are_exact():
    assert (IntPolynomial.linear(1) ** 40).coefficient(20) == comb(40, 20)


def test_divmod():
    quotient, remainder = IntPolynomial.from_descending((1, -3, 2)).divmod(IntPolynomial.linear(-1))
    assert quotient == IntPolynomial.linear(-2)
    assert remainder.is_zero()
    quotient, remainder = IntPolynomial.from_descending((1, 0, 1)).divmod(IntPolynomial.linear(-1))
    assert quotient == IntPolynomial.linear(1)
    assert remainder == IntPolynomial.constant(2)
    with pytest.raises(DomainError):
        quotient.divmod(IntPolynomial.zero())


def test_shift():
    assert IntPolynomial.linear(-2).shift(1) == IntPolynomial.linear(-1)
    assert IntPolynomial.zero().shift(1).is_zero()


def test_json():
    p = IntPolynomial((2, -3, 1))
    assert p.to_json() == {"coeffs": ["2", "-3", "1"]}
    assert IntPolynomial.from_json(p.to_json()) == p
    with pytest.raises(ParseError):
        IntPolynomial.from_json({"coeffs": ["x"]})
