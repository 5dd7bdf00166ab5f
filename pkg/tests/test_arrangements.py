"""
Tests for deconing, affine characteristic polynomials and region counts.
"""
import random

import pytest

from matlc.arrangements import (
    AffineArrangement,
    CentralArrangement,
    affine_char_poly,
    bounded_regions_2d,
    concurrent_lines,
    decone,
    decone_identity_holds,
    generic_lines,
    intersection_points,
    random_central_arrangement,
    varchenko_count,
)
from matlc.errors import DomainError, ParseError, UnsupportedRankError
from matlc.lattice import reduced_char_poly
from matlc.polynomial import IntPolynomial


def _generic_planes():
    return CentralArrangement(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)))


class TestDecone:
    """Deconing preserves the reduced characteristic polynomial."""

    def test_generic_planes(self):
        central = _generic_planes()
        affine = decone(central, 0)
        assert len(affine) == 3
        assert affine.dim == 2
        assert affine.infinity == "a"
        assert affine_char_poly(affine) == IntPolynomial.from_descending((1, -3, 3))
        for i in range(len(central)):
            assert decone_identity_holds(central, i)

    def test_pencil(self):
        pencil = CentralArrangement(((1, 0, 0), (0, 1, 0), (1, 1, 0)))
        assert not pencil.is_essential()
        affine = decone(pencil, 0)
        assert affine_char_poly(affine) == IntPolynomial.linear(-2)
        assert affine_char_poly(affine) == reduced_char_poly(pencil.matroid())
        with pytest.raises(DomainError):
            bounded_regions_2d(affine)

    def test_random_arrangements(self):
        rng = random.Random("arrangement test")
        for _ in range(5):
            central = random_central_arrangement(rng, rng.randint(4, 6))
            assert central.is_essential()
            expected = reduced_char_poly(central.matroid())
            for i in range(len(central)):
                affine = decone(central, i)
                assert affine_char_poly(affine) == expected
                if affine.is_essential():
                    assert bounded_regions_2d(affine) == varchenko_count(affine)

    def test_bad_infinity(self):
        with pytest.raises(DomainError):
            decone(_generic_planes(), 4)


class TestRegions:
    """Bounded regions of line arrangements."""

    @pytest.mark.parametrize("n, expected", [(3, 1), (4, 3), (5, 6), (6, 10)])
    def test_generic_lines(self, n, expected):
        lines = generic_lines(n)
        assert bounded_regions_2d(lines) == expected
        assert varchenko_count(lines) == expected

    def test_concurrent_lines(self):
        lines = concurrent_lines(3)
        assert len(intersection_points(lines)) == 1
        assert bounded_regions_2d(lines) == 0
        assert affine_char_poly(lines) == IntPolynomial.from_descending((1, -3, 2))

    def test_square(self):
        square = AffineArrangement.from_json({"forms": [["1", "0", "0"], ["1", "0", "1"], ["0", "1", "0"], ["0", "1", "1"]]})
        assert affine_char_poly(square) == IntPolynomial.from_descending((1, -4, 4))
        assert bounded_regions_2d(square) == 1
        assert varchenko_count(square) == 1

    def test_rank_three_is_unsupported(self):
        planes = AffineArrangement(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)))
        with pytest.raises(UnsupportedRankError):
            bounded_regions_2d(planes)


class TestValidation:
    """Input checks on arrangements."""

    def test_zero_form(self):
        with pytest.raises(DomainError):
            CentralArrangement(((0, 0, 0), (1, 0, 0)))

    def test_repeated_hyperplane(self):
        with pytest.raises(DomainError):
            CentralArrangement(((1, 2, 3), (2, 4, 6)))
        with pytest.raises(DomainError):
            AffineArrangement(((1, 1, 1), (2, 2, 2)))

    def test_non_real_input(self):
        with pytest.raises(DomainError):
            CentralArrangement.from_json({"forms": [["1j", "0"], ["0", "1"]]})

    def test_missing_forms(self):
        with pytest.raises(ParseError):
            AffineArrangement.from_json({"lines": []})

    def test_json(self):
        lines = AffineArrangement.from_json({"forms": [["1", "1/2", "3"], ["0", "1", "0"]], "labels": ["p", "q"]})
        assert lines.to_json() == {"forms": [["1", "1/2", "3"], ["0", "1", "0"]], "labels": ["p", "q"]}
