from fractions import Fraction

import pytest

from matlc.errors import DomainError, ParseError
from matlc.linalg import (
    complete_basis,
    format_rational,
    integer_rank,
    is_proportional,
    parse_rational,
    rational_rank,
    solve,
)


def test_parse_rational():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(3) == 3
    assert parse_rational(" 0.25 ") == Fraction(1, 4)


@pytest.mark.parametrize("bad", ["abc", "1/0", True, None, 1.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_parse_rational_rejects_complex():
    with pytest.raises(DomainError):
        parse_rational("1+2j")


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_integer_rank():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0]]) == 0
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert integer_rank([[0, 1, 2], [0, 2, 4], [1, 0, 0]]) == 2
    assert integer_rank([[2, 3, 5], [7, 11, 13], [17, 19, 23]]) == 3


def test_rational_rank():
    assert rational_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
    assert rational_rank([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == 2


def test_is_proportional():
    assert is_proportional([1, 2], [2, 4])
    assert is_proportional([1, -1], [Fraction(-1, 2), Fraction(1, 2)])
    assert not is_proportional([1, 2], [2, 3])
    assert not is_proportional([0, 0], [1, 1])


def test_solve():
    assert solve([[1, 0], [0, 1]], [3, 4]) == [3, 4]
    # x . M = rhs with rows (1, 1) and (0, 1)
    assert solve([[1, 1], [0, 1]], [2, 5]) == [2, 3]
    assert solve([[1, 2], [2, 4]], [1, 1]) is None


def test_complete_basis():
    basis = complete_basis([0, 1, 0], 3)
    assert basis == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert rational_rank(complete_basis([1, 1, 1], 3)) == 3
    with pytest.raises(DomainError):
        complete_basis([0, 0, 0], 3)
