import logging

import pytest

from matlc.errors import DomainError
from matlc.lattice import (
    bc_h_from_charpoly,
    char_poly,
    char_poly_boolean,
    flat_lattice,
    nbc_counts,
    reduced_char_poly,
    whitney_numbers,
)
from matlc.matroids import GraphicMatroid, Multigraph, UniformMatroid, fano
from matlc.polynomial import IntPolynomial


def _k4():
    return GraphicMatroid(Multigraph.complete(4))


def test_flat_lattice_of_triangle():
    lattice = flat_lattice(UniformMatroid(2, 3))
    assert len(lattice) == 5
    assert lattice.rank == 2
    assert len(lattice.atoms) == 3
    assert all(lattice.mobius[a] == -1 for a in lattice.atoms)
    assert lattice.mobius[lattice.top] == 2
    assert lattice.check_mobius_recursion()


def test_mobius_signs_alternate():
    lattice = flat_lattice(_k4())
    assert len(lattice.flats_of_rank(2)) == 7
    for k, x in lattice.flats():
        assert lattice.mobius[x] != 0
        assert (lattice.mobius[x] > 0) == (k % 2 == 0)


def test_loop_sits_in_the_bottom_flat():
    m = GraphicMatroid(Multigraph(2, ((0, 1, "x"), (1, 1, "l"))))
    lattice = flat_lattice(m)
    assert m.ground.subset(lattice.bottom) == frozenset({"l"})
    assert char_poly(m).is_zero()


def test_char_poly():
    assert char_poly(UniformMatroid(2, 3)) == IntPolynomial.from_descending((1, -3, 2))
    assert char_poly(UniformMatroid(3, 4)) == IntPolynomial.from_descending((1, -4, 6, -3))
    assert char_poly(_k4()) == IntPolynomial.from_descending((1, -6, 11, -6))
    assert char_poly(fano()) == IntPolynomial.from_descending((1, -7, 14, -8))
    assert char_poly(UniformMatroid(0, 0)) == IntPolynomial.constant(1)


def test_char_poly_agrees_with_boolean_expansion():
    for m in (UniformMatroid(2, 4), _k4(), fano(), UniformMatroid(0, 2)):
        assert char_poly(m) == char_poly_boolean(m)
        assert char_poly(m)(1) == 0


def test_whitney_numbers():
    assert whitney_numbers(UniformMatroid(2, 3)).values == (1, 3, 2)
    assert whitney_numbers(_k4()).values == (1, 6, 11, 6)
    looped = whitney_numbers(UniformMatroid(0, 1))
    assert looped.has_loop
    assert looped.values == (0,)


def test_loop_is_not_a_warning(caplog):
    with caplog.at_level(logging.DEBUG, logger="matlc.lattice"):
        whitney_numbers(UniformMatroid(0, 1))
    assert caplog.records
    assert all(r.levelno < logging.WARNING for r in caplog.records)


def test_nbc_counts_match_whitney_numbers():
    m = _k4()
    assert nbc_counts(m) == whitney_numbers(m).values
    assert nbc_counts(m, list(reversed(m.labels))) == whitney_numbers(m).values


def test_reduced_char_poly():
    assert reduced_char_poly(UniformMatroid(2, 3)) == IntPolynomial.linear(-2)
    assert reduced_char_poly(UniformMatroid(1, 1)) == IntPolynomial.constant(1)
    assert reduced_char_poly(_k4()) == IntPolynomial.from_descending((1, -5, 6))
    assert reduced_char_poly(UniformMatroid(0, 1)).is_zero()
    with pytest.raises(DomainError):
        reduced_char_poly(UniformMatroid(0, 0))


def test_reduced_char_poly_ignores_parallel_edges():
    doubled = GraphicMatroid(Multigraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (0, 2)]))
    assert reduced_char_poly(doubled) == reduced_char_poly(GraphicMatroid(Multigraph.complete(3)))


def test_bc_h_from_charpoly():
    assert bc_h_from_charpoly(UniformMatroid(2, 3)) == (1, 1, 0)
    assert bc_h_from_charpoly(UniformMatroid(2, 2)) == (1, 0, 0)
    assert bc_h_from_charpoly(_k4()) == (1, 3, 2, 0)
    for r in range(1, 5):
        assert bc_h_from_charpoly(UniformMatroid(r + 1, r + 2)) == (1,) * (r + 1) + (0,)
