import random

from matlc.matroids import GraphicMatroid, Multigraph, UniformMatroid, vamos
from matlc.polynomial import IntPolynomial
from matlc.report import CONJECTURE, THEOREM, random_orderings, theorem_report


def test_uniform_report():
    report = theorem_report(UniformMatroid(2, 3))
    assert report.label == THEOREM
    assert report.h_in == (1, 1, 1)
    assert report.bc[0].f == (1, 3, 2)
    assert report.bc[0].h == (1, 1, 0)
    assert report.whitney == (1, 3, 2)
    assert report.chi == IntPolynomial.from_descending((1, -3, 2))
    assert report.reduced_chi == IntPolynomial.linear(-2)
    assert report.passed


def test_report_under_random_orderings():
    m = GraphicMatroid(Multigraph.complete(4))
    orderings = [None] + random_orderings(m.labels, 5, random.Random(7))
    report = theorem_report(m, orderings, name="K4")
    assert report.name == "K4"
    assert len(report.bc) == 6
    assert all(r.f == (1, 6, 11, 6) for r in report.bc)
    assert all(r.h == (1, 3, 2, 0) for r in report.bc)
    assert report.passed


def test_random_orderings_are_seeded_permutations():
    labels = ("a", "b", "c", "d")
    first = random_orderings(labels, 3, random.Random(1))
    assert first == random_orderings(labels, 3, random.Random(1))
    assert all(sorted(o) == list(labels) for o in first)


def test_vamos_is_a_conjecture_check():
    report = theorem_report(vamos())
    assert report.label == CONJECTURE
    assert not report.representable_over_q
    assert report.passed


def test_matroid_with_loop():
    report = theorem_report(GraphicMatroid(Multigraph(2, ((0, 1, "x"), (1, 1, "l")))))
    assert report.has_loop
    assert report.f_in == (1, 1)
    assert report.h_in == (1, 0)
    assert report.whitney == (0, 0)
    assert set(report.verdicts) == {"h(IN)", "f(IN)"}
    assert report.passed


def test_empty_matroid():
    report = theorem_report(UniformMatroid(0, 0))
    assert report.f_in == (1,)
    assert report.reduced_chi is None
    assert report.passed


def test_report_json():
    out = theorem_report(UniformMatroid(2, 3)).to_json()
    assert out["label"] == THEOREM
    assert out["IN"] == {"f": ["1", "3", "3"], "h": ["1", "1", "1"]}
    assert out["BC"][0]["ordering"] == ["a", "b", "c"]
    assert out["chi"] == {"coeffs": ["2", "-3", "1"]}
    assert out["verdicts"]["h(IN)"]["log_concave"] is True
    assert out["passed"] is True


def test_flat_lattice_built_once(monkeypatch):
    import matlc.lattice as lattice

    calls = []
    build = lattice.flat_lattice

    def counting(matroid, cap=None):
        calls.append(matroid)
        return build(matroid, cap)

    monkeypatch.setattr(lattice, "flat_lattice", counting)
    report = theorem_report(GraphicMatroid(Multigraph.complete(4)))
    assert len(calls) == 1
    assert report.reduced_chi == IntPolynomial((6, -5, 1))
    assert report.whitney == (1, 6, 11, 6)
