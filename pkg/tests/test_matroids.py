"""
Tests for the matroid representations, derived matroids and JSON input.
"""
import io
import json

import pytest

from matlc.errors import CapacityError, DomainError, ParseError
from matlc.matroids import (
    ExplicitCircuitsMatroid,
    GraphicMatroid,
    LinearMatroid,
    Multigraph,
    UniformMatroid,
)
from matlc.matroids.base import Matroid
from matlc.matroids.constructions import (
    add_parallel,
    check_rank_axioms,
    dual,
    free_dual_extension,
    free_extension,
    loops_and_parallels,
    materialize,
    rank_oracles_equal,
    restriction,
    simplify,
)
from matlc.matroids.explicit import fano, vamos
from matlc.matroids.io import load_graph, load_matroid, matroid_from_json


def _k3():
    return GraphicMatroid(Multigraph.complete(3))


def _looped():
    return GraphicMatroid(Multigraph(2, ((0, 1, "x"), (1, 1, "l"))))


def _doubled_triangle():
    return GraphicMatroid(Multigraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (0, 2)], ["a1", "a2", "b", "c"]))


class TestRankOracles:
    """Rank, independence, closure and circuits."""

    def test_uniform_rank(self):
        m = UniformMatroid(2, 3)
        assert m.labels == ("a", "b", "c")
        assert m.rank(["a", "b"]) == 2
        assert m.rank() == 2
        assert m.is_independent([])
        assert not m.is_independent(["a", "b", "c"])

    def test_graphic_rank(self):
        m = _k3()
        assert m.labels == ("e1", "e2", "e3")
        assert m.full_rank == 2
        assert m.is_independent(["e1", "e3"])

    def test_linear_matches_uniform(self):
        m = LinearMatroid([["1", "0"], ["0", "1/2"], ["1", "1"]])
        assert m.representable_over_q
        assert rank_oracles_equal(m, UniformMatroid(2, 3))

    def test_circuits(self):
        assert _k3().circuits() == [frozenset({"e1", "e2", "e3"})]
        assert UniformMatroid(2, 3).circuits() == [frozenset({"a", "b", "c"})]
        assert frozenset({"l"}) in _looped().circuits()

    def test_closure(self):
        m = _k3()
        assert UniformMatroid(2, 3).closure([]) == frozenset()
        assert m.closure(["e1", "e2"]) == frozenset(m.labels)
        assert _looped().closure([]) == frozenset({"l"})

    def test_unknown_label(self):
        with pytest.raises(DomainError):
            UniformMatroid(2, 3).rank(["z"])

    def test_capacity(self):
        with pytest.raises(CapacityError):
            UniformMatroid(2, 6).independent_masks(cap=5)

    def test_rank_axioms(self):
        for m in (UniformMatroid(2, 4), _k3(), _looped(), fano(), dual(_doubled_triangle())):
            assert check_rank_axioms(m) is None

    def test_rank_axioms_detect_broken_oracle(self):
        class Broken(UniformMatroid):
            def _rank(self, mask):
                return 2 if mask == 1 else super()._rank(mask)

        assert check_rank_axioms(Broken(1, 2)) is not None


class TestExplicitMatroids:
    """Circuit validation and the named non-representable matroids."""

    def test_fano(self):
        m = fano()
        assert len(m) == 7
        assert m.full_rank == 3
        assert len(m.circuits()) == 14
        assert not m.representable_over_q

    def test_vamos(self):
        m = vamos()
        assert m.full_rank == 4
        assert not m.representable_over_q
        assert check_rank_axioms(m) is None

    def test_comparable_circuits_rejected(self):
        with pytest.raises(DomainError):
            ExplicitCircuitsMatroid(["a", "b", "c"], [["a", "b"], ["a", "b", "c"]])

    def test_elimination_failure_rejected(self):
        with pytest.raises(DomainError):
            ExplicitCircuitsMatroid(["a", "b", "c", "d"], [["a", "b"], ["b", "c"]])

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DomainError):
            UniformMatroid(1, 2, labels=["a", "a"])


class TestConstructions:
    """Duals, free extensions and simplification."""

    def test_dual(self):
        assert rank_oracles_equal(dual(UniformMatroid(2, 3)), UniformMatroid(1, 3))
        for m in (_k3(), fano(), _doubled_triangle()):
            assert rank_oracles_equal(dual(dual(m)), m)

    def test_free_extension(self):
        m = free_extension(UniformMatroid(2, 4), "p")
        assert m.labels[-1] == "p"
        assert rank_oracles_equal(m, UniformMatroid(2, 5))
        assert rank_oracles_equal(free_extension(UniformMatroid(1, 2), "p"), UniformMatroid(1, 3))

    def test_free_extension_needs_new_label(self):
        with pytest.raises(DomainError):
            free_extension(UniformMatroid(1, 2), "a")

    def test_free_dual_extension(self):
        m = free_dual_extension(UniformMatroid(1, 2), "p")
        assert m.labels[0] == "p"
        assert m.full_rank == 2
        assert rank_oracles_equal(m, UniformMatroid(2, 3))

    def test_loops_and_parallels(self):
        assert loops_and_parallels(UniformMatroid(2, 3)) == ((), [("a",), ("b",), ("c",)])
        assert loops_and_parallels(_doubled_triangle()) == ((), [("a1", "a2"), ("b",), ("c",)])
        assert loops_and_parallels(_looped()) == (("l",), [("x",)])

    def test_simplify(self):
        u = UniformMatroid(2, 3)
        assert simplify(u) is u
        simple = simplify(_doubled_triangle())
        assert simple.labels == ("a1", "b", "c")
        assert rank_oracles_equal(simple, UniformMatroid(2, 3))
        assert simplify(_looped()).labels == ("x",)

    def test_restriction_and_parallel(self):
        m = add_parallel(UniformMatroid(2, 3), "a", "a2")
        assert m.rank(["a", "a2"]) == 1
        assert rank_oracles_equal(restriction(m, ["a", "b", "c"]), UniformMatroid(2, 3))

    def test_materialize(self):
        m = materialize(dual(UniformMatroid(2, 3)))
        assert isinstance(m, ExplicitCircuitsMatroid)
        assert rank_oracles_equal(m, UniformMatroid(1, 3))
        assert m.representable_over_q


class TestInput:
    """JSON and plain-text input."""

    def test_matroid_from_json(self):
        m = matroid_from_json({"type": "uniform", "rank": 2, "size": 3})
        assert isinstance(m, UniformMatroid)
        m = matroid_from_json({"type": "graph", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]})
        assert isinstance(m, GraphicMatroid)
        assert m.full_rank == 2
        m = matroid_from_json({"type": "circuits", "labels": ["a", "b"], "circuits": [["a", "b"]]})
        assert rank_oracles_equal(m, UniformMatroid(1, 2))

    def test_missing_keys(self):
        with pytest.raises(ParseError, match="missing:rank"):
            matroid_from_json({"type": "uniform", "size": 3})
        with pytest.raises(ParseError):
            matroid_from_json({"type": "hypergraph"})

    def test_uniform_domain(self):
        with pytest.raises(DomainError):
            UniformMatroid(4, 3)

    def test_graph_endpoint_range(self):
        with pytest.raises(DomainError):
            Multigraph.from_pairs(2, [(0, 2)])

    def test_load_graph_text(self, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("# triangle\n0 1\n1 2 b\n0 2\n", encoding="utf-8")
        g = load_graph(str(path))
        assert g.vertices == 3
        assert g.labels == ("e1", "b", "e3")

    def test_load_graph_from_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n0 2\n"))
        g = load_graph("-")
        assert g.vertices == 3
        assert g.edge_count == 3
        monkeypatch.setattr("sys.stdin", io.StringIO('{"vertices": 2, "edges": [[0, 1]]}'))
        assert load_graph("-").edge_count == 1

    def test_load_matroid_expected_type(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"columns": [["1", "0"], ["0", "1"]]}), encoding="utf-8")
        m = load_matroid(str(path), expected="matrix")
        assert isinstance(m, LinearMatroid)
        assert isinstance(m, Matroid)
        assert m.full_rank == 2

    def test_load_matroid_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ParseError):
            load_matroid(str(path))
