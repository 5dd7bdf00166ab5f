from matlc.matroids.base import GroundSet, Matroid
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
from matlc.matroids.explicit import ExplicitCircuitsMatroid, fano, sparse_paving, vamos
from matlc.matroids.graphic import GraphicMatroid, Multigraph
from matlc.matroids.linear import LinearMatroid
from matlc.matroids.uniform import UniformMatroid

__all__ = [
    "GroundSet",
    "Matroid",
    "UniformMatroid",
    "GraphicMatroid",
    "Multigraph",
    "LinearMatroid",
    "ExplicitCircuitsMatroid",
    "sparse_paving",
    "fano",
    "vamos",
    "dual",
    "free_extension",
    "free_dual_extension",
    "restriction",
    "add_parallel",
    "simplify",
    "loops_and_parallels",
    "materialize",
    "rank_oracles_equal",
    "check_rank_axioms",
]
