"""Cycle and cocycle (bond) matroids of a multigraph."""
from __future__ import annotations

from matlc.matroids.base import Matroid
from matlc.matroids.constructions import DualMatroid
from matlc.matroids.graphic import GraphicMatroid, Multigraph


def cycle_matroid(graph: Multigraph) -> GraphicMatroid:
    """Forests of ``graph`` as independent sets; rank is v - c."""
    return GraphicMatroid(graph)


def cocycle_matroid(graph: Multigraph) -> Matroid:
    """Dual of the cycle matroid: a set is independent iff deleting it keeps
    the component count unchanged."""
    return DualMatroid(GraphicMatroid(graph))
