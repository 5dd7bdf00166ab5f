from matlc.graphs.chromatic import (
    ChromaticData,
    ChromaticReport,
    chromatic_polynomial,
    chromatic_report,
    count_proper_colorings,
)
from matlc.graphs.corpus import connected_graphs, connected_graphs_upto, random_connected_graph
from matlc.graphs.cycles import cocycle_matroid, cycle_matroid
from matlc.graphs.reliability import (
    ReliabilityData,
    ReliabilityReport,
    reliability_data,
    reliability_polynomial,
    reliability_report,
)

__all__ = [
    "cycle_matroid",
    "cocycle_matroid",
    "ChromaticData",
    "ChromaticReport",
    "chromatic_polynomial",
    "chromatic_report",
    "count_proper_colorings",
    "ReliabilityData",
    "ReliabilityReport",
    "reliability_data",
    "reliability_polynomial",
    "reliability_report",
    "connected_graphs",
    "connected_graphs_upto",
    "random_connected_graph",
]
