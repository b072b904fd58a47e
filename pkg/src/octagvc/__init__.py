"""Exact odd cycle transversal via iterative compression and the doubled graph."""

__version__ = "0.1.0"

from .bipartite import max_matching, min_vertex_cover
from .compression import (
    CompressionStats,
    DisjointResult,
    SideAssignment,
    compress,
    disjoint_compression,
    minimize_oct,
    side_assignments,
    solve_oct,
    step1_filter,
)
from .doubling import DoubledGraph, cover_from_oct, doubled_graph, oct_from_cover
from .graph import (
    Bipartition,
    Graph,
    GraphError,
    OddCycleWitness,
    from_edge_list,
    induced_subgraph,
    is_oct,
    two_coloring,
)

__all__ = [
    "Bipartition",
    "CompressionStats",
    "DisjointResult",
    "DoubledGraph",
    "Graph",
    "GraphError",
    "OddCycleWitness",
    "SideAssignment",
    "compress",
    "cover_from_oct",
    "disjoint_compression",
    "doubled_graph",
    "from_edge_list",
    "induced_subgraph",
    "is_oct",
    "max_matching",
    "min_vertex_cover",
    "minimize_oct",
    "oct_from_cover",
    "side_assignments",
    "solve_oct",
    "step1_filter",
    "two_coloring",
]
