"""Exact size Ramsey multipartite numbers ``m_j(S_n, S_m)`` for stars.

The package computes the closed form, builds explicit regular spanning
subgraphs of ``K_{j x s}``, turns them into good colorings just below the
threshold, and checks everything against an exhaustive arrowing search.
"""

from .factory import (
    ConstructionReport,
    Decomposition,
    adjacency_rule,
    construct,
    coverage_sweep,
    decompose,
    near_regular_subgraph,
    regular_subgraph,
)
from .cyclic import ball, sigma, sigma_minus, sigma_plus
from .graph import (
    Color,
    MpGraph,
    Shape,
    TwoColoring,
    Vertex,
    color_subgraph,
    complete_graph,
    degree,
    is_regular,
    max_degree,
    star_free,
)
from .oracle import OracleResult, arrows_bruteforce, arrows_oracle, min_arrowing_s
from .ramsey import (
    RamseyAnswer,
    RamseyQuery,
    coloring_is_good,
    handshake_blocks,
    lower_bound,
    size_ramsey,
    special_branch_applies,
    upper_bound,
    witness_coloring,
)

__version__ = "0.1.0"
