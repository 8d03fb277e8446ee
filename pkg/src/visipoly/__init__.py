"""Mutual-visibility sets, visibility polynomials and corona products of small graphs."""

from .corona_formula import (
    CoronaPolyReport,
    corona_mu,
    corona_visibility_polynomial,
    p_q_polynomial,
)
from .cq import (
    GammaFamily,
    absolute_clear_witness,
    admissible_vertices,
    compatibility_graph,
    is_absolute_clear,
    is_absolute_cq_visible,
    is_cq_visible,
    is_disjoint_visible,
    is_q_visible_set,
    maximal_absolute_cq_sets,
)
from .graph import (
    CoronaLabeling,
    DisconnectedGraphError,
    Graph,
    GraphError,
    ResourceLimitError,
    all_pairs_distances,
    complete_graph,
    corona,
    cycle_graph,
    induced_diameter,
    is_connected,
    path_graph,
    standard_graph,
)
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .poly import Polynomial, binomial_power, poly_combine
from .visibility import (
    ThetaTable,
    enumerate_mv_sets,
    is_mv_set,
    is_pair_x_visible,
    is_set_separator,
    is_vertex_x_visible,
    iter_mv_sets,
    mu,
    path_cut,
    restricted_visibility_polynomial,
    visibility_polynomial,
)

__version__ = "0.1.0"
