"""Exact homological invariants of edge ideals of weighted oriented graphs.

The package computes full multigraded Betti tables (hence depth, projective
dimension and regularity) of monomial quotients, exposes the combinatorial
depth-zero machinery for weighted oriented graphs, and verifies the
classification statements by exhaustive enumeration at small vertex counts.
"""

from .betti import (
    BettiTable,
    betti_table,
    betti_via_upper_koszul,
    depth,
    find_reg_witness_variable,
    is_taylor_minimal,
    is_taylor_minimal_definitional,
    pdim,
    reg,
    reg_if_taylor_minimal,
    substitute_power,
    upper_koszul_homology,
)
from .classify import (
    Atlas,
    EnumerationConfig,
    InvariantTuple,
    TheoremReport,
    closed_form_bpt_unweighted,
    closed_form_bpt_wo,
    closed_form_dd_unweighted,
    closed_form_dd_wo,
    closed_form_ddr_wo,
    closed_form_tree_unweighted,
    closed_form_tree_wo,
    compute_atlas,
    compute_betti_size_set,
    compute_dd_set,
    compute_ddr_set,
    enumerate_connected_graphs,
    enumerate_wogs,
    graph_invariants,
    verify_theorem,
)
from .fields import GF2, RATIONALS, FieldChoice
from .graphs import (
    PseudoForestCertificate,
    WeightedOrientedGraph,
    bipartite_depth_zero_witness,
    complete_graph,
    cycle_naturally_oriented,
    cycle_with_leaves,
    depth_zero_certificate,
    depth_zero_family,
    dominant_generator_test,
    dominant_set_graph_test,
    edge_ideal,
    export_cas_script,
    graph_from_json,
    graph_to_json,
    induced_cycles,
    is_bipartite,
    is_connected,
    is_naturally_oriented_max_pseudoforest,
    is_tree,
    is_unicyclic,
    lift_graph,
    path_graph,
    pseudoforest_invariants,
    star_graph,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    RingContext,
    dominance_witness,
    height,
    is_dominant_in,
    is_dominant_set,
    krull_dim,
    lcm_of,
    minimize_generators,
    parse_monomial,
    strongly_divides,
)
from .splitting import (
    SplittingReport,
    betti_splitting_check,
    betti_splitting_check_partition,
    has_linear_resolution,
    ideal_intersection,
)

__version__ = "0.1.0"
