"""Girth-aware spectral certificates for edge-connectivity and tree packing.

The library computes the girth-dependent eigenvalue thresholds that certify
edge-connectivity >= k or k edge-disjoint spanning trees, evaluates them on
concrete graphs, and verifies every certified conclusion against exactly
computed invariants (Stoer-Wagner minimum cuts, matroid-union tree
packings, and exhaustive oracles on small instances).
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DomainError,
    GuardRefusal,
    NotApplicableError,
    ParseError,
    SpectrePackError,
    ValidationError,
)
from .graphs import (
    INFINITE,
    Graph,
    boundary,
    cross_edges,
    degree_stats,
    delete_edges,
    from_edge_list,
    girth,
    induced,
    is_bipartite,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .bounds import (
    kappa_threshold_strong,
    kappa_threshold_weak,
    min_cut_side_order,
    moore_bound,
    n1_star,
    tau_threshold,
)
from .spectral import (
    ADJACENCY,
    LAPLACIAN,
    SIGNLESS,
    MatrixKind,
    build_matrix,
    check_interlacing,
    eigenvalues,
    is_equitable,
    lambda_i,
    quotient_eigenvalues,
    quotient_matrix,
    two_part_quotient_eigen,
)
from .connectivity import (
    PackingDecision,
    PartitionCertificate,
    TreePacking,
    brute_force_edge_connectivity,
    check_catlin_lai_shao,
    edge_connectivity,
    nash_williams_oracle,
    set_partitions_rgs,
    tau,
    tau_at_least,
)
from .theorems import (
    THEOREM_IDS,
    GraphAnalysis,
    SearchConfig,
    SearchReport,
    Verdict,
    check_co3_5,
    check_co3_general,
    check_cor2,
    check_lemma3_1,
    check_lemma4_1,
    check_main1,
    check_main2,
    counterexample_search,
    run_check,
)
from .generators import GeneratorSpec, generate, parse_spec, random_min_degree, random_regular
