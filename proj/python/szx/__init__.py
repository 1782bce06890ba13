"""Exact Szeged-type graph indices and bicyclic extremal verification."""

from ._szx import (
    UNREACHABLE,
    BicyclicClass,
    BudgetError,
    ClassRow,
    ConjectureReport,
    DecodeError,
    Graph,
    InequalityReport,
    ThetaEdgeAnalysis,
    ThetaEdgeCase,
    ThetaSweepReport,
    ThetaSweepRow,
    all_pairs_distances,
    analyze_theta_edges,
    attach_pendant,
    bfs_distances,
    build_bn,
    build_dumbbell,
    build_theta,
    canonical_form,
    classify_bicyclic,
    conjecture_bound_x4,
    cut_vertices,
    deviation_sum,
    edge_partition,
    enumerate_bicyclic,
    eq1_residual,
    from_graph6,
    is_connected,
    min_degree,
    revised_szeged_x4,
    shortest_cycle_through_edge,
    szeged,
    theta_path_vertex,
    to_graph6,
    verify_case_inequalities,
    verify_conjecture,
    verify_lemma3,
    wiener,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "BicyclicClass",
    "BudgetError",
    "ClassRow",
    "ConjectureReport",
    "DecodeError",
    "Graph",
    "InequalityReport",
    "ThetaEdgeAnalysis",
    "ThetaEdgeCase",
    "ThetaSweepReport",
    "ThetaSweepRow",
    "all_pairs_distances",
    "analyze_theta_edges",
    "attach_pendant",
    "bfs_distances",
    "build_bn",
    "build_dumbbell",
    "build_theta",
    "canonical_form",
    "classify_bicyclic",
    "conjecture_bound_x4",
    "cut_vertices",
    "deviation_sum",
    "edge_partition",
    "enumerate_bicyclic",
    "eq1_residual",
    "from_graph6",
    "is_connected",
    "min_degree",
    "revised_szeged_x4",
    "shortest_cycle_through_edge",
    "szeged",
    "theta_path_vertex",
    "to_graph6",
    "verify_case_inequalities",
    "verify_conjecture",
    "verify_lemma3",
    "wiener",
]
