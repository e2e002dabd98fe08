"""Equitable tree-colorings: constructions, verification, and feasibility.

A (t, k, d)-tree-coloring splits the vertices into t classes whose sizes
differ by at most one, each class inducing a forest with maximum degree
at most k and component diameter at most d.  This package provides exact
feasibility formulas and constructions for balanced complete bipartite
graphs, recursive algorithms for sparse planar and outerplanar graphs,
an exhaustive oracle for small instances, and a CLI tying them together.
"""

from .bipartite import (
    ClassCountVector,
    SolutionPair,
    construct_knn_11,
    construct_knn_inf2,
    detect_balanced_biclique,
    even_t_coloring,
    exact_va11,
    exact_vainf2,
    feasible_11,
    feasible_inf2,
    infeasible_by_divisibility,
    make_class_counts,
    odd_q_11_coloring,
    odd_q_inf2_counts,
    realize_class_counts,
    relabel_for_sides,
    solve_linear,
    two_solution_coloring,
    va11_upper,
    vainf2_upper,
)
from .coloring import (
    ClassCheck,
    Params,
    TreeColoring,
    VerificationReport,
    certificate_from_coloring,
    coloring_from_certificate,
    verify,
)
from .errors import (
    ConfigurationNotFoundError,
    EquitreeError,
    InfeasibleVectorError,
    InputFormatError,
    NoLowDegreeVertexError,
    NotEnoughVerticesError,
    PreconditionError,
)
from .graph import (
    UNBOUNDED,
    Graph,
    complete_bipartite,
    component_diameter_max,
    connected_components,
    cycle,
    dodecahedron,
    format_edge_list,
    girth,
    graph_from_edges,
    hex_grid,
    is_forest,
    max_degree,
    maximal_outerplanar_random,
    parse_edge_list,
    path,
    remove_vertices,
)
from .oracle import (
    BUDGET_EXCEEDED,
    FEASIBLE,
    INFEASIBLE,
    CrossCheckReport,
    Disagreement,
    SearchBudget,
    SearchResult,
    brute_force_search,
    cross_check_bipartite,
)
from .sparse import (
    ADJACENT_TWO_PAIR,
    DEGREE_THREE_LINK,
    DEGREE_TWO_LINK,
    LOW_VERTEX,
    REDUCIBLE_EDGE,
    TRIANGLE_WITH_TWO,
    TWIN_TRIANGLES,
    TWO_NEIGHBOR_HUB,
    Configuration,
    ExtensionSequence,
    color_girth5,
    color_girth6,
    color_outerplanar,
    extend_coloring,
    fill_sequence,
    find_reducible_girth5,
    find_reducible_girth6,
    find_reducible_outerplanar,
)

__version__ = "0.1.0"

__all__ = [
    "ADJACENT_TWO_PAIR",
    "BUDGET_EXCEEDED",
    "ClassCheck",
    "ClassCountVector",
    "Configuration",
    "ConfigurationNotFoundError",
    "CrossCheckReport",
    "DEGREE_THREE_LINK",
    "DEGREE_TWO_LINK",
    "Disagreement",
    "EquitreeError",
    "ExtensionSequence",
    "FEASIBLE",
    "Graph",
    "INFEASIBLE",
    "InfeasibleVectorError",
    "InputFormatError",
    "LOW_VERTEX",
    "NoLowDegreeVertexError",
    "NotEnoughVerticesError",
    "Params",
    "PreconditionError",
    "REDUCIBLE_EDGE",
    "SearchBudget",
    "SearchResult",
    "SolutionPair",
    "TRIANGLE_WITH_TWO",
    "TWIN_TRIANGLES",
    "TWO_NEIGHBOR_HUB",
    "TreeColoring",
    "UNBOUNDED",
    "VerificationReport",
    "brute_force_search",
    "certificate_from_coloring",
    "color_girth5",
    "color_girth6",
    "color_outerplanar",
    "coloring_from_certificate",
    "complete_bipartite",
    "component_diameter_max",
    "connected_components",
    "construct_knn_11",
    "construct_knn_inf2",
    "cross_check_bipartite",
    "cycle",
    "detect_balanced_biclique",
    "dodecahedron",
    "even_t_coloring",
    "exact_va11",
    "exact_vainf2",
    "extend_coloring",
    "feasible_11",
    "feasible_inf2",
    "fill_sequence",
    "find_reducible_girth5",
    "find_reducible_girth6",
    "find_reducible_outerplanar",
    "format_edge_list",
    "girth",
    "graph_from_edges",
    "hex_grid",
    "infeasible_by_divisibility",
    "is_forest",
    "make_class_counts",
    "max_degree",
    "maximal_outerplanar_random",
    "odd_q_11_coloring",
    "odd_q_inf2_counts",
    "parse_edge_list",
    "path",
    "realize_class_counts",
    "relabel_for_sides",
    "remove_vertices",
    "solve_linear",
    "two_solution_coloring",
    "va11_upper",
    "vainf2_upper",
    "verify",
]
