"""Exact curvature, reflection symmetry, and classification of finite graphs."""

from .bakry_emery import (
    bakry_emery_curvature,
    be_effective_bound_report,
    be_rigidity_check,
    gamma2_form,
    gamma_form,
)
from .classify import ClassificationReport, classify, identify_family, report_to_json
from .factorization import factorize, is_prime
from .families import (
    cartesian_product,
    cocktail_party,
    complete_bipartite,
    complete_graph,
    cycle,
    gosset,
    halved_cube,
    hamming,
    hypercube,
    johnson,
    parse_family,
    path_graph,
    schlafli,
)
from .graphs import (
    Graph,
    are_isomorphic,
    ball,
    build_graph,
    effective_diameter,
    is_locally_connected,
    parse_edge_list,
    read_edge_list,
    side_partition,
    sphere,
)
from .ollivier import (
    edge_curvature,
    long_range_curvature,
    min_edge_curvature,
)
from .reflective import find_reflection, is_reflective
from .spectral import (
    adjacency_spectrum,
    is_distance_regular,
    is_lichnerowicz_sharp,
    laplacian_spectrum,
    smallest_positive_laplacian_eigenvalue,
)
from .verify import run_acceptance_checks, run_all_checks, standard_corpus

__all__ = [
    "ClassificationReport",
    "Graph",
    "adjacency_spectrum",
    "are_isomorphic",
    "bakry_emery_curvature",
    "ball",
    "be_effective_bound_report",
    "be_rigidity_check",
    "build_graph",
    "cartesian_product",
    "classify",
    "cocktail_party",
    "complete_bipartite",
    "complete_graph",
    "cycle",
    "edge_curvature",
    "effective_diameter",
    "factorize",
    "find_reflection",
    "gamma2_form",
    "gamma_form",
    "gosset",
    "halved_cube",
    "hamming",
    "hypercube",
    "identify_family",
    "is_distance_regular",
    "is_lichnerowicz_sharp",
    "is_locally_connected",
    "is_prime",
    "is_reflective",
    "johnson",
    "laplacian_spectrum",
    "long_range_curvature",
    "min_edge_curvature",
    "parse_edge_list",
    "parse_family",
    "path_graph",
    "read_edge_list",
    "report_to_json",
    "run_acceptance_checks",
    "run_all_checks",
    "schlafli",
    "side_partition",
    "smallest_positive_laplacian_eigenvalue",
    "sphere",
    "standard_corpus",
]
