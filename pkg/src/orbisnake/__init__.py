"""Exact Laurent expansions of curves on triangulated unpunctured orbifolds.

Three independent formulations of the same quantity are implemented and
cross-checked: perfect-matching sums over snake and band graphs, ordered
2x2 transfer-matrix products along M-paths, and lifting to a triangulated
polygon followed by specialization.
"""

from .orbifold import (ArcLabel, CrossingToken, CurveDescriptor,
                       ExtendedBMatrix, Triangulation, ValidationError,
                       descriptor_from_json, descriptor_to_json,
                       generalized_mutate, make_bmatrix, make_triangulation,
                       principal_extend, triangulation_from_json,
                       triangulation_to_json, validate)
from .ring import CoefPoly, LaurentPoly, Mat2, cheb_t, cheb_u, cheb_u_y
from .snake import (InternalInconsistency, build_snake_graph,
                    cluster_expansion, enumerate_matchings, matching_poset,
                    matching_sum, poset_dot)
from .universal import build_ug, generic_labels, mg_matrix
from .mpath import chi, cheb_matrix_power, m_of, standard_mpath, step_matrix
from .lift import build_lift, phi_specialize, verify_lift
from .skein import (SkeinFixture, solve_y_monomials, verify_three_term,
                    verify_two_term)

__all__ = [
    "ArcLabel", "CrossingToken", "CurveDescriptor", "ExtendedBMatrix",
    "Triangulation", "ValidationError", "descriptor_from_json",
    "descriptor_to_json", "generalized_mutate", "make_bmatrix",
    "make_triangulation", "principal_extend", "triangulation_from_json",
    "triangulation_to_json", "validate",
    "CoefPoly", "LaurentPoly", "Mat2", "cheb_t", "cheb_u", "cheb_u_y",
    "InternalInconsistency", "build_snake_graph", "cluster_expansion",
    "enumerate_matchings", "matching_poset", "matching_sum", "poset_dot",
    "build_ug", "generic_labels", "mg_matrix",
    "chi", "cheb_matrix_power", "m_of", "standard_mpath", "step_matrix",
    "build_lift", "phi_specialize", "verify_lift",
    "SkeinFixture", "solve_y_monomials", "verify_three_term",
    "verify_two_term",
]

__version__ = "0.1.0"
