"""Elliptic beta integrals, the F4-symmetric integral and its p -> 0 limits."""

from .dualities import (
    edge_phi_series,
    edge_w14_13_series,
    interior_identity_check,
    series_rep_edge_4phi3,
    series_rep_octahedron_2phi1,
    w8_7_closed_form,
    w8_7_evaluation_check,
    w8_7_expansion_terms,
    w8_7_explicit_terms,
    w14_13_value,
)
from .elliptic import (
    BetaParams,
    F4IntegralParams,
    apply_group_element,
    best_representative,
    e0_product,
    e1_transform_pair,
    e7_move,
    e_f4,
    e_f4_def,
    e_f4_explicit,
    e_m,
    f4_transform,
    inward_reach,
    v_parameter,
)
from .limits import (
    B0_EDGE_NEG,
    B0_EDGE_POS,
    B0_INTERIOR,
    B1_VERTEX,
    MID_CASE_A,
    MID_CASE_B,
    MID_CASE_C,
    MID_CASE_D,
    OUTSIDE,
    LimitRegime,
    aw_type_integral,
    b1_integral,
    b2_integral,
    classify_limit,
    edge_integral,
    edge_integral_pos,
    edge_integrand,
    edge_prefactor,
    elliptic_at_exponents,
    limit_b0_edge,
    limit_b0_interior,
    limit_value,
    mid_beta_limit,
)

__all__ = [
    "B0_EDGE_NEG",
    "B0_EDGE_POS",
    "B0_INTERIOR",
    "B1_VERTEX",
    "BetaParams",
    "F4IntegralParams",
    "LimitRegime",
    "MID_CASE_A",
    "MID_CASE_B",
    "MID_CASE_C",
    "MID_CASE_D",
    "OUTSIDE",
    "apply_group_element",
    "aw_type_integral",
    "b1_integral",
    "b2_integral",
    "best_representative",
    "classify_limit",
    "e0_product",
    "e1_transform_pair",
    "e7_move",
    "e_f4",
    "e_f4_def",
    "e_f4_explicit",
    "e_m",
    "edge_integral",
    "edge_integral_pos",
    "edge_integrand",
    "edge_prefactor",
    "edge_phi_series",
    "edge_w14_13_series",
    "elliptic_at_exponents",
    "f4_transform",
    "interior_identity_check",
    "inward_reach",
    "limit_b0_edge",
    "limit_b0_interior",
    "limit_value",
    "mid_beta_limit",
    "series_rep_edge_4phi3",
    "series_rep_octahedron_2phi1",
    "v_parameter",
    "w14_13_value",
    "w8_7_closed_form",
    "w8_7_evaluation_check",
    "w8_7_expansion_terms",
    "w8_7_explicit_terms",
]
