"""Exact-arithmetic calculus of postulation characters, Macaulay growth
verification and ACM curve enumeration."""

from .binomial import MacaulayExpansion, binom, macaulay_expand, upper
from .characters import (
    CurveInvariants,
    NecessaryCheck,
    SurfaceInvariants,
    biliaison,
    char_s0,
    check_necessary,
    complete_intersection_char,
    curve_invariants,
    gamma_from_h,
    gamma_from_resolution,
    h_from_gamma,
    hilbert_polynomial,
    hypersurface_char,
    is_positive_character,
    postulation_values,
    resolution_char,
    s1_general,
    surface_invariants,
)
from .codim3 import (
    Codim3Decomposition,
    QuadricCheck,
    check_prop36_bounds,
    decompose_codim3,
    integral_quadric_check,
    integral_screen,
    plane_union_char,
    quadric_check,
    s1_via_cor37,
)
from .enumeration import (
    DGEntry,
    DGTable,
    REFERENCE_PAIRS_DEG10,
    dg_from_components,
    enumerate_acm_curves,
    enumerate_positive_characters,
)
from .growth import (
    Decomposition,
    MacaulayFn,
    decompose,
    is_macaulay,
    lex_oracle,
    s0_of,
    type12_shape,
)
from .intfun import ConstantTailError, IntFun, indicator

__all__ = [
    "binom", "macaulay_expand", "upper", "MacaulayExpansion",
    "IntFun", "ConstantTailError", "indicator",
    "is_macaulay", "MacaulayFn", "s0_of", "lex_oracle", "decompose",
    "Decomposition", "type12_shape",
    "gamma_from_h", "h_from_gamma", "is_positive_character", "char_s0",
    "s1_general", "check_necessary", "NecessaryCheck",
    "hypersurface_char", "complete_intersection_char", "biliaison",
    "resolution_char", "gamma_from_resolution", "postulation_values",
    "curve_invariants", "surface_invariants", "hilbert_polynomial",
    "CurveInvariants", "SurfaceInvariants",
    "Codim3Decomposition", "decompose_codim3", "s1_via_cor37",
    "check_prop36_bounds", "integral_screen", "quadric_check",
    "QuadricCheck", "integral_quadric_check", "plane_union_char",
    "enumerate_positive_characters", "enumerate_acm_curves",
    "dg_from_components", "DGTable", "DGEntry", "REFERENCE_PAIRS_DEG10",
]
