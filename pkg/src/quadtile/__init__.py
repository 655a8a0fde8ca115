"""Exact tools for rectangle dissections with quadratic-irrational ratios.

Decide whether a rectangle of ratio z can be dissected into rectangles
with side ratios x_1..x_n, all in one field Q[sqrt(p)]; construct a
verified guillotine tiling on YES; emit a checkable impossibility
certificate on NO.  All arithmetic is exact.
"""

from . import errors
from .constructor import (
    Recipe,
    ScaleRational,
    Stack,
    Transpose,
    UnitTile,
    conjugate_tiling,
    construct,
    evaluate,
    neg_conjugate_tiling,
    plan,
    rational_tiling,
    recipe_text,
    scale_rational,
    sqrtp_tiling,
    stack,
    tile_count,
    transpose,
    unit,
)
from .criteria import (
    ALL_NEGATIVE_CONJ,
    ALL_POSITIVE_CONJ,
    MIXED,
    Classification,
    Decision,
    ShapeSpec,
    affine_decide,
    classify,
    decide,
)
from .exactfield import FieldContext, Quad, Rational, validate_context
from .tiling import (
    AreaCoeffs,
    Certificate,
    CertificateBundle,
    PlacedTile,
    Tiling,
    VerifyReport,
    WitnessExpr,
    area_additivity_check,
    area_functional,
    bounded_closure_search,
    check_certificate,
    is_guillotine,
    make_bundle,
    make_certificate,
    tiling_from_obj,
    tiling_to_obj,
    verify_exact_cover,
    verify_ratios,
)

__all__ = [
    "ALL_NEGATIVE_CONJ",
    "ALL_POSITIVE_CONJ",
    "MIXED",
    "AreaCoeffs",
    "Certificate",
    "CertificateBundle",
    "Classification",
    "Decision",
    "FieldContext",
    "PlacedTile",
    "Quad",
    "Rational",
    "Recipe",
    "ScaleRational",
    "ShapeSpec",
    "Stack",
    "Tiling",
    "Transpose",
    "UnitTile",
    "VerifyReport",
    "WitnessExpr",
    "affine_decide",
    "area_additivity_check",
    "area_functional",
    "bounded_closure_search",
    "check_certificate",
    "classify",
    "conjugate_tiling",
    "construct",
    "decide",
    "errors",
    "evaluate",
    "is_guillotine",
    "make_bundle",
    "make_certificate",
    "neg_conjugate_tiling",
    "plan",
    "rational_tiling",
    "recipe_text",
    "scale_rational",
    "sqrtp_tiling",
    "stack",
    "tile_count",
    "tiling_from_obj",
    "tiling_to_obj",
    "transpose",
    "unit",
    "validate_context",
    "verify_exact_cover",
    "verify_ratios",
]
