"""Exact L-series of elliptic curves and Dirichlet twists over F_q(t)."""

from .algebra import (
    CyclotomicNumber,
    GaloisAutomorphism,
    Poly,
    TruncatedSeries,
    cyclo_arith,
    cyclo_automorphism,
    pade_reconstruct,
    series_automorphism,
    series_div,
    series_log_derivative,
)
from .characters import (
    CharacterTuple,
    DirichletCharacter,
    UnitGroup,
    all_characters,
    character_conjugate,
    character_eval,
    is_primitive,
    unit_group,
)
from .curves import EllipticSurfaceModel, ReductionData, ReductionType, point_count, reduction_type, validate
from .fields import FiniteField, FqPoly, Place, field_create
from .lseries import (
    EulerFactor,
    LSeries,
    LValueReport,
    assemble_l_series,
    direct_sum_l,
    divisor_coefficients,
    equivariance_check,
    evaluate_leading,
    reconstruct,
    trace_sums,
    twisted_euler_factor,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterTuple",
    "CyclotomicNumber",
    "DirichletCharacter",
    "EllipticSurfaceModel",
    "EulerFactor",
    "FiniteField",
    "FqPoly",
    "GaloisAutomorphism",
    "LSeries",
    "LValueReport",
    "Place",
    "Poly",
    "ReductionData",
    "ReductionType",
    "TruncatedSeries",
    "UnitGroup",
    "all_characters",
    "assemble_l_series",
    "character_conjugate",
    "character_eval",
    "cyclo_arith",
    "cyclo_automorphism",
    "direct_sum_l",
    "divisor_coefficients",
    "equivariance_check",
    "evaluate_leading",
    "field_create",
    "is_primitive",
    "pade_reconstruct",
    "point_count",
    "reconstruct",
    "reduction_type",
    "series_automorphism",
    "series_div",
    "series_log_derivative",
    "trace_sums",
    "twisted_euler_factor",
    "unit_group",
    "validate",
]
