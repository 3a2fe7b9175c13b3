"""Euler factors, formal L-series, reconstruction, centre values and equivariance."""

from .assembly import (
    LocalFactors,
    LSeries,
    assemble_l_series,
    direct_sum_l,
    divisor_coefficients,
    local_coefficient_tables,
    trace_sums,
)
from .builders import (
    LocalClass,
    curve_factors,
    curve_l,
    dirichlet_factors,
    dirichlet_l,
    local_classes,
    twist_factors,
    twist_l,
    zeta_factors,
    zeta_l,
)
from .equivariance import EquivarianceVerdict, compare_series, equivariance_check
from .factors import (
    EulerFactor,
    character_euler_factor,
    euler_factor_curve,
    euler_factor_trivial,
    local_expansion,
    power_sums,
    scale_eigenvalues,
    twisted_euler_factor,
)
from .values import LValueReport, evaluate_leading, reconstruct

__all__ = [
    "EquivarianceVerdict",
    "EulerFactor",
    "LSeries",
    "LValueReport",
    "LocalClass",
    "LocalFactors",
    "assemble_l_series",
    "character_euler_factor",
    "compare_series",
    "curve_factors",
    "curve_l",
    "direct_sum_l",
    "dirichlet_factors",
    "dirichlet_l",
    "divisor_coefficients",
    "equivariance_check",
    "euler_factor_curve",
    "euler_factor_trivial",
    "evaluate_leading",
    "local_classes",
    "local_coefficient_tables",
    "local_expansion",
    "power_sums",
    "reconstruct",
    "scale_eigenvalues",
    "trace_sums",
    "twist_factors",
    "twist_l",
    "twisted_euler_factor",
    "zeta_factors",
    "zeta_l",
]
