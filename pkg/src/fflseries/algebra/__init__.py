"""Exact cyclotomic arithmetic, polynomials, truncated series and Pade reconstruction."""

from .cyclotomic import (
    CyclotomicNumber,
    GaloisAutomorphism,
    as_cyclotomic,
    cyclo_arith,
    cyclo_automorphism,
    cyclotomic_polynomial,
)
from .pade import pade_reconstruct, solve_linear
from .series import Poly, TruncatedSeries, series_automorphism, series_div, series_log_derivative

__all__ = [
    "CyclotomicNumber",
    "GaloisAutomorphism",
    "Poly",
    "TruncatedSeries",
    "as_cyclotomic",
    "cyclo_arith",
    "cyclo_automorphism",
    "cyclotomic_polynomial",
    "pade_reconstruct",
    "series_automorphism",
    "series_div",
    "series_log_derivative",
    "solve_linear",
]
