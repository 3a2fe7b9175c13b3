"""Finite fields, F_q[t], places of F_q(t) and effective divisors."""

from .finite_field import FiniteField, field_create, is_prime, parse_order
from .fqpoly import FqPoly, is_irreducible, poly_gcd
from .places import (
    EffectiveDivisor,
    Place,
    ResidueField,
    enumerate_effective_divisors,
    enumerate_monic_irreducibles,
    enumerate_places,
    necklace_count,
    residue_field,
    residue_map,
)

__all__ = [
    "EffectiveDivisor",
    "FiniteField",
    "FqPoly",
    "Place",
    "ResidueField",
    "enumerate_effective_divisors",
    "enumerate_monic_irreducibles",
    "enumerate_places",
    "field_create",
    "is_irreducible",
    "is_prime",
    "necklace_count",
    "parse_order",
    "poly_gcd",
    "residue_field",
    "residue_map",
]
