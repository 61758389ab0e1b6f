"""Exact engine for tangent and secant varieties of projective varieties:
Groebner elimination, Hilbert data, and enumerative invariants (tangent
degree, cetos, secant degree) by zero-dimensional counting."""

from .fields import FieldConfig, prime_field, rationals, DEFAULT_PRIME, VERIFY_PRIME
from .poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    block_order,
    parse_poly,
)
from .groebner import (
    DEFAULT_DEGREE_CAP,
    HilbertData,
    Ideal,
    buchberger,
    count_zero_dim,
    eliminate,
    hilbert_dim_degree,
    normal_form,
    saturate,
)

__all__ = [
    "FieldConfig",
    "prime_field",
    "rationals",
    "DEFAULT_PRIME",
    "VERIFY_PRIME",
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "block_order",
    "parse_poly",
    "DEFAULT_DEGREE_CAP",
    "HilbertData",
    "Ideal",
    "buchberger",
    "count_zero_dim",
    "eliminate",
    "hilbert_dim_degree",
    "normal_form",
    "saturate",
]
