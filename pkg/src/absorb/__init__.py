"""Exhaustive computation with absorbing-type ideals of finite commutative rings."""

from .config import configured, settings
from .errors import (
    AbsorbError,
    CostCapExceeded,
    ImproperIdeal,
    NonMonicPoly,
    NonPrimeModulus,
    ParseError,
    RingMismatch,
    SizeCapExceeded,
    UnsupportedFormatForPayload,
    VariableCountMismatch,
)
from .ideal import (
    Ideal,
    colon,
    enumerate_ideals,
    ideal_from_generators,
    ideal_product,
    ideal_sum,
    image,
    intersection,
    power,
    preimage,
    principal,
    radical,
    unit_ideal,
    zero_ideal,
)
from .parsing import parse_element, parse_ideal_literal, parse_monomial, parse_ring_spec
from .predicates import (
    PREDICATES,
    Verdict,
    check,
    find_I_tuple,
    is_I_primary,
    is_n_absorbing,
    is_n_absorbing_I_primary,
    is_n_absorbing_I_primary_colon,
    is_n_absorbing_primary,
    is_prime,
    is_primary,
    is_weakly_n_absorbing_primary,
    is_weakly_prime,
    is_weakly_primary,
)
from .ring import PolyQuot, Product, Ring, Zn, axiom_violations, build_ring, quotient_ring

__version__ = "0.1.0"

__all__ = [
    "configured",
    "settings",
    "AbsorbError",
    "CostCapExceeded",
    "ImproperIdeal",
    "NonMonicPoly",
    "NonPrimeModulus",
    "ParseError",
    "RingMismatch",
    "SizeCapExceeded",
    "UnsupportedFormatForPayload",
    "VariableCountMismatch",
    "Ideal",
    "colon",
    "enumerate_ideals",
    "ideal_from_generators",
    "ideal_product",
    "ideal_sum",
    "image",
    "intersection",
    "power",
    "preimage",
    "principal",
    "radical",
    "unit_ideal",
    "zero_ideal",
    "parse_element",
    "parse_ideal_literal",
    "parse_monomial",
    "parse_ring_spec",
    "PREDICATES",
    "Verdict",
    "check",
    "find_I_tuple",
    "is_I_primary",
    "is_n_absorbing",
    "is_n_absorbing_I_primary",
    "is_n_absorbing_I_primary_colon",
    "is_n_absorbing_primary",
    "is_prime",
    "is_primary",
    "is_weakly_n_absorbing_primary",
    "is_weakly_prime",
    "is_weakly_primary",
    "PolyQuot",
    "Product",
    "Ring",
    "Zn",
    "axiom_violations",
    "build_ring",
    "quotient_ring",
    "ring",
    "ideal",
]


def ring(text):
    """Shorthand: ``ring("Z/4 x Z/9")``."""
    return build_ring(parse_ring_spec(text))


def ideal(R, text):
    """Shorthand: ``ideal(R, "2, 3")``."""
    return ideal_from_generators(R, parse_ideal_literal(R, text))
