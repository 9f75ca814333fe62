"""Alphabet rings, their additive characters, and cyclotomic integers."""

from .cyclotomic import (
    CycInt,
    cyc_add,
    cyc_as_integer,
    cyc_mul,
    cyclotomic_polynomial,
)
from .rings import (
    DEFAULT_MODULI,
    EXTENSION,
    PRIME,
    ZK,
    PrimitivityWarning,
    RingError,
    RingSpec,
    character_exponent,
    character_value,
    extension_field,
    inner_product,
    integer_ring,
    is_irreducible,
    prime_field,
    ring_add,
    ring_mul,
)

__all__ = [
    "CycInt",
    "cyc_add",
    "cyc_as_integer",
    "cyc_mul",
    "cyclotomic_polynomial",
    "DEFAULT_MODULI",
    "EXTENSION",
    "PRIME",
    "ZK",
    "PrimitivityWarning",
    "RingError",
    "RingSpec",
    "character_exponent",
    "character_value",
    "extension_field",
    "inner_product",
    "integer_ring",
    "is_irreducible",
    "prime_field",
    "ring_add",
    "ring_mul",
]
