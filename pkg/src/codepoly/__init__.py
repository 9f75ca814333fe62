"""Genus-g weight enumerators, intersection enumerators and Jacobi polynomials
of linear codes over F_q and Z_k, computed exactly, with checkers for the
identities relating them."""

from .algebra import (
    CycInt,
    RingSpec,
    character_value,
    extension_field,
    inner_product,
    integer_ring,
    prime_field,
)
from .codes import BoundExceeded, LinearCode, dual_code, enumerate_codewords
from .enumerators import (
    intersection_enumerator,
    jacobi_homogeneous,
    jacobi_inhomogeneous,
    weight_enumerator,
)
from .identities import IdentityReport
from .kernels import BACKEND
from .polynomial import Polynomial, X, parse_polynomial, x, y

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundExceeded",
    "CycInt",
    "IdentityReport",
    "LinearCode",
    "Polynomial",
    "RingSpec",
    "X",
    "character_value",
    "dual_code",
    "enumerate_codewords",
    "extension_field",
    "inner_product",
    "integer_ring",
    "intersection_enumerator",
    "jacobi_homogeneous",
    "jacobi_inhomogeneous",
    "parse_polynomial",
    "prime_field",
    "weight_enumerator",
    "x",
    "y",
]
