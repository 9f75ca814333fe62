"""Exact cyclotomic integers Z[zeta_m].

Elements are stored as length-``m`` coefficient vectors over the powers
``zeta^0 .. zeta^(m-1)``, i.e. as classes of Z[x]/(x^m - 1).  Two vectors
denote the same number when they agree modulo the m-th cyclotomic
polynomial, so every value is kept reduced: the stored vector has zeros
beyond ``deg Phi_m - 1``.  That makes equality and hashing plain tuple
comparisons.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from typing import Optional, Sequence, Union


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Return Phi_m as an integer coefficient tuple, lowest degree first.

    Computed by exact division of x^m - 1 by Phi_d for every proper
    divisor d of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # den is monic (every Phi_d is); long division must leave no remainder
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


def _reduce(m: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    """Reduce a vector mod x^m - 1 and then mod Phi_m; pad back to length m."""
    v = [0] * m
    for i, c in enumerate(coeffs):
        v[i % m] += c
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for i in range(m - 1, deg - 1, -1):
        c = v[i]
        if c:
            v[i] = 0
            # x^i = x^(i-deg) * (x^deg - Phi_m) since Phi_m is monic
            for j in range(deg):
                v[i - deg + j] -= c * phi[j]
    return tuple(v)


class CycInt:
    """An element of Z[zeta_m] with zeta_m = exp(2*pi*i/m)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int] = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        self.order = order
        self.coeffs = _reduce(order, coeffs)

    @classmethod
    def from_int(cls, order: int, n: int) -> "CycInt":
        return cls(order, (n,))

    @classmethod
    def zeta_power(cls, order: int, e: int) -> "CycInt":
        """zeta_m ** e for any integer e."""
        v = [0] * order
        v[e % order] = 1
        return cls(order, v)

    def _coerce(self, other: Union["CycInt", int]) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.order, other)
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise ValueError(
                    f"mismatched cyclotomic orders {self.order} and {other.order}"
                )
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self.order
        v = [0] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        v[(i + j) % m] += a * b
        return CycInt(m, v)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CycInt.from_int(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.as_integer() == other
        if isinstance(other, CycInt):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        n = self.as_integer()
        if n is not None:
            return hash(n)
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"CycInt({self.order}, {list(self.coeffs)})"

    @property
    def degree_bound(self) -> int:
        """deg Phi_m; every stored coefficient at or above it is zero."""
        return len(cyclotomic_polynomial(self.order)) - 1

    def as_integer(self) -> Optional[int]:
        """The rational integer equal to this element, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def divisible_by(self, d: int) -> bool:
        return all(c % d == 0 for c in self.coeffs)

    def exact_div(self, d: int) -> "CycInt":
        if not self.divisible_by(d):
            raise ArithmeticError(f"{self!r} is not divisible by {d}")
        return CycInt(self.order, [c // d for c in self.coeffs])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**i for i, c in enumerate(self.coeffs))


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def cyc_as_integer(a: CycInt) -> Optional[int]:
    return a.as_integer()
