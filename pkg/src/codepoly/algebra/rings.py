"""Alphabet rings: prime fields F_p, extension fields GF(p^f), and Z_k.

Ring elements are plain Python ints in ``range(r.size)``.  For Z_k and F_p
that is the residue; for GF(p^f) it is the base-p number whose digits are
the coefficients (alpha_0, ..., alpha_{f-1}) of the element written in the
power basis of a root of the modulus, lowest power first.  So alpha_0, the
argument of the additive character, is always ``value % p``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .cyclotomic import CycInt

PRIME = "prime"
EXTENSION = "extension"
ZK = "zk"

# lowest-degree coefficient first, monic
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (2, 1, 1),
    (2, 4): (1, 1, 0, 0, 1),
}


class RingError(ValueError):
    """Invalid ring parameters or an element outside the ring."""


class PrimitivityWarning(UserWarning):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, lowest degree first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    return _pmod(prod, m, p)


def _pgcd(a, b, p) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin-style test: gcd(x^(p^k) - x, F) = 1 for k <= deg F / 2."""
    f = len(modulus) - 1
    if f < 1:
        return False
    x = [0, 1]
    power = _pmod(x, modulus, p)
    for _ in range(1, f // 2 + 1):
        # power <- power^p mod F
        acc = [1]
        for _ in range(p):
            acc = _pmulmod(acc, power, modulus, p)
        power = acc
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(modulus, diff, p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """The alphabet R.  Build instances with the module-level constructors."""

    kind: str
    p: int = 0
    f: int = 1
    k: int = 0
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind == PRIME:
            if not is_prime(self.p):
                raise RingError(f"p={self.p} is not prime")
        elif self.kind == EXTENSION:
            if not is_prime(self.p):
                raise RingError(f"p={self.p} is not prime")
            if self.f < 2:
                raise RingError(f"extension degree must be >= 2, got f={self.f}")
            mod = self.modulus
            if len(mod) != self.f + 1 or mod[-1] != 1:
                raise RingError(
                    f"modulus must be monic with {self.f + 1} coefficients, got {list(mod)}"
                )
            if any(not 0 <= c < self.p for c in mod):
                raise RingError(f"modulus coefficients must lie in [0, {self.p})")
            if not is_irreducible(mod, self.p):
                raise RingError(f"modulus {list(mod)} is reducible over F_{self.p}")
        elif self.kind == ZK:
            if self.k < 2:
                raise RingError(f"k must be >= 2, got k={self.k}")
        else:
            raise RingError(f"unknown ring kind {self.kind!r}")

    @property
    def size(self) -> int:
        if self.kind == ZK:
            return self.k
        return self.p**self.f

    cardinality = size

    @property
    def is_field(self) -> bool:
        return self.kind != ZK

    @property
    def char_order(self) -> int:
        """Order m of the root of unity zeta_m used by the character."""
        return self.k if self.kind == ZK else self.p

    def __str__(self) -> str:
        if self.kind == PRIME:
            return f"F_{self.p}"
        if self.kind == EXTENSION:
            return f"GF({self.p}^{self.f})"
        return f"Z_{self.k}"

    def elements(self) -> range:
        return range(self.size)

    def nonzero(self) -> range:
        return range(1, self.size)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise RingError(f"{a!r} is not an element of {self}")
        return a

    # -- GF(p^f) encoding --------------------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (alpha_0, ..., alpha_{f-1}) of an element."""
        self.check(a)
        if self.kind != EXTENSION:
            return (a,)
        out = []
        for _ in range(self.f):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        if self.kind != EXTENSION:
            if len(coeffs) != 1:
                raise RingError(f"{self} elements have a single coordinate")
            return self.check(coeffs[0])
        if len(coeffs) != self.f or any(not 0 <= c < self.p for c in coeffs):
            raise RingError(f"bad coefficient vector {list(coeffs)} for {self}")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    # -- tables ------------------------------------------------------------

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        q = self.size
        if self.kind != EXTENSION:
            return tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
        dec = [self.decode(a) for a in range(q)]
        p = self.p
        return tuple(
            tuple(
                self.encode([(x + y) % p for x, y in zip(dec[a], dec[b])])
                for b in range(q)
            )
            for a in range(q)
        )

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        q = self.size
        if self.kind != EXTENSION:
            return tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
        dec = [list(self.decode(a)) for a in range(q)]
        rows = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = _pmulmod(dec[a], dec[b], self.modulus, self.p)
                prod = prod + [0] * (self.f - len(prod))
                row.append(self.encode(prod))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        add = self.add_table
        return tuple(next(b for b in range(self.size) if add[a][b] == 0) for a in range(self.size))

    def add(self, a: int, b: int) -> int:
        return self.add_table[self.check(a)][self.check(b)]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[self.check(a)][self.check(b)]

    def neg(self, a: int) -> int:
        return self.neg_table[self.check(a)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inverse(self, a: int) -> Optional[int]:
        """Multiplicative inverse, or None for non-units."""
        row = self.mul_table[self.check(a)]
        for b, c in enumerate(row):
            if c == 1:
                return b
        return None

    def character(self, a: int) -> CycInt:
        return character_value(self, a)

    def is_primitive_modulus(self) -> bool:
        """Whether a root of the modulus generates the multiplicative group."""
        if self.kind != EXTENSION:
            return True
        q = self.size
        lam = self.p  # encoding of the root itself: coefficient vector (0, 1, 0, ...)
        order = q - 1
        for r in _prime_factors(order):
            e = order // r
            acc = 1
            for _ in range(e):
                acc = self.mul_table[acc][lam]
            if acc == 1:
                return False
        return True


def prime_field(p: int) -> RingSpec:
    return RingSpec(PRIME, p=p)


def integer_ring(k: int) -> RingSpec:
    return RingSpec(ZK, k=k)


def _search_modulus(p: int, f: int) -> tuple[int, ...]:
    # first primitive irreducible monic polynomial in encoding order
    fallback = None
    for code in range(p**f):
        low = []
        c = code
        for _ in range(f):
            c, r = divmod(c, p)
            low.append(r)
        mod = tuple(low) + (1,)
        if mod[0] == 0 or not is_irreducible(mod, p):
            continue
        ring = RingSpec(EXTENSION, p=p, f=f, modulus=mod)
        if ring.is_primitive_modulus():
            return mod
        if fallback is None:
            fallback = mod
    if fallback is None:
        raise RingError(f"no irreducible polynomial of degree {f} over F_{p}")
    return fallback


def extension_field(p: int, f: int, modulus: Optional[Sequence[int]] = None) -> RingSpec:
    """GF(p^f).  ``modulus`` lists c0..cf; defaults come from a fixed table."""
    if f == 1 and modulus is None:
        return prime_field(p)
    if modulus is None:
        if not is_prime(p):
            raise RingError(f"p={p} is not prime")
        modulus = DEFAULT_MODULI.get((p, f)) or _search_modulus(p, f)
    ring = RingSpec(EXTENSION, p=p, f=f, modulus=tuple(modulus))
    if not ring.is_primitive_modulus():
        warnings.warn(
            f"modulus {list(modulus)} is irreducible but not primitive over F_{p}",
            PrimitivityWarning,
            stacklevel=2,
        )
    return ring


def ring_add(r: RingSpec, a: int, b: int) -> int:
    return r.add(a, b)


def ring_mul(r: RingSpec, a: int, b: int) -> int:
    return r.mul(a, b)


def inner_product(r: RingSpec, u: Sequence[int], v: Sequence[int]) -> int:
    """Standard bilinear form sum u_i v_i computed in R."""
    if len(u) != len(v):
        raise RingError(f"length mismatch: {len(u)} != {len(v)}")
    add, mul = r.add_table, r.mul_table
    acc = 0
    for a, b in zip(u, v):
        acc = add[acc][mul[r.check(a)][r.check(b)]]
    return acc


def character_value(r: RingSpec, a: int) -> CycInt:
    """The fixed additive character: zeta_p^(alpha_0) for fields, zeta_k^a for Z_k."""
    r.check(a)
    if r.kind == ZK:
        return CycInt.zeta_power(r.k, a)
    return CycInt.zeta_power(r.p, a % r.p)


def character_exponent(r: RingSpec, a: int) -> int:
    """Exponent e with chi(a) = zeta_m^e, m = r.char_order."""
    return a if r.kind == ZK else a % r.p
