"""The four genus-g code polynomials, built from their defining sums.

All four sum a monomial over every g-tuple of codewords (repetition
allowed).  Each monomial depends only on the multiset of columns of the
tuple, so the tuple loop runs in :mod:`codepoly.kernels`, which returns
how many tuples share each column multiset; the monomials are then formed
here, once per distinct multiset.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import kernels
from .algebra import RingSpec
from .codes import BoundExceeded, LinearCode, project_to_K
from .polynomial import Monomial, Polynomial, Var, X, monomial, x, y

TUPLE_BOUND = 10**6

WEIGHT = "weight"
INTERSECTION = "intersection"
JACOBI_HOMO = "jacobi-homo"
JACOBI_INHOMO = "jacobi-inhomo"
ROLES = (WEIGHT, INTERSECTION, JACOBI_HOMO, JACOBI_INHOMO)


def k_tuples(g: int, p: int) -> list[tuple[int, ...]]:
    """All strictly increasing p-tuples drawn from 1..g, in lexicographic order."""
    if not 1 <= p <= g:
        raise ValueError(f"need 1 <= p <= g, got p={p}, g={g}")
    return list(itertools.combinations(range(1, g + 1), p))


def all_k_tuples(g: int) -> list[tuple[int, ...]]:
    return [K for p in range(1, g + 1) for K in k_tuples(g, p)]


@dataclass(frozen=True)
class GenusContext:
    g: int
    ring: RingSpec
    role: str

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"genus must be >= 1, got {self.g}")
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")

    def universe(self) -> list[Var]:
        """Every variable the polynomial family can involve."""
        R = list(self.ring.elements())
        Rs = list(self.ring.nonzero())
        g = self.g
        if self.role == WEIGHT:
            return [x(a) for a in itertools.product(R, repeat=g)]
        if self.role == JACOBI_HOMO:
            return [y(a) for a in itertools.product(R, repeat=g + 1)]
        slots = g if self.role == INTERSECTION else g + 1
        skip = None if self.role == INTERSECTION else (g + 1,)
        return [
            X(K, L)
            for K in all_k_tuples(slots)
            if K != skip
            for L in itertools.product(Rs, repeat=len(K))
        ]

    def universe_size(self) -> int:
        q, g = self.ring.size, self.g
        return {
            WEIGHT: q**g,
            INTERSECTION: q**g - 1,
            JACOBI_HOMO: q ** (g + 1),
            JACOBI_INHOMO: q * (q**g - 1),
        }[self.role]


@lru_cache(maxsize=65536)
def _decode(code: int, q: int, slots: int) -> tuple[int, ...]:
    out = []
    for _ in range(slots):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


def _profiles(code: LinearCode, g: int, ref, tuple_bound: int, backend):
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    total = code.size**g
    if total > tuple_bound:
        raise BoundExceeded(
            f"{code.size}^{g} = {total} codeword tuples exceeds tuple bound {tuple_bound}"
        )
    if ref is not None:
        ref = tuple(ref)
        if len(ref) != code.n:
            raise ValueError(f"reference vector has length {len(ref)}, code length is {code.n}")
        for a in ref:
            code.ring.check(a)
    return kernels.column_profiles(code.codewords, g, code.ring.size, ref, backend=backend)


def _columns(profile, q: int, slots: int) -> Counter:
    return Counter(_decode(c, q, slots) for c in profile)


def _composition_monomial(cols: Counter, make_var) -> Monomial:
    return monomial((make_var(a), cnt) for a, cnt in cols.items())


def _intersection_monomial(cols: Counter, slots: int, skip=None) -> Monomial:
    # exponent of X_{K,L} is n_L(u_{K_1}, ..., u_{K_p}): columns whose K-projection is L
    exps: Counter = Counter()
    for K in all_k_tuples(slots):
        if K == skip:
            continue
        for a, cnt in cols.items():
            L = project_to_K(a, K)
            if all(L):
                exps[X(K, L)] += cnt
    return monomial(exps.items())


def _assemble(profiles, monomial_of) -> Polynomial:
    terms: dict[Monomial, int] = {}
    for profile, count in profiles.items():
        m = monomial_of(profile)
        terms[m] = terms.get(m, 0) + count
    return Polynomial(terms)


def weight_enumerator(code: LinearCode, g: int, tuple_bound: int = TUPLE_BOUND,
                      backend: Optional[str] = None) -> Polynomial:
    q = code.ring.size
    prof = _profiles(code, g, None, tuple_bound, backend)
    return _assemble(prof, lambda pr: _composition_monomial(_columns(pr, q, g), x))


def intersection_enumerator(code: LinearCode, g: int, tuple_bound: int = TUPLE_BOUND,
                            backend: Optional[str] = None) -> Polynomial:
    q = code.ring.size
    prof = _profiles(code, g, None, tuple_bound, backend)
    return _assemble(prof, lambda pr: _intersection_monomial(_columns(pr, q, g), g))


def jacobi_homogeneous(code: LinearCode, g: int, v: Sequence[int],
                       tuple_bound: int = TUPLE_BOUND, backend: Optional[str] = None) -> Polynomial:
    q = code.ring.size
    prof = _profiles(code, g, v, tuple_bound, backend)
    return _assemble(prof, lambda pr: _composition_monomial(_columns(pr, q, g + 1), y))


def jacobi_inhomogeneous(code: LinearCode, g: int, v: Sequence[int],
                         tuple_bound: int = TUPLE_BOUND, backend: Optional[str] = None) -> Polynomial:
    """Slot g+1 holds v; the singleton variables X[(g+1);(j)] are never emitted."""
    q = code.ring.size
    prof = _profiles(code, g, v, tuple_bound, backend)
    skip = (g + 1,)
    return _assemble(prof, lambda pr: _intersection_monomial(_columns(pr, q, g + 1), g + 1, skip))


def enumerate_polynomial(code: LinearCode, g: int, which: str, v: Optional[Sequence[int]] = None,
                         tuple_bound: int = TUPLE_BOUND, backend: Optional[str] = None) -> Polynomial:
    if which == WEIGHT:
        return weight_enumerator(code, g, tuple_bound, backend)
    if which == INTERSECTION:
        return intersection_enumerator(code, g, tuple_bound, backend)
    if v is None:
        raise ValueError(f"{which} needs a reference vector")
    if which == JACOBI_HOMO:
        return jacobi_homogeneous(code, g, v, tuple_bound, backend)
    if which == JACOBI_INHOMO:
        return jacobi_inhomogeneous(code, g, v, tuple_bound, backend)
    raise ValueError(f"unknown polynomial family {which!r}")


def weight_to_jacobi_vars(p: Polynomial) -> Polynomial:
    """Rename x[a] to y[a,0]: the image of W under v = 0."""
    sigma = {v: ((y(v.a + (0,)), 1),) for v in p.variables() if v.tag == 0}
    return p.substitute_monomial(sigma)
