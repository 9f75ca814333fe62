"""Linear codes over an alphabet ring and the counting statistics on them.

Index arguments (positions, K-tuples) are 1-based throughout, matching
the usual [g] = {1, ..., g} convention.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .algebra import RingSpec, inner_product

Vector = tuple[int, ...]

ENUMERATION_BOUND = 10**6
SCAN_BOUND = 10**7


class BoundExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured bound."""


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """A code over ``ring`` of length ``n`` with its codewords materialized.

    ``codewords`` is sorted lexicographically by element encodings and has
    no duplicates.  ``closed`` is False only for word sets built with
    :meth:`from_words` that fail the closure check; such sets exist as
    negative controls for the identity verifiers.
    """

    ring: RingSpec
    n: int
    generators: tuple[Vector, ...] = field(compare=False)
    codewords: tuple[Vector, ...]
    closed: bool = True
    name: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def size(self) -> int:
        return len(self.codewords)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._word_set

    @property
    def _word_set(self) -> frozenset:
        # frozen dataclass: cache by hand in __dict__
        s = self.__dict__.get("_ws")
        if s is None:
            s = frozenset(self.codewords)
            object.__setattr__(self, "_ws", s)
        return s

    @classmethod
    def from_words(cls, ring: RingSpec, words: Iterable[Sequence[int]], n: Optional[int] = None,
                   name: str = "") -> "LinearCode":
        """Take ``words`` literally as the codeword set (zero word not added)."""
        words = [_check_vector(ring, w) for w in words]
        n = _common_length(words, n)
        cw = tuple(sorted(set(words)))
        code = cls(ring, n, tuple(words), cw, True, name)
        object.__setattr__(code, "closed", is_closed(code))
        return code

    def is_zero(self) -> bool:
        return self.codewords == ((0,) * self.n,)


def _check_vector(ring: RingSpec, v: Sequence[int]) -> Vector:
    for a in v:
        ring.check(a)
    return tuple(v)


def _common_length(rows: Sequence[Vector], n: Optional[int]) -> int:
    for i, row in enumerate(rows, start=1):
        if n is None:
            n = len(row)
        elif len(row) != n:
            raise CodeError(f"row {i} has length {len(row)}, expected {n}")
    if n is None or n < 1:
        raise CodeError("code length must be declared and positive")
    return n


def vec_add(ring: RingSpec, u: Sequence[int], v: Sequence[int]) -> Vector:
    add = ring.add_table
    return tuple(add[a][b] for a, b in zip(u, v))


def vec_scale(ring: RingSpec, c: int, u: Sequence[int]) -> Vector:
    row = ring.mul_table[c]
    return tuple(row[a] for a in u)


def enumerate_codewords(gens: Sequence[Sequence[int]], ring: RingSpec, n: Optional[int] = None,
                        bound: int = ENUMERATION_BOUND, name: str = "") -> LinearCode:
    """All R-linear combinations of ``gens``, deduplicated and sorted."""
    gens = [_check_vector(ring, g) for g in gens]
    n = _common_length(gens, n)
    q = ring.size
    total = q ** len(gens)
    if total > bound:
        raise BoundExceeded(
            f"enumeration too large: {q}^{len(gens)} = {total} combinations exceeds bound {bound}"
        )
    # span built incrementally: S_{j+1} = { s + c*g_j }
    words = {(0,) * n}
    for g in gens:
        multiples = {vec_scale(ring, c, g) for c in range(q)}
        words = {vec_add(ring, s, m) for s in words for m in multiples}
    return LinearCode(ring, n, tuple(gens), tuple(sorted(words)), True, name)


def is_closed(code: LinearCode) -> bool:
    """Exhaustive closure check under addition and scalar multiplication."""
    words = code._word_set
    if (0,) * code.n not in words:
        return False
    ring = code.ring
    for u in code.codewords:
        for c in ring.elements():
            if vec_scale(ring, c, u) not in words:
                return False
        for w in code.codewords:
            if vec_add(ring, u, w) not in words:
                return False
    return True


def _nullspace_field(ring: RingSpec, rows: Sequence[Vector], n: int) -> list[Vector]:
    """Basis of { v : r . v = 0 for all rows } over a field, by Gauss-Jordan."""
    add, mul = ring.add_table, ring.mul_table
    neg = ring.neg_table
    mat = [list(r) for r in rows]
    pivots = []
    row = 0
    for col in range(n):
        pr = next((i for i in range(row, len(mat)) if mat[i][col]), None)
        if pr is None:
            continue
        mat[row], mat[pr] = mat[pr], mat[row]
        inv = ring.inverse(mat[row][col])
        mat[row] = [mul[inv][a] for a in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col]:
                c = neg[mat[i][col]]
                mat[i] = [add[a][mul[c][b]] for a, b in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = neg[mat[r][fc]]
        basis.append(tuple(v))
    return basis


def dual_code(code: LinearCode, scan_bound: int = SCAN_BOUND,
              bound: int = ENUMERATION_BOUND) -> LinearCode:
    """C-perp under the standard inner product.

    Fields: nullspace of the generator rows, then enumerated.  Z_k: every
    vector of R^n is tested against the generator rows, subject to
    ``scan_bound``.
    """
    ring, n = code.ring, code.n
    rows = [g for g in code.generators if any(g)]
    if ring.is_field:
        basis = _nullspace_field(ring, rows, n)
        return enumerate_codewords(basis, ring, n=n, bound=bound, name=_dual_name(code))
    total = ring.size**n
    if total > scan_bound:
        raise BoundExceeded(
            f"dual scan too large: {ring.size}^{n} = {total} vectors exceeds scan bound {scan_bound}"
        )
    words = [
        v for v in itertools.product(ring.elements(), repeat=n)
        if all(inner_product(ring, u, v) == 0 for u in rows)
    ]
    return LinearCode(ring, n, tuple(words), tuple(words), True, _dual_name(code))


def _dual_name(code: LinearCode) -> str:
    return f"{code.name}^perp" if code.name else ""


def composition_count(u_list: Sequence[Sequence[int]], a: Sequence[int]) -> int:
    """Number of positions i whose column (u_1[i], ..., u_g[i]) equals ``a``."""
    if len(u_list) != len(a):
        raise CodeError(f"arity mismatch: {len(u_list)} vectors, key of length {len(a)}")
    if not u_list:
        raise CodeError("need at least one vector")
    n = len(u_list[0])
    if any(len(u) != n for u in u_list):
        raise CodeError("vectors have different lengths")
    a = tuple(a)
    return sum(1 for col in zip(*u_list) if col == a)


def compositions(u_list: Sequence[Sequence[int]]) -> Counter:
    """All nonzero composition counts at once: column -> multiplicity."""
    return Counter(zip(*u_list))


def weight_ell(u: Sequence[int], ell: int) -> int:
    return sum(1 for x in u if x == ell)


def vsupp(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(a, start=1) if x != 0)


def project_to_K(a: Sequence[int], K: Sequence[int]) -> Vector:
    """(a_{K_1}, ..., a_{K_p}) for a 1-based, strictly increasing K."""
    for i in K:
        if not 1 <= i <= len(a):
            raise IndexError(f"index {i} out of range for length {len(a)}")
    return tuple(a[i - 1] for i in K)


def embed_L(g_total: int, K: Sequence[int], K_sub: Sequence[int], L: Sequence[int]) -> Vector:
    """Length-``g_total`` vector carrying L_j at position K_j for K_j in K_sub."""
    if len(L) != len(K):
        raise CodeError(f"|L| = {len(L)} differs from |K| = {len(K)}")
    pos = {k: j for j, k in enumerate(K)}
    out = [0] * g_total
    last = -1
    for k in K_sub:
        j = pos.get(k)
        if j is None or j <= last:
            raise CodeError(f"{tuple(K_sub)} is not a sub-tuple of {tuple(K)}")
        last = j
        out[k - 1] = L[j]
    return tuple(out)


def subtuples(K: Sequence[int]) -> list[tuple[int, ...]]:
    """Every sub-tuple of K, the empty tuple included, ordered by size then lex."""
    K = tuple(K)
    return [c for r in range(len(K) + 1) for c in itertools.combinations(K, r)]
