"""Instance-wise checks of the substitution and MacWilliams identities.

Every check computes two polynomials by independent routes, the
transformed side (``lhs``) and the directly enumerated side (``rhs``), and
reports whether they agree exactly.  Laurent intermediates never leave a
check: a negative exponent that survives the clearing step raises
:class:`LaurentError`, because it can only mean a bug.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import CycInt, RingSpec, character_exponent, inner_product
from .codes import (
    BoundExceeded,
    LinearCode,
    composition_count,
    dual_code,
    embed_L,
    project_to_K,
    subtuples,
    vsupp,
    weight_ell,
)
from .enumerators import (
    TUPLE_BOUND,
    intersection_enumerator,
    jacobi_homogeneous,
    jacobi_inhomogeneous,
    k_tuples,
    weight_enumerator,
)
from .polynomial import (
    LaurentError,
    Monomial,
    NotDivisibleError,
    NotRationalError,
    Polynomial,
    Var,
    X,
    monomial,
    x,
    y,
)

MACWILLIAMS_BOUND = 10**5


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one identity instance.

    ``diff`` is ``lhs - rhs``, except when a MacWilliams transform fails to
    collapse to integers divisible by ``divisor``: then ``rhs`` holds the
    undivided transform and ``diff`` is ``divisor * lhs - rhs``, so that
    ``equal`` is still exactly ``not diff``.
    """

    name: str
    lhs: Polynomial
    rhs: Polynomial
    equal: bool
    diff: Polynomial
    divisor: int = 1
    rational: bool = True
    note: str = ""

    def to_json_obj(self) -> dict:
        obj = {
            "name": self.name,
            "equal": self.equal,
            "lhs": self.lhs.to_json_obj(),
            "rhs": self.rhs.to_json_obj(),
            "diff": self.diff.to_json_obj(),
        }
        if self.note:
            obj["note"] = self.note
        return obj

    def render(self) -> str:
        status = "equal" if self.equal else "NOT equal"
        lines = [f"{self.name}: {status}"]
        if self.note:
            lines.append(f"  note: {self.note}")
        lines.append(f"  lhs = {self.lhs.canonical_text(laurent=True)}")
        lines.append(f"  rhs = {self.rhs.canonical_text(laurent=True)}")
        lines.append(f"  diff = {self.diff.canonical_text(laurent=True)}")
        return "\n".join(lines)


def _report(name: str, lhs: Polynomial, rhs: Polynomial) -> IdentityReport:
    diff = lhs - rhs
    return IdentityReport(name, lhs, rhs, not diff, diff)


def _require_polynomial(p: Polynomial, where: str) -> Polynomial:
    if p.is_laurent():
        raise LaurentError(f"{where}: negative exponent left after clearing")
    return p


# -- monomial images ---------------------------------------------------------


def _nonempty_subtuples(K: Sequence[int]):
    return [s for s in subtuples(K) if s]


def forward_image(a: Sequence[int]) -> Monomial:
    """Image of x_a: product of X_{K, a_K} over nonempty K inside Vsupp(a)."""
    return monomial((X(K, project_to_K(a, K)), 1) for K in _nonempty_subtuples(vsupp(a)))


def inverse_image(K: Sequence[int], L: Sequence[int], slots: int, make_var=x) -> Monomial:
    """Image of X_{K,L}: product over sub-tuples K' of K of var(L_{K'})^(+-1)."""
    K = tuple(K)
    return monomial(
        (make_var(embed_L(slots, K, Ks, L)), (-1) ** (len(K) - len(Ks))) for Ks in subtuples(K)
    )


# -- the two parts of the monomial lemma ---------------------------------------


def check_lemma1_part1(u_list: Sequence[Sequence[int]], ring: RingSpec) -> IdentityReport:
    """Column-wise product over a != 0 versus the K,L-indexed product."""
    g = len(u_list)
    lhs_exp: dict[Var, int] = {}
    for a in itertools.product(ring.elements(), repeat=g):
        if not any(a):
            continue
        na = composition_count(u_list, a)
        if na:
            for K in _nonempty_subtuples(vsupp(a)):
                v = X(K, project_to_K(a, K))
                lhs_exp[v] = lhs_exp.get(v, 0) + na
    rhs_exp: dict[Var, int] = {}
    for p in range(1, g + 1):
        for K in k_tuples(g, p):
            sub = [u_list[k - 1] for k in K]
            for L in itertools.product(ring.nonzero(), repeat=p):
                nl = composition_count(sub, L)
                if nl:
                    rhs_exp[X(K, L)] = nl
    lhs = Polynomial.from_monomial(monomial(lhs_exp))
    rhs = Polynomial.from_monomial(monomial(rhs_exp))
    return _report("lemma2.1(1)", lhs, rhs)


def check_lemma1_part2(a: Sequence[int], g: Optional[int] = None) -> IdentityReport:
    """x_a against x_0 times the signed telescoping product."""
    a = tuple(a)
    g = len(a) if g is None else g
    if len(a) != g:
        raise ValueError(f"|a| = {len(a)} differs from g = {g}")
    if not any(a):
        raise ValueError("the telescoping identity needs a != 0")
    parts = [((x((0,) * g), 1),)]
    for K in _nonempty_subtuples(vsupp(a)):
        parts.append(inverse_image(K, project_to_K(a, K), g, x))
    rhs = monomial(pair for m in parts for pair in m)
    return _report("lemma2.1(2)", Polynomial.var(x(a)), Polynomial.from_monomial(rhs))


def lemma1_for_code(code: LinearCode, g: int,
                    tuple_bound: int = TUPLE_BOUND) -> list[IdentityReport]:
    """Both lemma parts summed over all g-tuples of codewords / all nonzero a."""
    if code.size**g > tuple_bound:
        raise BoundExceeded(f"{code.size}^{g} codeword tuples exceeds tuple bound {tuple_bound}")
    lhs1, rhs1 = Polynomial.zero(), Polynomial.zero()
    for us in itertools.product(code.codewords, repeat=g):
        r = check_lemma1_part1(us, code.ring)
        lhs1, rhs1 = lhs1 + r.lhs, rhs1 + r.rhs
    lhs2, rhs2 = Polynomial.zero(), Polynomial.zero()
    for a in itertools.product(code.ring.elements(), repeat=g):
        if any(a):
            r = check_lemma1_part2(a, g)
            lhs2, rhs2 = lhs2 + r.lhs, rhs2 + r.rhs
    return [_report("lemma2.1(1)", lhs1, rhs1), _report("lemma2.1(2)", lhs2, rhs2)]


# -- weight <-> intersection -----------------------------------------------------


def thm31_weight_to_intersection(code: LinearCode, g: int,
                                 tuple_bound: int = TUPLE_BOUND) -> IdentityReport:
    W = weight_enumerator(code, g, tuple_bound)
    sigma = {v: forward_image(v.a) for v in W.variables()}
    lhs = W.substitute_monomial(sigma)
    rhs = intersection_enumerator(code, g, tuple_bound)
    return _report("3.1a", lhs, rhs)


def thm31_intersection_to_weight(code: LinearCode, g: int,
                                 tuple_bound: int = TUPLE_BOUND) -> IdentityReport:
    I = intersection_enumerator(code, g, tuple_bound)
    sigma = {v: inverse_image(v.a, v.l, g, x) for v in I.variables()}
    x0 = Polynomial.var(x((0,) * g)) ** code.n
    lhs = _require_polynomial(x0 * I.substitute_monomial(sigma), "3.1b")
    rhs = weight_enumerator(code, g, tuple_bound)
    return _report("3.1b", lhs, rhs)


# -- inhomogeneous -> homogeneous ------------------------------------------------


def homogenize_inhomogeneous(jac: Polynomial, g: int, v: Sequence[int], n: int) -> Polynomial:
    """y_0^n prod_l (y_(0..0,l)/y_0)^wt_l(v) Jac(X_{K,L} <- prod y_{L_K'}^(+-1)).

    The singleton variables X[(k);(l)] fall under the same product formula
    (K' is () or (k)), giving y_{L_(k)} / y_0.  Returns a true polynomial.
    """
    slots = g + 1
    y0 = y((0,) * slots)
    sigma = {var: inverse_image(var.a, var.l, slots, y) for var in jac.variables()}
    pre: dict[Var, int] = {y0: n}
    for ell in sorted(set(v)):
        if ell:
            w = weight_ell(v, ell)
            key = y((0,) * g + (ell,))
            pre[key] = pre.get(key, 0) + w
            pre[y0] -= w
    out = Polynomial.from_monomial(monomial(pre)) * jac.substitute_monomial(sigma)
    return _require_polynomial(out, "3.2")


def thm32_inhomo_to_homo(code: LinearCode, g: int, v: Sequence[int],
                         tuple_bound: int = TUPLE_BOUND) -> IdentityReport:
    jac = jacobi_inhomogeneous(code, g, v, tuple_bound)
    lhs = homogenize_inhomogeneous(jac, g, v, code.n)
    rhs = jacobi_homogeneous(code, g, v, tuple_bound)
    return _report("3.2", lhs, rhs)


# -- intersection of genus g+1 from Jacobi polynomials of genus g -------------------


def thm33_intersection_decomposition(code: LinearCode, g: int,
                                     tuple_bound: int = TUPLE_BOUND) -> IdentityReport:
    lhs = intersection_enumerator(code, g + 1, tuple_bound)
    rhs = Polynomial.zero()
    for v in code.codewords:
        tail = monomial(
            (X((g + 1,), (ell,)), weight_ell(v, ell)) for ell in code.ring.nonzero()
        )
        rhs = rhs + jacobi_inhomogeneous(code, g, v, tuple_bound) * Polynomial.from_monomial(tail)
    return _report("3.3", lhs, rhs)


# -- MacWilliams transforms ---------------------------------------------------------


def _chi(ring: RingSpec, a: int) -> CycInt:
    return CycInt.zeta_power(ring.char_order, character_exponent(ring, a))


def homogeneous_kernel(ring: RingSpec, a: Sequence[int]) -> Polynomial:
    """sum over b in R^g of chi(a_1 b_1 + ... + a_g b_g) y_(b, a_{g+1})."""
    a = tuple(a)
    head, last = a[:-1], a[-1]
    m = ring.char_order
    terms = {}
    for b in itertools.product(ring.elements(), repeat=len(head)):
        c = _chi(ring, inner_product(ring, head, b))
        terms[((y(b + (last,)), 1),)] = c
    return Polynomial(terms, m)


def inhomogeneous_kernel(ring: RingSpec, a: Sequence[int]) -> Polynomial:
    """As :func:`homogeneous_kernel` but y_b is replaced by its X-monomial.

    X_{K,B_K} counts only when B_K has no zero entry (K inside Vsupp(b)),
    and X[(g+1);(l)] is 1.
    """
    a = tuple(a)
    head, last = a[:-1], a[-1]
    g = len(head)
    skip = (g + 1,)
    m = ring.char_order
    terms: dict[Monomial, CycInt] = {}
    for b in itertools.product(ring.elements(), repeat=g):
        full = b + (last,)
        mono = monomial(
            (X(K, project_to_K(full, K)), 1)
            for K in _nonempty_subtuples(vsupp(full))
            if K != skip
        )
        c = _chi(ring, inner_product(ring, head, b))
        terms[mono] = terms[mono] + c if mono in terms else c
    return Polynomial(terms, m)


def macwilliams_transform(p: Polynomial, ring: RingSpec, kernel=homogeneous_kernel) -> Polynomial:
    """Substitute every y_a of ``p`` by its character-weighted kernel."""
    sigma = {v: kernel(ring, v.a) for v in p.variables()}
    return p.substitute_linear(sigma)


def _finish_macwilliams(name: str, lhs: Polynomial, transformed: Polynomial,
                        divisor: int) -> IdentityReport:
    try:
        rhs = transformed.to_integer()
    except NotRationalError as exc:
        diff = lhs * divisor - transformed
        return IdentityReport(name, lhs, transformed, False, diff, divisor, False, str(exc))
    try:
        rhs = rhs.div_exact(divisor)
    except NotDivisibleError as exc:
        diff = lhs * divisor - rhs
        return IdentityReport(name, lhs, rhs, False, diff, divisor, True, str(exc))
    diff = lhs - rhs
    return IdentityReport(name, lhs, rhs, not diff, diff, divisor, True)


def _dual_within(code: LinearCode, g: int, macwilliams_bound: int, scan_bound) -> LinearCode:
    dual = dual_code(code) if scan_bound is None else dual_code(code, scan_bound=scan_bound)
    if dual.size**g > macwilliams_bound:
        raise BoundExceeded(
            f"|C^perp|^g = {dual.size}^{g} exceeds MacWilliams bound {macwilliams_bound}"
        )
    return dual


def thm41_macwilliams_homogeneous(code: LinearCode, g: int, v: Sequence[int],
                                  tuple_bound: int = TUPLE_BOUND,
                                  macwilliams_bound: int = MACWILLIAMS_BOUND,
                                  scan_bound: Optional[int] = None) -> IdentityReport:
    dual = _dual_within(code, g, macwilliams_bound, scan_bound)
    lhs = jacobi_homogeneous(dual, g, v, tuple_bound)
    transformed = macwilliams_transform(jacobi_homogeneous(code, g, v, tuple_bound), code.ring)
    return _finish_macwilliams("4.1", lhs, transformed, code.size**g)


def thm42_macwilliams_inhomogeneous(code: LinearCode, g: int, v: Sequence[int],
                                    tuple_bound: int = TUPLE_BOUND,
                                    macwilliams_bound: int = MACWILLIAMS_BOUND,
                                    scan_bound: Optional[int] = None) -> IdentityReport:
    dual = _dual_within(code, g, macwilliams_bound, scan_bound)
    lhs = jacobi_inhomogeneous(dual, g, v, tuple_bound)
    outer = homogenize_inhomogeneous(jacobi_inhomogeneous(code, g, v, tuple_bound), g, v, code.n)
    transformed = macwilliams_transform(outer, code.ring, inhomogeneous_kernel)
    return _finish_macwilliams("4.2", lhs, transformed, code.size**g)
