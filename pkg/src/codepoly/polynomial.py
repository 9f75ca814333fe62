"""Sparse multivariate Laurent polynomials with exact coefficients.

A polynomial maps monomials to coefficients.  Coefficients are Python ints
(integer domain) or :class:`CycInt` of one fixed order (cyclotomic domain);
mixing the two promotes the integers.  A monomial is a tuple of
``(Var, exponent)`` pairs sorted by variable with no zero exponents, so it
is hashable and has one canonical form.

Three variable families exist, distinguished by a tag that also fixes the
variable order:

* ``x[a]``      weight variables, a in R^g
* ``X[(K);(L)]`` intersection variables, K strictly increasing, L in (R*)^|K|
* ``y[a]``      Jacobi variables, a in R^(g+1)
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from .algebra import CycInt

Coeff = Union[int, CycInt]

TAG_X, TAG_INTER, TAG_Y = 0, 1, 2


class Var(NamedTuple):
    tag: int
    a: tuple[int, ...]
    l: tuple[int, ...] = ()

    def key(self) -> str:
        if self.tag == TAG_INTER:
            return f"X[({','.join(map(str, self.a))});({','.join(map(str, self.l))})]"
        name = "x" if self.tag == TAG_X else "y"
        return f"{name}[{','.join(map(str, self.a))}]"

    def __str__(self) -> str:
        return self.key()


def x(a: Sequence[int]) -> Var:
    return Var(TAG_X, tuple(a))


def y(a: Sequence[int]) -> Var:
    return Var(TAG_Y, tuple(a))


def X(K: Sequence[int], L: Sequence[int]) -> Var:
    K, L = tuple(K), tuple(L)
    if not K or len(K) != len(L):
        raise ValueError(f"X variable needs |K| = |L| >= 1, got K={K}, L={L}")
    if any(b <= a for a, b in zip(K, K[1:])) or K[0] < 1:
        raise ValueError(f"K must be strictly increasing and 1-based, got {K}")
    if any(c == 0 for c in L):
        raise ValueError(f"L entries must be nonzero, got {L}")
    return Var(TAG_INTER, K, L)


_VAR_RE = re.compile(r"([xy])\[([0-9,]*)\]|X\[\(([0-9,]+)\);\(([0-9,]+)\)\]")


def parse_var(s: str) -> Var:
    m = _VAR_RE.fullmatch(s)
    if m is None:
        raise ValueError(f"not a variable key: {s!r}")

    def ints(t):
        return tuple(int(c) for c in t.split(",")) if t else ()

    if m.group(1):
        return (x if m.group(1) == "x" else y)(ints(m.group(2)))
    return X(ints(m.group(3)), ints(m.group(4)))


# -- monomials -------------------------------------------------------------

Monomial = tuple[tuple[Var, int], ...]
ONE: Monomial = ()


def monomial(exps: Union[Mapping[Var, int], Iterable[tuple[Var, int]]]) -> Monomial:
    """Canonical monomial from a mapping or pairs; repeated variables add up."""
    acc: dict[Var, int] = {}
    items = exps.items() if isinstance(exps, Mapping) else exps
    for v, e in items:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, e in m2:
        s = acc.get(v, 0) + e
        if s:
            acc[v] = s
        else:
            del acc[v]
    return tuple(sorted(acc.items()))


def mono_pow(m: Monomial, e: int) -> Monomial:
    if e == 0:
        return ONE
    return tuple((v, k * e) for v, k in m)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _order_key(m: Monomial):
    # graded first, then lexicographic over the sorted (variable, exponent) pairs
    return (mono_degree(m), m)


# -- polynomials -----------------------------------------------------------


class NotRationalError(ArithmeticError):
    """A cyclotomic coefficient is not a rational integer."""


class NotDivisibleError(ArithmeticError):
    """Exact division left a remainder."""


class LaurentError(ValueError):
    """A negative exponent where a true polynomial is required."""


class Polynomial:
    """Immutable sparse polynomial.  ``order`` is None for integer coefficients."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Optional[Mapping[Monomial, Coeff]] = None,
                 order: Optional[int] = None):
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if order is not None and isinstance(c, int):
                    c = CycInt.from_int(order, c)
                elif order is None and isinstance(c, CycInt):
                    raise TypeError("cyclotomic coefficient in an integer-domain polynomial")
                if c:
                    clean[m] = c
        self.terms = clean
        self.order = order

    # construction

    @classmethod
    def constant(cls, c: Coeff, order: Optional[int] = None) -> "Polynomial":
        if isinstance(c, CycInt):
            order = c.order
        return cls({ONE: c}, order)

    @classmethod
    def var(cls, v: Var, order: Optional[int] = None) -> "Polynomial":
        return cls({((v, 1),): 1}, order)

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: Coeff = 1, order: Optional[int] = None) -> "Polynomial":
        if isinstance(coeff, CycInt):
            order = coeff.order
        return cls({m: coeff}, order)

    @classmethod
    def zero(cls, order: Optional[int] = None) -> "Polynomial":
        return cls({}, order)

    # arithmetic

    def _promote(self, order: Optional[int]) -> "Polynomial":
        if order == self.order:
            return self
        if self.order is not None:
            raise ValueError(f"mixed cyclotomic orders {self.order} and {order}")
        return Polynomial(self.terms, order)

    def _unify(self, other):
        if isinstance(other, (int, CycInt)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return None, None
        if self.order == other.order:
            return self, other
        if self.order is None:
            return self._promote(other.order), other
        return self, other._promote(self.order)

    def __add__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for m, c in b.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Polynomial(terms, a.order)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self.terms.items()}, self.order)
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        terms: dict[Monomial, Coeff] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                if m in terms:
                    terms[m] = terms[m] + c
                else:
                    terms[m] = c
        return Polynomial(terms, a.order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("polynomial powers must be nonnegative")
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return Polynomial({mono_pow(m, e): c**e}, self.order)
        result = Polynomial.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.canonical_text(laurent=True)!r})"

    __str__ = lambda self: self.canonical_text(laurent=True)

    # queries

    def variables(self) -> list[Var]:
        return sorted({v for m in self.terms for v, _ in m})

    def is_laurent(self) -> bool:
        return any(e < 0 for m in self.terms for _, e in m)

    def degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def coefficient(self, m: Monomial) -> Coeff:
        return self.terms.get(m, 0)

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]))

    def evaluate(self, values: Mapping[Var, complex], default=None):
        """Numeric evaluation; cyclotomic coefficients go through ``to_complex``."""
        total = 0
        for m, c in self.terms.items():
            t = c.to_complex() if isinstance(c, CycInt) else c
            for v, e in m:
                val = values[v] if default is None else values.get(v, default)
                t = t * val**e
            total += t
        return total

    def coefficient_sum(self) -> Coeff:
        """Value with every variable set to 1."""
        total = CycInt.from_int(self.order, 0) if self.order else 0
        for c in self.terms.values():
            total = total + c
        return total

    # domain changes

    def to_integer(self) -> "Polynomial":
        """Collapse cyclotomic coefficients to rational integers."""
        if self.order is None:
            return self
        terms = {}
        for m, c in self.terms.items():
            n = c.as_integer()
            if n is None:
                raise NotRationalError(
                    f"coefficient {c!r} of {_render_monomial(m) or '1'} is not a rational integer"
                )
            terms[m] = n
        return Polynomial(terms)

    def div_exact(self, d: int) -> "Polynomial":
        if d <= 0:
            raise ValueError("divisor must be positive")
        terms = {}
        for m, c in self.terms.items():
            if isinstance(c, CycInt):
                if not c.divisible_by(d):
                    raise NotDivisibleError(f"coefficient {c!r} of {_render_monomial(m) or '1'} not divisible by {d}")
                terms[m] = c.exact_div(d)
            else:
                if c % d:
                    raise NotDivisibleError(f"coefficient {c} of {_render_monomial(m) or '1'} not divisible by {d}")
                terms[m] = c // d
        return Polynomial(terms, self.order)

    # substitution

    def substitute_monomial(self, sigma: Mapping[Var, Union[Monomial, tuple[Coeff, Monomial]]]) -> "Polynomial":
        """Replace variables by (scaled) Laurent monomials; unmapped ones stay."""
        images: dict[Var, tuple[Coeff, Monomial]] = {}
        for v, img in sigma.items():
            if len(img) == 2 and isinstance(img[0], (int, CycInt)) and isinstance(img[1], tuple):
                images[v] = img
            else:
                images[v] = (1, img)
        order = self.order
        for c, _ in images.values():
            if isinstance(c, CycInt):
                order = order or c.order
        terms: dict[Monomial, Coeff] = {}
        for m, c in self.terms.items():
            acc: dict[Var, int] = {}
            for v, e in m:
                img = images.get(v)
                if img is None:
                    acc[v] = acc.get(v, 0) + e
                    continue
                scale, mm = img
                if scale != 1:
                    if e < 0:
                        raise ValueError("cannot raise a scaled image to a negative power")
                    c = c * scale**e
                for w, k in mm:
                    acc[w] = acc.get(w, 0) + k * e
            key = tuple(sorted((w, k) for w, k in acc.items() if k))
            terms[key] = terms[key] + c if key in terms else c
        return Polynomial(terms, order)

    def substitute_linear(self, sigma: Mapping[Var, "Polynomial"]) -> "Polynomial":
        """Replace variables by polynomials and expand completely."""
        order = self.order
        for img in sigma.values():
            if img.order is not None:
                if order is not None and order != img.order:
                    raise ValueError(f"mixed cyclotomic orders {order} and {img.order}")
                order = img.order
        for v, img in sigma.items():
            if img.is_laurent():
                raise LaurentError(f"image of {v} has negative exponents")
        powers: dict[tuple[Var, int], Polynomial] = {}

        def power(v: Var, e: int) -> Polynomial:
            key = (v, e)
            p = powers.get(key)
            if p is None:
                if e == 1:
                    p = sigma[v]
                else:
                    half = power(v, e // 2)
                    p = half * half
                    if e % 2:
                        p = p * sigma[v]
                powers[key] = p
            return p

        out: dict[Monomial, Coeff] = {}
        for m, c in self.terms.items():
            fixed = []
            prod = Polynomial.constant(c, order)
            for v, e in m:
                if v in sigma:
                    if e < 0:
                        raise LaurentError(f"cannot substitute a polynomial into {v}^{e}")
                    prod = prod * power(v, e)
                else:
                    fixed.append((v, e))
            if fixed:
                prod = prod * Polynomial.from_monomial(tuple(fixed), 1, order)
            for mm, cc in prod.terms.items():
                out[mm] = out[mm] + cc if mm in out else cc
        return Polynomial(out, order)

    # rendering

    def canonical_text(self, laurent: bool = False) -> str:
        if not laurent and self.is_laurent():
            raise LaurentError("polynomial has negative exponents; pass laurent=True to render")
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            s = _render_term(m, c)
            if i == 0:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(" - " + s[1:])
            else:
                parts.append(" + " + s)
        return "".join(parts)

    def to_json_obj(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            if isinstance(c, CycInt):
                coeff = {"order": c.order, "coeffs": list(c.coeffs[: c.degree_bound])}
            else:
                coeff = c
            terms.append({"coeff": coeff, "monomial": [[v.key(), e] for v, e in m]})
        return {"vars": [v.key() for v in self.variables()], "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Polynomial":
        terms: dict[Monomial, Coeff] = {}
        order = None
        for t in obj["terms"]:
            c = t["coeff"]
            if isinstance(c, dict):
                order = c["order"]
                c = CycInt(order, c["coeffs"])
            m = monomial((parse_var(k), e) for k, e in t["monomial"])
            terms[m] = terms[m] + c if m in terms else c
        return cls(terms, order)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(text))


def _render_monomial(m: Monomial) -> str:
    return "*".join(v.key() if e == 1 else f"{v.key()}^{e}" for v, e in m)


def _render_cyc(c: CycInt) -> str:
    parts = []
    for i, a in enumerate(c.coeffs):
        if a:
            parts.append(str(a) if i == 0 else f"{a}*z" if i == 1 else f"{a}*z^{i}")
    return "(" + " + ".join(parts) + ")"


def _render_term(m: Monomial, c: Coeff) -> str:
    body = _render_monomial(m)
    if isinstance(c, CycInt):
        return _render_cyc(c) + ("*" + body if body else "")
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


# -- parsing canonical text --------------------------------------------------

_TERM_SPLIT = re.compile(r" ([+-]) ")


def _split_top(text: str) -> list[tuple[int, str]]:
    """Split at top-level ' + ' / ' - ', returning (sign, chunk) pairs."""
    out = []
    depth = 0
    start = 0
    sign = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith((" + ", " - "), i):
            out.append((sign, text[start:i]))
            sign = 1 if text[i + 1] == "+" else -1
            i += 3
            start = i
            continue
        i += 1
    out.append((sign, text[start:]))
    return out


def parse_polynomial(text: str, order: Optional[int] = None) -> Polynomial:
    """Inverse of :meth:`Polynomial.canonical_text`.

    ``order`` must be given for cyclotomic-domain text, since the rendering
    writes zeta as a bare ``z``.
    """
    text = text.strip()
    if text == "0":
        return Polynomial.zero(order)
    terms: dict[Monomial, Coeff] = {}
    for sign, chunk in _split_top(text):
        if chunk.startswith("-"):
            sign, chunk = -sign, chunk[1:]
        coeff: Coeff = 1
        if chunk.startswith("("):
            if order is None:
                raise ValueError("cyclotomic coefficient in text but no order given")
            close = chunk.index(")")
            coeff = _parse_cyc(chunk[1:close], order)
            chunk = chunk[close + 1 :].lstrip("*")
        else:
            m = re.match(r"(\d+)(\*|$)", chunk)
            if m:
                coeff = int(m.group(1))
                chunk = chunk[m.end():]
        pairs = []
        if chunk:
            for factor in _split_factors(chunk):
                if "^" in factor and factor.rsplit("^", 1)[1].lstrip("-").isdigit():
                    key, e = factor.rsplit("^", 1)
                    pairs.append((parse_var(key), int(e)))
                else:
                    pairs.append((parse_var(factor), 1))
        mono = monomial(pairs)
        c = coeff * sign
        terms[mono] = terms[mono] + c if mono in terms else c
    return Polynomial(terms, order)


def _split_factors(chunk: str) -> list[str]:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(chunk):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "*" and depth == 0:
            out.append(chunk[start:i])
            start = i + 1
    out.append(chunk[start:])
    return out


def _parse_cyc(body: str, order: int) -> CycInt:
    v = [0] * order
    for part in body.split(" + "):
        if "*z" in part:
            c, rest = part.split("*z", 1)
            i = int(rest[1:]) if rest.startswith("^") else 1
        else:
            c, i = part, 0
        v[i] += int(c)
    return CycInt(order, v)


# -- module-level operation names ---------------------------------------------


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_pow(p: Polynomial, e: int) -> Polynomial:
    return p**e


def substitute_monomial(p: Polynomial, sigma) -> Polynomial:
    return p.substitute_monomial(sigma)


def substitute_linear(p: Polynomial, sigma) -> Polynomial:
    return p.substitute_linear(sigma)


def poly_scalar_div_exact(p: Polynomial, d: int) -> Polynomial:
    return p.to_integer().div_exact(d) if p.order is not None else p.div_exact(d)


def canonical_text(p: Polynomial, laurent: bool = False) -> str:
    return p.canonical_text(laurent=laurent)
