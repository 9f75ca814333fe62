import cmath
import itertools
import warnings

import pytest
from hypothesis import given, strategies as st

from codepoly.algebra import (
    CycInt,
    PrimitivityWarning,
    RingError,
    character_value,
    cyc_add,
    cyc_as_integer,
    cyc_mul,
    cyclotomic_polynomial,
    extension_field,
    inner_product,
    integer_ring,
    is_irreducible,
    prime_field,
    ring_add,
    ring_mul,
)

from conftest import F3, F4, Z4
from oracles import numeric_cyclotomic

SMALL_RINGS = (
    [prime_field(p) for p in (2, 3, 5, 7, 11, 13)]
    + [extension_field(2, 2), extension_field(2, 3), extension_field(3, 2), extension_field(2, 4)]
    + [integer_ring(k) for k in range(2, 17)]
)


def test_ring_add_examples():
    assert ring_add(Z4, 3, 2) == 1
    assert ring_add(F4, 2, 3) == 1
    assert ring_add(F3, 1, 2) == 0


def test_ring_mul_examples():
    assert ring_mul(F4, 2, 2) == 3
    assert ring_mul(integer_ring(6), 2, 3) == 0
    assert ring_mul(F3, 2, 2) == 1


def _gf4_mul_by_hand(a, b):
    # (a0 + a1 t)(b0 + b1 t) with t^2 = t + 1 over F_2
    a0, a1 = a & 1, a >> 1
    b0, b1 = b & 1, b >> 1
    c0 = a0 * b0 + a1 * b1
    c1 = a0 * b1 + a1 * b0 + a1 * b1
    return (c0 % 2) + 2 * (c1 % 2)


def test_gf4_table_matches_hand_multiplication():
    for a, b in itertools.product(range(4), repeat=2):
        assert F4.mul(a, b) == _gf4_mul_by_hand(a, b)


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_ring_axioms(ring):
    R = list(ring.elements())
    for a, b in itertools.product(R, repeat=2):
        assert ring.add(a, b) == ring.add(b, a)
        assert ring.mul(a, b) == ring.mul(b, a)
    for a, b, c in itertools.product(R[:6], repeat=3):
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
    assert all(ring.add(a, 0) == a and ring.mul(a, 1) == a for a in R)


@pytest.mark.parametrize("p,f", [(2, 2), (2, 3), (3, 2)])
def test_extension_fields_have_inverses(p, f):
    ring = extension_field(p, f)
    for a in ring.nonzero():
        inv = ring.inverse(a)
        assert inv is not None and ring.mul(a, inv) == 1


def test_zk_zero_divisor_has_no_inverse():
    assert integer_ring(6).inverse(2) is None


def test_default_moduli():
    assert extension_field(2, 2).modulus == (1, 1, 1)
    assert extension_field(2, 3).modulus == (1, 1, 0, 1)
    assert extension_field(3, 2).modulus == (2, 1, 1)
    assert extension_field(2, 4).modulus == (1, 1, 0, 0, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(RingError):
        extension_field(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_non_primitive_modulus_warns():
    # x^4 + x^3 + x^2 + x + 1 is irreducible over F_2, its roots have order 5
    with pytest.warns(PrimitivityWarning):
        ring = extension_field(2, 4, (1, 1, 1, 1, 1))
    assert not ring.is_primitive_modulus()


def test_default_moduli_are_primitive():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for p, f in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 5)]:
            assert extension_field(p, f).is_primitive_modulus()


def test_irreducibility_small_cases():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((0, 1, 1), 2)
    assert is_irreducible((2, 1, 1), 3)
    assert not is_irreducible((2, 0, 1), 3)  # x^2 + 2 = (x+1)(x+2)


def test_invalid_rings():
    for bad in (lambda: prime_field(4), lambda: integer_ring(1), lambda: extension_field(4, 2)):
        with pytest.raises(RingError):
            bad()


def test_element_range_checked():
    with pytest.raises(RingError):
        Z4.add(4, 0)
    with pytest.raises(RingError):
        F4.mul(-1, 1)


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_encoding_round_trip(ring):
    for a in ring.elements():
        assert ring.encode(ring.decode(a)) == a


def test_inner_product_examples():
    assert inner_product(F3, (1, 2), (1, 1)) == 0
    assert inner_product(Z4, (1, 2, 3), (1, 1, 1)) == 2
    assert inner_product(F4, (0, 0), (0, 0)) == 0
    with pytest.raises(RingError):
        inner_product(F3, (1,), (1, 1))


def test_character_examples():
    assert character_value(F3, 0) == 1
    # enc 2 is lambda itself: alpha_0 = 0
    assert character_value(F4, 2) == 1
    assert character_value(F4, 3) == CycInt.zeta_power(2, 1)
    assert character_value(Z4, 3) == CycInt.zeta_power(4, 3)


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_character_is_additive(ring):
    for a, b in itertools.product(ring.elements(), repeat=2):
        assert character_value(ring, ring.add(a, b)) == character_value(ring, a) * character_value(ring, b)


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_character_orthogonality(ring):
    for a in ring.elements():
        total = CycInt.from_int(ring.char_order, 0)
        for b in ring.elements():
            total = total + character_value(ring, ring.mul(a, b))
        assert cyc_as_integer(total) == (ring.size if a == 0 else 0)


# -- cyclotomic integers ----------------------------------------------------


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_polynomial_matches_root_product(m):
    assert cyclotomic_polynomial(m) == numeric_cyclotomic(m)


def test_cyc_examples():
    z3 = CycInt.zeta_power(3, 1)
    assert cyc_add(z3, z3 * z3) == -1
    assert 1 + z3 + z3 * z3 == 0
    z2 = CycInt.zeta_power(2, 1)
    assert cyc_mul(z2, z2) == 1
    z4 = CycInt.zeta_power(4, 1)
    assert (1 + z4) * (1 - z4) == 2


def test_cyc_as_integer_examples():
    assert cyc_as_integer(CycInt(3, (2, 0, 0))) == 2
    assert cyc_as_integer(CycInt(3, (1, 1, 1))) == 0
    assert cyc_as_integer(CycInt.zeta_power(4, 1)) is None


def test_cyc_mismatched_orders():
    with pytest.raises(ValueError):
        CycInt.zeta_power(3, 1) + CycInt.zeta_power(4, 1)


def test_canonical_form_degree():
    for m in (3, 4, 5, 6, 12):
        c = CycInt(m, range(1, m + 1))
        assert not any(c.coeffs[c.degree_bound:])


cyc_orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def cyc_pairs(draw):
    m = draw(cyc_orders)
    vec = st.lists(st.integers(-20, 20), min_size=m, max_size=m)
    return CycInt(m, draw(vec)), CycInt(m, draw(vec)), CycInt(m, draw(vec))


@given(cyc_pairs())
def test_cyc_matches_complex_evaluation(abc):
    a, b, c = abc
    expr = a * b + c * c - a
    approx = a.to_complex() * b.to_complex() + c.to_complex() ** 2 - a.to_complex()
    assert abs(expr.to_complex() - approx) < 1e-9


@given(cyc_pairs())
def test_cyc_ring_laws(abc):
    a, b, c = abc
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(cyc_orders, st.integers(-50, 50), st.integers(-50, 50))
def test_integer_embedding_preserved(m, s, t):
    a, b = CycInt.from_int(m, s), CycInt.from_int(m, t)
    assert (a + b).as_integer() == s + t
    assert (a * b).as_integer() == s * t


def test_zero_and_hash():
    z = CycInt.zeta_power(6, 1)
    assert not (z - z)
    assert hash(CycInt.from_int(5, 7)) == hash(7)
    assert abs(CycInt.zeta_power(8, 3).to_complex() - cmath.exp(2j * cmath.pi * 3 / 8)) < 1e-12
