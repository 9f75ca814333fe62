import itertools
import random

import pytest
from hypothesis import given, strategies as st

from codepoly.algebra import extension_field, integer_ring, prime_field
from codepoly.codes import BoundExceeded, LinearCode, enumerate_codewords
from codepoly.enumerators import intersection_enumerator, jacobi_homogeneous, weight_enumerator
from codepoly.identities import (
    check_lemma1_part1,
    check_lemma1_part2,
    forward_image,
    homogeneous_kernel,
    inverse_image,
    lemma1_for_code,
    macwilliams_transform,
    thm31_intersection_to_weight,
    thm31_weight_to_intersection,
    thm32_inhomo_to_homo,
    thm33_intersection_decomposition,
    thm41_macwilliams_homogeneous,
    thm42_macwilliams_inhomogeneous,
)
from codepoly.polynomial import Polynomial, X, monomial, x, y

import golden
from conftest import F2, F3, F4, Z4, corpus_codes


def _mono(*pairs):
    return Polynomial.from_monomial(monomial(pairs))


# -- lemma, part (1) ----------------------------------------------------------------


def test_lemma_part1_examples():
    r = check_lemma1_part1([(1, 1), (2, 2)], F3)
    assert r.equal
    assert r.lhs == _mono((X((1,), (1,)), 2), (X((2,), (2,)), 2), (X((1, 2), (1, 2)), 2))
    r = check_lemma1_part1([(0, 0), (0, 0)], F3)
    assert r.equal and r.lhs == Polynomial.constant(1)
    r = check_lemma1_part1([(1, 0)], F2)
    assert r.equal and r.lhs == _mono((X((1,), (1,)), 1))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("g", [1, 2, 3])
def test_lemma_part1_exhaustive_binary(n, g):
    words = list(itertools.product(range(2), repeat=n))
    for us in itertools.product(words, repeat=g):
        assert check_lemma1_part1(us, F2).equal


@pytest.mark.parametrize("ring", [F3, F4, Z4], ids=str)
def test_lemma_part1_random(ring):
    rng = random.Random(1234)
    for _ in range(200):
        g, n = rng.randint(1, 3), rng.randint(1, 4)
        us = [tuple(rng.randrange(ring.size) for _ in range(n)) for _ in range(g)]
        assert check_lemma1_part1(us, ring).equal


# -- lemma, part (2) ----------------------------------------------------------------


def test_lemma_part2_examples():
    r = check_lemma1_part2((1,))
    assert r.equal and r.rhs == Polynomial.var(x((1,)))
    assert check_lemma1_part2((1, 1)).rhs == Polynomial.var(x((1, 1)))
    assert check_lemma1_part2((1, 0)).rhs == Polynomial.var(x((1, 0)))
    with pytest.raises(ValueError):
        check_lemma1_part2((0, 0))


@pytest.mark.parametrize("q,g", [(2, 1), (2, 4), (2, 8), (3, 3), (3, 5), (4, 4), (16, 2)])
def test_lemma_part2_exhaustive(q, g):
    for a in itertools.product(range(q), repeat=g):
        if any(a):
            assert check_lemma1_part2(a).equal


def test_lemma_for_code_sums(C2):
    reports = lemma1_for_code(C2, 2)
    assert [r.name for r in reports] == ["lemma2.1(1)", "lemma2.1(2)"]
    assert all(r.equal for r in reports)


def test_images():
    assert forward_image((0, 0)) == ()
    assert forward_image((1, 2)) == golden.FORWARD_MAP[x((1, 2))]
    for var, img in golden.INVERSE_MAP.items():
        assert inverse_image(var.a, var.l, 2, x) == img


# -- weight <-> intersection -----------------------------------------------------------


def test_worked_example_forward_map(C2):
    assert golden.W.substitute_monomial(golden.FORWARD_MAP) == golden.I
    r = thm31_weight_to_intersection(C2, 2)
    assert r.equal and r.lhs == golden.I


def test_worked_example_inverse_map(C2):
    lhs = _mono((x((0, 0)), 2)) * golden.I.substitute_monomial(golden.INVERSE_MAP)
    assert not lhs.is_laurent() and lhs == golden.W
    r = thm31_intersection_to_weight(C2, 2)
    assert r.equal and r.lhs == golden.W


def test_weight_intersection_small_cases(rep3):
    zero = enumerate_codewords([], F3, n=2)
    r = thm31_weight_to_intersection(zero, 2)
    assert r.equal and r.rhs == Polynomial.constant(1)
    r = thm31_intersection_to_weight(zero, 2)
    assert r.equal and r.lhs == _mono((x((0, 0)), 2))
    assert thm31_weight_to_intersection(rep3, 2).equal
    assert thm31_intersection_to_weight(enumerate_codewords([(1, 1)], Z4), 1).equal


# -- inhomogeneous -> homogeneous ------------------------------------------------------


def test_worked_example_homogenization(C2):
    r = thm32_inhomo_to_homo(C2, 2, (1, 2))
    assert r.equal and r.lhs == golden.JAC_HOMO


def test_homogenization_small_cases(even2, C2):
    assert thm32_inhomo_to_homo(even2, 1, (1, 0)).equal
    assert thm32_inhomo_to_homo(C2, 1, (0, 0)).equal


# -- genus g+1 intersection from genus g Jacobi --------------------------------------


def test_decomposition_examples(C2, even2):
    r = thm33_intersection_decomposition(C2, 1)
    assert r.equal and r.lhs == intersection_enumerator(C2, 2)
    assert thm33_intersection_decomposition(even2, 1).equal
    zero = enumerate_codewords([], F2, n=3)
    assert thm33_intersection_decomposition(zero, 2).equal


@pytest.mark.parametrize("name,code", corpus_codes())
def test_relations_on_corpus(name, code):
    for g in (1, 2):
        assert thm31_weight_to_intersection(code, g).equal
        assert thm31_intersection_to_weight(code, g).equal
        assert thm33_intersection_decomposition(code, g).equal
        for v in [(0,) * code.n, (1,) + (0,) * (code.n - 1)]:
            assert thm32_inhomo_to_homo(code, g, v).equal


# -- MacWilliams ---------------------------------------------------------------------


def test_macwilliams_examples(even2, C2, rep3):
    r = thm42_macwilliams_inhomogeneous(even2, 1, (1, 0))
    assert r.equal and r.rational
    assert thm42_macwilliams_inhomogeneous(C2, 1, (0, 0)).equal
    zero = enumerate_codewords([], F2, n=2)
    r = thm42_macwilliams_inhomogeneous(zero, 1, (0, 0))
    assert r.equal
    full = enumerate_codewords([(1, 0), (0, 1)], F2)
    assert r.lhs == intersection_enumerator(full, 1)
    assert thm41_macwilliams_homogeneous(rep3, 1, (0, 0, 0)).equal


def test_macwilliams_divides_exactly(C2):
    W = jacobi_homogeneous(C2, 1, (0, 0))
    t = macwilliams_transform(W, C2.ring).to_integer()
    assert t.div_exact(3) == jacobi_homogeneous(
        LinearCode.from_words(F3, [(0, 0), (1, 2), (2, 1)]), 1, (0, 0)
    )


@pytest.mark.parametrize("name,code", corpus_codes())
def test_macwilliams_on_corpus(name, code):
    gs = (1, 2) if code.ring.is_field else (1,)
    for g in gs:
        for v in [(0,) * code.n, tuple(i % code.ring.size for i in range(1, code.n + 1))]:
            for check in (thm41_macwilliams_homogeneous, thm42_macwilliams_inhomogeneous):
                r = check(code, g, v)
                assert r.equal and r.rational, (name, g, v, r.name)
                assert r.divisor == code.size**g


@pytest.mark.parametrize("ring", [F2, F3, F4, Z4, integer_ring(6)], ids=str)
@pytest.mark.parametrize("g", [1, 2])
def test_transform_squares_to_negation(ring, g):
    # applying the kernel twice gives |R|^g y_(-a, a_last)
    universe = [y(a) for a in itertools.product(ring.elements(), repeat=g + 1)]
    for var in universe[:: max(1, len(universe) // 6)]:
        once = macwilliams_transform(Polynomial.var(var), ring)
        twice = macwilliams_transform(once, ring).to_integer()
        neg = tuple(ring.neg(a) for a in var.a[:g]) + (var.a[g],)
        assert twice == Polynomial.var(y(neg)) * ring.size**g


@pytest.mark.parametrize("name,code", [c for c in corpus_codes() if c[1].ring.is_field])
def test_double_transform_returns_original(name, code):
    from codepoly.codes import dual_code

    dual = dual_code(code)
    for g in (1, 2):
        v = (1,) + (0,) * (code.n - 1)
        J = jacobi_homogeneous(code, g, v)
        once = macwilliams_transform(J, code.ring).to_integer().div_exact(code.size**g)
        assert once == jacobi_homogeneous(dual, g, v)
        twice = macwilliams_transform(once, code.ring).to_integer().div_exact(dual.size**g)
        assert twice == J


def test_homogeneous_kernel_shape():
    k = homogeneous_kernel(F2, (1, 0))
    assert k == Polynomial.var(y((0, 0))) - Polynomial.var(y((1, 0)))


def test_non_code_fails_macwilliams():
    broken = LinearCode.from_words(F2, [(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 0)])
    assert not broken.closed
    r = thm41_macwilliams_homogeneous(broken, 1, (0, 0, 0))
    assert not r.equal and "not divisible" in r.note
    # the per-tuple relations still hold on any word list
    assert thm31_weight_to_intersection(broken, 2).equal
    assert thm33_intersection_decomposition(broken, 1).equal


def test_macwilliams_bound(C2):
    with pytest.raises(BoundExceeded):
        thm41_macwilliams_homogeneous(C2, 2, (0, 0), macwilliams_bound=8)


def test_report_rendering(C2):
    r = thm31_weight_to_intersection(C2, 1)
    obj = r.to_json_obj()
    assert obj["name"] == "3.1a" and obj["equal"] is True and obj["diff"]["terms"] == []
    assert r.diff.canonical_text() == "0"
    assert r.render().startswith("3.1a: equal") and "diff = 0" in r.render()


gf_rings = st.sampled_from([prime_field(2), prime_field(3), extension_field(2, 2), prime_field(5)])


@given(gf_rings.flatmap(lambda r: st.tuples(
    st.just(r),
    st.lists(st.lists(st.integers(0, r.size - 1), min_size=3, max_size=3), min_size=1, max_size=2),
    st.lists(st.integers(0, r.size - 1), min_size=3, max_size=3),
)))
def test_macwilliams_random_field_codes(args):
    ring, gens, v = args
    code = enumerate_codewords([tuple(g) for g in gens], ring)
    assert thm41_macwilliams_homogeneous(code, 1, v).equal
    assert thm42_macwilliams_inhomogeneous(code, 1, v).equal
