import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glchar.exact_arith import (
    CycloSum,
    IntPolyQ,
    ModularContext,
    RatFuncQ,
    certify_value,
    common_modulus,
    eps_exponent,
    eval_poly,
    find_contexts,
    gl_order_poly,
)

coeffs = st.lists(st.integers(-20, 20), max_size=6)
polys = coeffs.map(IntPolyQ)


@given(polys, polys, polys)
def test_polynomial_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPolyQ()


@given(polys, polys, st.integers(2, 9))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert eval_poly(a * b, x) == eval_poly(a, x) * eval_poly(b, x)
    assert eval_poly(a + b, x) == eval_poly(a, x) + eval_poly(b, x)


@given(polys, polys.filter(lambda p: not p.is_zero()), st.integers(2, 9))
def test_rational_functions_reduce(a, b, x):
    r = RatFuncQ(a * b, b)
    assert r == RatFuncQ(a)
    if eval_poly(b, x):
        assert RatFuncQ(a, b).at(x) == Fraction(eval_poly(a, x), eval_poly(b, x))


def test_evaluation_below_two_is_rejected():
    with pytest.raises(ValueError):
        eval_poly(IntPolyQ([1, 1]), 1)


def test_group_order():
    assert eval_poly(gl_order_poly(2), 2) == 6
    assert eval_poly(gl_order_poly(5), 2) == 9999360


def test_common_modulus():
    assert common_modulus(2, 5) == 3255
    assert common_modulus(3, 2) == 8


@pytest.mark.parametrize("q,s,x", [(3, 1, 1), (3, 2, 5), (2, 3, 6), (7, 1, 4)])
def test_eps_exponent_has_right_order(q, s, x):
    M = common_modulus(q, 3)
    t = eps_exponent(M, q, s, x)
    eps = cmath.exp(2j * cmath.pi * t / M)
    assert abs(eps ** (q**s - 1) - 1) < 1e-9


terms = st.dictionaries(st.integers(0, 11), st.integers(-4, 4), max_size=5)


@given(terms, terms)
def test_cyclosum_arithmetic_matches_complex(x, y):
    a, b = CycloSum(12, x), CycloSum(12, y)
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-8
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-8


@given(terms, terms, st.sampled_from([1, 5, 7, 11]))
def test_galois_action_is_a_ring_map(x, y, j):
    a, b = CycloSum(12, x), CycloSum(12, y)
    assert (a * b).galois(j) == a.galois(j) * b.galois(j)
    # every unit mod 12 squares to 1
    assert a.galois(j).galois(j) == a


@given(terms, terms)
def test_modular_evaluation_is_a_ring_map(x, y):
    (ctx,) = find_contexts(12, 2)[:1]
    a, b = CycloSum(12, x), CycloSum(12, y)
    assert (a * b).mod_eval(ctx) == a.mod_eval(ctx) * b.mod_eval(ctx) % ctx.p
    assert a.conj().mod_eval(ctx) == a.mod_eval(ctx, -1)


def test_relation_of_roots_of_unity_is_zero():
    # 1 + z^4 + z^8 = 0 for z of order 12
    assert certify_value(CycloSum(12, {0: 1, 4: 1, 8: 1}), 0)
    assert not certify_value(CycloSum(12, {0: 1, 4: 1}), 0)
    assert certify_value(CycloSum(3, {1: -1, 2: -1}), 1)


def test_context_root_has_exact_order():
    ctx = find_contexts(40, 10**9)[0]
    assert pow(ctx.zeta, 40, ctx.p) == 1
    with pytest.raises(ValueError):
        ModularContext(ctx.p, 40, 1)


def test_find_contexts_exceeds_bound():
    ctxs = find_contexts(3255, 10**20)
    prod = 1
    for c in ctxs:
        prod *= c.p
        assert (c.p - 1) % 3255 == 0
    assert prod > 10**20


def test_json_roundtrip():
    x = CycloSum(12, {1: Fraction(1, 2), 5: -3})
    assert CycloSum.from_json(x.dumps()) == x


def test_values_survive_pickling():
    import pickle

    for obj in (IntPolyQ([1, 2]), RatFuncQ(IntPolyQ([1]), IntPolyQ([1, 1])), CycloSum(12, {3: Fraction(1, 2)})):
        assert pickle.loads(pickle.dumps(obj)) == obj
