from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rellip.lambda_ring import (
    DegreeCapError,
    LambdaProduct,
    NotAPolynomialError,
    lp_evaluate,
    lp_expand,
    lp_mul,
    lp_order_at_one,
    lp_root_of_unity_product,
    lp_value_at_one,
    poly_evaluate,
    squarefree_part,
)

factors = st.lists(st.tuples(st.integers(1, 12), st.integers(-3, 3)), max_size=5)
products = st.builds(LambdaProduct, factors, st.sampled_from([1, -1]))
nonzero_q = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000).filter(lambda q: q != 0)


def test_construction_merges_and_prunes():
    p = LambdaProduct([(2, 1), (2, -1), (3, 2), (3, 1)])
    assert p.factors == ((3, 3),)
    assert LambdaProduct({1: 0}) == LambdaProduct()


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        LambdaProduct([(0, 1)])
    with pytest.raises(ValueError):
        LambdaProduct(unit=2)


def test_value_at_one_requires_order_zero():
    with pytest.raises(ValueError):
        lp_value_at_one(LambdaProduct([(3, 1)]))
    assert lp_value_at_one(LambdaProduct([(6, 1), (2, -1)], -1)) == -3


def test_expand_cyclotomic_quotient():
    # (t^6-1)/(t^2-1) = t^4 + t^2 + 1
    assert lp_expand(LambdaProduct([(6, 1), (2, -1)])) == [1, 0, 1, 0, 1]


def test_expand_errors():
    with pytest.raises(NotAPolynomialError):
        lp_expand(LambdaProduct([(2, -1)]))
    with pytest.raises(NotAPolynomialError):
        lp_expand(LambdaProduct([(3, 1), (2, -1)]))
    with pytest.raises(DegreeCapError):
        lp_expand(LambdaProduct([(50, 1)]), max_degree=10)


def test_root_of_unity_product_sign():
    # prod over square roots of unity of (w t - 1) = (t - 1)(-t - 1) = -(t^2 - 1)
    assert lp_root_of_unity_product(LambdaProduct([(1, 1)]), 2) == LambdaProduct([(2, 1)], -1)
    assert lp_root_of_unity_product(LambdaProduct([(2, 1)]), 2) == LambdaProduct([(2, 2)])


@given(products, products)
def test_mul_degree_and_order_additive(p, q):
    r = lp_mul(p, q)
    assert r.degree == p.degree + q.degree
    assert lp_order_at_one(r) == lp_order_at_one(p) + lp_order_at_one(q)
    assert lp_mul(p, p.inverse()) == LambdaProduct(unit=1)


@given(products, st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_evaluate_is_multiplicative(p, t0):
    if abs(t0) in (0, 1):
        return
    q = LambdaProduct([(2, 1), (5, -1)])
    assert lp_evaluate(p * q, t0) == lp_evaluate(p, t0) * lp_evaluate(q, t0)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=4), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_expansion_matches_evaluation(ms, t0):
    p = LambdaProduct([(m, 1) for m in ms])
    if abs(t0) == 1:
        return
    assert poly_evaluate(lp_expand(p), t0) == lp_evaluate(p, t0)


@given(products, st.integers(1, 6))
def test_root_of_unity_product_degree(p, d):
    assert lp_root_of_unity_product(p, d).degree == d * p.degree


@given(nonzero_q, nonzero_q)
def test_squarefree_invariant_under_squares(a, r):
    assert squarefree_part(a * r * r) == squarefree_part(a)


@given(nonzero_q)
def test_squarefree_is_squarefree(a):
    s = squarefree_part(a)
    assert all(s % (p * p) for p in range(2, 40))
    quotient = a / s
    assert quotient > 0
    assert all(math.isqrt(x) ** 2 == x for x in (quotient.numerator, quotient.denominator))


def test_squarefree_examples():
    assert squarefree_part(Fraction(-4, 9)) == -1
    assert squarefree_part(Fraction(3, 12)) == 1
    assert squarefree_part(18) == 2
    with pytest.raises(ValueError):
        squarefree_part(0)


@given(products)
def test_json_round_trip(p):
    assert LambdaProduct.from_json(p.to_json()) == p
