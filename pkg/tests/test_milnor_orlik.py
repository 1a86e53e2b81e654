from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rellip.milnor_orlik import (
    IDENTITY,
    Divisor,
    NonIntegralError,
    WeightSystem,
    divisor_mul,
    lam,
    milnor_number,
    monodromy_char_poly,
)
from rellip.lambda_ring import LambdaProduct

divisors = st.builds(
    Divisor,
    st.lists(st.tuples(st.integers(1, 30), st.fractions(min_value=-5, max_value=5, max_denominator=4)), max_size=4),
)
int_weights = st.lists(st.integers(2, 7), min_size=1, max_size=4)


def test_lambda_product_rule():
    assert lam(4) * lam(6) == lam(12, 2)


@given(divisors, divisors, divisors)
def test_divisor_ring_axioms(a, b, c):
    assert divisor_mul(a, b) == divisor_mul(b, a)
    assert divisor_mul(divisor_mul(a, b), c) == divisor_mul(a, divisor_mul(b, c))
    assert divisor_mul(a, IDENTITY) == a
    assert divisor_mul(a, b + c) == divisor_mul(a, b) + divisor_mul(a, c)


def test_a2_singularity():
    # x^3 + y^2: roots of unity of order 6 except the trivial ones
    p = monodromy_char_poly(WeightSystem([3, 2]))
    assert p == LambdaProduct([(6, 1), (3, -1), (2, -1), (1, 1)])
    assert p.degree == milnor_number(WeightSystem([3, 2])) == 2


def test_weight_one_is_smooth():
    assert monodromy_char_poly(WeightSystem([1, 3])).degree == 0
    assert milnor_number(WeightSystem([1, 3])) == 0


def test_rejects_small_weight():
    with pytest.raises(ValueError):
        WeightSystem([Fraction(1, 2)])
    with pytest.raises(ValueError):
        WeightSystem([])


def test_non_integral():
    with pytest.raises(NonIntegralError):
        monodromy_char_poly(WeightSystem([Fraction(5, 2)]))


@given(int_weights)
def test_brieskorn_pham_degree_is_milnor_number(ws):
    system = WeightSystem(ws)
    p = monodromy_char_poly(system)
    assert p.degree == milnor_number(system)


@given(int_weights, int_weights)
def test_thom_sebastiani_at_divisor_level(a, b):
    # join of monodromies: the weight systems concatenate
    sa, sb = WeightSystem(a), WeightSystem(b)
    assert milnor_number(sa + sb) == milnor_number(sa) * milnor_number(sb)
