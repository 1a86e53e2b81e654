from __future__ import annotations

from hypothesis import given, strategies as st

from rellip import threefolds as tf

forms = st.builds(tf.BinaryCubicForm, *(st.integers(-9, 9) for _ in range(4)))
unimodular = st.sampled_from([((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (-2, 1)), ((2, 1), (1, 1)), ((-1, 0), (0, 1))])


@given(forms, unimodular)
def test_discriminant_invariant_under_gl2z(f, m):
    assert tf.cubic_discriminant(f.substitute(m)) == tf.cubic_discriminant(f)


@given(forms, unimodular)
def test_substitute_agrees_with_evaluation(f, m):
    (p, q), (r, s) = m
    g = f.substitute(m)
    for x, y in ((1, 2), (-3, 1), (2, 5)):
        assert g(x, y) == f(p * x + q * y, r * x + s * y)


def test_gl2z_equivalence():
    f = tf.pe_cubic_form(2)
    g = f.substitute(((1, 1), (0, 1)))
    assert tf.gl2z_equivalent(f, g) is True
    assert tf.gl2z_equivalent(tf.pe_cubic_form(1), tf.pe_cubic_form(2)) is False


def test_pe_ring_ranks():
    assert tf.pe_cohomology_ring(3).ranks() == [1, 0, 2, 0, 2, 0, 1]


def test_report():
    rep = tf.threefold_report(4)
    assert rep.discriminant == -27 * 16
    assert rep.w2 == "not computed"
    assert rep.to_json()["cubic_form"] == [0, 3, -12, 16]
