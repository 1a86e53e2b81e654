from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rellip import rings


def test_projective_space():
    r = rings.truncated_polynomial_ring(3)
    assert r.ranks() == [1, 0, 1, 0, 1, 0, 1]
    assert rings.is_truncated_polynomial_ring(r)


@pytest.mark.parametrize("k,expected", [(1, (1, 1, 0)), (2, (2, 0, 0)), (3, (1, 1, 0)), (4, (2, 0, 0))])
def test_smooth_quadric_signature(k, expected):
    assert rings.middle_signature(rings.smooth_quadric_ring(k)) == expected


def test_smooth_quadric_pairing():
    labels, mat = rings.poincare_pairing(rings.smooth_quadric_ring(2))
    assert mat == [[2, 1], [1, 1]]
    labels, mat = rings.poincare_pairing(rings.smooth_quadric_ring(1))
    assert mat == [[2, 1], [1, 0]]


@given(st.integers(1, 3), st.fractions(min_value=-20, max_value=20, max_denominator=20).filter(lambda a: a != 0))
def test_twisted_quadric_signature_tracks_sign(k, a):
    pos, neg, zero = rings.middle_signature(rings.twisted_quadric_ring(k, a))
    assert zero == 0 and pos + neg == 2
    assert (pos == 2) == (a > 0)


def test_twisted_quadric_rejects_zero():
    with pytest.raises(ValueError):
        rings.twisted_quadric_ring(2, 0)


def test_twisted_projective_is_rationally_projective():
    for n, d in ((3, 2), (5, 4), (2, 3), (4, 5)):
        r = rings.twisted_projective_ring(n, d)
        assert rings.rational_iso_to_truncated(r, n, d)


def test_odd_quadric():
    for k in range(1, 4):
        assert rings.odd_quadric_iso_check(k)


def test_wedge_has_no_fundamental_class():
    with pytest.raises(rings.RingError):
        rings.poincare_pairing(rings.wedge_of_spheres_ring())


def test_audit_catches_noncommutative_table():
    with pytest.raises(rings.RingError):
        rings.GradedRing("bad", ["1", "x", "y", "z"], [0, 2, 2, 4], {(1, 2): {3: Fraction(1)}})


def test_rational_classes():
    assert rings.rational_homotopy_class(Fraction(8, 9)) == 2
    assert rings.real_homotopy_class(Fraction(-3, 7)) == -1
