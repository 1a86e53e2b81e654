"""Acceptance gate: thirteen criteria, all exact."""
from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from rellip import rings, sullivan, threefolds
from rellip.families import (
    FamilyInstance,
    betti_numbers,
    delta_closed_form,
    kollar_weight_system,
    phi_closed_form,
    v_singularity_weights,
    verify_ts_identity,
    w_singularity_weights,
)
from rellip.lambda_ring import lp_degree, lp_evaluate, lp_expand, lp_value_at_one, poly_evaluate, squarefree_part
from rellip.milnor_orlik import monodromy_char_poly
from rellip.verify import sample_points

EVEN_N = range(0, 9, 2)
ALL_N = range(1, 9)
DS = range(2, 9)
criterion = pytest.mark.criterion


@criterion(1, "oracle equivalence of the closed forms")
def test_oracle_equivalence():
    start = time.perf_counter()
    for d in DS:
        for n in EVEN_N:
            assert phi_closed_form(n, d) == monodromy_char_poly(w_singularity_weights(n, d)), (n, d)
        for n in ALL_N:
            assert delta_closed_form(n, d) == monodromy_char_poly(v_singularity_weights(n, d)), (n, d)
    assert time.perf_counter() - start < 10


@criterion(2, "degree formulas")
def test_degree_formula():
    for d in DS:
        for n in EVEN_N:
            assert lp_degree(phi_closed_form(n, d)) * d == (d - 1) ** (n + 2) - 1
        for n in ALL_N:
            assert lp_degree(delta_closed_form(n, d)) * d == (d - 1) ** (n + 2) + (-1) ** n * (d - 1)


@criterion(3, "value at t = 1")
def test_value_at_one():
    for m in range(0, 5):
        for d in DS:
            assert lp_value_at_one(phi_closed_form(2 * m, d)) == (d - 1) ** (m + 1)


@criterion(4, "Thom-Sebastiani join identity")
def test_thom_sebastiani():
    start = time.perf_counter()
    for n in range(0, 7, 2):
        for d in range(2, 6):
            assert verify_ts_identity(n, d), (n, d)
    assert time.perf_counter() - start < 5


@criterion(5, "spot expansion")
def test_spot_expansion():
    assert lp_expand(phi_closed_form(2, 3)) == [1, 1, 0, 0, 1, 1]
    rng = random.Random(20261016)
    checked = 0
    for d in DS:
        polys = [phi_closed_form(n, d) for n in EVEN_N] + [delta_closed_form(n, d) for n in ALL_N]
        for p in polys:
            if p.degree > 10_000:
                continue
            coeffs = lp_expand(p)
            assert len(coeffs) == p.degree + 1
            for t0 in sample_points(rng, 20):
                assert poly_evaluate(coeffs, t0) == lp_evaluate(p, t0)
            checked += 1
    assert checked > 50


@criterion(6, "Betti numbers of the homology quadrics")
def test_betti_homology_quadric():
    for n in EVEN_N[1:]:
        pn = [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]
        quadric = list(pn)
        quadric[n] = 2
        for d in range(2, 9, 2):
            assert betti_numbers(FamilyInstance.W(n, d)) == quadric
        for d in DS:
            assert betti_numbers(FamilyInstance.V(n, d)) == pn
    for a in ([2, 3, 2, 3, 2], [3, 3, 3, 3, 3, 3, 3]):
        inst = FamilyInstance.H(a)
        assert betti_numbers(inst) == [1 if i % 2 == 0 else 0 for i in range(2 * inst.n + 1)]


@criterion(7, "middle signature and vanishing class")
def test_signature():
    for k in range(1, 5):
        assert rings.middle_signature(rings.twisted_quadric_ring(k, (-1) ** k)) == rings.middle_signature(
            rings.smooth_quadric_ring(k)
        )
        assert rings.quadric_vanishing_class_check(k)


@criterion(8, "linear-space self-intersection")
def test_self_intersection():
    for k in range(0, 7):
        assert rings.linear_space_self_intersection(2, k) == (1 if k % 2 == 0 else 0)


@criterion(9, "real and rational homotopy classes")
def test_homotopy_classes():
    rng = random.Random(9)
    for _ in range(200):
        a = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6)) * rng.choice([-1, 1])
        r = Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) * rng.choice([-1, 1])
        assert rings.real_homotopy_class(a) == rings.real_homotopy_class(a * r * r)
    classes = [rings.rational_homotopy_class(a) for a in (1, 2, 3, 5, 6)]
    assert len(set(classes)) == 5
    assert squarefree_part(Fraction(-4, 9)) == -1


@criterion(10, "cyclic weight system")
def test_kollar():
    sol = kollar_weight_system([2, 2, 2, 2, 2])
    assert sol.d == 33 and sol.weights == (11,) * 5 and sol.admissible is False
    rng = random.Random(10)
    for _ in range(100):
        a = [rng.randint(1, 5) for _ in range(5)]
        assert all(r == 0 for r in kollar_weight_system(a).residual()), a


@criterion(11, "minimal Sullivan models")
def test_sullivan_models():
    start = time.perf_counter()
    for n in range(1, 5):
        model = sullivan.minimal_model(rings.truncated_polynomial_ring(n), 2 * n + 1)
        assert sorted(model.degrees) == [2, 2 * n + 1]
        assert sullivan.audit_model(model).ok
    for k in range(1, 4):
        for a in (1, -1, 2):
            model = sullivan.minimal_model(rings.twisted_quadric_ring(k, a))
            assert sorted(model.degrees) == sorted([2, 2 * k, 2 * k + 1, 4 * k - 1]), (k, a)
            audit = sullivan.audit_model(model)
            assert audit.d_squared_zero and all(audit.cohomology_iso.values())
            assert audit.ok
    assert time.perf_counter() - start < 60


@criterion(12, "projective-bundle threefolds")
def test_appendix():
    for n in range(0, 21):
        form = threefolds.pe_cubic_form(n)
        assert threefolds.cubic_discriminant(form) == -27 * n * n
        assert threefolds.triple_product_form(threefolds.pe_cohomology_ring(n)) == form
        for m in range(0, 21):
            assert threefolds.fn_homotopy_equivalent(n, m) == (n == m)
            assert threefolds.hirzebruch_diffeomorphic(n, m) == ((n - m) % 2 == 0)


@criterion(13, "cited topological inputs are covered by the ring/signature/model suites")
def test_declared_not_reproducible():
    # the theorems are inputs; their checkable consequences are criteria 6, 7, 9 and 11,
    # and the ring-level isomorphisms below
    assert rings.odd_quadric_iso_check(3)
    for n, d in ((3, 2), (5, 3), (4, 3)):
        assert rings.rational_iso_to_truncated(rings.twisted_projective_ring(n, d), n, d)
    report = sullivan.ellipticity_report(sullivan.minimal_model(rings.twisted_quadric_ring(2, 3)))
    assert report.verdict == "elliptic at cutoff"
