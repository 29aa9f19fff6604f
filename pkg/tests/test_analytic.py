import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohrlab import analytic as an
from bohrlab.analytic import (
    BlaschkeProduct,
    BlaschkeTimesMonomial,
    Constant,
    Lacunary,
    LacunaryFStar,
    MobiusF,
    MobiusPhi,
    Monomial,
)
from bohrlab.lab import lemma1_bound

seeds = st.integers(min_value=0, max_value=10_000)
degrees = st.integers(min_value=0, max_value=6)
a_values = st.floats(min_value=0.0, max_value=0.99)
radii = st.floats(min_value=0.0, max_value=0.9)


def fft_coefficients(f, n, samples=4096):
    """Cauchy-integral oracle: coefficients from samples on |z| = 0.999."""
    rad = 0.999
    zs = rad * np.exp(2j * np.pi * np.arange(samples) / samples)
    vals = np.array([f(z) for z in zs])
    return np.fft.fft(vals)[: n + 1] / samples / rad ** np.arange(n + 1)


# -- taylor_coefficients ----------------------------------------------------


def test_phi_zero_is_minus_z():
    c = an.taylor_coefficients(MobiusPhi(0.0), 3).coefficients
    np.testing.assert_allclose(c, [0, -1, 0, 0], atol=1e-15)


def test_phi_half_matches_long_division():
    # sympy series of (1/2 - z)/(1 - z/2)
    c = an.taylor_coefficients(MobiusPhi(0.5), 2).coefficients
    np.testing.assert_allclose(c, [0.5, -0.75, -0.375], atol=1e-15)


def test_f_half_coefficients():
    c = an.taylor_coefficients(MobiusF(0.5), 2).coefficients
    np.testing.assert_allclose(c, [0.5, 0.75, -0.375], atol=1e-15)


def test_lacunary_fstar_lattice():
    c = an.taylor_coefficients(LacunaryFStar(0.4, 3), 9).coefficients
    expected = np.zeros(10)
    expected[0] = 0.4
    expected[3], expected[6], expected[9] = -(0.84), -(0.84 * 0.4), -(0.84 * 0.16)
    np.testing.assert_allclose(c, expected, atol=1e-15)


@pytest.mark.parametrize("a", [0.0, 0.3, 0.7])
def test_closed_form_families_agree_with_blaschke_division(a):
    n = 40
    phi = an.taylor_coefficients(MobiusPhi(a), n).coefficients
    as_blaschke = BlaschkeProduct(zeros=(a,), rotation=-1.0)
    np.testing.assert_allclose(phi, an.taylor_coefficients(as_blaschke, n).coefficients, atol=1e-14)
    fa = an.taylor_coefficients(MobiusF(a), n).coefficients
    np.testing.assert_allclose(fa, an.taylor_coefficients(BlaschkeProduct(zeros=(-a,)), n).coefficients,
                               atol=1e-14)


@settings(max_examples=25, deadline=None)
@given(seed=seeds, degree=degrees, order=st.integers(0, 3))
def test_blaschke_coefficients_match_cauchy_integral(seed, degree, order):
    f = an.random_member(seed, degree, order)
    ours = an.taylor_coefficients(f, 30).coefficients
    np.testing.assert_allclose(ours, fft_coefficients(f, 30), atol=1e-9)


def test_rejects_zero_outside_disk():
    with pytest.raises(ValueError):
        BlaschkeProduct(zeros=(1.0,))
    with pytest.raises(ValueError):
        an.taylor_coefficients(MobiusPhi(0.2), -1)


def test_constant_has_no_tail():
    ser = an.taylor_coefficients(Constant(0.5), 10)
    assert ser.tail_bound(0.9) == 0.0


# -- functionals ------------------------------------------------------------


def test_zero_series_functionals_vanish():
    ser = an.taylor_coefficients(Constant(0.0), 16)
    for r in (0.0, 0.4, 0.9):
        assert an.majorant_sum(ser, 0, r) == 0
        assert an.majorant_sum(ser, 3, r) == 0
        assert an.quadratic_norm(ser, r) == 0
        assert an.refined_term(ser, r) == 0


@given(a=a_values, r=radii)
def test_majorant_of_phi_is_geometric(a, r):
    ser = an.taylor_coefficients(MobiusPhi(a))
    got = an.majorant_sum(ser, 1, r)
    exact = (1 - a * a) * r / (1 - a * r)
    assert exact - 1e-15 <= got <= exact + ser.tail_bound(r) + 1e-14


def test_majorant_of_f_half_at_quarter():
    ser = an.taylor_coefficients(MobiusF(0.5))
    assert an.majorant_sum(ser, 1, 0.25) == pytest.approx(3 / 14, abs=1e-15)


def test_quadratic_norm_phi_zero():
    ser = an.taylor_coefficients(MobiusPhi(0.0))
    assert an.quadratic_norm(ser, 0.6) == pytest.approx(0.36, abs=1e-14)


@given(a=a_values, r=radii)
def test_quadratic_norm_of_phi_is_geometric(a, r):
    ser = an.taylor_coefficients(MobiusPhi(a))
    exact = (1 - a * a) ** 2 * r * r / (1 - a * a * r * r)
    assert an.quadratic_norm(ser, r) == pytest.approx(exact, abs=1e-10)


def test_refined_term_phi_zero_third():
    ser = an.taylor_coefficients(MobiusPhi(0.0))
    assert an.refined_term(ser, 1 / 3) == pytest.approx(1 / 6, abs=1e-15)


@given(a=a_values, r=radii, k=st.integers(1, 4))
def test_refined_term_phi_closed_form(a, r, k):
    rho = r**k
    ser = an.taylor_coefficients(MobiusPhi(a))
    exact = (1 - a * a) ** 2 * rho * rho / ((1 + a) * (1 - rho) * (1 - a * rho))
    assert an.refined_term(ser, rho) == pytest.approx(exact, abs=1e-10)


@pytest.mark.parametrize("fn", [an.majorant_sum, an.quadratic_norm, an.refined_term])
def test_functionals_reject_r_one(fn):
    ser = an.taylor_coefficients(MobiusPhi(0.1))
    args = (ser, 1, 1.0) if fn is an.majorant_sum else (ser, 1.0)
    with pytest.raises(ValueError):
        fn(*args)


# -- evaluation -------------------------------------------------------------


def test_evaluate_examples():
    assert an.evaluate(MobiusPhi(0.3), 0) == pytest.approx(0.3)
    assert an.evaluate(MobiusPhi(0.5), 0.5) == 0
    assert an.evaluate(LacunaryFStar(0.5, 2), 0.5) == pytest.approx(2 / 7, abs=1e-16)
    with pytest.raises(ValueError):
        an.evaluate(MobiusPhi(0.5), 1.0)


def test_evaluate_schwarz_examples():
    assert an.evaluate_schwarz(Monomial(3), 0.5) == 0.125
    assert an.evaluate_schwarz(Monomial(4), 0) == 0
    w = BlaschkeTimesMonomial(zeros=(0.5,), order=2)
    assert an.evaluate_schwarz(w, 0.25) == pytest.approx(-1 / 56, abs=1e-16)
    with pytest.raises(ValueError):
        an.evaluate_schwarz(Monomial(1), 1j)


def test_schwarz_rejects_zero_at_origin():
    with pytest.raises(ValueError):
        BlaschkeTimesMonomial(zeros=(0.0,), order=1)


# -- random members ---------------------------------------------------------


def test_random_member_degree_zero_is_rotated_z():
    w = an.random_member(1, 0, 1)
    assert isinstance(w, an.SchwarzFunction)
    assert abs(abs(w(0.5)) - 0.5) < 1e-15
    c = an.taylor_coefficients(w, 4).coefficients
    assert abs(abs(c[1]) - 1) < 1e-15 and np.allclose(np.delete(c, 1), 0)


def test_random_member_deterministic():
    assert an.random_member(3, 4, 2) == an.random_member(3, 4, 2)
    assert an.random_member(3, 4, 2) != an.random_member(4, 4, 2)


def test_random_member_seed7_wiener():
    ser = an.taylor_coefficients(an.random_member(7, 3, 0))
    a = abs(ser.a0)
    assert np.all(ser.moduli()[1:] <= 1 - a * a + 1e-10)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, degree=degrees, order=st.integers(0, 3))
def test_random_member_maps_disk_into_disk(seed, degree, order):
    f = an.random_member(seed, degree, order)
    assert all(abs(w) <= 0.95 for w in f.zeros)
    zs = 0.97 * np.exp(2j * np.pi * np.arange(64) / 64)
    assert max(abs(f(z)) for z in zs) <= 1 + 1e-12


@settings(max_examples=40, deadline=None)
@given(seed=seeds, degree=degrees, n=st.integers(1, 5))
def test_schwarz_lemma_bound(seed, degree, n):
    w = an.random_member(seed, degree, n)
    for r in (0.3, 0.6, 0.9):
        zs = r * np.exp(2j * np.pi * np.arange(32) / 32)
        assert max(abs(an.evaluate_schwarz(w, z)) for z in zs) <= r**n + 1e-12


@settings(max_examples=40, deadline=None)
@given(seed=seeds, degree=degrees)
def test_wiener_bound(seed, degree):
    ser = an.taylor_coefficients(an.random_member(seed, degree, 0))
    a = abs(ser.a0)
    assert np.all(ser.moduli()[1:] <= 1 - a * a + 1e-10)


@settings(max_examples=30, deadline=None)
@given(seed=seeds, degree=degrees, m=st.integers(1, 4))
def test_schwarz_pick_composition(seed, degree, m):
    f = an.random_member(seed, degree, 0)
    w = an.random_member(seed + 1, 2, m)
    a = abs(f(0))
    for r in (0.2, 0.5, 0.8):
        bound = (r**m + a) / (1 + a * r**m)
        for z in r * np.exp(2j * np.pi * np.arange(16) / 16):
            assert abs(f(w(z))) <= bound + 1e-10


@settings(max_examples=30, deadline=None)
@given(seed=seeds, degree=degrees, r=radii)
def test_lemma1_bound(seed, degree, r):
    ser = an.taylor_coefficients(an.random_member(seed, degree, 0))
    a = abs(ser.a0)
    assert an.majorant_sum(ser, 1, r) <= lemma1_bound(a, r) + 1e-10


@settings(max_examples=30, deadline=None)
@given(seed=seeds, degree=degrees, r=radii)
def test_lemma2_bound(seed, degree, r):
    ser = an.taylor_coefficients(an.random_member(seed, degree, 0))
    a = abs(ser.a0)
    lhs = an.majorant_sum(ser, 1, r) + an.refined_term(ser, r)
    assert lhs <= (1 - a * a) * r / (1 - r) + 1e-10


@settings(max_examples=30, deadline=None)
@given(seed=seeds, degree=degrees, r=st.floats(0.0, 0.95), theta=st.floats(0, 2 * math.pi))
def test_partial_sum_matches_evaluation(seed, degree, r, theta):
    f = an.random_member(seed, degree, 0)
    ser = an.taylor_coefficients(f)
    z = r * cmath.exp(1j * theta)
    partial = np.polyval(ser.coefficients[::-1], z)
    assert abs(partial - f(z)) <= ser.tail_bound(r) + 1e-12


def test_lacunary_wrapper_coefficients():
    base = an.random_member(5, 3, 0)
    f = Lacunary(base, 3)
    c = an.taylor_coefficients(f, 30).coefficients
    b = an.taylor_coefficients(base, 10).coefficients
    np.testing.assert_allclose(c[::3], b, atol=1e-15)
    assert np.all(np.delete(c, np.arange(0, 31, 3)) == 0)
    assert f(0.3) == pytest.approx(base(0.027))
