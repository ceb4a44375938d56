import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from holtsmark import evaluators as ev
from holtsmark.errors import DomainError, PrecisionLossError
from holtsmark.evaluators import MethodId

from conftest import rel_err
import reference_values as ref

S0 = 2 * math.gamma(2 / 3) / (3 * math.pi)
S_ROUTES = [ev.s_series, ev.s_lee, ev.s_airy_closed, ev.s_bessel_closed]
H_ROUTES = [ev.h_series, ev.h_airy_closed, ev.h_bessel_closed]


@pytest.mark.parametrize("route", [ev.s_series, ev.s_lee, ev.s_airy_closed])
def test_peak_value(route):
    r = route(0.0)
    assert abs(r.value - 0.2874) < 5e-5
    assert rel_err(r.value, S0) < 1e-15


def test_bessel_limit_at_zero():
    assert abs(ev.s_bessel_closed(1e-6).value - S0) < 1e-12
    assert abs(ev.h_bessel_closed(1e-6).value) < 1e-11
    with pytest.raises(DomainError):
        ev.s_bessel_closed(0.0)


def test_first_three_small_terms():
    # at beta = 1 each new partial sum adds exactly one coefficient
    prev, coeffs = 0.0, []
    for order in (1, 2, 3):
        part = ev.small_series_partial(1.0, order)
        coeffs.append(part - prev)
        prev = part
    for got, want in zip(coeffs, (0.2874, -0.1061, 0.0246)):
        assert abs(got - want) < 5e-5
    assert abs(ev.small_series_partial(0.5, 3) - 0.2624) < 5e-5


@pytest.mark.parametrize("beta", [b for b in ref.S_REF if b <= 5])
@pytest.mark.parametrize("route", S_ROUTES, ids=lambda f: f.__name__)
def test_s_routes_against_reference(route, beta):
    r = route(beta)
    assert abs(r.value - ref.S_REF[beta]) <= r.err_estimate
    assert abs(r.value - ref.S_REF[beta]) < 1e-14


@pytest.mark.parametrize("beta", [b for b in ref.H_REF if b <= 5])
@pytest.mark.parametrize("route", H_ROUTES, ids=lambda f: f.__name__)
def test_h_routes_against_reference(route, beta):
    r = route(beta)
    assert abs(r.value - ref.H_REF[beta]) <= r.err_estimate
    assert abs(r.value - ref.H_REF[beta]) < 1e-13


@pytest.mark.parametrize("beta", [b for b in ref.S_REF if b >= 6])
def test_asymptotic_against_reference(beta):
    r = ev.s_asymptotic(beta)
    assert r.method is MethodId.ASYMPTOTIC
    assert abs(r.value - ref.S_REF[beta]) <= r.err_estimate
    h = ev.h_asymptotic(beta)
    if beta in ref.H_REF:
        assert abs(h.value - ref.H_REF[beta]) <= h.err_estimate


def test_asymptotic_leading_terms():
    coeffs = []
    prev = 0.0
    for order in (1, 2, 3):
        part = ev.asymptotic_partial(1.0, order)
        coeffs.append(part - prev)
        prev = part
    for got, want in zip(coeffs, (0.2992, 0.9549, 1.9635)):
        assert abs(got - want) < 5e-5
    # fourth term vanishes identically
    assert ev.asymptotic_partial(7.0, 4) == ev.asymptotic_partial(7.0, 3)


def test_asymptotic_beta_10_error_claim():
    assert ev.s_asymptotic(10.0).err_estimate < 1e-8


def test_asymptotic_domain():
    with pytest.raises(DomainError):
        ev.s_asymptotic(1.9)
    with pytest.raises(DomainError):
        ev.asymptotic_partial(0.0, 3)


def test_guards_raise_instead_of_garbage():
    with pytest.raises(PrecisionLossError):
        ev.s_series(8.0)
    with pytest.raises(PrecisionLossError):
        ev.s_lee(7.0)
    with pytest.raises(PrecisionLossError):
        ev.h_airy_closed(7.0)


def test_cross_method_grid():
    for beta in np.round(np.arange(0.0, 5.0001, 0.1), 10):
        results = [f(beta) for f in S_ROUTES if beta > 0 or f is not ev.s_bessel_closed]
        for i, a in enumerate(results):
            for b in results[i + 1 :]:
                assert abs(a.value - b.value) <= max(1e-9, a.err_estimate + b.err_estimate)


def test_h_series_derivative_coefficients():
    # H = -2 beta S', checked term by term through a finite difference of the S series
    for beta in (0.3, 1.0, 1.5):
        h = 1e-5
        fd = (ev.s_series(beta + h).value - ev.s_series(beta - h).value) / (2 * h)
        assert rel_err(ev.h_series(beta).value, -2 * beta * fd) < 1e-8
    assert ev.h_series(0.0).value == 0.0
    assert abs(ev.h_series(1.5).value - ev.h_airy_closed(1.5).value) < 1e-9


def test_h_airy_against_finite_difference():
    h = 1e-5
    fd = (ev.s_airy_closed(1 + h).value - ev.s_airy_closed(1 - h).value) / (2 * h)
    assert rel_err(ev.h_airy_closed(1.0).value, -2 * fd) < 1e-6
    assert ev.h_airy_closed(0.0).value == 0.0


def test_bessel_and_airy_agree():
    for beta in (0.2, 1.0, 2.5, 4.0, 5.0):
        assert abs(ev.s_bessel_closed(beta).value - ev.s_airy_closed(beta).value) < 1e-10
        assert abs(ev.h_bessel_closed(beta).value - ev.h_airy_closed(beta).value) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.floats(0.0, 20.0))
def test_auto_is_even_and_non_negative(beta):
    a, b = ev.s_auto(beta), ev.s_auto(-beta)
    assert a.value == b.value
    assert a.value >= -1e-12
    assert ev.h_auto(beta).value >= -1e-12


def test_auto_dispatch():
    assert ev.s_auto(0.0).method is MethodId.AIRY_CLOSED
    assert ev.s_auto(ev.SWITCHOVER).method is MethodId.AIRY_CLOSED
    far = ev.s_auto(20.0)
    assert far.method is MethodId.ASYMPTOTIC
    assert far.err_estimate < 1e-10
    assert ev.s_auto(4.0, switchover=3.0).method is MethodId.ASYMPTOTIC
    with pytest.raises(DomainError):
        ev.h_auto(-1.0)
    with pytest.raises(DomainError):
        ev.s_auto(math.inf)


def test_auto_continuous_at_switchover():
    b = ev.SWITCHOVER
    below, above = ev.s_auto(b), ev.s_auto(math.nextafter(b, 10))
    assert abs(below.value - above.value) < 1e-12
    hb, ha = ev.h_auto(b), ev.h_auto(math.nextafter(b, 10))
    assert abs(hb.value - ha.value) < 1e-10


def test_non_negativity_sweep():
    for beta in np.arange(0.0, 20.0001, 0.05):
        assert ev.s_auto(beta).value >= -1e-12
        assert ev.h_auto(beta).value >= -1e-12


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
def test_half_line_transforms_are_conjugate(beta):
    i_plus = ev.half_line_transform(beta)
    i_minus = ev.half_line_transform(-beta)
    assert abs(i_plus - i_minus.conjugate()) < 1e-14
    # brute power series of the same integral
    brute = sum(2 / 3 * math.gamma(2 * (k + 1) / 3) * (-1j * beta) ** k / math.factorial(k) for k in range(120))
    assert abs(i_plus - brute) < 1e-10
    s = (i_plus + i_minus) / (2 * math.pi)
    assert abs(s.imag) < 1e-10
    assert abs(s.real - ev.s_airy_closed(beta).value) < 1e-10


def test_evaluate_front_door():
    assert ev.evaluate("S", "airy-closed", 1.0).value == ev.s_airy_closed(1.0).value
    assert ev.evaluate("s", MethodId.LEE, -1.0).value == ev.s_lee(1.0).value
    assert ev.evaluate("S", "bessel_closed", 0.0).method is MethodId.AIRY_CLOSED
    q = ev.evaluate("H", "quadrature", 1.0)
    assert q.method is MethodId.QUADRATURE and abs(q.value - ref.H_REF[1]) < 1e-12
    with pytest.raises(DomainError):
        ev.evaluate("H", "lee", 1.0)
    with pytest.raises(DomainError):
        ev.evaluate("X", "auto", 1.0)
    with pytest.raises(ValueError):
        ev.evaluate("S", "simpson", 1.0)


def test_terms_and_errors_reported():
    for f in S_ROUTES + H_ROUTES:
        r = f(2.0)
        assert r.terms_used > 0
        assert 0 <= r.err_estimate < 1e-13
