from cmath import exp as cexp
from math import cos, exp, gamma, pi, sqrt

import numpy as np
import pytest
from mpmath import mp
from numpy.testing import assert_allclose
from scipy.integrate import quad
from scipy.special import i0

from fracwright.errors import (
    CatastrophicCancellation, DomainError, InvalidParams)
from fracwright.oracle.series import brute_series
from fracwright.specfun.decay import (
    decay_exponent, decay_rate, wright_decay_bound)
from fracwright.specfun.fresnel import (
    PRINTED_PREFACTOR, fresnel_c, fresnel_s, hyp1f2, mp_hyp1f2)
from fracwright.specfun.gamma import is_pole, recip_gamma, series_term
from fracwright.specfun.series import SeriesControl
from fracwright.specfun.wright import (
    GenWrightParams, WrightParams, contour_angles, gen_wright,
    series_radius, wright_phi, wright_phi_array, wright_phi_contour)


def mainardi(z):
    '''phi(-1/2, 1/2, z) = exp(-z**2/4)/sqrt(pi).'''
    return exp(-z ** 2 / 4) / sqrt(pi)


def test_recip_gamma_values():
    assert recip_gamma(1) == 1
    assert recip_gamma(-3) == 0
    assert recip_gamma(0.0) == 0
    assert_allclose(recip_gamma(0.5), 1 / sqrt(pi), rtol=1e-15)


def test_is_pole():
    assert is_pole(0) and is_pole(-4.0)
    assert not is_pole(-0.5) and not is_pole(2)


def test_series_term_survives_overflow():
    args = (-200.5, 250.5)
    with mp.workdps(30):
        expected = float(mp.rgamma(args[0]) * mp.rgamma(args[1]))
    assert_allclose(series_term(1.0, args).real, expected, rtol=1e-10)


def test_series_term_survives_underflow():
    args = (200.5, -150.5)
    with mp.workdps(30):
        expected = float(mp.rgamma(args[0]) * mp.rgamma(args[1]))
    assert expected != 0
    assert_allclose(series_term(1.0, args).real, expected, rtol=1e-10)


def test_series_term_pole_is_zero():
    assert series_term(3.0, (-2.0, 0.5)) == 0


@pytest.mark.parametrize('kwargs', [
    {'rel_tol': 0}, {'max_terms': 0}, {'consecutive_small': 0},
    {'cancellation_ratio_limit': 0.5}])
def test_series_control_rejects(kwargs):
    with pytest.raises(InvalidParams):
        SeriesControl(**kwargs)


def test_wright_phi_at_zero():
    result = wright_phi(WrightParams(0.25, 1.5, 0))
    assert_allclose(result.value, 1 / gamma(1.5), rtol=1e-15)


@pytest.mark.parametrize('z', [-1.0, -2.5, 0.5, 3.0])
def test_wright_phi_mainardi(z):
    result = wright_phi(WrightParams(0.5, 0.5, z))
    assert_allclose(result.value.real, mainardi(z), rtol=1e-12)
    assert result.error <= 1e-13 * abs(result.value)


@pytest.mark.parametrize('sigma', [0, 1, -0.2, 1.5])
def test_wright_params_rejects_sigma(sigma):
    with pytest.raises(InvalidParams):
        WrightParams(sigma, 1.0, 0.5)


def test_wright_phi_conjugate_symmetry():
    params = WrightParams(0.375, 1.5, -3 * cexp(1j * pi / 4))
    value = wright_phi(params).value
    mirror = wright_phi(params.conjugate()).value
    assert_allclose(mirror, value.conjugate(), rtol=1e-14)


@pytest.mark.slow
def test_wright_phi_matches_brute_series():
    rng = np.random.default_rng(20240518)
    args = np.array([0, 1, -1, 3, -3, 4]) * pi / 4
    compared = 0
    for _ in range(200):
        sigma = rng.uniform(0.1, 0.5)
        beta = rng.uniform(-2, 3)
        z = rng.uniform(0, 10) * cexp(1j * rng.choice(args))
        params = WrightParams(sigma, beta, z)
        try:
            value = wright_phi(params).value
        except CatastrophicCancellation:
            continue
        exact = complex(brute_series(params, digits=30))
        assert abs(value - exact) <= 1e-12 * abs(exact)
        compared += 1
    assert compared >= 120


def test_gen_wright_at_zero():
    result = gen_wright(GenWrightParams(-1.5, 0.7, 2.5, 1.2, 0))
    assert_allclose(
        result.value.real, 1 / (gamma(0.7) * gamma(1.2)), rtol=1e-14)


def test_gen_wright_bessel():
    result = gen_wright(GenWrightParams(1, 1, 1, 1, 4))
    assert_allclose(result.value.real, i0(4), rtol=1e-13)


def test_gen_wright_reduces_to_wright():
    rng = np.random.default_rng(7)
    for _ in range(20):
        sigma = rng.uniform(0.1, 0.6)
        beta = rng.uniform(-1, 2)
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        general = gen_wright(GenWrightParams(1, 1, -sigma, beta, z)).value
        wright = wright_phi(WrightParams(sigma, beta, z)).value
        assert_allclose(general, wright, rtol=1e-12, atol=1e-14)


def test_gen_wright_selfsim_sample_matches_brute_series():
    alpha, beta, j, b = 1.5, 2.5, 1, 0.3
    params = GenWrightParams(
        -alpha, -alpha + alpha * j / beta + b + 1, beta, beta - j + 1, -0.7)
    exact = complex(brute_series(params, digits=30))
    assert_allclose(gen_wright(params).value, exact, rtol=1e-12)


def test_gen_wright_rejects_divergent():
    with pytest.raises(InvalidParams):
        GenWrightParams(-2, 1, 1, 1, 0.5)


def test_series_radius():
    assert series_radius(0.9) == 1.0
    assert_allclose(series_radius(0.5), sqrt(12))


def test_contour_angles_sector():
    z = np.array([-1.0, 1.0, -1.0 + 0.5j, 1j])
    upper, lower, decaying = contour_angles(0.375, z)
    assert decaying.tolist() == [True, False, True, False]
    assert_allclose(upper[1], pi)
    assert_allclose(lower[1], pi)


@pytest.mark.parametrize('z', [-3.0, -6.0, -2.0 + 0.5j])
def test_wright_phi_contour_mainardi(z):
    value = wright_phi_contour(0.5, 0.5, z)
    expected = cexp(-z ** 2 / 4) / sqrt(pi)
    assert_allclose(value, expected, rtol=1e-11, atol=1e-14)


def test_wright_phi_array_matches_brute_series():
    sigma, beta = 0.375, 1.5
    c = cexp(1j * pi / 4)
    tau = np.array([0.5, 3.0, 6.0, 10.0])
    values = wright_phi_array(sigma, beta, -c * tau)
    assert values.shape == tau.shape
    for t, value in zip(tau, values):
        exact = complex(brute_series(WrightParams(sigma, beta, -c * t)))
        assert_allclose(value, exact, rtol=1e-10, atol=1e-13)


def test_fresnel_limits():
    assert fresnel_s(0) == 0
    assert_allclose(fresnel_s(1e12), 0.5, atol=1e-5)
    assert_allclose(fresnel_c(1e12), 0.5, atol=1e-5)
    assert_allclose(
        fresnel_s(1e12, prefactor=PRINTED_PREFACTOR), 1 / (2 * sqrt(2)),
        atol=1e-5)


def test_fresnel_matches_quadrature():
    z = pi / 2
    options = {'weight': 'alg', 'wvar': (-0.5, 0), 'epsabs': 1e-15,
               'epsrel': 1e-14}
    sine, _ = quad(np.sin, 0, z, **options)
    cosine, _ = quad(np.cos, 0, z, **options)
    assert_allclose(fresnel_s(z), sine / sqrt(2 * pi), rtol=1e-12)
    assert_allclose(fresnel_c(z), cosine / sqrt(2 * pi), rtol=1e-12)


def test_fresnel_arrays():
    z = np.array([0.0, 1.0, 4.0])
    assert fresnel_s(z).shape == (3,)
    assert isinstance(fresnel_c(1.0), float)


def test_fresnel_rejects_negative():
    with pytest.raises(DomainError):
        fresnel_s(-1.0)
    with pytest.raises(DomainError):
        fresnel_c(np.array([1.0, -0.1]))


def test_hyp1f2_at_zero():
    assert hyp1f2(0.3, 1.5, 2.5, 0.0) == 1


@pytest.mark.parametrize('tau', [0.5, 1.0, 2.0, 3.0])
def test_hyp1f2_fresnel_identities(tau):
    u = tau ** 2 / 4
    z = -(tau ** 2 / 8) ** 2
    first = hyp1f2(-0.25, 0.75, 0.5, z)
    assert_allclose(
        4 * first, 4 * cos(u) + 2 * sqrt(2 * pi) * tau * fresnel_s(u),
        rtol=1e-12, atol=1e-13)
    second = hyp1f2(0.25, 1.5, 1.25, z)
    assert_allclose(
        second,
        (2 * tau * sqrt(2 * pi) * fresnel_c(u) - 4 * np.sin(u)) / tau ** 2,
        rtol=1e-11)


def test_hyp1f2_matches_mpmath():
    assert_allclose(
        hyp1f2(0.3, 1.7, 0.6, -5.0), mp_hyp1f2(0.3, 1.7, 0.6, -5.0),
        rtol=1e-13)


@pytest.mark.parametrize('b, c', [(0, 1), (1.5, -2)])
def test_hyp1f2_rejects_poles(b, c):
    with pytest.raises(InvalidParams):
        hyp1f2(0.5, b, c, 1.0)


def test_decay_rate_values():
    assert decay_rate(1.0, 1) == 0.25
    assert_allclose(decay_rate(1.5, 2), 0.10723, rtol=1e-4)
    assert_allclose(decay_exponent(1.5, 2), 1.6)


def test_decay_rate_positive():
    for alpha in np.linspace(1.01, 1.99, 15):
        for n in range(1, 6):
            assert decay_rate(alpha, n) > 0


@pytest.mark.parametrize('alpha, n', [(0, 1), (2, 1), (4.5, 2), (1.5, 0)])
def test_decay_rate_rejects(alpha, n):
    with pytest.raises(DomainError):
        decay_rate(alpha, n)


def test_wright_decay_bound_decreases():
    tvalues = np.linspace(1, 10, 19)
    bounds = [wright_decay_bound(1.5, 2, 0.5, t) for t in tvalues]
    assert all(b < a for a, b in zip(bounds, bounds[1:]))


def test_wright_decay_bound_envelope():
    alpha, n, b = 1.5, 2, 0.5
    c = cexp(1j * pi / 4)

    def ratio(t):
        value = wright_phi_array(alpha / (2 * n), b + 1, np.array([-c * t]))
        return abs(value[0]) / wright_decay_bound(alpha, n, b, t)

    scale = ratio(5.0)
    assert ratio(8.0) <= 5 * scale
    assert ratio(12.0) <= 5 * scale


@pytest.mark.parametrize('args', [
    (1.0, 2, 0.5, 1.0), (2.5, 2, 0.5, 1.0), (1.5, 2, 0.5, 0.0),
    (2.0, 1, 0.5, 1.0), (1.5, 0, 0.5, 1.0)])
def test_wright_decay_bound_rejects(args):
    with pytest.raises(DomainError):
        wright_decay_bound(*args)


def test_wright_decay_bound_at_alpha_two():
    assert_allclose(wright_decay_bound(2.0, 2, 0.5, 3.0), 3.0 ** -2)
