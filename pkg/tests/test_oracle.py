from math import cos, exp, gamma, pi, sqrt

import numpy as np
import pytest
from mpmath import mp
from numpy.testing import assert_allclose
from scipy.special import i0

from fracwright.errors import InvalidParams
from fracwright.fundsol.kernel import FundamentalSolutionSpec, diagonal_jump
from fracwright.oracle.probe import jump_probe, richardson_derivative
from fracwright.oracle.rl import (
    RLDerivativeRequest, power_rule, rl_derivative_quadrature,
    selfsim_residual, selfsim_time_derivative)
from fracwright.oracle.series import brute_series, recip_gamma_bound
from fracwright.selfsim.similarity import SelfSimilarSpec
from fracwright.specfun.gamma import recip_gamma
from fracwright.specfun.wright import (
    GenWrightParams, WrightParams, wright_phi, wright_phi_array)


def test_brute_series_mainardi():
    value = brute_series(WrightParams(0.5, 0.5, -2))
    with mp.workdps(40):
        exact = mp.exp(-1) / mp.sqrt(mp.pi)
        assert abs(value - exact) < 1e-25


def test_brute_series_precision_agrees():
    params = WrightParams(0.3, -1.2, 4 - 3j)
    low = brute_series(params, digits=30)
    high = brute_series(params, digits=45)
    with mp.workdps(50):
        assert abs(low - high) <= 1e-28 * abs(high)


def test_brute_series_gen_wright_bessel():
    value = brute_series(GenWrightParams(1, 1, 1, 1, 4))
    assert_allclose(float(value.real), i0(4), rtol=1e-14)


@pytest.mark.parametrize('digits', [29, 61])
def test_brute_series_rejects_digits(digits):
    with pytest.raises(InvalidParams):
        brute_series(WrightParams(0.5, 0.5, 1), digits=digits)


def test_brute_series_rejects_params():
    with pytest.raises(InvalidParams):
        brute_series((0.5, 0.5, 1))


def test_recip_gamma_bound():
    for x in np.linspace(-6.5, 6.5, 53):
        assert abs(recip_gamma(x)) <= recip_gamma_bound(x)


def test_power_rule():
    assert_allclose(power_rule(0, 0.5, 1.0), 1 / gamma(0.5), rtol=1e-15)
    assert_allclose(power_rule(2, 1, 3.0), 6.0, rtol=1e-15)
    assert power_rule(0, 1, 2.0) == 0


@pytest.mark.parametrize('order, endpoint_power, y', [
    (0.5, 1.5, 2.0), (0.25, 0.0, 1.0), (-0.5, 0.0, 0.7), (1.5, 2.0, 1.2),
    (0.75, -0.5, 1.0)])
def test_rl_quadrature_power_rule(order, endpoint_power, y):
    req = RLDerivativeRequest(order, lambda tau: 1.0, y, endpoint_power)
    assert_allclose(
        rl_derivative_quadrature(req),
        power_rule(endpoint_power, order, y), rtol=1e-6)


def test_rl_quadrature_integer_order():
    req = RLDerivativeRequest(1, lambda tau: tau ** 3, 2.0)
    assert_allclose(rl_derivative_quadrature(req), 12.0, rtol=1e-9)
    req = RLDerivativeRequest(0, lambda tau: exp(tau), 1.0)
    assert_allclose(rl_derivative_quadrature(req), exp(1.0))


@pytest.mark.parametrize('kwargs', [
    {'order': -1.5}, {'y': 0.0}, {'endpoint_power': -1.0}])
def test_rl_request_rejects(kwargs):
    args = {'order': 0.5, 'func': lambda tau: 1.0, 'y': 1.0}
    args.update(kwargs)
    with pytest.raises(InvalidParams):
        RLDerivativeRequest(**args)


def test_richardson_central():
    value, error = richardson_derivative(np.sin, 0.3, 1, 0.1)
    assert_allclose(value, cos(0.3), rtol=1e-12)
    assert error < 1e-10
    value, _ = richardson_derivative(np.sin, 0.3, 4, 0.2, levels=3)
    assert_allclose(value, np.sin(0.3), rtol=1e-6)


@pytest.mark.parametrize('side', [1, -1])
def test_richardson_one_sided(side):
    value, _ = richardson_derivative(np.exp, 0.0, 2, 0.1, levels=6,
                                     side=side)
    assert_allclose(value, 1.0, rtol=1e-6)


@pytest.mark.parametrize('kwargs', [
    {'order': 0}, {'levels': 1}, {'side': 2}])
def test_richardson_rejects(kwargs):
    args = {'func': np.sin, 'x': 0.0, 'order': 1, 'h0': 0.1}
    args.update(kwargs)
    with pytest.raises(InvalidParams):
        richardson_derivative(**args)


@pytest.mark.parametrize('n, s', [(2, 3), (3, 5)])
def test_jump_probe_nonzero(n, s):
    spec = FundamentalSolutionSpec(1.4, n, 0.3)
    exact = diagonal_jump(spec, s)(1.0)
    assert_allclose(jump_probe(spec, s, 1.0), exact, rtol=1e-4)


@pytest.mark.parametrize('n, s', [(2, 1), (2, 2), (3, 1)])
def test_jump_probe_zero(n, s):
    spec = FundamentalSolutionSpec(1.4, n, 0.3)
    assert abs(jump_probe(spec, s, 1.0)) < 1e-6


def test_jump_probe_rejects_order():
    with pytest.raises(InvalidParams):
        jump_probe(FundamentalSolutionSpec(1.4, 2, 0.3), 0, 1.0)


@pytest.mark.parametrize('d', [1, -1])
def test_selfsim_residual(d):
    spec = SelfSimilarSpec(1.5, 4, 1, 0.5, d=d)
    scale = max(1.0, abs(selfsim_time_derivative(spec, 0.7, 1.1)))
    assert abs(selfsim_residual(spec, 0.7, 1.1)) <= 1e-5 * scale


def test_selfsim_time_derivative_leading_order():
    spec = SelfSimilarSpec(0.5, 1.5, 1, 0.0)
    x, y = 1e-4, 1.0
    mu = spec.b - spec.alpha * spec.gamma
    leading = (recip_gamma(mu + 1 - spec.alpha)
               * recip_gamma(spec.beta * spec.gamma + 1)
               * x ** (spec.beta * spec.gamma) * y ** (mu - spec.alpha))
    assert_allclose(
        selfsim_time_derivative(spec, x, y), leading, rtol=1e-4)


def test_selfsim_residual_rejects_fractional_beta():
    with pytest.raises(InvalidParams):
        selfsim_residual(SelfSimilarSpec(1.5, 2.5, 1, 0.3), 0.5, 1.0)


def test_power_rule_matches_half_derivative_of_sqrt():
    assert_allclose(power_rule(0.5, 0.5, 4.0), gamma(1.5), rtol=1e-15)
    assert_allclose(power_rule(0.5, -0.5, 1.0), sqrt(pi) / 2,
                    rtol=1e-14)


def phi_branch(sigma, b, c, x):
    '''Return tau -> phi(-sigma, b+1, c x tau^-sigma), tau^b split off.'''
    def func(tau):
        z = c * x * tau ** -sigma
        if abs(z) > 200:
            # phi is below 1e-300 this deep in the decaying sector
            return 0.0
        return float(wright_phi_array(sigma, b + 1, z).real)
    return func


@pytest.mark.parametrize('order', [-0.5, 0.5, 0.75])
@pytest.mark.parametrize('x, y', [(0.5, 1.0), (0.8, 1.5)])
def test_time_shift_of_phi_branch(order, x, y):
    alpha, p, b, c = 1.5, 4, 0.5, -1.0
    sigma = alpha / p
    req = RLDerivativeRequest(
        order, phi_branch(sigma, b, c, x), y, endpoint_power=b)
    z = c * x * y ** -sigma
    shifted = WrightParams(sigma, b + 1 - order, z)
    expected = y ** (b - order) * wright_phi(shifted).value.real
    assert_allclose(rl_derivative_quadrature(req), expected, rtol=1e-6)
