'''Riemann-Liouville derivatives from their definition.

D^gamma f(y) = 1/Gamma(q - gamma) d^q/dy^q int_0^y f(tau) (y - tau)^(q-gamma-1)
with q = ceil(gamma). The inner integral uses QUADPACK's algebraic
weight, the outer derivative Richardson-extrapolated differences.
'''
from itertools import count
from math import ceil

import numpy as np
from mpmath import mp, mpf
from scipy.integrate import quad

from fracwright.errors import InvalidParams, ToleranceNotMet
from fracwright.oracle.probe import richardson_derivative
from fracwright.selfsim.similarity import SimilarityVariable, u_j
from fracwright.specfun.gamma import recip_gamma


class RLDerivativeRequest:
    '''Derivative of order gamma at y of f(tau) = tau**endpoint_power g(tau).

    Parameters
    ----------
    order : float
        derivative order gamma; negative orders are integrals
    func : callable
        g, evaluated at scalar tau in (0, y)
    y : float
        evaluation point, y > 0
    endpoint_power : float, optional
        power of tau split off g, > -1
    rel_tol : float, optional
        target relative error
    '''

    def __init__(self, order, func, y, endpoint_power=0.0, rel_tol=1e-7):
        if not y > 0:
            raise InvalidParams(f'y must be positive: {y}')
        if not endpoint_power > -1:
            raise InvalidParams(
                f'endpoint_power must exceed -1: {endpoint_power}')
        self.order = float(order)
        self.ceil_order = max(0, ceil(self.order))
        if not self.ceil_order - 1 < self.order <= self.ceil_order:
            raise InvalidParams(f'order {order} below -1 is not supported')
        self.func = func
        self.y = float(y)
        self.endpoint_power = float(endpoint_power)
        self.rel_tol = float(rel_tol)

    def __repr__(self):
        return (
            f'RLDerivativeRequest(order={self.order!r}, y={self.y!r}, '
            f'endpoint_power={self.endpoint_power!r})')


def _weighted_integral(req, upper):
    exponent = req.ceil_order - req.order - 1
    value, _ = quad(
        req.func, 0.0, upper, weight='alg',
        wvar=(req.endpoint_power, exponent),
        limit=200, epsabs=1e-14, epsrel=1e-13)
    return value


def _integer_derivative(req):
    def func(points):
        points = np.atleast_1d(points)
        return np.array([
            point ** req.endpoint_power * req.func(point) for point in points])

    if req.ceil_order == 0:
        return float(func(req.y)[0])
    value, _ = richardson_derivative(
        func, req.y, req.ceil_order, req.y / 10, levels=5)
    return value


def rl_derivative_quadrature(req):
    '''Return D^gamma of req.func at req.y.

    Examples:
        >>> from fracwright.oracle.rl import (
        ...     RLDerivativeRequest, rl_derivative_quadrature)
        >>> req = RLDerivativeRequest(0.5, lambda tau: 1.0, 1.0)
        >>> round(rl_derivative_quadrature(req), 7)
        0.5641896
    '''
    if req.order == req.ceil_order:
        return _integer_derivative(req)
    scale = recip_gamma(req.ceil_order - req.order)
    if req.ceil_order == 0:
        return scale * _weighted_integral(req, req.y)

    def inner(points):
        return np.array([
            _weighted_integral(req, point)
            for point in np.atleast_1d(points)])

    value, error = richardson_derivative(
        inner, req.y, req.ceil_order, req.y / 10, levels=5)
    if error > 1e3 * req.rel_tol * max(abs(value), 1e-300):
        raise ToleranceNotMet(
            f'RL derivative of order {req.order} at y={req.y}: '
            f'difference error {error:.3g} against value {value:.3g}')
    return scale * value


def power_rule(mu, gamma, y, digits=30):
    '''Return D^gamma y**mu = Gamma(mu+1)/Gamma(mu+1-gamma) y**(mu-gamma).'''
    with mp.workdps(digits):
        mu, gamma, y = mpf(mu), mpf(gamma), mpf(y)
        return float(mp.gamma(mu + 1) * mp.rgamma(mu + 1 - gamma)
                     * y ** (mu - gamma))


def selfsim_time_derivative(spec, x, y, digits=30):
    '''Return D^alpha_y u_j at (x, y) by the termwise power rule.

    Term n of u_j is c_n x^(beta(n+gamma)) y^mu_n, mu_n = b-alpha(n+gamma),
    and Gamma(mu_n+1) cancels against c_n.
    '''
    with mp.workdps(digits):
        alpha, beta = mpf(spec.alpha), mpf(spec.beta)
        b, gamma = mpf(spec.b), mpf(1) - mpf(spec.j) / beta
        mx, my = mpf(x), mpf(y)
        target = mpf(10) ** -digits
        total = mpf(0)
        nsmall = 0
        for n in count():
            if n > 10_000:
                raise ToleranceNotMet('termwise derivative did not converge')
            mu = b - alpha * (n + gamma)
            term = (spec.d ** n * mp.rgamma(mu + 1 - alpha)
                    * mp.rgamma(beta * (n + gamma) + 1)
                    * mx ** (beta * (n + gamma)) * my ** (mu - alpha))
            total += term
            nsmall = nsmall + 1 if abs(term) <= target * abs(total) else 0
            if nsmall >= 3 and n >= 8:
                return float(total)


def selfsim_residual(spec, x, y, digits=30):
    '''Return D^alpha_y u_j - d d^p_x u_j at (x, y) for integer beta = p.

    The time derivative is termwise in extended precision, the space
    derivative Richardson-extrapolated central differences.
    '''
    if spec.beta != spec.p:
        raise InvalidParams(f'beta must be an integer: {spec.beta}')

    def u(points):
        return np.array([
            u_j(spec, SimilarityVariable.for_spec(spec, point, y))
            for point in np.atleast_1d(points)])

    space, _ = richardson_derivative(u, x, spec.p, x / 5, levels=4)
    time = selfsim_time_derivative(spec, x, y, digits)
    return time - spec.d * space
