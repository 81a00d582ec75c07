'''Cauchy problem solution by convolution with the fundamental solution.

u(x, y) = - int phi(xi) Gamma_{b1}(x - xi, y) dxi
          - int psi(xi) Gamma_{b2}(x - xi, y) dxi
          - int_0^y int f(xi, eta) Gamma_{b1}(x - xi, y - eta) dxi deta

with b_j = alpha - alpha/2n - j. Derivatives of u are the same integrals
over shifted kernels; only residual differences D^(alpha-1) u in y.
'''
from math import fsum, log

import numpy as np

from fracwright.cauchy.catalog import CatalogFunction
from fracwright.cauchy.problem import GridSolution
from fracwright.cauchy.quadrature import (
    Estimate, QuadratureConfig, adaptive_gk15, gk15_panel)
from fracwright.errors import (
    GrowthViolation, InvalidParams, NumericalError, row_flag)
from fracwright.fundsol.kernel import FundamentalSolutionSpec
from fracwright.fundsol.profile import kernel_profile
from fracwright.oracle.probe import richardson_derivative
from fracwright.specfun.decay import decay_exponent, decay_rate
from fracwright.specfun.gamma import recip_gamma
from fracwright.util.log import get_logger
from fracwright.util.obj import use_or_default

logger = get_logger(__name__)

EDGE_STRIDE = 4


def growth_radius(growth_k, alpha, n, x, span, tail_tol):
    '''Return tau beyond which growing data times the kernel is negligible.

    Parameters
    ----------
    growth_k : float
        data bounded by exp(growth_k |xi|**p), p = 2n/(2n-alpha)
    alpha, n : float, int
        equation parameters
    x : float
        evaluation point
    span : float
        y**(alpha/2n), the scale between tau and xi
    tail_tol : float
        target size of the neglected tail

    Returns
    -------
    tau : float or None
        None when the data do not grow
    '''
    if growth_k <= 0:
        return None
    power = decay_exponent(alpha, n)
    rate = decay_rate(alpha, n)
    coupling = 2 ** (power - 1) * growth_k
    effective = rate - coupling * span ** power
    if effective <= 0:
        raise GrowthViolation(
            f'data growth {growth_k:g} overwhelms kernel decay {rate:g} '
            f'at y = {span ** (2 * n / alpha):g}')
    tail = log(1 / tail_tol) + 2 + coupling * abs(x) ** power
    return (tail / effective) ** (1 / power)


def tabulation_error(profile, magnitude, edges):
    '''Return the table error of profile integrated against magnitude.'''
    mass = fsum(gk15_panel(magnitude, lo, hi)[0]
                for lo, hi in zip(edges[:-1], edges[1:]))
    return Estimate(0.0, profile.max_error * mass)


def convolve(shifted, values, x, y, cfg, breakpoints=(), growth_k=0.0,
             abs_tol=None):
    '''Return int values(xi) K(x - xi, y) dxi over the real line.

    K is the kernel of shifted. With xi = x -+ y**sigma tau the integral
    becomes y**(b_eff + sigma) int_0^tau_max [values(x - y**sigma tau)
    + (-1)**s values(x + y**sigma tau)] g(tau) dtau with g tabulated.
    '''
    abs_tol = cfg.abs_tol if abs_tol is None else abs_tol
    tail_tol = cfg.effective_tail_tol
    span = y ** shifted.sigma
    profile = kernel_profile(
        shifted, tail_tol,
        growth_radius(growth_k, shifted.alpha, shifted.n, x, span, tail_tol))
    sign = (-1) ** shifted.space_order

    def integrand(tau):
        shift = span * tau
        return (values(x - shift) + sign * values(x + shift)) * profile(tau)

    def magnitude(tau):
        shift = span * tau
        return np.abs(values(x - shift)) + np.abs(values(x + shift))

    edges = list(profile.edges[::EDGE_STRIDE])
    if edges[-1] != profile.tau_max:
        edges.append(profile.tau_max)
    for point in breakpoints:
        tau = abs(point - x) / span
        if 0 < tau < profile.tau_max:
            edges.append(tau)
    edges = np.unique(edges)
    factor = y ** (shifted.b_eff + shifted.sigma)
    result = adaptive_gk15(
        integrand, edges, abs_tol / factor, cfg.rel_tol, cfg.max_panels)
    return (result + tabulation_error(profile, magnitude, edges)) * factor


def convolve_initial(spec, which, x, y, cfg=None, time_shift=0.0,
                     space_order=0):
    '''Return the phi or psi term of u, or of D^gamma d^s u, at (x, y).

    Parameters
    ----------
    spec : CauchyProblemSpec
        problem
    which : {'phi', 'psi'}
        data term; phi pairs with Gamma_{b1}, psi with Gamma_{b2}
    x, y : float
        evaluation point, y > 0
    cfg : QuadratureConfig, optional
        tolerances
    time_shift, space_order : float, int, optional
        derivative applied to the term

    Returns
    -------
    estimate : Estimate
        flagged when the quadrature missed its tolerance
    '''
    if not y > 0:
        raise InvalidParams(f'y must be positive: {y}')
    cfg = use_or_default(cfg, QuadratureConfig)
    func, j = spec.data(which)
    if func.is_zero:
        return Estimate(0.0)
    shifted = spec.kernel(j).shifted(time_shift, space_order)
    return -convolve(
        shifted, func, x, y, cfg, func.breakpoints, func.growth_k)


def grading_power(shifted, alpha):
    '''Return m for the substitution y - eta = y w**m.

    m = 1/(1 + e) with e the leading power of the xi-integrated kernel:
    b_eff + sigma, or b_eff + sigma + alpha when its mass vanishes.
    '''
    lead = shifted.b_eff + shifted.sigma
    if recip_gamma(lead + 1) == 0:
        lead += alpha
    if not lead > -1:
        raise InvalidParams(
            f'kernel {shifted!r} is not integrable in time')
    return 1 / (1 + lead)


def source_term(spec, x, y, cfg=None, time_shift=0.0, space_order=0):
    '''Return the f term of u, or of D^gamma d^s u, at (x, y).

    The inner xi-integral is done first; the outer time integral uses
    y - eta = y w**m, which makes the integrand bounded at eta = y.
    '''
    if not y > 0:
        raise InvalidParams(f'y must be positive: {y}')
    cfg = use_or_default(cfg, QuadratureConfig)
    func = spec.f
    if func.is_zero:
        return Estimate(0.0)
    shifted = spec.kernel(1).shifted(time_shift, space_order)
    m = grading_power(shifted, spec.alpha)
    inner_tol = 0.1 * cfg.abs_tol
    flagged = []
    inner_error = [inner_tol]

    def integrand(w):
        out = np.empty(w.shape)
        for i, wi in enumerate(w):
            delta = y * wi ** m
            weight = y * m * wi ** (m - 1)
            eta = y - delta
            estimate = convolve(
                shifted, lambda xi: func(xi, eta), x, delta, cfg,
                func.breakpoints, func.growth_k, inner_tol / weight)
            out[i] = weight * estimate.value
            inner_error.append(weight * estimate.error)
            if estimate.flagged:
                flagged.append(wi)
        return out

    outer = adaptive_gk15(
        integrand, np.linspace(0.0, 1.0, cfg.grading_points + 1),
        cfg.abs_tol / 2, cfg.rel_tol, cfg.max_panels)
    if flagged:
        logger.warning(
            'source term at (%g, %g): %d inner integrals missed tolerance',
            x, y, len(flagged))
    return -Estimate(
        outer.value, outer.error + max(inner_error),
        outer.flagged or bool(flagged))


def solution_terms(spec, x, y, cfg=None, time_shift=0.0, space_order=0):
    '''Return the sum of the three terms of D^gamma d^s u at (x, y).'''
    cfg = use_or_default(cfg, QuadratureConfig)
    return (convolve_initial(spec, 'phi', x, y, cfg, time_shift, space_order)
            + convolve_initial(spec, 'psi', x, y, cfg, time_shift,
                               space_order)
            + source_term(spec, x, y, cfg, time_shift, space_order))


def evaluate(spec, x, y, cfg=None):
    '''Return u(x, y) as an Estimate.'''
    return solution_terms(spec, x, y, cfg)


def solve(spec, x_nodes, y_nodes, cfg=None):
    '''Return GridSolution of u on the tensor grid x_nodes by y_nodes.

    Nodes are evaluated in x-major order; each value depends only on its
    own node, so results do not depend on evaluation order. A node whose
    evaluation fails numerically gets NaN and the flag of its error.
    '''
    cfg = use_or_default(cfg, QuadratureConfig)
    x_nodes = np.sort(np.asarray(x_nodes, dtype=float))
    y_nodes = np.sort(np.asarray(y_nodes, dtype=float))
    if (y_nodes <= 0).any():
        raise InvalidParams(f'y nodes must be positive: {y_nodes.min()}')
    shape = (len(x_nodes), len(y_nodes))
    values = np.zeros(shape)
    errors = np.zeros(shape)
    flags = np.full(shape, 'ok', dtype=object)
    for i, x in enumerate(x_nodes):
        for k, y in enumerate(y_nodes):
            try:
                estimate = evaluate(spec, x, y, cfg)
            except NumericalError as err:
                logger.warning('(%g, %g): %s', x, y, err.message)
                values[i, k] = errors[i, k] = np.nan
                flags[i, k] = row_flag(err)
                continue
            values[i, k] = estimate.value
            errors[i, k] = estimate.error
            if estimate.flagged:
                flags[i, k] = 'tol'
    lost = (flags != 'ok').sum()
    if lost:
        logger.warning(
            '%d of %d grid values missed their tolerance', lost, flags.size)
    return GridSolution(
        x_nodes, y_nodes, values, errors, flags, spec.fingerprint)


def check_initial_limits(spec, x, y_sequence, cfg=None):
    '''Return D^(alpha-1) u and D^(alpha-2) u at (x, y_m).

    As y_m -> 0 the sequences tend to phi(x) and psi(x).
    '''
    y_sequence = [float(y) for y in y_sequence]
    if any(y <= 0 for y in y_sequence):
        raise InvalidParams('y_sequence must be positive')
    if any(b >= a for a, b in zip(y_sequence, y_sequence[1:])):
        raise InvalidParams('y_sequence must decrease')
    cfg = use_or_default(cfg, QuadratureConfig)
    first, second = [], []
    for y in y_sequence:
        first.append(
            solution_terms(spec, x, y, cfg, spec.alpha - 1).value)
        second.append(
            solution_terms(spec, x, y, cfg, spec.alpha - 2).value)
    return first, second


def residual(spec, x, y, cfg=None, levels=3):
    '''Return D^alpha u - (-1)^(n-1) d^2n u - f at (x, y).

    D^alpha u is the y-derivative of D^(alpha-1) u, taken by extrapolated
    central differences, so the diagonal contribution of the source term
    comes out of the quadrature rather than from f itself. The space
    derivative comes from the shifted kernel.
    '''
    if not y > 0:
        raise InvalidParams(f'y must be positive: {y}')
    cfg = use_or_default(cfg, QuadratureConfig)
    n = spec.n

    def lowered(points):
        return np.array([
            solution_terms(spec, x, point, cfg, spec.alpha - 1).value
            for point in np.atleast_1d(points)])

    d_alpha, _ = richardson_derivative(lowered, y, 1, y / 2, levels)
    d_space = solution_terms(spec, x, y, cfg, space_order=2 * n).value
    return d_alpha - (-1) ** (n - 1) * d_space - float(spec.f(x, y))


def kernel_mass(alpha, n, s, j, y, cfg=None):
    '''Return int D^(alpha-s) Gamma_{alpha-alpha/2n-j}(x - xi, y) dxi.

    The exact value is -y**(s-j) / Gamma(s-j+1), zero for s < j.
    '''
    cfg = use_or_default(cfg, QuadratureConfig)
    sigma = alpha / (2 * n)
    shifted = FundamentalSolutionSpec(alpha, n, alpha - sigma - j).shifted(
        alpha - s)
    return convolve(shifted, CatalogFunction('one'), 0.0, y, cfg)


def expected_mass(s, j, y):
    return -y ** (s - j) * recip_gamma(s - j + 1)
