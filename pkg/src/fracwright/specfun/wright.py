'''Wright and generalized Wright functions.

phi(-sigma, beta, z) = sum_k z**k / (k! Gamma(beta - sigma k))
W_{(mu, a), (nu, b)}(z) = sum_k z**k / (Gamma(mu k + a) Gamma(nu k + b))
'''
from cmath import isfinite as cisfinite
from itertools import count
from math import ceil, cos, log, pi

import numpy as np
from mpmath import mp, mpc, mpf
from numpy.polynomial.legendre import leggauss
from scipy.special import gammaln, gammasgn

from fracwright.errors import (
    CatastrophicCancellation, InvalidParams, NonConvergence)
from fracwright.specfun.gamma import recip_gamma, series_term
from fracwright.specfun.series import SeriesControl, sum_series
from fracwright.util.log import get_logger
from fracwright.util.obj import use_or_default

logger = get_logger(__name__)

GL_NODES, GL_WEIGHTS = leggauss(20)
ARC_RADIUS = 1.0
ANGLE_MARGIN = 0.02
RAY_LOG_TAIL = 40.0
MAX_RAY_LENGTH = 1e5
CHUNK_ARGUMENTS = 256


class WrightParams:
    '''Arguments (sigma, beta, z) of the Wright function phi(-sigma, beta, z).

    Examples:
        >>> from fracwright.specfun.wright import WrightParams, wright_phi
        >>> round(wright_phi(WrightParams(0.5, 0.5, -1)).value.real, 10)
        0.4393912895
    '''

    def __init__(self, sigma, beta, z):
        sigma = float(sigma)
        if not 0 < sigma < 1:
            raise InvalidParams(f'sigma must be in (0, 1): {sigma}')
        self._sigma = sigma
        self._beta = float(beta)
        self._z = complex(z)

    def __repr__(self):
        return (
            f'WrightParams(sigma={self.sigma!r}, beta={self.beta!r}, '
            f'z={self.z!r})')

    @property
    def sigma(self):
        return self._sigma

    @property
    def beta(self):
        return self._beta

    @property
    def z(self):
        return self._z

    def conjugate(self):
        '''Return parameters with z replaced by its complex conjugate.'''
        return WrightParams(self.sigma, self.beta, self.z.conjugate())


class GenWrightParams:
    '''Arguments (mu, a, nu, b, z) of W_{(mu, a), (nu, b)}(z).'''

    def __init__(self, mu, a, nu, b, z):
        mu, nu = float(mu), float(nu)
        if not mu + nu > 0:
            raise InvalidParams(f'mu + nu must be positive: {mu + nu}')
        self._mu = mu
        self._a = float(a)
        self._nu = nu
        self._b = float(b)
        self._z = complex(z)

    def __repr__(self):
        return (
            f'GenWrightParams(mu={self.mu!r}, a={self.a!r}, '
            f'nu={self.nu!r}, b={self.b!r}, z={self.z!r})')

    @property
    def mu(self):
        return self._mu

    @property
    def a(self):
        return self._a

    @property
    def nu(self):
        return self._nu

    @property
    def b(self):
        return self._b

    @property
    def z(self):
        return self._z


def _wright_terms(sigma, beta, z):
    def terms():
        power = 1 + 0j
        for k in count():
            if k:
                power *= z / k
            yield series_term(power, (beta - sigma * k,))
    return terms


def _wright_terms_mp(sigma, beta, z):
    def terms():
        msigma, mbeta, mz = mpf(sigma), mpf(beta), mpc(z)
        power = mpc(1)
        for k in count():
            if k:
                power *= mz / k
            yield power * mp.rgamma(mbeta - msigma * k)
    return terms


def _gen_wright_terms(p):
    def terms():
        power = 1 + 0j
        for k in count():
            if k:
                power *= p.z
                if not cisfinite(power):
                    raise NonConvergence(
                        f'z**k overflowed at k={k} for {p}')
            yield series_term(power, (p.mu * k + p.a, p.nu * k + p.b))
    return terms


def _gen_wright_terms_mp(p):
    def terms():
        mu, a, nu, b = mpf(p.mu), mpf(p.a), mpf(p.nu), mpf(p.b)
        mz = mpc(p.z)
        power = mpc(1)
        for k in count():
            if k:
                power *= mz
            yield power * mp.rgamma(mu * k + a) * mp.rgamma(nu * k + b)
    return terms


def wright_phi(p, ctrl=None):
    '''Return SeriesResult for phi(-sigma, beta, z) by direct summation.

    Parameters
    ----------
    p : WrightParams
        function arguments
    ctrl : SeriesControl, optional
        summation policy, default SeriesControl()

    Notes
    -----
    The series is entire, so it is summed as is for every z. Loss of
    digits triggers a 32-digit mpmath re-summation; if that is not
    enough either, CatastrophicCancellation is raised.
    '''
    ctrl = use_or_default(ctrl, SeriesControl)
    return sum_series(
        _wright_terms(p.sigma, p.beta, p.z), ctrl,
        extended_terms=_wright_terms_mp(p.sigma, p.beta, p.z))


def gen_wright(p, ctrl=None):
    '''Return SeriesResult for the generalized Wright function.'''
    ctrl = use_or_default(ctrl, SeriesControl)
    return sum_series(
        _gen_wright_terms(p), ctrl, extended_terms=_gen_wright_terms_mp(p))


def series_radius(sigma):
    '''Return |z| below which double-precision series are trusted.

    The largest series term grows like exp((1-sigma)|z|**(1/(1-sigma))),
    so the radius keeps that factor below about exp(6).
    '''
    if sigma > 0.75:
        return 1.0
    return (6.0 / (1.0 - sigma)) ** (1.0 - sigma)


def contour_angles(sigma, z):
    '''Return upper and lower ray angles of the Hankel contour.

    Parameters
    ----------
    sigma : float
        Wright parameter in (0, 1)
    z : ndarray of complex
        arguments

    Returns
    -------
    upper, lower : ndarray of float
        ray angles in (pi/2, pi]
    decaying : ndarray of bool
        True where z lies in the sector |arg(-z)| < pi (1 - sigma) / 2

    Notes
    -----
    In the decaying sector the angles keep Re(z u**sigma) <= 0 along
    both rays, so the integrand never exceeds exp(ARC_RADIUS) in size.
    Elsewhere the classical angle pi is used.
    '''
    arg = np.mod(np.angle(z), 2 * pi)
    upper = np.minimum(pi, (1.5 * pi - arg) / sigma)
    lower = np.minimum(pi, (arg - 0.5 * pi) / sigma)
    decaying = ((upper >= 0.5 * pi + ANGLE_MARGIN)
                & (lower >= 0.5 * pi + ANGLE_MARGIN))
    upper = np.where(decaying, upper, pi)
    lower = np.where(decaying, lower, pi)
    return upper, lower, decaying


def _panel_nodes(edges):
    '''Return Gauss-Legendre nodes and weights on consecutive panels.'''
    edges = np.asarray(edges, dtype=float)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * GL_NODES[None, :]).ravel()
    weights = (half[:, None] * GL_WEIGHTS[None, :]).ravel()
    return nodes, weights


def _ray_length(sigma, beta, zabs, growth, cos_theta):
    '''Return radius beyond which a ray contributes below exp(-40).'''
    decay = abs(cos_theta)
    r = RAY_LOG_TAIL / decay
    for _ in range(30):
        r = (RAY_LOG_TAIL + growth * r ** sigma
             + max(0.0, -beta) * log(max(r, 1.0))) / decay
        if r > MAX_RAY_LENGTH:
            raise NonConvergence(
                f'Hankel ray longer than {MAX_RAY_LENGTH:g} for '
                f'sigma={sigma}, beta={beta}, |z|={zabs:g}')
    return max(r, 2 * ARC_RADIUS)


def _ray_edges(sigma, beta, rmax, zmax):
    '''Return panel edges along a ray, each panel under half a period.'''
    edges = [ARC_RADIUS]
    r = ARC_RADIUS
    while r < rmax:
        rate = 1.0 + sigma * zmax * r ** (sigma - 1) + abs(beta) / r
        r = min(rmax, r + pi / rate)
        edges.append(r)
    return edges


def _ray_integral(sigma, beta, z, theta, sign):
    '''Return integral along the ray at angle sign*theta (outward).'''
    arg = np.angle(z)
    zabs = np.abs(z)
    growth = np.maximum(0.0, zabs * np.cos(arg + sign * sigma * theta))
    rmax = max(
        _ray_length(sigma, beta, za, g, cos(th))
        for za, g, th in zip(zabs, growth, theta))
    r, w = _panel_nodes(_ray_edges(sigma, beta, rmax, zabs.max()))
    direction = np.exp(1j * sign * theta)
    zrot = z * np.exp(1j * sign * sigma * theta)
    logr = np.log(r)
    expo = (r[None, :] * direction[:, None]
            + zrot[:, None] * np.exp(sigma * logr)[None, :]
            - beta * logr[None, :])
    total = np.exp(expo) @ w
    return sign * np.exp(1j * sign * (1 - beta) * theta) * total


def _arc_integral(sigma, beta, z, upper, lower):
    '''Return integral along the arc |u| = ARC_RADIUS, -lower..upper.'''
    rho = ARC_RADIUS
    rate = 1.0 + rho + sigma * np.abs(z).max() * rho ** sigma + abs(1 - beta)
    npanel = int(ceil(2 * rate)) + 1
    s, w = _panel_nodes(np.linspace(0.0, 1.0, npanel + 1))
    span = upper + lower
    phi = -lower[:, None] + span[:, None] * s[None, :]
    expo = (rho * np.exp(1j * phi)
            + z[:, None] * rho ** sigma * np.exp(1j * sigma * phi)
            + 1j * (1 - beta) * phi)
    return 1j * rho ** (1 - beta) * span * (np.exp(expo) @ w)


def wright_phi_contour(sigma, beta, z):
    '''Return phi(-sigma, beta, z) from its Hankel-contour integral.

    Parameters
    ----------
    sigma : float
        Wright parameter in (0, 1)
    beta : float
        second Wright parameter, any real
    z : complex or array_like of complex
        arguments

    Returns
    -------
    value : complex or ndarray of complex
        same shape as z

    Notes
    -----
    phi = (1/(2 pi i)) int exp(u + z u**sigma) u**(-beta) du along a
    contour that comes in from infinity on the ray arg u = -lower,
    circles the origin on |u| = 1 and leaves on the ray arg u = upper.
    Accuracy is absolute, about 1e-15 relative to the integrand size,
    which is what convolutions with the fundamental solution need.
    '''
    if not 0 < sigma < 1:
        raise InvalidParams(f'sigma must be in (0, 1): {sigma}')
    scalar = np.ndim(z) == 0
    zflat = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
    out = np.empty(zflat.shape, dtype=complex)
    for start, stop in _chunks(zflat.size, CHUNK_ARGUMENTS):
        zc = zflat[start:stop]
        upper, lower, _ = contour_angles(sigma, zc)
        total = (_ray_integral(sigma, beta, zc, upper, 1)
                 + _ray_integral(sigma, beta, zc, lower, -1)
                 + _arc_integral(sigma, beta, zc, upper, lower))
        out[start:stop] = total / (2j * pi)
    if scalar:
        return complex(out[0])
    return out.reshape(np.shape(z))


def _chunks(size, step):
    for start in range(0, size, step):
        yield start, min(size, start + step)


def _series_array(sigma, beta, z, ctrl):
    '''Sum the Wright series for an array of arguments at once.'''
    total = np.zeros(z.shape, dtype=complex)
    power = np.ones(z.shape, dtype=complex)
    maxterm = np.zeros(z.shape)
    nsmall = np.zeros(z.shape, dtype=int)
    for k in range(ctrl.max_terms):
        if k:
            power = power * z / k
        x = beta - sigma * k
        rg = recip_gamma(x)
        if np.isfinite(rg):
            term = power * rg
        else:
            size = np.abs(power)
            with np.errstate(divide='ignore'):
                logmag = np.log(size) - gammaln(x)
            unit = np.where(size > 0, power / np.where(size > 0, size, 1), 0)
            term = gammasgn(x) * np.exp(logmag) * unit
        total += term
        size = np.abs(term)
        maxterm = np.maximum(maxterm, size)
        small = size <= ctrl.stop_tol * np.abs(total)
        nsmall = np.where(small, nsmall + 1, 0)
        if (k + 1 >= ctrl.min_terms
                and (nsmall >= ctrl.consecutive_small).all()):
            break
    else:
        raise NonConvergence(
            f'Wright series not converged after {ctrl.max_terms} terms '
            f'for sigma={sigma}, beta={beta}, max|z|={np.abs(z).max():g}')
    bad = maxterm > ctrl.cancellation_ratio_limit * np.abs(total)
    if bad.any():
        worst = np.abs(z[bad]).max()
        raise CatastrophicCancellation(
            f'Wright series cancellation for sigma={sigma}, beta={beta}, '
            f'|z|={worst:g}')
    return total


def wright_phi_array(sigma, beta, z, ctrl=None):
    '''Return phi(-sigma, beta, z) for an array of arguments.

    Series summation is used inside series_radius(sigma) and wherever
    no decaying Hankel contour exists; the contour integral elsewhere.
    '''
    ctrl = use_or_default(ctrl, SeriesControl)
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    out = np.empty(flat.shape, dtype=complex)
    _, _, decaying = contour_angles(sigma, flat)
    use_series = (np.abs(flat) <= series_radius(sigma)) | ~decaying
    if use_series.any():
        out[use_series] = _series_array(sigma, beta, flat[use_series], ctrl)
    if not use_series.all():
        logger.debug(
            'contour evaluation for %d of %d arguments',
            (~use_series).sum(), flat.size)
        out[~use_series] = wright_phi_contour(
            sigma, beta, flat[~use_series])
    return out.reshape(z.shape)
