'''Chebyshev tables of kernel similarity profiles.'''
from functools import lru_cache
from math import ceil, cos, pi

import numpy as np
from numpy.polynomial.chebyshev import chebfit, chebval

from fracwright.fundsol.kernel import truncation_radius
from fracwright.util.log import get_logger

logger = get_logger(__name__)

DEGREE = 24


def segment_edges(sigma, tau_max):
    '''Return breakpoints on [0, tau_max], narrowing as the kernel oscillates.

    The phase of the kernel grows like tau**(1/(1-sigma)), so segment
    width is 1/(1 + tau**(sigma/(1-sigma))/2).
    '''
    power = sigma / (1 - sigma)
    edges = [0.0]
    tau = 0.0
    while tau < tau_max:
        tau = min(tau_max, tau + 1 / (1 + 0.5 * tau ** power))
        edges.append(tau)
    return np.array(edges)


class KernelProfile:
    '''Piecewise Chebyshev interpolant of ShiftedSpec.similarity_profile.

    Parameters
    ----------
    shifted : ShiftedSpec
        kernel to tabulate
    tau_max : float
        the profile is taken as 0 beyond tau_max
    degree : int, optional
        polynomial degree per segment
    ctrl : SeriesControl, optional
        series policy for the tabulated Wright values
    '''

    def __init__(self, shifted, tau_max, degree=DEGREE, ctrl=None):
        self._shifted = shifted
        self._tau_max = float(tau_max)
        self._edges = segment_edges(shifted.sigma, self._tau_max)
        nodes = np.array(
            [cos(pi * (k + 0.5) / (degree + 1)) for k in range(degree + 1)])
        lo, hi = self._edges[:-1], self._edges[1:]
        tau = 0.5 * (lo + hi)[:, None] + 0.5 * (hi - lo)[:, None] * nodes
        values = shifted.similarity_profile(tau.ravel(), ctrl)
        values = values.reshape(tau.shape)
        self._coeffs = chebfit(nodes, values.T, degree)
        # interleaved with the fit nodes
        check = np.array(
            [cos(pi * (k + 1) / (degree + 1)) for k in range(degree)])
        tau = 0.5 * (lo + hi)[:, None] + 0.5 * (hi - lo)[:, None] * check
        exact = shifted.similarity_profile(tau.ravel(), ctrl)
        fitted = chebval(check, self._coeffs)
        self._max_error = float(
            np.abs(fitted - exact.reshape(tau.shape)).max())
        logger.debug(
            'tabulated %r on %d segments up to tau=%.3g, fit error %.2g',
            shifted, len(lo), self._tau_max, self._max_error)

    def __repr__(self):
        return (
            f'KernelProfile({self._shifted!r}, tau_max={self._tau_max:g}, '
            f'segments={len(self._edges) - 1})')

    @property
    def shifted(self):
        return self._shifted

    @property
    def tau_max(self):
        return self._tau_max

    @property
    def edges(self):
        return self._edges

    @property
    def max_error(self):
        '''Largest deviation of the table from the profile at check points.'''
        return self._max_error

    def __call__(self, tau):
        '''Return the interpolated profile at |tau|.'''
        tau = np.abs(np.asarray(tau, dtype=float))
        last = len(self._edges) - 2
        idx = np.clip(np.searchsorted(self._edges, tau, side='right') - 1,
                      0, last)
        lo, hi = self._edges[idx], self._edges[idx + 1]
        x = np.clip((2 * tau - lo - hi) / (hi - lo), -1.0, 1.0)
        value = chebval(x, self._coeffs[:, idx], tensor=False)
        value = np.where(tau <= self._tau_max, value, 0.0)
        return value if value.ndim else float(value)

    def kernel(self, dx, dy):
        '''Return the kernel at (dx, dy) from the table, array-capable.'''
        dx = np.asarray(dx, dtype=float)
        dy = np.asarray(dy, dtype=float)
        shifted = self._shifted
        value = dy ** shifted.b_eff * self(np.abs(dx) * dy ** -shifted.sigma)
        if shifted.space_order % 2:
            value = np.where(dx < 0, -value, value)
        return value


@lru_cache(maxsize=64)
def _cached_profile(shifted, tau_max):
    return KernelProfile(shifted, tau_max)


def kernel_profile(shifted, tail_tol, tau_min=None):
    '''Return cached KernelProfile of shifted, truncated at tail_tol.

    tau_min extends the table for data that grow at infinity; it is
    rounded up to an integer so nearby requests share a table.
    '''
    tau_max = truncation_radius(shifted, 1.0, tail_tol)
    if tau_min is not None and tau_min > tau_max:
        tau_max = float(ceil(tau_min))
    return _cached_profile(shifted, tau_max)

