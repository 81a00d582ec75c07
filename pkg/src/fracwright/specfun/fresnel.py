'''Fresnel integrals in the sin(t)/sqrt(t) normalization and 1F2.'''
from itertools import count
from math import pi, sqrt

import numpy as np
from mpmath import mp, mpf
from scipy.special import fresnel

from fracwright.errors import DomainError, InvalidParams
from fracwright.specfun.gamma import is_pole
from fracwright.specfun.series import SeriesControl, sum_series
from fracwright.util.obj import use_or_default

FRESNEL_PREFACTOR = 1 / sqrt(2 * pi)
PRINTED_PREFACTOR = 1 / (2 * sqrt(pi))


def _engineering_argument(z):
    z = np.asarray(z, dtype=float)
    if (z < 0).any():
        raise DomainError(f'Fresnel integrals need z >= 0: {z.min()}')
    return np.sqrt(2 * z / pi)


def fresnel_s(z, prefactor=FRESNEL_PREFACTOR):
    '''Return prefactor * integral from 0 to z of sin(t)/sqrt(t) dt.

    Parameters
    ----------
    z : float or array_like
        upper limit, z >= 0
    prefactor : float, optional
        normalization; the default 1/sqrt(2 pi) gives S(inf) = 1/2

    Notes
    -----
    t = pi u**2 / 2 maps the integral onto the engineering Fresnel
    integral, so S(z) = prefactor * sqrt(2 pi) * S_e(sqrt(2 z / pi)).
    '''
    s_e, _ = fresnel(_engineering_argument(z))
    value = prefactor * sqrt(2 * pi) * s_e
    return value if np.ndim(value) else float(value)


def fresnel_c(z, prefactor=FRESNEL_PREFACTOR):
    '''Return prefactor * integral from 0 to z of cos(t)/sqrt(t) dt.'''
    _, c_e = fresnel(_engineering_argument(z))
    value = prefactor * sqrt(2 * pi) * c_e
    return value if np.ndim(value) else float(value)


def _hyp1f2_terms(a, b, c, z):
    def terms():
        term = 1.0
        for k in count():
            if k:
                term *= (a + k - 1) / ((b + k - 1) * (c + k - 1) * k) * z
            yield term
    return terms


def _hyp1f2_terms_mp(a, b, c, z):
    def terms():
        ma, mb, mc, mz = mpf(a), mpf(b), mpf(c), mpf(z)
        term = mpf(1)
        for k in count():
            if k:
                term *= (ma + k - 1) / ((mb + k - 1) * (mc + k - 1) * k) * mz
            yield term
    return terms


def hyp1f2(a, b, c, z, ctrl=None):
    '''Return 1F2(a; b, c; z) = sum_k (a)_k / ((b)_k (c)_k) z**k / k!.

    Examples:
        >>> from fracwright.specfun.fresnel import hyp1f2
        >>> hyp1f2(1.0, 1.0, 1.0, 0.0)
        1.0
    '''
    for name, value in (('b', b), ('c', c)):
        if is_pole(value):
            raise InvalidParams(
                f'{name} = {value} is a pole of the Pochhammer symbol')
    ctrl = use_or_default(ctrl, SeriesControl)
    result = sum_series(
        _hyp1f2_terms(a, b, c, z), ctrl,
        extended_terms=_hyp1f2_terms_mp(a, b, c, z))
    return result.value.real


def mp_hyp1f2(a, b, c, z, digits=30):
    '''Return 1F2 from mpmath at the given precision, as a float.'''
    with mp.workdps(digits):
        return float(mp.hyp1f2(a, b, c, z))
