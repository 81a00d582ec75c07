from math import exp, floor, log

from numpy import isfinite
from scipy.special import gammaln, gammasgn, rgamma


def recip_gamma(x):
    '''Return 1/Gamma(x) for real or complex x (scalar or array).

    The reciprocal gamma function is entire, so poles of Gamma at
    x = 0, -1, -2, ... give exactly zero.

    Examples:
        >>> from fracwright.specfun.gamma import recip_gamma
        >>> recip_gamma(-3)
        0.0
        >>> round(recip_gamma(0.5), 10)
        0.5641895835
    '''
    return rgamma(x)


def is_pole(x):
    '''Return True if real x is a pole of Gamma.'''
    return x <= 0 and x == floor(x)


def series_term(power, args):
    '''Return power * prod(1/Gamma(x) for x in args) without overflow.

    Parameters
    ----------
    power : complex
        z**k / k! style prefactor computed by recurrence
    args : sequence of float
        real arguments of the reciprocal gamma factors

    Notes
    -----
    The direct product is used when it is finite and nonzero, or zero
    through a pole. Otherwise the magnitude is assembled from log|Gamma|
    so that a huge factor and an underflowing one can cancel.
    '''
    term = power
    for x in args:
        term = term * recip_gamma(x)
    if isfinite(term) and (term != 0 or any(is_pole(x) for x in args)):
        return complex(term)
    if power == 0:
        return 0j
    logmag = log(abs(power))
    sign = 1.0
    for x in args:
        if is_pole(x):
            return 0j
        logmag -= gammaln(x)
        sign *= gammasgn(x)
    if logmag > 709.0:
        return complex('inf')
    return sign * exp(logmag) * (power / abs(power))
