from itertools import count
from sys import float_info

from mpmath import mp, mpf

from fracwright.errors import (
    CatastrophicCancellation, InvalidParams, NonConvergence)
from fracwright.util.log import get_logger

logger = get_logger(__name__)

EPS = float_info.epsilon


class SeriesControl:
    '''Termination and cancellation policy for power-series summation.

    Parameters
    ----------
    rel_tol : float
        target relative error of the returned sum
    consecutive_small : int
        number of consecutive negligible terms that ends summation
    max_terms : int
        hard cap on the number of terms
    cancellation_ratio_limit : float
        max|term| / |sum| above which the double sum is not trusted
    min_terms : int
        summation never stops before this many terms
    extended_digits : int
        decimal digits of the mpmath re-summation

    Notes
    -----
    Half of rel_tol is allotted to truncation (the stopping rule) and
    half to rounding.
    '''

    def __init__(
            self, rel_tol=1e-14, consecutive_small=3, max_terms=500,
            cancellation_ratio_limit=1e8, min_terms=8, extended_digits=32):
        if not rel_tol > 0:
            raise InvalidParams(f'rel_tol must be positive: {rel_tol}')
        if max_terms < 1:
            raise InvalidParams(f'max_terms must be >= 1: {max_terms}')
        if consecutive_small < 1:
            raise InvalidParams(
                f'consecutive_small must be >= 1: {consecutive_small}')
        if not cancellation_ratio_limit >= 1:
            raise InvalidParams(
                'cancellation_ratio_limit must be >= 1: '
                f'{cancellation_ratio_limit}')
        self._rel_tol = float(rel_tol)
        self._consecutive_small = int(consecutive_small)
        self._max_terms = int(max_terms)
        self._cancellation_ratio_limit = float(cancellation_ratio_limit)
        self._min_terms = int(min_terms)
        self._extended_digits = int(extended_digits)

    def __repr__(self):
        return (
            f'SeriesControl(rel_tol={self.rel_tol:g}, '
            f'consecutive_small={self.consecutive_small}, '
            f'max_terms={self.max_terms}, '
            f'cancellation_ratio_limit={self.cancellation_ratio_limit:g})')

    @property
    def rel_tol(self):
        return self._rel_tol

    @property
    def consecutive_small(self):
        return self._consecutive_small

    @property
    def max_terms(self):
        return self._max_terms

    @property
    def cancellation_ratio_limit(self):
        return self._cancellation_ratio_limit

    @property
    def min_terms(self):
        return self._min_terms

    @property
    def extended_digits(self):
        return self._extended_digits

    @property
    def stop_tol(self):
        '''Relative size of a negligible term.'''
        return 0.5 * self._rel_tol


class SeriesResult:
    '''Value of a summed series with its error estimate.'''

    def __init__(self, value, error, nterm, max_term, extended=False):
        self.value = value
        self.error = error
        self.nterm = nterm
        self.max_term = max_term
        self.extended = extended

    def __repr__(self):
        return (
            f'SeriesResult(value={self.value!r}, error={self.error:.3g}, '
            f'nterm={self.nterm}, extended={self.extended})')

    @property
    def cancellation_ratio(self):
        '''Return largest term magnitude relative to the sum.'''
        if self.value == 0:
            return 0.0 if self.max_term == 0 else float('inf')
        return self.max_term / abs(self.value)


def _accumulate(terms, ctrl, tiny):
    '''Return (sum, abssum, maxterm, tail, nterm) once ctrl says stop.'''
    total = 0
    abssum = 0
    maxterm = 0
    nsmall = 0
    tail = 0
    for k, term in zip(count(), terms):
        if k >= ctrl.max_terms:
            raise NonConvergence(
                f'series not converged after {ctrl.max_terms} terms')
        total += term
        size = abs(term)
        abssum += size
        if size > maxterm:
            maxterm = size
        if size <= ctrl.stop_tol * abs(total) + tiny:
            nsmall += 1
            tail = max(tail, size)
        else:
            nsmall = 0
            tail = 0
        if nsmall >= ctrl.consecutive_small and k + 1 >= ctrl.min_terms:
            return total, abssum, maxterm, tail, k + 1
    raise NonConvergence('term generator ended before convergence')


def sum_series(terms, ctrl, extended_terms=None):
    '''Sum a power series with cancellation monitoring.

    Parameters
    ----------
    terms : callable
        returns an iterator of complex double-precision terms
    ctrl : SeriesControl
        termination and cancellation policy
    extended_terms : callable, optional
        returns an iterator of mpmath terms at the current working
        precision; enables the extended-precision fallback

    Returns
    -------
    result : SeriesResult
        value is a Python complex

    Notes
    -----
    The double-precision rounding error is estimated as 2*eps times the
    sum of term magnitudes. When that exceeds half of rel_tol*|sum|, or
    the largest term exceeds cancellation_ratio_limit*|sum|, the series
    is summed again with mpmath at ctrl.extended_digits digits.
    '''
    total, abssum, maxterm, tail, nterm = _accumulate(terms(), ctrl, 0.0)
    rounding = 2 * EPS * abssum
    ratio_ok = maxterm <= ctrl.cancellation_ratio_limit * abs(total)
    if rounding <= ctrl.stop_tol * abs(total) and ratio_ok or maxterm == 0:
        return SeriesResult(
            complex(total), rounding + tail, nterm, maxterm)
    if extended_terms is None:
        raise CatastrophicCancellation(
            f'max term {maxterm:.3e} against sum {abs(total):.3e}')
    logger.debug(
        'extended re-summation, max term %.3e, sum %.3e',
        maxterm, abs(total))
    with mp.workdps(ctrl.extended_digits):
        unit = mpf(10) ** (-ctrl.extended_digits)
        total, abssum, maxterm, tail, nterm = _accumulate(
            extended_terms(), ctrl, mpf(0))
        rounding = 2 * unit * abssum
        if rounding > ctrl.stop_tol * abs(total):
            raise CatastrophicCancellation(
                f'max term {float(maxterm):.3e} against sum '
                f'{float(abs(total)):.3e} after {ctrl.extended_digits}'
                '-digit re-summation')
        return SeriesResult(
            complex(total), float(rounding + tail), nterm,
            float(maxterm), extended=True)
