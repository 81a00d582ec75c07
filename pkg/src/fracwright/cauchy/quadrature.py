'''Globally adaptive Gauss-Kronrod 7/15 quadrature.'''
import heapq
from math import fsum, isfinite
from sys import float_info

import numpy as np

from fracwright.errors import InvalidParams
from fracwright.util.log import get_logger

logger = get_logger(__name__)

EPS = float_info.epsilon

# abscissae and weights of the 15-point Kronrod rule and its 7-point
# Gauss rule on [-1, 1], from QUADPACK qk15
XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0])
WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714])
WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327])

NODES = np.concatenate([-XGK[:-1], XGK[::-1]])
KRONROD = np.concatenate([WGK[:-1], WGK[::-1]])
GAUSS = np.zeros(15)
GAUSS[[1, 3, 5, 7, 9, 11, 13]] = [
    WG[0], WG[1], WG[2], WG[3], WG[2], WG[1], WG[0]]


class QuadratureConfig:
    '''Tolerances and limits for every integral of the solution formula.

    Parameters
    ----------
    abs_tol, rel_tol : float
        target error, min of the two criteria per integral
    tail_tol : float
        relative size of the kernel at the truncation radius
    max_panels : int
        cap on the number of panels of one adaptive integral
    grading_points : int
        initial panels of the graded time integral in the source term
    '''

    def __init__(
            self, abs_tol=1e-10, rel_tol=1e-10, tail_tol=1e-12,
            max_panels=2000, grading_points=8):
        for name, value in (
                ('abs_tol', abs_tol), ('rel_tol', rel_tol),
                ('tail_tol', tail_tol)):
            if not value > 0:
                raise InvalidParams(f'{name} must be positive: {value}')
        if not tail_tol < 1:
            raise InvalidParams(f'tail_tol must be below 1: {tail_tol}')
        if max_panels < 8:
            raise InvalidParams(f'max_panels must be >= 8: {max_panels}')
        if grading_points < 1:
            raise InvalidParams(
                f'grading_points must be >= 1: {grading_points}')
        self._abs_tol = float(abs_tol)
        self._rel_tol = float(rel_tol)
        self._tail_tol = float(tail_tol)
        self._max_panels = int(max_panels)
        self._grading_points = int(grading_points)

    def __repr__(self):
        return (
            f'QuadratureConfig(abs_tol={self.abs_tol:g}, '
            f'rel_tol={self.rel_tol:g}, tail_tol={self.tail_tol:g}, '
            f'max_panels={self.max_panels}, '
            f'grading_points={self.grading_points})')

    @property
    def abs_tol(self):
        return self._abs_tol

    @property
    def rel_tol(self):
        return self._rel_tol

    @property
    def tail_tol(self):
        return self._tail_tol

    @property
    def max_panels(self):
        return self._max_panels

    @property
    def grading_points(self):
        return self._grading_points

    @property
    def effective_tail_tol(self):
        '''Return min(tail_tol, abs_tol/4).'''
        return min(self._tail_tol, self._abs_tol / 4)

    def as_dict(self):
        return {
            'abs_tol': self.abs_tol, 'rel_tol': self.rel_tol,
            'tail_tol': self.tail_tol, 'max_panels': self.max_panels,
            'grading_points': self.grading_points}


class Estimate:
    '''Numerical value with error estimate and tolerance flag.'''

    def __init__(self, value, error=0.0, flagged=False):
        self.value = float(value)
        self.error = float(error)
        self.flagged = bool(flagged)

    def __repr__(self):
        flag = ', flagged' if self.flagged else ''
        return f'Estimate({self.value!r}, error={self.error:.3g}{flag})'

    def __add__(self, other):
        if not isinstance(other, Estimate):
            return Estimate(self.value + other, self.error, self.flagged)
        return Estimate(
            self.value + other.value, self.error + other.error,
            self.flagged or other.flagged)

    __radd__ = __add__

    def __neg__(self):
        return Estimate(-self.value, self.error, self.flagged)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        return Estimate(
            self.value * factor, self.error * abs(factor), self.flagged)

    __rmul__ = __mul__


class QuadResult(Estimate):
    '''Estimate from adaptive_gk15 with its panel count.'''

    def __init__(self, value, error, flagged, npanel):
        super(QuadResult, self).__init__(value, error, flagged)
        self.npanel = npanel


def gk15_panel(func, lo, hi):
    '''Return (kronrod, error) of one panel with QUADPACK error scaling.'''
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    values = np.asarray(func(center + half * NODES), dtype=float)
    kronrod = half * (KRONROD @ values)
    gauss = half * (GAUSS @ values)
    mean = 0.5 * kronrod
    resasc = abs(half) * (KRONROD @ np.abs(values - mean / half))
    resabs = abs(half) * (KRONROD @ np.abs(values))
    error = abs(kronrod - gauss)
    if resasc != 0 and error != 0:
        error = resasc * min(1.0, (200 * error / resasc) ** 1.5)
    if resabs > float_info.min / (50 * EPS):
        error = max(error, 50 * EPS * resabs)
    if not isfinite(kronrod):
        error = float('inf')
    return kronrod, error


def adaptive_gk15(func, edges, abs_tol, rel_tol, max_panels=2000):
    '''Integrate func over [edges[0], edges[-1]] adaptively.

    Parameters
    ----------
    func : callable
        vectorized integrand, ndarray -> ndarray
    edges : sequence of float
        initial panel breakpoints, increasing
    abs_tol, rel_tol : float
        stop when the total error is below max(abs_tol, rel_tol |value|)
    max_panels : int
        stop and flag the result beyond this many panels

    Returns
    -------
    result : QuadResult
        flagged when the tolerance was not met

    Notes
    -----
    The panel with the largest error is bisected; ties go to the panel
    further left, so the panel sequence and the fsum of panel values in
    position order are reproducible.
    '''
    edges = [float(edge) for edge in edges]
    if len(edges) < 2:
        raise InvalidParams('need at least two edges')
    panels = {}
    heap = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi <= lo:
            raise InvalidParams(f'edges must increase: {lo}, {hi}')
        value, error = gk15_panel(func, lo, hi)
        panels[lo] = (hi, value, error)
        heapq.heappush(heap, (-error, lo))
    total_error = fsum(panel[2] for panel in panels.values())
    while True:
        value = fsum(panels[lo][1] for lo in sorted(panels))
        target = max(abs_tol, rel_tol * abs(value))
        if total_error <= target:
            return QuadResult(value, total_error, False, len(panels))
        if len(panels) >= max_panels:
            logger.warning(
                'adaptive quadrature stopped at %d panels, error %.3g '
                'against target %.3g', len(panels), total_error, target)
            return QuadResult(value, total_error, True, len(panels))
        _, lo = heapq.heappop(heap)
        hi, _, _ = panels.pop(lo)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            logger.warning('adaptive quadrature reached panel width limit')
            panels[lo] = (hi, *gk15_panel(func, lo, hi))
            value = fsum(panels[lo][1] for lo in sorted(panels))
            return QuadResult(value, total_error, True, len(panels))
        for a, b in ((lo, mid), (mid, hi)):
            panel_value, panel_error = gk15_panel(func, a, b)
            panels[a] = (b, panel_value, panel_error)
            heapq.heappush(heap, (-panel_error, a))
        total_error = fsum(panel[2] for panel in panels.values())
