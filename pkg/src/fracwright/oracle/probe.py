'''Finite-difference probes with Richardson extrapolation.'''
from math import comb

import numpy as np

from fracwright.errors import InvalidParams, ToleranceNotMet
from fracwright.fundsol.kernel import gamma_b


def _difference(func, x, order, h, side):
    '''Return the order-th difference quotient with step h.'''
    if side == 0:
        offsets = [(order / 2 - k) * h for k in range(order + 1)]
        signs = [(-1) ** k for k in range(order + 1)]
        scale = h ** order
    else:
        offsets = [side * (order - k) * h for k in range(order + 1)]
        signs = [(-1) ** k for k in range(order + 1)]
        scale = (side * h) ** order
    values = np.asarray(func(x + np.array(offsets)), dtype=float)
    weights = np.array([s * comb(order, k) for k, s in enumerate(signs)])
    return float(weights @ values) / scale


def richardson_derivative(func, x, order, h0, levels=5, side=0):
    '''Return (derivative, error estimate) of func at x.

    Parameters
    ----------
    func : callable
        vectorized function of one variable
    x : float
        evaluation point
    order : int
        derivative order, >= 1
    h0 : float
        largest step; steps are h0 / 2**i
    levels : int, optional
        number of steps
    side : {0, 1, -1}, optional
        central differences (error in even powers of h), or one-sided
        differences using points at and to the right (1) or left (-1)
        of x

    Returns
    -------
    value : float
        extrapolated derivative
    error : float
        change made by the last extrapolation level
    '''
    if order < 1 or levels < 2:
        raise InvalidParams(f'need order >= 1, levels >= 2: {order}, {levels}')
    if side not in (0, 1, -1):
        raise InvalidParams(f'side must be 0, 1 or -1: {side}')
    power = 2 if side == 0 else 1
    table = []
    for i in range(levels):
        row = [_difference(func, x, order, h0 / 2 ** i, side)]
        for j in range(1, i + 1):
            factor = 2 ** (power * j)
            row.append(row[j - 1]
                       + (row[j - 1] - table[i - 1][j - 1]) / (factor - 1))
        table.append(row)
    value = table[-1][-1]
    error = abs(value - table[-2][-2])
    return value, error


def jump_probe(spec, s, dy, h0=None, levels=5, rel_tol=1e-6):
    '''Return d^s Gamma_b(0+, dy) - d^s Gamma_b(0-, dy) by differences.

    Each side uses one-sided differences on its own branch only.
    '''
    if int(s) != s or s < 1:
        raise InvalidParams(f's must be an integer >= 1: {s}')
    if h0 is None:
        h0 = 0.5 * dy ** spec.sigma

    def kernel(dx):
        return gamma_b(spec, dx, dy)

    right, right_error = richardson_derivative(
        kernel, 0.0, s, h0, levels, side=1)
    left, left_error = richardson_derivative(
        kernel, 0.0, s, h0, levels, side=-1)
    jump = right - left
    error = right_error + left_error
    scale = max(abs(right), abs(left), dy ** (spec.b - spec.sigma * s))
    if error > 1e3 * rel_tol * scale:
        raise ToleranceNotMet(
            f'one-sided differences unresolved: error {error:.3g} against '
            f'scale {scale:.3g}')
    return jump
