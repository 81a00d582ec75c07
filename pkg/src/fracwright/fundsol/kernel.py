'''Fundamental solution of D^alpha u - (-1)^(n-1) d^2n u / dx^2n = f.

Gamma_b(dx, dy) = dy**b / (2n) sum_k (-c_k) phi(-sigma, b+1, -c_k |t|)
with sigma = alpha/2n and t = dx dy**(-sigma). Time derivatives of
order gamma and spatial derivatives of order s act on the parameters
only, so every kernel needed here is a ShiftedSpec.
'''
from math import log

import numpy as np

from fracwright.errors import DomainError, InvalidParams, RealnessViolation
from fracwright.fundsol.roots import RootSet
from fracwright.specfun.decay import decay_exponent, decay_rate
from fracwright.specfun.gamma import recip_gamma
from fracwright.specfun.wright import wright_phi_array
REALNESS_TOL = 1e-12
UNDERFLOW_EXPONENT = 800.0


class FundamentalSolutionSpec:
    '''Parameters (alpha, n, b) of Gamma_b.

    Parameters
    ----------
    alpha : float
        fractional order, 1 < alpha < 2
    n : int
        the equation has spatial order 2n
    b : float
        index of the kernel
    validation : bool, optional
        also accept alpha = 2, the closed-form beam equation case

    Examples:
        >>> from fracwright.fundsol.kernel import (
        ...     FundamentalSolutionSpec, gamma_b)
        >>> spec = FundamentalSolutionSpec(1.5, 2, 0.5)
        >>> round(gamma_b(spec, 0.0, 1.0), 10)
        -0.3989422804
    '''

    def __init__(self, alpha, n, b, validation=False):
        alpha = float(alpha)
        if int(n) != n or n < 1:
            raise DomainError(f'n must be an integer >= 1: {n}')
        if not (1 < alpha < 2 or (validation and alpha == 2)):
            raise InvalidParams(
                f'alpha must be in (1, 2), or 2 in validation mode: {alpha}')
        self._alpha = alpha
        self._n = int(n)
        self._b = float(b)
        self._validation = bool(validation)
        self._roots = RootSet(self._n)

    def __repr__(self):
        return (
            f'FundamentalSolutionSpec(alpha={self.alpha!r}, n={self.n}, '
            f'b={self.b!r})')

    @property
    def alpha(self):
        return self._alpha

    @property
    def n(self):
        return self._n

    @property
    def b(self):
        return self._b

    @property
    def validation(self):
        return self._validation

    @property
    def is_boundary(self):
        return self._alpha == 2

    @property
    def sigma(self):
        return self._alpha / (2 * self._n)

    @property
    def roots(self):
        return self._roots

    @property
    def decay_rate(self):
        return decay_rate(self._alpha, self._n)

    def shifted(self, time_shift=0.0, space_order=0):
        return ShiftedSpec(self, time_shift, space_order)


class ShiftedSpec:
    '''D^gamma_y d^s_x Gamma_b, itself a root sum of Wright functions.

    The effective index is b_eff = b - gamma - sigma s and the k-th root
    carries the factor (-c_k)**(s+1). For dx < 0 the value picks up
    (-1)**s since Gamma_b depends on |dx| only.
    '''

    def __init__(self, base, time_shift=0.0, space_order=0):
        if int(space_order) != space_order or space_order < 0:
            raise InvalidParams(
                f'space_order must be an integer >= 0: {space_order}')
        self._base = base
        self._time_shift = float(time_shift)
        self._space_order = int(space_order)
        roots = base.roots.as_array()
        self._weights = np.array(
            [(-c) ** (self._space_order + 1) for c in base.roots],
            dtype=complex)
        self._roots = roots

    def __repr__(self):
        return (
            f'ShiftedSpec({self.base!r}, time_shift={self.time_shift!r}, '
            f'space_order={self.space_order})')

    def __eq__(self, other):
        if not isinstance(other, ShiftedSpec):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def base(self):
        return self._base

    @property
    def time_shift(self):
        return self._time_shift

    @property
    def space_order(self):
        return self._space_order

    @property
    def alpha(self):
        return self._base.alpha

    @property
    def n(self):
        return self._base.n

    @property
    def sigma(self):
        return self._base.sigma

    @property
    def b_eff(self):
        shift = self._time_shift + self.sigma * self._space_order
        return self._base.b - shift

    @property
    def key(self):
        '''Return the tuple that determines the kernel values.'''
        return (self.alpha, self.n, self.b_eff, self._space_order)

    def shift_time(self, gamma):
        return ShiftedSpec(
            self._base, self._time_shift + gamma, self._space_order)

    def shift_space(self, s):
        return ShiftedSpec(
            self._base, self._time_shift, self._space_order + s)

    def similarity_profile(self, tau, ctrl=None):
        '''Return g(tau) with kernel(dx, dy) = dy**b_eff g(|dx| dy**-sigma).

        Parameters
        ----------
        tau : float or array_like
            similarity variable, tau >= 0
        ctrl : SeriesControl, optional
            series policy for the Wright evaluations

        Returns
        -------
        g : float or ndarray
            real profile; exactly 0 where the decay exponent exceeds 800
        '''
        tau = np.asarray(tau, dtype=float)
        out = np.zeros(tau.shape)
        exponent = self._decay_exponent(tau)
        live = exponent <= UNDERFLOW_EXPONENT
        if not live.any():
            return out if out.ndim else float(out)
        t = tau[live]
        total = np.zeros(t.shape, dtype=complex)
        beta = self.b_eff + 1
        for c, weight in zip(self._roots, self._weights):
            total += weight * wright_phi_array(self.sigma, beta, -c * t, ctrl)
        total /= 2 * self.n
        scale = np.abs(total.real) + 1 / (2 * self.n)
        if (np.abs(total.imag) > REALNESS_TOL * scale).any():
            worst = np.argmax(np.abs(total.imag) / scale)
            raise RealnessViolation(
                f'imaginary residue {abs(total.imag[worst]):.3e} at '
                f'tau={t[worst]:g} for {self!r}')
        out[live] = total.real
        return out if out.ndim else float(out)

    def _decay_exponent(self, tau):
        if self.alpha == 2:
            return np.zeros(tau.shape)
        rate = decay_rate(self.alpha, self.n)
        return rate * tau ** decay_exponent(self.alpha, self.n)

    def evaluate(self, dx, dy, ctrl=None):
        '''Return D^gamma d^s Gamma_b at (dx, dy), array-capable.

        dx = 0 takes the right branch, the limit dx -> 0+.
        '''
        scalar = np.ndim(dx) == 0 and np.ndim(dy) == 0
        dx, dy = np.broadcast_arrays(
            np.asarray(dx, dtype=float), np.asarray(dy, dtype=float))
        if (dy <= 0).any():
            raise DomainError(f'dy must be positive: {dy.min()}')
        tau = np.abs(dx) * dy ** (-self.sigma)
        value = dy ** self.b_eff * self.similarity_profile(tau, ctrl)
        if self._space_order % 2:
            value = np.where(dx < 0, -value, value)
        return float(value) if scalar else value

    def right_limit(self, dy):
        '''Return the kernel value as dx -> 0+.'''
        total = self._weights.sum() / (2 * self.n)
        return (np.asarray(dy, dtype=float) ** self.b_eff * total.real
                * recip_gamma(self.b_eff + 1))


def as_shifted(spec):
    if isinstance(spec, ShiftedSpec):
        return spec
    return spec.shifted()


def gamma_b(spec, dx, dy, ctrl=None):
    '''Return Gamma_b(dx, dy) for a FundamentalSolutionSpec.'''
    return spec.shifted().evaluate(dx, dy, ctrl)


def shift_time(spec, gamma):
    '''Return the spec of the Riemann-Liouville derivative D^gamma_y.'''
    return as_shifted(spec).shift_time(gamma)


def shift_space(spec, s):
    '''Return the spec of the spatial derivative d^s_x.'''
    return as_shifted(spec).shift_space(s)


def jump_from_roots(spec, s, dy):
    '''Return d^s Gamma_b(0+, dy) - d^s Gamma_b(0-, dy) from the root sums.'''
    right = shift_space(spec, s).right_limit(dy)
    return right * (1 - (-1) ** s)


def diagonal_jump(spec, s):
    '''Return the jump of d^s_x Gamma_b across dx = 0 as a function of dy.

    Nonzero only when s + 1 is a multiple of 2n, where it equals
    ((-1)**(n-1))**((s+1)/2n) dy**(b - sigma s) / Gamma(b + 1 - sigma s).
    '''
    if int(s) != s or s < 0:
        raise InvalidParams(f's must be an integer >= 0: {s}')
    s = int(s)
    n = spec.n
    if (s + 1) % (2 * n):
        def jump(dy):
            return np.zeros(np.shape(dy)) if np.ndim(dy) else 0.0
        return jump
    sign = (-1) ** ((n - 1) * ((s + 1) // (2 * n)))
    b_eff = spec.b - spec.sigma * s
    weight = sign * recip_gamma(b_eff + 1)

    def jump(dy):
        value = weight * np.asarray(dy, dtype=float) ** b_eff
        return value if np.ndim(value) else float(value)
    return jump


def truncation_radius(spec, dy, tail_tol):
    '''Return |dx| beyond which the kernel envelope is below tail_tol.

    R = (dy**(alpha/(2n-alpha)) (ln(1/tail_tol) + 2) / rate)**((2n-alpha)/2n)

    Examples:
        >>> from fracwright.fundsol.kernel import (
        ...     FundamentalSolutionSpec, truncation_radius)
        >>> spec = FundamentalSolutionSpec(1.5, 2, 0.5)
        >>> round(truncation_radius(spec, 1.0, 1e-12), 1)
        33.6
    '''
    if not dy > 0:
        raise DomainError(f'dy must be positive: {dy}')
    if not 0 < tail_tol < 1:
        raise DomainError(f'tail_tol must be in (0, 1): {tail_tol}')
    alpha, n = spec.alpha, spec.n
    rate = decay_rate(alpha, n)
    order = 2 * n - alpha
    return (dy ** (alpha / order) * (log(1 / tail_tol) + 2) / rate) \
        ** (order / (2 * n))
