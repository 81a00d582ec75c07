import numpy as np

from fracwright.cauchy.catalog import CatalogFunction, parse_function_spec
from fracwright.errors import InvalidParams
from fracwright.fundsol.kernel import FundamentalSolutionSpec


class CauchyProblemSpec:
    '''Cauchy problem D^alpha u - (-1)^(n-1) d^2n u = f with RL data.

    lim D^(alpha-1) u = phi and lim D^(alpha-2) u = psi as y -> 0.

    Parameters
    ----------
    alpha : float
        fractional order, 1 < alpha < 2
    n : int
        the equation has spatial order 2n
    phi, psi, f : CatalogFunction or str
        data; strings are parsed with parse_function_spec

    Notes
    -----
    The solution returned for this problem is the convolution
    representation with the fundamental solution. Uniqueness is not
    asserted.
    '''

    def __init__(self, alpha, n, phi='zero', psi='zero', f='zero'):
        alpha = float(alpha)
        if not 1 < alpha < 2:
            raise InvalidParams(f'alpha must be in (1, 2): {alpha}')
        if int(n) != n or n < 1:
            raise InvalidParams(f'n must be an integer >= 1: {n}')
        self._alpha = alpha
        self._n = int(n)
        self._phi = self._as_function(phi)
        self._psi = self._as_function(psi)
        self._f = self._as_function(f)

    def _as_function(self, func):
        if not isinstance(func, CatalogFunction):
            func = parse_function_spec(str(func), self._alpha, self._n)
        func.check_growth(self._alpha, self._n)
        return func

    def __repr__(self):
        return f'CauchyProblemSpec({self.fingerprint})'

    @property
    def alpha(self):
        return self._alpha

    @property
    def n(self):
        return self._n

    @property
    def sigma(self):
        return self._alpha / (2 * self._n)

    @property
    def phi(self):
        return self._phi

    @property
    def psi(self):
        return self._psi

    @property
    def f(self):
        return self._f

    @property
    def fingerprint(self):
        return (
            f'alpha={self.alpha!r};n={self.n};phi={self.phi};'
            f'psi={self.psi};f={self.f}')

    def data(self, which):
        '''Return (function, kernel index j) for 'phi' or 'psi'.'''
        if which in ('phi', 1):
            return self._phi, 1
        if which in ('psi', 2):
            return self._psi, 2
        raise InvalidParams(f'which must be phi or psi: {which!r}')

    def kernel(self, j):
        '''Return Gamma_b with b = alpha - alpha/2n - j.'''
        return FundamentalSolutionSpec(
            self._alpha, self._n, self._alpha - self.sigma - j)

    def with_data(self, phi=None, psi=None, f=None):
        '''Return a copy with some data functions replaced.'''
        return CauchyProblemSpec(
            self._alpha, self._n,
            self._phi if phi is None else phi,
            self._psi if psi is None else psi,
            self._f if f is None else f)


class GridSolution:
    '''Solution values on a tensor grid, values[i, k] at (x_i, y_k).

    flags holds a label per node, 'ok' for a trusted value, or booleans
    that mean 'tol' where True.
    '''

    def __init__(self, x_nodes, y_nodes, values, error_estimates, flags,
                 problem_fingerprint):
        self.x_nodes = np.asarray(x_nodes, dtype=float)
        self.y_nodes = np.asarray(y_nodes, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self.error_estimates = np.asarray(error_estimates, dtype=float)
        flags = np.asarray(flags)
        if flags.dtype.kind not in 'OU':
            flags = np.where(flags.astype(bool), 'tol', 'ok')
        self.labels = flags.astype(str)
        self.flags = self.labels != 'ok'
        self.problem_fingerprint = problem_fingerprint
        shape = (len(self.x_nodes), len(self.y_nodes))
        for name in ('values', 'error_estimates', 'flags'):
            if getattr(self, name).shape != shape:
                raise InvalidParams(
                    f'{name} shape {getattr(self, name).shape} does not '
                    f'match grid {shape}')

    def __repr__(self):
        return (
            f'GridSolution({len(self.x_nodes)}x{len(self.y_nodes)}, '
            f'flagged={int(self.flags.sum())}, '
            f'problem={self.problem_fingerprint!r})')

    @property
    def any_flagged(self):
        return bool(self.flags.any())

    def rows(self):
        '''Yield (x, y, u, err_est, label) in x-major order.'''
        for i, x in enumerate(self.x_nodes):
            for k, y in enumerate(self.y_nodes):
                yield (x, y, self.values[i, k], self.error_estimates[i, k],
                       str(self.labels[i, k]))
