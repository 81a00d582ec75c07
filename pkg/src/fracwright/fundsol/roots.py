from cmath import exp as cexp
from math import pi

import numpy as np

from fracwright.errors import DomainError


class RootSet:
    '''Roots c_k = exp(i pi (n - 1 - 2k) / 2n), k = 0..n-1.

    These are the solutions of c**(2n) = (-1)**(n-1) with Re c > 0.
    '''

    def __init__(self, n):
        if n < 1:
            raise DomainError(f'n must be >= 1: {n}')
        self._n = int(n)
        self._roots = tuple(
            cexp(1j * pi * (n - 1 - 2 * k) / (2 * n)) for k in range(n))

    def __repr__(self):
        return f'RootSet(n={self.n})'

    def __iter__(self):
        return iter(self._roots)

    def __len__(self):
        return self._n

    def __getitem__(self, k):
        return self._roots[k]

    @property
    def n(self):
        return self._n

    @property
    def roots(self):
        return self._roots

    def as_array(self):
        return np.array(self._roots, dtype=complex)


def roots(n):
    '''Return RootSet for the equation of spatial order 2n.'''
    return RootSet(n)
