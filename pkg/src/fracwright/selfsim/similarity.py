'''Self-similar solutions of D^alpha_y u = d D^beta_x u.

For general beta the solutions are u_j = y^b t^gamma_j W(d t) with
t = x^beta y^-alpha and gamma_j = 1 - j/beta. For integer beta = p the
s-indexed series u_s combine into Wright functions.
'''
from itertools import count
from math import ceil

from mpmath import mp, mpf

from fracwright.errors import InvalidParams, RatioUndefined
from fracwright.specfun.gamma import recip_gamma, series_term
from fracwright.specfun.series import SeriesControl, sum_series
from fracwright.specfun.wright import GenWrightParams, gen_wright
from fracwright.util.obj import use_or_default


class SelfSimilarSpec:
    '''Parameters of a self-similar family.

    Parameters
    ----------
    alpha : float
        time order, q - 1 < alpha <= q
    beta : float
        space order, p - 1 < beta <= p, beta > alpha and q < p
    j : int
        family index, 1 <= j <= p
    b : float
        free power of y
    d : int, optional
        sign of the space term, +1 or -1
    '''

    def __init__(self, alpha, beta, j, b, d=1):
        alpha, beta = float(alpha), float(beta)
        if not alpha > 0:
            raise InvalidParams(f'alpha must be positive: {alpha}')
        p, q = ceil(beta), ceil(alpha)
        if not (beta > alpha and q < p):
            raise InvalidParams(
                f'need beta > alpha and ceil(alpha) < ceil(beta): '
                f'{alpha}, {beta}')
        if int(j) != j or not 1 <= j <= p:
            raise InvalidParams(f'j must be an integer in 1..{p}: {j}')
        if d not in (1, -1):
            raise InvalidParams(f'd must be +1 or -1: {d}')
        self._alpha = alpha
        self._beta = beta
        self._p = p
        self._q = q
        self._j = int(j)
        self._b = float(b)
        self._d = int(d)

    def __repr__(self):
        return (
            f'SelfSimilarSpec(alpha={self.alpha!r}, beta={self.beta!r}, '
            f'j={self.j}, b={self.b!r}, d={self.d})')

    @property
    def alpha(self):
        return self._alpha

    @property
    def beta(self):
        return self._beta

    @property
    def p(self):
        return self._p

    @property
    def q(self):
        return self._q

    @property
    def j(self):
        return self._j

    @property
    def b(self):
        return self._b

    @property
    def d(self):
        return self._d

    @property
    def gamma(self):
        '''Return the exponent gamma_j = 1 - j/beta of t.'''
        return 1 - self._j / self._beta

    def gamma_args(self, n):
        '''Return the two reciprocal-gamma arguments of c_n.'''
        shift = n + self.gamma
        return -self.alpha * shift + self.b + 1, self.beta * shift + 1


class SimilarityVariable:
    '''Point (x, y) in the open quadrant with t = x^beta y^-alpha.'''

    def __init__(self, x, y, alpha, beta):
        if not (x > 0 and y > 0):
            raise InvalidParams(f'need x > 0 and y > 0: {x}, {y}')
        self.x = float(x)
        self.y = float(y)
        self.t = self.x ** beta * self.y ** -alpha

    def __repr__(self):
        return f'SimilarityVariable(x={self.x!r}, y={self.y!r}, t={self.t!r})'

    @classmethod
    def for_spec(cls, spec, x, y):
        return cls(x, y, spec.alpha, spec.beta)


def coefficient(spec, n):
    '''Return the closed-form coefficient c_n of t**(n + gamma_j).

    c_n = d^n / (Gamma(-alpha(n+gamma)+b+1) Gamma(beta(n+gamma)+1))
    '''
    a, b = spec.gamma_args(n)
    return spec.d ** n * recip_gamma(a) * recip_gamma(b)


def coefficient_ratio(spec, n):
    '''Return c_n / c_{n-1} from the recurrence.

    Raises RatioUndefined when c_{n-1} vanishes at a gamma pole.
    '''
    if int(n) != n or n < 1:
        raise InvalidParams(f'n must be an integer >= 1: {n}')
    a_prev, b_prev = spec.gamma_args(n - 1)
    denominator = recip_gamma(a_prev) * recip_gamma(b_prev)
    if denominator == 0:
        raise RatioUndefined(f'c_{n - 1} = 0 for {spec!r}')
    a, b = spec.gamma_args(n)
    return spec.d * recip_gamma(a) * recip_gamma(b) / denominator


def u_j(spec, pt, ctrl=None):
    '''Return y^b t^gamma_j W_{(-alpha, a), (beta, beta-j+1)}(d t).

    a = -alpha + alpha j / beta + b + 1.
    '''
    alpha, beta, b = spec.alpha, spec.beta, spec.b
    params = GenWrightParams(
        -alpha, -alpha + alpha * spec.j / beta + b + 1,
        beta, beta - spec.j + 1, spec.d * pt.t)
    result = gen_wright(params, ctrl)
    return pt.y ** b * pt.t ** spec.gamma * result.value.real


def _u_s_terms(sigma, p, b, s, d, big_x):
    def terms():
        power = 1.0
        for m in range(1, s + 1):
            power *= big_x / m
        for n in count():
            if n:
                for m in range(p * (n - 1) + s + 1, p * n + s + 1):
                    power *= big_x / m
                power *= d
            yield series_term(power, (b + 1 - sigma * (p * n + s),))
    return terms


def _u_s_terms_mp(sigma, p, b, s, d, big_x):
    def terms():
        msigma, mb, mx = mpf(sigma), mpf(b), mpf(big_x)
        power = mpf(1)
        for m in range(1, s + 1):
            power *= mx / m
        for n in count():
            if n:
                for m in range(p * (n - 1) + s + 1, p * n + s + 1):
                    power *= mx / m
                power *= d
            yield power * mp.rgamma(mb + 1 - msigma * (p * n + s))
    return terms


def u_s(alpha, p, b, s, d, x, y, ctrl=None):
    '''Return the s-indexed solution for integer space order p.

    u_s = y^b sum_n d^n X^(pn+s) / ((pn+s)! Gamma(b + 1 - (alpha/p)(pn+s)))
    with X = x y^(-alpha/p).

    Examples:
        >>> from fracwright.selfsim.similarity import u_s
        >>> u_s(1.5, 4, 0.0, 0, 1, 0.0, 1.0)
        1.0
    '''
    if int(p) != p or p < 1:
        raise InvalidParams(f'p must be an integer >= 1: {p}')
    if int(s) != s or not 0 <= s < p:
        raise InvalidParams(f's must be an integer in 0..{p - 1}: {s}')
    if not y > 0:
        raise InvalidParams(f'y must be positive: {y}')
    ctrl = use_or_default(ctrl, SeriesControl)
    sigma = alpha / p
    big_x = x * y ** -sigma
    result = sum_series(
        _u_s_terms(sigma, p, b, s, d, big_x), ctrl,
        extended_terms=_u_s_terms_mp(sigma, p, b, s, d, big_x))
    return y ** b * result.value.real


def combination_coefficients(c, p):
    '''Return [c**0, ..., c**(p-1)], the weights that sum u_s to a Wright.'''
    return [c ** s for s in range(p)]


def integer_beta_combination(alpha, p, b, coeffs, x, y, d=1, ctrl=None):
    '''Return sum_s coeffs[s] u_s(x, y).

    With coeffs = combination_coefficients(c, p) and c**p = d, the sum
    equals y^b phi(-alpha/p, b+1, c x y^(-alpha/p)).
    '''
    if len(coeffs) != p:
        raise InvalidParams(f'need {p} coefficients, got {len(coeffs)}')
    total = 0
    for s, weight in enumerate(coeffs):
        if weight != 0:
            total += weight * u_s(alpha, p, b, s, d, x, y, ctrl)
    if any(isinstance(weight, complex) for weight in coeffs):
        return complex(total)
    return float(total)
