'''Exponential decay of phi(-alpha/2n, b+1, -c|t|) along the real axis.'''
from math import cos, exp, pi

from fracwright.errors import DomainError


def decay_rate(alpha, n):
    '''Return the exponent coefficient of the fundamental solution decay.

    (1 - r) r**(alpha/(2n - alpha)) cos((n - 1) pi / (2n - alpha)) with
    r = alpha / 2n. Positive for 0 < alpha < 2 and every n >= 1.

    Examples:
        >>> from fracwright.specfun.decay import decay_rate
        >>> decay_rate(1.0, 1)
        0.25
    '''
    if n < 1 or not 0 < alpha < 2 * n:
        raise DomainError(f'decay_rate needs 0 < alpha < 2n: {alpha}, {n}')
    ratio = alpha / (2 * n)
    return ((1 - ratio) * ratio ** (alpha / (2 * n - alpha))
            * cos((n - 1) * pi / (2 * n - alpha)))


def decay_exponent(alpha, n):
    '''Return the power 2n/(2n - alpha) of |t| in the decay exponent.'''
    return 2 * n / (2 * n - alpha)


def wright_decay_bound(alpha, n, b_param, t_abs):
    '''Return the decay envelope of phi(-alpha/2n, b+1, -c |t|).

    Parameters
    ----------
    alpha : float
        fractional order, 1 < alpha <= 2 and alpha < 2n
    n : int
        half the spatial order, so alpha = 2 needs n >= 2
    b_param : float
        index b of the fundamental solution
    t_abs : float
        similarity variable |t| > 0

    Returns
    -------
    envelope : float
        |t|**(-p (b + 1/2)) exp(-decay_rate |t|**p), p = 2n/(2n - alpha),
        i.e. the bound with unit constant
    '''
    if not 1 < alpha <= 2 or not alpha < 2 * n or not t_abs > 0:
        raise DomainError(
            f'wright_decay_bound needs 1 < alpha <= 2, alpha < 2n, t > 0: '
            f'{alpha}, {n}, {t_abs}')
    power = decay_exponent(alpha, n)
    rate = decay_rate(alpha, n)
    return t_abs ** (-power * (b_param + 0.5)) * exp(-rate * t_abs ** power)
