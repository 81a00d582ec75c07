'''Extended-precision brute-force Wright series.'''
from itertools import count

from mpmath import mp, mpc, mpf

from fracwright.errors import InvalidParams, NonConvergence
from fracwright.specfun.wright import GenWrightParams, WrightParams

MAX_TERMS = 100_000
# 1/Gamma(x) <= 1.13 for x > 0, attained near x = 1.4616
RECIP_GAMMA_MAX = mpf('1.1293')


def recip_gamma_bound(x):
    '''Return an upper bound of |1/Gamma(x)| for real x.

    For x <= 0 the reflection formula gives |1/Gamma(x)| <= Gamma(1-x)/pi.
    '''
    if x > 0:
        return RECIP_GAMMA_MAX
    return mp.gamma(1 - x) / mp.pi


def _wright_setup(params):
    sigma, beta, z = mpf(params.sigma), mpf(params.beta), mpc(params.z)

    def term(k, power):
        return power * mp.rgamma(beta - sigma * k)

    def bound(k, size):
        return size * recip_gamma_bound(beta - sigma * k)

    def step(k, power):
        return power * z / k

    return term, bound, step


def _gen_wright_setup(params):
    mu, a = mpf(params.mu), mpf(params.a)
    nu, b = mpf(params.nu), mpf(params.b)
    z = mpc(params.z)

    def term(k, power):
        return power * mp.rgamma(mu * k + a) * mp.rgamma(nu * k + b)

    def bound(k, size):
        return (size * recip_gamma_bound(mu * k + a)
                * recip_gamma_bound(nu * k + b))

    def step(k, power):
        return power * z

    return term, bound, step


def brute_series(params, digits=30):
    '''Return the Wright or generalized Wright series as an mpmath mpc.

    Parameters
    ----------
    params : WrightParams or GenWrightParams
        function arguments
    digits : int
        decimal digits of the result, 30 to 60

    Notes
    -----
    Summation runs at digits + 10 working digits and stops once two
    consecutive term bounds fall below 10**-digits |sum| / 4 with a
    bound ratio under 1/2, so the geometric tail is below the target.
    '''
    if not 30 <= digits <= 60:
        raise InvalidParams(f'digits must be in 30..60: {digits}')
    if isinstance(params, WrightParams):
        setup = _wright_setup
    elif isinstance(params, GenWrightParams):
        setup = _gen_wright_setup
    else:
        raise InvalidParams(f'not a Wright parameter set: {params!r}')
    with mp.workdps(digits + 10):
        term, bound, step = setup(params)
        target = mpf(10) ** -digits
        total = mpc(0)
        power = mpc(1)
        previous = None
        for k in count():
            if k >= MAX_TERMS:
                raise NonConvergence(
                    f'brute series needs more than {MAX_TERMS} terms '
                    f'for {params!r}')
            if k:
                power = step(k, power)
            total += term(k, power)
            current = bound(k, abs(power))
            if previous is not None and k >= 8:
                small = current <= target * abs(total) / 4
                shrinking = previous > 0 and current <= previous / 2
                if small and (shrinking or current == 0):
                    break
            previous = current
        return +total
