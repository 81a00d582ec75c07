'''Catalog of initial data and source functions with growth certificates.

Entries are written name:p1,p2,... and may carry a time factor
|ypow:q, giving f(x, y) = g(x) y**q.
'''
import numpy as np

from fracwright.errors import GrowthViolation, InvalidParams, UnknownFunction
from fracwright.specfun.decay import decay_exponent, decay_rate

GROWTH_SAFETY = 0.9


def _zero(x, params):
    return np.zeros(np.shape(x))


def _constant(x, params):
    return np.full(np.shape(x), params[0])


def _one(x, params):
    return np.ones(np.shape(x))


def _gaussian(x, params):
    a, x0, w = params
    return a * np.exp(-((x - x0) / w) ** 2)


def _cosgauss(x, params):
    a, x0, w, k = params
    return np.cos(k * (x - x0)) * _gaussian(x, (a, x0, w))


def _polygauss(x, params):
    a, x0, w = params[:3]
    poly = np.polynomial.polynomial.polyval(x - x0, params[3:])
    return poly * _gaussian(x, (a, x0, w))


def _bump(x, params):
    a, x0, r = params
    u = np.asarray((x - x0) / r, dtype=float)
    inside = np.abs(u) < 1
    value = np.zeros(u.shape)
    value[inside] = a * np.exp(1 - 1 / (1 - u[inside] ** 2))
    return value if value.ndim else float(value)


def _expgrow(x, params):
    k, power = params
    return np.exp(k * np.abs(x) ** power)


# name: (function, accepted parameter counts, None if variadic)
CATALOG = {
    'zero': (_zero, (0,)),
    'one': (_one, (0,)),
    'const': (_constant, (1,)),
    'gaussian': (_gaussian, (3,)),
    'shifted-gaussian': (_gaussian, (3,)),
    'cosgauss': (_cosgauss, (4,)),
    'polygauss': (_polygauss, None),
    'bump': (_bump, (3,)),
    'expgrow': (_expgrow, (1,)),
}


class CatalogFunction:
    '''Vectorized catalog function g(x) y**ypow with its growth certificate.

    Parameters
    ----------
    name : str
        catalog entry
    params : sequence of float
        entry parameters
    growth_k : float
        the function is bounded by M exp(growth_k |x|**(2n/(2n-alpha)))
    ypow : float, optional
        power of the time factor
    text : str, optional
        the text the function was parsed from
    '''

    def __init__(self, name, params=(), growth_k=0.0, ypow=0.0, text=None):
        if name not in CATALOG:
            raise UnknownFunction(f'unknown function: {name}')
        self._name = name
        self._params = tuple(float(param) for param in params)
        self._func = CATALOG[name][0]
        self._growth_k = float(growth_k)
        self._ypow = float(ypow)
        self._text = text if text is not None else self._default_text()

    def __repr__(self):
        return f'CatalogFunction({self._text!r})'

    def __str__(self):
        return self._text

    def _default_text(self):
        text = self._name
        if self._params:
            text += ':' + ','.join(f'{param:g}' for param in self._params)
        if self._ypow:
            text += f'|ypow:{self._ypow:g}'
        return text

    @property
    def name(self):
        return self._name

    @property
    def params(self):
        return self._params

    @property
    def growth_k(self):
        return self._growth_k

    @property
    def ypow(self):
        return self._ypow

    @property
    def text(self):
        return self._text

    @property
    def is_zero(self):
        return self._name == 'zero' or (
            self._name in ('const', 'gaussian', 'shifted-gaussian',
                           'cosgauss', 'polygauss', 'bump')
            and self._params[0] == 0)

    @property
    def breakpoints(self):
        '''Return x where the function is not analytic.'''
        if self._name == 'bump':
            _, x0, r = self._params
            return (x0 - r, x0 + r)
        if self._name == 'expgrow':
            return (0.0,)
        return ()

    def __call__(self, x, y=None):
        value = self._func(np.asarray(x, dtype=float), self._params)
        if self._ypow and y is not None:
            value = value * np.asarray(y, dtype=float) ** self._ypow
        return value

    def check_growth(self, alpha, n):
        '''Raise GrowthViolation unless growth_k < 0.9 decay_rate.'''
        limit = GROWTH_SAFETY * decay_rate(alpha, n)
        if self._growth_k >= limit:
            raise GrowthViolation(
                f'{self._text}: growth_k = {self._growth_k:g} is not below '
                f'{GROWTH_SAFETY} * decay_rate = {limit:g} '
                f'(decay_rate = {decay_rate(alpha, n):g})')


def _parse_params(text):
    if not text:
        return ()
    try:
        return tuple(float(item) for item in text.split(','))
    except ValueError:
        raise InvalidParams(f'bad parameter list: {text!r}') from None


def parse_function_spec(text, alpha, n, check=True):
    '''Return CatalogFunction for text like gaussian:1,0,1|ypow:1.

    Parameters
    ----------
    text : str
        name:params specification, optionally followed by |ypow:q
    alpha, n : float, int
        the problem the function is data for; expgrow needs the
        exponent 2n/(2n-alpha) and admissibility needs decay_rate
    check : bool, optional
        raise GrowthViolation for inadmissible growth

    Examples:
        >>> from fracwright.cauchy.catalog import parse_function_spec
        >>> parse_function_spec('gaussian:1,0,1', 1.5, 2).growth_k
        0.0
    '''
    text = text.strip()
    body, _, modifier = text.partition('|')
    name, _, arglist = body.partition(':')
    name = name.strip().lower()
    if name not in CATALOG:
        raise UnknownFunction(
            f'unknown function {name!r}; known: {", ".join(CATALOG)}')
    params = _parse_params(arglist)
    counts = CATALOG[name][1]
    if counts is None:
        if len(params) < 4:
            raise InvalidParams(
                f'{name} needs a,x0,w and at least one coefficient')
    elif len(params) not in counts:
        raise InvalidParams(
            f'{name} takes {counts[0]} parameters, got {len(params)}')
    if name in ('gaussian', 'shifted-gaussian', 'cosgauss', 'polygauss'):
        if not params[2] > 0:
            raise InvalidParams(f'{name} width must be positive')
    if name == 'bump' and not params[2] > 0:
        raise InvalidParams('bump radius must be positive')
    ypow = 0.0
    if modifier:
        key, _, value = modifier.partition(':')
        if key.strip() != 'ypow':
            raise InvalidParams(f'unknown modifier {key!r}')
        ypow = float(value)
        if ypow < 0:
            raise InvalidParams(f'ypow must be >= 0: {ypow}')
    growth_k = 0.0
    if name == 'expgrow':
        growth_k = params[0]
        params = (params[0], decay_exponent(alpha, n))
    func = CatalogFunction(name, params, growth_k, ypow, text=text)
    if check:
        func.check_growth(alpha, n)
    return func
