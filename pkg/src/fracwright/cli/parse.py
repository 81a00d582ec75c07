'''Parse grids and argument lists given on the command line.'''
import numpy as np

from fracwright.errors import InvalidParams


def _number_list(values, kind):
    try:
        return np.array([kind(value) for value in values])
    except (TypeError, ValueError):
        raise InvalidParams(f'bad number list: {values!r}') from None


def parse_grid(text):
    '''Return float array for 'a:b:count' or a comma separated list.

    Both endpoints of a:b:count are included. A number or a list of
    numbers (from a JSON config file) is accepted as is.

    Examples:
        >>> from fracwright.cli.parse import parse_grid
        >>> parse_grid('-2:2:5').tolist()
        [-2.0, -1.0, 0.0, 1.0, 2.0]
        >>> parse_grid('0.25,0.5,1').tolist()
        [0.25, 0.5, 1.0]
    '''
    if isinstance(text, (int, float)):
        return np.array([float(text)])
    if isinstance(text, (list, tuple)):
        return _number_list(text, float)
    text = str(text).strip()
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise InvalidParams(f'grid must be a:b:count: {text!r}')
        lo, hi = _number_list(parts[:2], float)
        try:
            count = int(parts[2])
        except ValueError:
            raise InvalidParams(f'bad grid count: {parts[2]!r}') from None
        if count < 1:
            raise InvalidParams(f'grid count must be >= 1: {count}')
        if count == 1:
            return np.array([lo])
        return np.linspace(lo, hi, count)
    if not text:
        raise InvalidParams('empty grid')
    return _number_list(text.split(','), float)


def parse_complex_list(text):
    '''Return complex array for a comma list like 1,-2.5,0.5+1j.

    a:b:count gives a real grid.
    '''
    if isinstance(text, (int, float, complex)):
        return np.array([complex(text)])
    if isinstance(text, (list, tuple)):
        return _number_list(text, complex)
    text = str(text).strip()
    if ':' in text:
        return parse_grid(text).astype(complex)
    if not text:
        raise InvalidParams('empty argument list')
    return _number_list(
        [item.replace(' ', '') for item in text.split(',')], complex)
