from math import isfinite


def deviation_str(deviation, nsigfig=3):
    """Return deviation in fixed-width scientific notation."""
    if not isfinite(deviation):
        return f'{deviation!s:>{nsigfig + 7}}'
    return f'{deviation:.{nsigfig - 1}e}'
