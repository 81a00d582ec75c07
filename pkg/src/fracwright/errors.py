class FracWrightError(Exception):
    '''Base class for errors raised by fracwright.'''

    def __init__(self, message):
        super(FracWrightError, self).__init__(message)
        self.message = message


class InvalidParams(FracWrightError, ValueError):
    '''Parameters violate the preconditions of an operation.'''


class DomainError(FracWrightError, ValueError):
    '''Argument outside the domain of a function.'''


class NumericalError(FracWrightError):
    '''A computation ran but its number cannot be trusted.'''


class NonConvergence(NumericalError):
    '''Series or iteration did not converge within its term budget.'''


class CatastrophicCancellation(NumericalError):
    '''Series sum lost its significant digits to cancellation.'''


class RatioUndefined(FracWrightError):
    '''Coefficient ratio has a vanishing denominator.'''


class RealnessViolation(NumericalError):
    '''Root sum that must be real has a significant imaginary part.'''


class ToleranceNotMet(NumericalError):
    '''Numerical estimate did not reach the requested tolerance.'''


class UnknownFunction(FracWrightError, ValueError):
    '''Function name is not in the catalog.'''


class GrowthViolation(FracWrightError, ValueError):
    '''Data grows too fast for the fundamental solution to absorb.'''


def row_flag(err):
    '''Return the output flag for a value lost to err.'''
    if isinstance(err, CatastrophicCancellation):
        return 'cancel'
    return 'tol'
