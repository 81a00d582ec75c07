'''Named validation suites comparing the solver against closed forms.

Each suite returns CheckResult objects; report() renders them as a
fixed-width text table that is identical from run to run.
'''
from math import exp, gamma, pi, sqrt

import numpy as np

from fracwright.cauchy.problem import CauchyProblemSpec
from fracwright.cauchy.quadrature import QuadratureConfig
from fracwright.cauchy.solver import (
    check_initial_limits, evaluate, expected_mass, kernel_mass, residual,
    solve)
from fracwright.errors import FracWrightError, InvalidParams
from fracwright.fundsol.kernel import (
    FundamentalSolutionSpec, diagonal_jump, gamma_b, jump_from_roots,
    shift_time)
from fracwright.oracle.probe import jump_probe
from fracwright.oracle.rl import RLDerivativeRequest, rl_derivative_quadrature
from fracwright.specfun.fresnel import fresnel_c, fresnel_s
from fracwright.util.log import get_logger
from fracwright.util.obj import use_or_default
from fracwright.util.string import deviation_str

logger = get_logger(__name__)


class CheckResult:
    '''Outcome of one comparison.

    Parameters
    ----------
    suite : str
        suite the check belongs to
    name : str
        what was compared
    deviation : float
        absolute or relative deviation, as the check defines it
    tolerance : float
        largest acceptable deviation
    passed : bool, optional
        default deviation <= tolerance
    detail : str, optional
        note shown in the report, e.g. an error message
    '''

    def __init__(self, suite, name, deviation, tolerance, passed=None,
                 detail=''):
        self.suite = suite
        self.name = name
        self.deviation = float(deviation)
        self.tolerance = float(tolerance)
        if passed is None:
            passed = self.deviation <= self.tolerance
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        return (
            f'CheckResult({self.suite!r}, {self.name!r}, '
            f'deviation={self.deviation:.3g}, passed={self.passed})')


def _relative(value, exact):
    return abs(value - exact) / abs(exact)


def check_fresnel_beam(cfg):
    '''Compare -Gamma_1/2 for alpha = 2, n = 2 with its Fresnel form.'''
    spec = FundamentalSolutionSpec(2, 2, 0.5, validation=True)
    tau = np.linspace(0, 5, 51)
    results = []
    for t in (0.5, 1.0, 2.0):
        dx = tau * sqrt(t)
        arg = tau ** 2 / 4
        beam = (sqrt(t / pi) * np.sin(arg + pi / 4)
                + dx / 2 * (fresnel_s(arg) - fresnel_c(arg)))
        kernel = -gamma_b(spec, dx, t)
        deviation = np.max(np.abs(kernel - beam))
        results.append(CheckResult(
            'fresnel', f'beam t={t:g}', deviation, 1e-8))
    return results


SHIFT_POINTS = (
    (0.3, 0.8, 0.25), (0.3, 0.8, 0.5), (0.5, 1.0, 0.25),
    (0.5, 1.0, 0.75), (1.0, 1.0, 0.5), (-0.7, 1.2, 0.25),
    (-0.7, 1.2, 0.6), (0.2, 0.5, 0.4), (1.5, 2.0, 0.3),
    (0.8, 0.6, 0.9))


def check_time_shift(cfg):
    '''Compare shifted kernels with RL quadrature of the kernel in y.'''
    spec = FundamentalSolutionSpec(1.5, 2, 0.5)
    results = []
    for dx, dy, order in SHIFT_POINTS:
        closed = shift_time(spec, order).evaluate(dx, dy)
        req = RLDerivativeRequest(
            order, lambda eta, dx=dx: gamma_b(spec, dx, eta), dy)
        value = rl_derivative_quadrature(req)
        results.append(CheckResult(
            'lemma1', f'D^{order:g} at ({dx:g}, {dy:g})',
            _relative(value, closed), 1e-6))
    return results


JUMP_CASES = ((2, 3), (3, 5), (2, 1), (2, 2), (3, 1), (3, 4))


def check_jump(cfg):
    '''Compare the closed-form diagonal jump with one-sided differences.'''
    results = []
    for n, s in JUMP_CASES:
        spec = FundamentalSolutionSpec(1.4, n, 0.3)
        exact = diagonal_jump(spec, s)(1.0)
        probe = jump_probe(spec, s, 1.0)
        roots = jump_from_roots(spec, s, 1.0)
        if exact:
            deviation = _relative(probe, exact)
            tolerance = 1e-4
        else:
            deviation = abs(probe)
            tolerance = 1e-6
        results.append(CheckResult(
            'lemma2', f'n={n} s={s} differences', deviation, tolerance))
        results.append(CheckResult(
            'lemma2', f'n={n} s={s} root sums', abs(roots - exact),
            1e-12 * max(1.0, abs(exact))))
    return results


LIMIT_SEQUENCE = (1e-1, 1e-2, 1e-3, 1e-4)


def check_delta_family(cfg):
    '''Follow D^(alpha-1) u and D^(alpha-2) u towards the initial data.'''
    x = 0.3
    target = exp(-x ** 2)
    results = []
    spec = CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1')
    first, _ = check_initial_limits(spec, x, LIMIT_SEQUENCE, cfg)
    errors = [abs(value - target) for value in first]
    monotone = all(b < a for a, b in zip(errors, errors[1:]))
    results.append(CheckResult(
        'lemma3', 'phi limit', errors[-1], 1e-3,
        passed=monotone and errors[-1] <= 1e-3,
        detail='' if monotone else 'error not decreasing'))
    spec = CauchyProblemSpec(1.5, 2, psi='gaussian:1,0,1')
    first, second = check_initial_limits(spec, x, LIMIT_SEQUENCE, cfg)
    results.append(CheckResult(
        'lemma3', 'psi limit', abs(second[-1] - target), 1e-3))
    results.append(CheckResult(
        'lemma3', 'psi under D^(alpha-1)', abs(first[-1]), 1e-3))
    return results


MASS_CASES = ((1, 1), (2, 1), (2, 2), (1, 2))


def check_kernel_mass(cfg):
    '''Integrate shifted kernels over x against their closed forms.'''
    results = []
    for s, j in MASS_CASES:
        for y in (0.5, 1.0):
            value = kernel_mass(1.5, 2, s, j, y, cfg).value
            exact = expected_mass(s, j, y)
            if exact:
                deviation, tolerance = _relative(value, exact), 1e-6
            else:
                deviation, tolerance = abs(value), 1e-8
            results.append(CheckResult(
                'eq19', f's={s} j={j} y={y:g}', deviation, tolerance))
    return results


def check_manufactured(cfg):
    '''Solve with constant data, whose solutions are powers of y.'''
    alpha = 1.5
    x_nodes = [-1.0, 0.0, 0.5, 2.0]
    y_nodes = [0.25, 0.5, 1.0]
    cases = (
        ('phi=1', {'phi': 'one'},
         lambda y: y ** (alpha - 1) / gamma(alpha)),
        ('psi=1', {'psi': 'one'},
         lambda y: y ** (alpha - 2) / gamma(alpha - 1)),
        ('f=1', {'f': 'one'},
         lambda y: y ** alpha / gamma(alpha + 1)))
    results = []
    for name, data, exact in cases:
        grid = solve(
            CauchyProblemSpec(alpha, 2, **data), x_nodes, y_nodes, cfg)
        expected = np.array([[exact(y) for y in grid.y_nodes]
                             for _ in grid.x_nodes])
        deviation = np.max(np.abs(grid.values - expected))
        results.append(CheckResult(
            'manufactured', name, deviation, 1e-8,
            passed=deviation <= 1e-8 and not grid.any_flagged,
            detail='flagged' if grid.any_flagged else ''))
    return results


RESIDUAL_POINTS = tuple(
    (x, y) for x in (-0.5, 0.0, 0.5, 1.0, 1.5) for y in (0.5, 0.75))


def check_residual(cfg):
    '''Evaluate the equation residual of Gaussian-data solutions.'''
    results = []
    for alpha in (1.3, 1.5, 1.9):
        spec = CauchyProblemSpec(
            alpha, 2, phi='gaussian:1,0,1', psi='gaussian:0.5,0.2,1')
        worst = 0.0
        for x, y in RESIDUAL_POINTS:
            scale = max(1.0, abs(evaluate(spec, x, y, cfg).value))
            worst = max(worst, abs(residual(spec, x, y, cfg)) / scale)
        results.append(CheckResult(
            'residual', f'alpha={alpha:g} n=2', worst, 1e-4))
    forced = CauchyProblemSpec(1.5, 2, f='gaussian:1,0,1')
    worst = max(abs(residual(forced, x, 0.5, cfg)) for x in (0.0, 0.5))
    results.append(CheckResult(
        'residual', 'alpha=1.5 n=2 forced', worst, 1e-4))
    return results


SUITES = {
    'fresnel': check_fresnel_beam,
    'lemma1': check_time_shift,
    'lemma2': check_jump,
    'lemma3': check_delta_family,
    'eq19': check_kernel_mass,
    'manufactured': check_manufactured,
    'residual': check_residual,
}


def suite_names(names):
    '''Return suite names in run order, expanding 'all'.'''
    if isinstance(names, str):
        names = [names]
    expanded = []
    for name in names:
        if name == 'all':
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise InvalidParams(
                f'unknown suite {name!r}; known: all, {", ".join(SUITES)}')
    return list(dict.fromkeys(expanded))


def run_suite(names, cfg=None):
    '''Return CheckResult list for the named suites.

    A numerical error inside a suite becomes one failed check carrying
    the error message.
    '''
    cfg = use_or_default(cfg, QuadratureConfig)
    results = []
    for name in suite_names(names):
        logger.debug('running suite %s', name)
        try:
            results.extend(SUITES[name](cfg))
        except FracWrightError as err:
            results.append(CheckResult(
                name, 'error', float('inf'), 0.0, passed=False,
                detail=err.message))
    return results


def report(results):
    '''Return the pass/fail table as text.'''
    width = max([len(r.name) for r in results] + [5])
    lines = [
        f'{"suite":<12} {"check":<{width}} {"deviation":>10} '
        f'{"tolerance":>10} status']
    for r in results:
        status = 'pass' if r.passed else 'FAIL'
        line = (
            f'{r.suite:<12} {r.name:<{width}} '
            f'{deviation_str(r.deviation):>10} '
            f'{deviation_str(r.tolerance):>10} {status}')
        if r.detail:
            line += f'  {r.detail}'
        lines.append(line)
    npass = sum(r.passed for r in results)
    lines.append(f'{npass} of {len(results)} checks passed')
    return '\n'.join(lines) + '\n'
