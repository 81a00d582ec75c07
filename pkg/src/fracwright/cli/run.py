'''Command line entry point of fracwright.

Exit status is 0 on success, 1 on usage or parameter errors and 2 when
a validation suite fails.
'''
import re
import sys
from argparse import ArgumentParser

from fracwright.cauchy.problem import CauchyProblemSpec
from fracwright.cauchy.solver import solve
from fracwright.cli.config import RunConfig
from fracwright.cli.output import FORMATS, make_table, write_table
from fracwright.cli.parse import parse_complex_list, parse_grid
from fracwright.cli.validate import report, run_suite, suite_names
from fracwright.errors import FracWrightError, InvalidParams, row_flag
from fracwright.fundsol.kernel import FundamentalSolutionSpec
from fracwright.selfsim.similarity import (
    SelfSimilarSpec, SimilarityVariable, u_j)
from fracwright.specfun.wright import (
    GenWrightParams, WrightParams, gen_wright, wright_phi)
from fracwright.util.log import configure_logging, get_logger
from fracwright.util.path import output_path

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
NAN = float('nan')
NEGATIVE_VALUE = re.compile(r'^-[\d.]')

COLUMNS = {
    'wright': ('sigma', 'beta', 'z_re', 'z_im', 'value_re', 'value_im',
               'err_est', 'flag'),
    'genwright': ('mu', 'a', 'nu', 'b', 'z_re', 'z_im', 'value_re',
                  'value_im', 'err_est', 'flag'),
    'fundsol': ('dx', 'dy', 'value', 'flag'),
    'selfsim': ('x', 'y', 'u', 'flag'),
    'solve': ('x', 'y', 'u', 'err_est', 'flag'),
}


class _Parser(ArgumentParser):
    '''ArgumentParser that raises instead of exiting on bad usage.'''

    def error(self, message):
        raise InvalidParams(message)


def _integer(value, name):
    number = float(value)
    if number != int(number):
        raise InvalidParams(f'{name} must be an integer: {value}')
    return int(number)


def _series_row(func, params):
    try:
        result = func(params)
    except FracWrightError as err:
        logger.warning('%r: %s', params, err.message)
        return complex(NAN, NAN), NAN, row_flag(err)
    return result.value, result.error, 'ok'


def run_wright(config):
    p = config.parameters
    allparams = [WrightParams(p['sigma'], p['beta'], z)
                 for z in parse_complex_list(p['z'])]
    rows = []
    for params in allparams:
        value, error, flag = _series_row(wright_phi, params)
        rows.append((
            params.sigma, params.beta, params.z.real, params.z.imag,
            value.real, value.imag, error, flag))
    return rows


def run_genwright(config):
    p = config.parameters
    allparams = [GenWrightParams(p['mu'], p['a'], p['nu'], p['b'], z)
                 for z in parse_complex_list(p['z'])]
    rows = []
    for params in allparams:
        value, error, flag = _series_row(gen_wright, params)
        rows.append((
            params.mu, params.a, params.nu, params.b, params.z.real,
            params.z.imag, value.real, value.imag, error, flag))
    return rows


def run_fundsol(config):
    p = config.parameters
    spec = FundamentalSolutionSpec(
        p['alpha'], _integer(p['n'], 'n'), p['b'],
        validation=p['validation'])
    shifted = spec.shifted(
        float(p['time_shift']), _integer(p['space_order'], 'space_order'))
    dxgrid = parse_grid(p['dxgrid'])
    dygrid = parse_grid(p['dygrid'])
    if (dygrid <= 0).any():
        raise InvalidParams(f'dy must be positive: {dygrid.min()}')
    rows = []
    for dx in dxgrid:
        for dy in dygrid:
            try:
                rows.append((dx, dy, shifted.evaluate(dx, dy), 'ok'))
            except FracWrightError as err:
                logger.warning('(%g, %g): %s', dx, dy, err.message)
                rows.append((dx, dy, NAN, row_flag(err)))
    return rows


def run_selfsim(config):
    p = config.parameters
    spec = SelfSimilarSpec(
        p['alpha'], p['beta'], _integer(p['j'], 'j'), p['b'],
        _integer(p['d'], 'd'))
    xgrid = parse_grid(p['xgrid'])
    ygrid = parse_grid(p['ygrid'])
    points = [SimilarityVariable.for_spec(spec, x, y)
              for x in xgrid for y in ygrid]
    rows = []
    for pt in points:
        try:
            rows.append((pt.x, pt.y, u_j(spec, pt), 'ok'))
        except FracWrightError as err:
            logger.warning('%r: %s', pt, err.message)
            rows.append((pt.x, pt.y, NAN, row_flag(err)))
    return rows


def run_solve(config):
    p = config.parameters
    spec = CauchyProblemSpec(
        p['alpha'], _integer(p['n'], 'n'), p['phi'], p['psi'], p['f'])
    grid = solve(
        spec, parse_grid(p['xgrid']), parse_grid(p['ygrid']),
        config.quadrature)
    return list(grid.rows())


RUNNERS = {
    'wright': run_wright,
    'genwright': run_genwright,
    'fundsol': run_fundsol,
    'selfsim': run_selfsim,
    'solve': run_solve,
}


def run_validate(config):
    '''Run validation suites and write the report; return exit status.'''
    names = suite_names(config.parameters['suites'])
    results = run_suite(names)
    text = report(results)
    path = output_path(config.output)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w', newline='\n') as fobj:
            fobj.write(text)
        print(f'wrote {path}')
    if all(r.passed for r in results):
        return EXIT_OK
    return EXIT_VALIDATION


def run(config):
    '''Execute a RunConfig and return the exit status.'''
    if config.command == 'validate':
        return run_validate(config)
    rows = RUNNERS[config.command](config)
    table = make_table(COLUMNS[config.command], rows)
    write_table(table, config.output, config.fmt)
    return EXIT_OK


def build_parser():
    '''Return the argument parser with one subcommand per command.'''
    parser = _Parser(
        prog='fracwright',
        description='Wright functions and time-fractional Cauchy problems')
    common = _Parser(add_help=False)
    common.add_argument('--config', help='JSON file of parameters')
    common.add_argument(
        '--output', help="output file, '-' for standard output")
    common.add_argument('--format', choices=FORMATS, help='table format')
    common.add_argument(
        '--verbose', action='store_true', help='log debug messages')
    commands = parser.add_subparsers(dest='command', required=True)

    sub = commands.add_parser(
        'wright', parents=[common], help='Wright function phi(-s, b, z)')
    sub.add_argument('--sigma')
    sub.add_argument('--beta')
    sub.add_argument('--z', help='comma list of complex values or a:b:n')

    sub = commands.add_parser(
        'genwright', parents=[common], help='generalized Wright function')
    for name in ('mu', 'a', 'nu', 'b'):
        sub.add_argument(f'--{name}')
    sub.add_argument('--z', help='comma list of complex values or a:b:n')

    sub = commands.add_parser(
        'fundsol', parents=[common], help='fundamental solution table')
    for name in ('alpha', 'n', 'b', 'time-shift', 'space-order'):
        sub.add_argument(f'--{name}')
    sub.add_argument(
        '--validation', action='store_true', default=None,
        help='allow alpha = 2')
    sub.add_argument('--dxgrid')
    sub.add_argument('--dygrid')

    sub = commands.add_parser(
        'selfsim', parents=[common], help='self-similar solution table')
    for name in ('alpha', 'beta', 'j', 'b', 'd', 'xgrid', 'ygrid'):
        sub.add_argument(f'--{name}')

    sub = commands.add_parser(
        'solve', parents=[common], help='solve a Cauchy problem on a grid')
    for name in ('alpha', 'n', 'phi', 'psi', 'f', 'xgrid', 'ygrid',
                 'abs-tol', 'rel-tol', 'tail-tol', 'max-panels'):
        sub.add_argument(f'--{name}')

    sub = commands.add_parser(
        'validate', parents=[common], help='run validation suites')
    sub.add_argument('suites', nargs='*', default=None)
    return parser


def _attach_negative_values(argv):
    '''Join '--flag -2:2:5' into '--flag=-2:2:5'.'''
    joined = []
    for arg in argv:
        if (joined and joined[-1].startswith('--') and '=' not in joined[-1]
                and NEGATIVE_VALUE.match(arg)):
            joined[-1] = f'{joined[-1]}={arg}'
        else:
            joined.append(arg)
    return joined


def _numeric_flags(args):
    flags = vars(args).copy()
    for key in ('command', 'config', 'verbose'):
        flags.pop(key)
    if flags.get('suites') == []:
        flags['suites'] = None
    for key in ('abs_tol', 'rel_tol', 'tail_tol'):
        if flags.get(key) is not None:
            flags[key] = float(flags[key])
    if flags.get('max_panels') is not None:
        flags['max_panels'] = _integer(flags['max_panels'], 'max_panels')
    return flags


def main(argv=None):
    '''Parse argv, run the command and return the exit status.'''
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_attach_negative_values(argv))
        configure_logging(args.verbose)
        config = RunConfig.from_sources(
            args.command, _numeric_flags(args), args.config)
        return run(config)
    except (FracWrightError, ValueError) as err:
        message = getattr(err, 'message', str(err))
        print(f'fracwright: {message}', file=sys.stderr)
        return EXIT_USAGE
