'''Run configuration: command, parameters, output path and format.'''
import json

from fracwright.cauchy.quadrature import QuadratureConfig
from fracwright.cli.output import FORMATS
from fracwright.errors import InvalidParams
from fracwright.util.path import existing_file

REQUIRED = None
QUADRATURE_DEFAULTS = QuadratureConfig().as_dict()

COMMANDS = {
    'wright': {'sigma': REQUIRED, 'beta': REQUIRED, 'z': REQUIRED},
    'genwright': {
        'mu': REQUIRED, 'a': REQUIRED, 'nu': REQUIRED, 'b': REQUIRED,
        'z': REQUIRED},
    'fundsol': {
        'alpha': REQUIRED, 'n': REQUIRED, 'b': REQUIRED,
        'time_shift': 0.0, 'space_order': 0, 'validation': False,
        'dxgrid': REQUIRED, 'dygrid': REQUIRED},
    'selfsim': {
        'alpha': REQUIRED, 'beta': REQUIRED, 'j': REQUIRED, 'b': REQUIRED,
        'd': 1, 'xgrid': REQUIRED, 'ygrid': REQUIRED},
    'solve': {
        'alpha': REQUIRED, 'n': REQUIRED,
        'phi': 'zero', 'psi': 'zero', 'f': 'zero',
        'xgrid': REQUIRED, 'ygrid': REQUIRED, **QUADRATURE_DEFAULTS},
    'validate': {'suites': ['all']},
}


class RunConfig:
    '''What the command line tool runs and where the output goes.

    Parameters
    ----------
    command : str
        one of COMMANDS
    parameters : dict
        parameter values; missing optional ones take their defaults
    output : str, optional
        output file, '-' for standard output
    fmt : {'csv', 'json-lines'}, optional
        table format
    '''

    def __init__(self, command, parameters=None, output='-', fmt='csv'):
        if command not in COMMANDS:
            raise InvalidParams(
                f'unknown command {command!r}; known: {", ".join(COMMANDS)}')
        if fmt not in FORMATS:
            raise InvalidParams(f'format must be one of {FORMATS}: {fmt!r}')
        schema = COMMANDS[command]
        parameters = dict(parameters or {})
        unknown = sorted(set(parameters) - set(schema))
        if unknown:
            raise InvalidParams(
                f'{command} does not take parameters: {", ".join(unknown)}')
        merged = {**schema, **parameters}
        missing = [key for key, value in merged.items() if value is REQUIRED]
        if missing:
            raise InvalidParams(
                f'{command} needs parameters: {", ".join(missing)}')
        for key, default in schema.items():
            if isinstance(default, bool) and not isinstance(merged[key], bool):
                raise InvalidParams(
                    f'{key} must be true or false: {merged[key]!r}')
        self.command = command
        self.parameters = merged
        self.output = str(output)
        self.fmt = fmt

    def __repr__(self):
        return (
            f'RunConfig(command={self.command!r}, '
            f'parameters={self.parameters!r}, output={self.output!r}, '
            f'fmt={self.fmt!r})')

    @property
    def quadrature(self):
        '''Return QuadratureConfig from the tolerance parameters.'''
        return QuadratureConfig(**{
            key: self.parameters[key] for key in QUADRATURE_DEFAULTS})

    @classmethod
    def from_sources(cls, command, flags=None, config_path=None):
        '''Return RunConfig from a JSON config file overridden by flags.

        The JSON file holds an object with optional keys 'parameters',
        'output' and 'format'. A 'command' key, if present, must agree
        with command. Flags whose value is None were not given.
        '''
        stored = load_json(config_path) if config_path else {}
        if stored.get('command', command) != command:
            raise InvalidParams(
                f'config file is for {stored["command"]!r}, not {command!r}')
        flags = {k: v for k, v in (flags or {}).items() if v is not None}
        output = flags.pop('output', stored.get('output', '-'))
        fmt = flags.pop('format', stored.get('format', 'csv'))
        parameters = {**stored.get('parameters', {}), **flags}
        return cls(command, parameters, output, fmt)


def load_json(pathspec):
    '''Return the object stored in a JSON config file.'''
    path = existing_file(pathspec)
    try:
        with open(path) as fobj:
            stored = json.load(fobj)
    except json.JSONDecodeError as err:
        raise InvalidParams(f'bad JSON in {path}: {err}') from None
    if not isinstance(stored, dict):
        raise InvalidParams(f'config file must hold an object: {path}')
    unknown = sorted(set(stored) - {'command', 'parameters', 'output',
                                    'format'})
    if unknown:
        raise InvalidParams(f'unknown config keys: {", ".join(unknown)}')
    return stored
