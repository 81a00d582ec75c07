'''Write and read the tables produced by the command line tool.'''
import json
import sys
from io import StringIO

from astropy.io.ascii import convert_numpy
from astropy.table import Column, Table

from fracwright.errors import InvalidParams
from fracwright.util.path import existing_file, output_path

FORMATS = ('csv', 'json-lines')
FLOAT_FORMAT = '.17g'


def make_table(names, rows):
    '''Return Table with the given column names from row tuples.

    Float columns print with 17 significant digits. String columns
    (the flag column) are kept as text.
    '''
    table = Table()
    columns = list(zip(*rows)) if rows else [[] for _ in names]
    for name, values in zip(names, columns):
        if values and isinstance(values[0], str):
            table[name] = Column(list(values), dtype=str)
        else:
            table[name] = Column(
                [float(value) for value in values], dtype=float,
                format=FLOAT_FORMAT)
    return table


def _csv_text(table):
    buffer = StringIO()
    table.write(buffer, format='ascii.csv')
    return buffer.getvalue().replace('\r\n', '\n')


def _json_lines_text(table):
    lines = []
    for row in table:
        record = {}
        for name in table.colnames:
            value = row[name]
            if table[name].dtype.kind in 'US':
                record[name] = str(value)
            else:
                record[name] = float(value)
        lines.append(json.dumps(record) + '\n')
    return ''.join(lines)


def table_text(table, fmt='csv'):
    '''Return table rendered as csv or json-lines text.'''
    if fmt == 'csv':
        return _csv_text(table)
    if fmt == 'json-lines':
        return _json_lines_text(table)
    raise InvalidParams(f'format must be one of {FORMATS}: {fmt!r}')


def write_table(table, pathspec='-', fmt='csv'):
    '''Write table to a file, or to standard output for '-'.'''
    text = table_text(table, fmt)
    path = output_path(pathspec)
    if path is None:
        sys.stdout.write(text)
        return None
    with open(path, 'w', newline='\n') as fobj:
        fobj.write(text)
    print(f'wrote {path}')
    return path


def read_table(pathspec, fmt='csv'):
    '''Return Table read from a file written by write_table.

    Every column is tried as float before text; 17 significant digits
    make the float values round trip bit for bit.
    '''
    path = existing_file(pathspec)
    if fmt == 'csv':
        return Table.read(
            path, format='ascii.csv', fast_reader=False,
            converters={'*': [convert_numpy(float), convert_numpy(str)]})
    if fmt == 'json-lines':
        with open(path) as fobj:
            records = [json.loads(line) for line in fobj if line.strip()]
        if not records:
            return Table()
        return Table(rows=[list(r.values()) for r in records],
                     names=list(records[0]))
    raise InvalidParams(f'format must be one of {FORMATS}: {fmt!r}')
