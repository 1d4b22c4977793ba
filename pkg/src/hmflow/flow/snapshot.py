#---------------------------------------------------------------------------------------------------
__all__ = (
    'format_value',
    'read_snapshot',
    'write_csv',
    'write_diagnostics',
    'write_snapshot',
)

import csv
import pathlib

import numpy as np

from ..types.errors import OutputError
from .grid import Grid2D, MapField, ScalarField

HEADER = ('nr', 'nz', 'r_min', 'r_max', 'z_min', 'z_max', 't')

#---------------------------------------------------------------------------------------------------
def format_value(x):
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, str):
        return x
    return format(float(x), '.17g')

def write_csv(path, columns, rows):
    ''' Header row of column names, then one formatted row per mapping. '''
    path = pathlib.Path(path)
    try:
        with path.open(mode='w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(columns)
            for row in rows:
                writer.writerow([format_value(row[name]) for name in columns])
    except OSError as e:
        raise OutputError(f'Failed to write "{path}": {e.strerror or e}') from None
    return path

#---------------------------------------------------------------------------------------------------
def write_snapshot(path, field):
    '''
    Grid header (nr, nz, bounds, t) followed by node-major values, r index outermost: u1, u2, u3
    for maps and v for angles.
    '''
    grid = field.grid
    path = pathlib.Path(path)
    if isinstance(field, MapField):
        names, values = ('u1', 'u2', 'u3'), field.u.reshape(-1, 3)
    else:
        names, values = ('v',), field.v.reshape(-1, 1)
    try:
        with path.open(mode='w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(HEADER)
            writer.writerow([format_value(x) for x in (grid.nr, grid.nz, *grid.bounds, field.t)])
            writer.writerow(names)
            for row in values:
                writer.writerow([format_value(x) for x in row])
    except OSError as e:
        raise OutputError(f'Failed to write "{path}": {e.strerror or e}') from None
    return path

def read_snapshot(path, center=None):
    path = pathlib.Path(path)
    try:
        with path.open(mode='r', newline='') as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise OutputError(f'Failed to read "{path}": {e.strerror or e}') from None

    meta = dict(zip(rows[0], rows[1]))
    grid = Grid2D(float(meta['r_min']), float(meta['r_max']), float(meta['z_min']),
                  float(meta['z_max']), int(meta['nr']), int(meta['nz']))
    values = np.array(rows[3:], dtype=float)
    t = float(meta['t'])
    if rows[2] == ['v']:
        return ScalarField(grid, values.reshape(grid.shape), t, center)
    return MapField(grid, values.reshape(grid.shape + (3,)), t)

def write_diagnostics(path, diagnostics):
    return write_csv(path, diagnostics.COLUMNS, diagnostics.rows())
