#---------------------------------------------------------------------------------------------------
__all__ = (
    'configure_logging',
    'dump_json',
    'error',
    'fatal',
    'guarded',
    'log',
    'render',
    'render_summary',
    'stderr',
    'warning',
)

import functools
import json
import logging
import pathlib
import sys

import numpy as np
from jinja2 import Environment, FileSystemLoader

from ..types.errors import HmflowError

TEMPLATE_DIR = pathlib.Path(__file__).parent.absolute().joinpath('templates')

#---------------------------------------------------------------------------------------------------
def stderr(msg):
    sys.stderr.write(msg + '\n')

def log(obj, level, msg):
    try:
        metadata = obj.___metadata___
    except AttributeError:
        ...
    else:
        msg += f' [{metadata}]'
    stderr(f'{level}: {msg}')

def warning(obj, msg):
    log(obj, 'WARNING', msg)

def error(obj, msg):
    log(obj, 'ERROR', msg)

def fatal(obj, msg, code=1):
    error(obj, msg)
    sys.exit(code)

#---------------------------------------------------------------------------------------------------
def configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, format='%(levelname)s: %(name)s: %(message)s')
    logging.getLogger('hmflow').setLevel(level)

def guarded(func):
    ''' Reports library errors on stderr and exits with their code. '''
    @functools.wraps(func)
    def wrapper(*pargs, **kargs):
        try:
            return func(*pargs, **kargs)
        except HmflowError as e:
            fatal(getattr(e, 'source', None), str(e), e.exit_code)
    return wrapper

#---------------------------------------------------------------------------------------------------
def _plain(obj):
    # JSON has no complex or numpy scalar types.
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (complex, np.complexfloating)):
        return {'re': float(obj.real), 'im': float(obj.imag)}
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return value if np.isfinite(value) else str(value)
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    return obj

def dump_json(data, stream=None):
    stream = sys.stdout if stream is None else stream
    json.dump(_plain(data), stream, indent=2, sort_keys=True)
    stream.write('\n')

def render(template, stream=None, **context):
    env = Environment(loader=FileSystemLoader(str(TEMPLATE_DIR)), trim_blocks=True,
                      lstrip_blocks=True)
    stream = sys.stdout if stream is None else stream
    env.get_template(template).stream(**context).dump(stream)

def _describe(value):
    if isinstance(value, (complex, np.complexfloating)):
        return f'{value.real:.6g}{value.imag:+.6g}i'
    if isinstance(value, (float, np.floating)):
        return f'{value:.6g}'
    if value is None:
        return 'n/a'
    return str(value)

def render_summary(title, summary, outputs=(), stream=None):
    items = [(name, _describe(value)) for name, value in summary.items()]
    render('summary.txt.j2', stream, title=title, items=items, outputs=[str(p) for p in outputs])
