#---------------------------------------------------------------------------------------------------
__all__ = (
    'CorotationalScenario',
    'FlowScenario',
    'GammaConfig',
    'IdentitiesConfig',
    'NormsScenario',
    'ReducedScenario',
    'common_options',
    'load_scenario',
    'output_dir',
)

import pathlib

import click

from ..flow.grid import Grid2D
from ..flow.stepper import FlowConfig
from ..modulation.data import ReducedConfig
from ..types.config import (
    Choice, Config, Descriptor, Float, FloatPair, OpenInterval, PositiveFloat, PositiveInt,
)
from ..types.errors import ConfigError, OutputError
from .parser import CustomDict, MetaData, load_path, parse_overrides

#---------------------------------------------------------------------------------------------------
class IdentitiesConfig(Config):
    h = PositiveFloat(default=1e-3)
    n_fields = PositiveInt(default=10)
    k_max = PositiveInt(default=4)
    lambda_ = PositiveFloat(default=0.1)
    omega = Float(default=0.7)
    tol_moment = PositiveFloat(default=1e-8)
    tol_energy = PositiveFloat(default=1e-6)
    tol_kernel = PositiveFloat(default=1e-4)
    tol_mode = PositiveFloat(default=1e-10)
    refine_min = PositiveFloat(default=3.0)

class GammaConfig(Config):
    tau_min = PositiveFloat(default=1e-6)
    tau_max = PositiveFloat(default=1e4)
    n = PositiveInt(default=2048)
    split = PositiveFloat(default=1.0)

    def validate(self):
        if not self.tau_min < self.tau_max:
            raise ConfigError(f'Empty tau range [{self.tau_min:g}, {self.tau_max:g}].')

class ReducedScenario(ReducedConfig):
    n = PositiveInt(default=200)
    alpha = OpenInterval(0.0, 1.0, default=0.25)
    damping = OpenInterval(0.0, 1.0, default=0.5)
    max_iter = PositiveInt(default=60)
    sigma_min = OpenInterval(0.0, 1.0, default=1e-6)
    n_xi_steps = PositiveInt(default=1000)
    alpha0 = PositiveFloat(default=0.05)
    alpha1 = PositiveFloat(default=50.0)

    def inverse_args(self):
        return {
            'alpha': self.alpha,
            'n': self.n,
            'damping': self.damping,
            'max_iter': self.max_iter,
            'sigma_min': self.sigma_min,
        }

#---------------------------------------------------------------------------------------------------
class SimulationScenario(FlowConfig):
    ''' Grid and bubble placement shared by the simulator commands. '''

    nr = PositiveInt(default=256)
    nz = PositiveInt(default=256)
    r_min = Float(default=0.0)
    r_max = PositiveFloat(default=2.0)
    z_min = Float(default=-1.0)
    z_max = Float(default=1.0)
    lambda0 = PositiveFloat(default=0.05)
    center = FloatPair(default=(1.0, 0.0))
    delta = PositiveFloat(default=0.25)

    def grid(self):
        return Grid2D(self.r_min, self.r_max, self.z_min, self.z_max, self.nr, self.nz)

class CorotationalScenario(SimulationScenario):
    mode = Choice(('point', 'axis'), default='point')

class FlowScenario(SimulationScenario):
    omega = Float(default=0.0)

#---------------------------------------------------------------------------------------------------
class NormsScenario(Config):
    T = OpenInterval(0.0, 0.5, default=0.01)
    r0 = PositiveFloat(default=1.0)
    z0 = Float(default=0.0)
    omega = Float(default=0.0)
    eps = PositiveFloat(default=1e-3)
    beta = OpenInterval(0.0, 0.5, default=0.25)
    nu = PositiveFloat(default=1.0)
    a = OpenInterval(2.0, 3.0, default=2.5)
    delta = OpenInterval(0.0, 1.0, default=0.5)
    Theta = OpenInterval(0.0, 1.0, default=0.5)
    l = Float(default=1.0)
    k = Float(default=1.0)
    n_times = PositiveInt(default=16)
    n_radii = PositiveInt(default=64)
    n_angles = PositiveInt(default=32)
    outer_min = PositiveFloat(default=0.1)
    outer_max = PositiveFloat(default=0.5)

    def validate(self):
        if not self.outer_min < self.outer_max:
            raise ConfigError('The outer ring needs outer_min < outer_max.')

#---------------------------------------------------------------------------------------------------
def _located(e, source):
    e.source = source
    return e

def load_scenario(cls, config_path=None, overrides=()):
    '''
    Reads a scenario file, applies "key=value" overrides and builds the configuration. Errors
    carry the position of the offending key.
    '''
    if config_path is None:
        data = CustomDict()
        data.___metadata___ = MetaData('<defaults>', 0, 0)
        data.___origins___ = {}
    else:
        data = load_path(config_path)
    extra = parse_overrides(overrides)

    merged = dict(data)
    merged.update(extra)
    origins = {**data.___origins___, **extra.___origins___}
    owner = cls.__name__

    for name, value in merged.items():
        origin = origins.get(name, data)
        descriptor = getattr(cls, name, None)
        if not isinstance(descriptor, Descriptor):
            raise _located(ConfigError(f'Unknown key "{name}" in configuration for {owner}.'),
                           origin)
        try:
            descriptor.check(value)
        except ConfigError as e:
            raise _located(e, origin) from None

    try:
        return cls(merged, owner)
    except ConfigError as e:
        raise _located(e, data) from None

#---------------------------------------------------------------------------------------------------
def output_dir(path):
    path = pathlib.Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f'Failed to create output directory "{path}": {e.strerror or e}') from None
    return path

_COMMON = (
    click.option('--config', '-c', 'config_path', type=click.Path(dir_okay=False),
                 help='Scenario file, a flat YAML mapping or key=value lines.'),
    click.option('--out', '-o', 'out_dir', type=click.Path(file_okay=False), default='.',
                 show_default=True, help='Directory receiving CSV outputs.'),
    click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON.'),
    click.option('--seed', type=int, default=0, show_default=True,
                 help='Seed of the random test fields.'),
    click.option('--set', '-s', 'overrides', multiple=True, metavar='KEY=VALUE',
                 help='Override one configuration key. May be repeated.'),
    click.option('--verbose', '-v', count=True, help='Raise the library logging level.'),
)

def common_options(func):
    for option in reversed(_COMMON):
        func = option(func)
    return func
