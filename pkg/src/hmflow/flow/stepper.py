#---------------------------------------------------------------------------------------------------
__all__ = (
    'FlowConfig',
    'RunResult',
    'run_corotational',
    'run_flow',
    'step',
    'step_scalar',
)

import logging

import numpy as np

from ..types.config import Choice, Config, OpenInterval, PositiveFloat, PositiveInt
from ..types.errors import DivergenceError, DomainError
from .diagnostics import BlowupDiagnostics
from .grid import MapField, ScalarField
from .stencil import rhs_map, rhs_scalar

log = logging.getLogger(__name__)

E3 = np.array((0.0, 0.0, 1.0))

#---------------------------------------------------------------------------------------------------
class FlowConfig(Config):
    t_end = PositiveFloat(default=0.01)
    dt = PositiveFloat(default=None)
    cfl = OpenInterval(0.0, 0.25, default=0.1)
    scheme = Choice(('euler', 'rk2'), default='euler')
    diag_every = PositiveInt(default=10)
    stop_cells = PositiveFloat(default=3.0)
    ball_radius = PositiveFloat(default=0.25)
    max_steps = PositiveInt(default=1000000)

    def time_step(self, grid):
        return self.cfl * grid.h**2 if self.dt is None else self.dt

#---------------------------------------------------------------------------------------------------
def _check_dt(grid, dt, cfl):
    limit = cfl * grid.h**2
    if not 0 < dt <= limit * (1 + 1e-12):
        raise DomainError(f'Time step {dt:g} exceeds the stability bound {limit:g}.')

def _advance(x, dt, rhs, scheme):
    k1 = rhs(x)
    if scheme == 'euler':
        return x + dt * k1
    if scheme == 'rk2':
        k2 = rhs(x + dt * k1)
        return x + 0.5 * dt * (k1 + k2)
    raise DomainError(f'Unknown time scheme {scheme!r}.')

def step(u, dt, scheme='euler', cfl=0.1):
    '''
    One explicit step of u_t = Lap u + |grad u|^2 u in tangent form, followed by projection onto
    the sphere. Dirichlet nodes are reset to e3.
    '''
    grid = u.grid
    _check_dt(grid, dt, cfl)
    new = _advance(u.u, dt, lambda x: rhs_map(x, grid), scheme)
    new[grid.dirichlet_mask()] = E3
    norm = np.linalg.norm(new, axis=-1, keepdims=True)
    if not np.all(np.isfinite(new)) or np.any(norm == 0):
        raise DivergenceError(f'Map flow diverged at t = {u.t + dt:g}.', u)
    return MapField(grid, new / norm, u.t + dt)

def step_scalar(field, dt, scheme='euler', cfl=0.1):
    ''' One explicit step of v_t = Lap v - sin v cos v / d^2 with pinned and boundary nodes fixed. '''
    grid = field.grid
    _check_dt(grid, dt, cfl)
    d = field.distance()
    pinned = d == 0
    new = _advance(field.v, dt, lambda x: rhs_scalar(x, grid, d, pinned), scheme)
    if not np.all(np.isfinite(new)):
        raise DivergenceError(f'Corotational flow diverged at t = {field.t + dt:g}.', field)
    return field.replace(new, field.t + dt)

#---------------------------------------------------------------------------------------------------
class RunResult:
    def __init__(self, field, diagnostics, reason, steps):
        self.field = field
        self.diagnostics = diagnostics
        self.reason = reason
        self.steps = steps

def _run(field, cfg, advance):
    grid = field.grid
    dt = cfg.time_step(grid)
    _check_dt(grid, dt, cfg.cfl)
    diagnostics = BlowupDiagnostics(cfg.ball_radius)
    diagnostics.record(field)
    threshold = cfg.stop_cells * grid.h

    reason = 'max_steps'
    n = 0
    while n < cfg.max_steps:
        remaining = cfg.t_end - field.t
        if remaining <= 1e-14 * max(cfg.t_end, 1.0):
            reason = 't_end'
            break
        field = advance(field, min(dt, remaining), cfg.scheme, cfg.cfl)
        n += 1
        if n % cfg.diag_every == 0:
            row = diagnostics.record(field)
            log.debug('t = %.6g: max_grad %.6g lambda_est %.6g', row['t'], row['max_grad'],
                      row['lambda_est'])
            if row['lambda_est'] < threshold:
                reason = 'resolution'
                break

    if diagnostics.records[-1]['t'] != field.t:
        diagnostics.record(field)
    log.info('run stopped (%s) after %d steps at t = %.6g', reason, n, field.t)
    return RunResult(field, diagnostics, reason, n)

def run_flow(u0, cfg=None):
    ''' Evolves a map field with diagnostics every cfg.diag_every steps. '''
    cfg = FlowConfig() if cfg is None else cfg
    if not isinstance(u0, MapField):
        raise DomainError('run_flow expects a map field.')
    return _run(u0, cfg, step)

def run_corotational(v0, cfg=None):
    ''' Evolves a corotational angle with the same stepping and stopping rule as run_flow. '''
    cfg = FlowConfig() if cfg is None else cfg
    if not isinstance(v0, ScalarField):
        raise DomainError('run_corotational expects a scalar field.')
    if v0.center is None and np.any(v0.v[0] != 0):
        raise DomainError('The axis model needs v = 0 on the axis.')
    return _run(v0, cfg, step_scalar)
