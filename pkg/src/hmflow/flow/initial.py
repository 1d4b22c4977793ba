#---------------------------------------------------------------------------------------------------
__all__ = (
    'corotational_data',
    'embed_scalar',
    'initial_data',
)

import numpy as np

from ..inner.fields import smooth_cutoff
from ..inner.profiles import eval_U, eval_w
from ..types.errors import DomainError, GeometryError
from .grid import MapField, ScalarField

E3 = np.array((0.0, 0.0, 1.0))

#---------------------------------------------------------------------------------------------------
def _check_ball(grid, center, delta):
    if not delta > 0:
        raise DomainError(f'Cutoff radius must be positive, got {delta!r}.')
    if not grid.contains_ball(center, 2 * delta):
        raise GeometryError(f'Ball of radius {2 * delta:g} around {tuple(center)} leaves {grid!r}.')

def initial_data(state, delta, grid):
    '''
    eta U + (1 - eta) e3 projected back onto the sphere, with U the bubble of the given state
    and eta equal to 1 within delta of the center and 0 beyond 2 delta.
    '''
    _check_ball(grid, state.xi, delta)
    R, Z = grid.mesh()
    eta = smooth_cutoff(np.hypot(R - state.xi[0], Z - state.xi[1]) / delta)[..., None]
    blend = eta * eval_U(state, R, Z) + (1 - eta) * E3
    norm = np.linalg.norm(blend, axis=-1, keepdims=True)
    if np.any(norm < 1e-8):
        raise GeometryError('The cutoff blend passes through the origin; enlarge delta.')
    return MapField(grid, blend / norm)

def corotational_data(lambda0, center, delta, grid, mode='point'):
    '''
    Angle eta w(d / lambda0) around a grid node. In point mode the center is pinned to pi; in
    axis mode the angle is also forced to zero on the axis.
    '''
    if not lambda0 > 0:
        raise DomainError(f'Scale must be positive, got {lambda0!r}.')
    if mode not in ('point', 'axis'):
        raise DomainError(f'Unknown corotational mode {mode!r}.')
    center = grid.node(grid.node_index(center))
    _check_ball(grid, center, delta)
    R, Z = grid.mesh()
    d = np.hypot(R - center[0], Z - center[1])
    v = smooth_cutoff(d / delta) * eval_w(d / lambda0)
    if mode == 'point':
        return ScalarField(grid, v, center=center)
    v[0, :] = 0.0
    return ScalarField(grid, v)

def embed_scalar(field):
    '''
    The cross-section map of an angle: (cos theta sin v, sin theta sin v, cos v) with theta the
    polar angle around the center in point mode, and (sin v, 0, cos v) in axis mode.
    '''
    v = field.v
    if field.center is None:
        u = np.stack((np.sin(v), np.zeros_like(v), np.cos(v)), axis=-1)
    else:
        R, Z = field.grid.mesh()
        theta = np.arctan2(Z - field.center[1], R - field.center[0])
        u = np.stack((np.cos(theta) * np.sin(v), np.sin(theta) * np.sin(v), np.cos(v)), axis=-1)
    return MapField(field.grid, u, field.t)
