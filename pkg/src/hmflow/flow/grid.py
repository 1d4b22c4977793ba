#---------------------------------------------------------------------------------------------------
__all__ = (
    'Grid2D',
    'MapField',
    'ScalarField',
    'default_grid',
)

import numpy as np

from ..types.errors import DomainError, GeometryError

#---------------------------------------------------------------------------------------------------
class Grid2D:
    '''
    Uniform node grid on [r_min, r_max] x [z_min, z_max] with nr x nz cells. Arrays on the grid
    are indexed [i, j] with i along r and j along z. When r_min = 0 the first column is the
    symmetry axis; every other boundary node carries Dirichlet data.
    '''

    def __init__(self, r_min, r_max, z_min, z_max, nr, nz):
        if r_min < 0:
            raise GeometryError(f'The grid must lie in r >= 0, got r_min = {r_min!r}.')
        if not (r_max > r_min and z_max > z_min):
            raise GeometryError('Grid bounds must be increasing.')
        if int(nr) < 2 or int(nz) < 2:
            raise GeometryError('The grid needs two or more cells per direction.')
        self.r_min, self.r_max = float(r_min), float(r_max)
        self.z_min, self.z_max = float(z_min), float(z_max)
        self.nr, self.nz = int(nr), int(nz)
        self.r = np.linspace(self.r_min, self.r_max, self.nr + 1)
        self.z = np.linspace(self.z_min, self.z_max, self.nz + 1)

    @property
    def dr(self):
        return (self.r_max - self.r_min) / self.nr

    @property
    def dz(self):
        return (self.z_max - self.z_min) / self.nz

    @property
    def h(self):
        return min(self.dr, self.dz)

    @property
    def shape(self):
        return (self.nr + 1, self.nz + 1)

    @property
    def has_axis(self):
        return self.r_min == 0

    @property
    def bounds(self):
        return (self.r_min, self.r_max, self.z_min, self.z_max)

    def mesh(self):
        return np.meshgrid(self.r, self.z, indexing='ij')

    def dirichlet_mask(self):
        mask = np.zeros(self.shape, dtype=bool)
        mask[-1, :] = True
        mask[:, 0] = True
        mask[:, -1] = True
        if not self.has_axis:
            mask[0, :] = True
        return mask

    def trapezoid_weights(self):
        wr = np.full(self.nr + 1, self.dr)
        wz = np.full(self.nz + 1, self.dz)
        wr[[0, -1]] *= 0.5
        wz[[0, -1]] *= 0.5
        return wr[:, None] * wz[None, :]

    def contains_ball(self, center, radius):
        ''' Whether the closed ball lies inside the grid and away from the axis. '''
        r0, z0 = center
        return (r0 - radius > max(self.r_min, 0.0) and r0 + radius < self.r_max
                and z0 - radius > self.z_min and z0 + radius < self.z_max)

    def node_index(self, point):
        ''' Index of the node nearest to point. '''
        i = int(round((point[0] - self.r_min) / self.dr))
        j = int(round((point[1] - self.z_min) / self.dz))
        if not (0 <= i <= self.nr and 0 <= j <= self.nz):
            raise GeometryError(f'Point {tuple(point)} lies outside the grid.')
        return i, j

    def node(self, index):
        return (self.r[index[0]], self.z[index[1]])

    def __repr__(self):
        return (f'Grid2D([{self.r_min:g}, {self.r_max:g}] x [{self.z_min:g}, {self.z_max:g}], '
                f'{self.nr} x {self.nz})')

def default_grid(n=256):
    return Grid2D(0.0, 2.0, -1.0, 1.0, n, n)

#---------------------------------------------------------------------------------------------------
class MapField:
    ''' Unit vectors u[i, j] of shape grid.shape + (3,) at time t. '''

    def __init__(self, grid, u, t=0.0, tol=1e-10):
        u = np.asarray(u, dtype=float)
        if u.shape != grid.shape + (3,):
            raise DomainError(f'Map of shape {u.shape} does not fit {grid!r}.')
        if np.any(np.abs(np.sum(u**2, axis=-1) - 1) > tol):
            raise DomainError('Map values must be unit vectors.')
        self.grid = grid
        self.u = u
        self.t = float(t)

    @classmethod
    def constant(cls, grid, value=(0.0, 0.0, 1.0), t=0.0):
        return cls(grid, np.broadcast_to(np.asarray(value, dtype=float), grid.shape + (3,)).copy(),
                   t)

    def replace(self, u, t):
        return MapField(self.grid, u, t)

    @property
    def u3(self):
        return self.u[..., 2]

class ScalarField:
    '''
    Corotational angle v[i, j] at time t. With center None the angle vanishes on the axis and
    the singular term uses d = r; otherwise center is a grid node pinned to v = pi and d is the
    distance to it.
    '''

    def __init__(self, grid, v, t=0.0, center=None):
        v = np.asarray(v, dtype=float)
        if v.shape != grid.shape:
            raise DomainError(f'Field of shape {v.shape} does not fit {grid!r}.')
        self.grid = grid
        self.v = v
        self.t = float(t)
        self.center = None
        self.center_index = None
        if center is not None:
            self.center_index = grid.node_index(center)
            self.center = grid.node(self.center_index)
        elif not grid.has_axis:
            raise GeometryError('The axis model needs a grid that starts on the axis.')

    @property
    def mode(self):
        return 'axis' if self.center is None else 'point'

    def distance(self):
        R, Z = self.grid.mesh()
        if self.center is None:
            return R
        return np.hypot(R - self.center[0], Z - self.center[1])

    def replace(self, v, t):
        return ScalarField(self.grid, v, t, self.center)

    @property
    def u3(self):
        return np.cos(self.v)
