#---------------------------------------------------------------------------------------------------
__all__ = (
    'gradient',
    'gradient_squared',
    'laplacian',
    'residual_S',
    'rhs_map',
    'rhs_scalar',
)

import numpy as np

#---------------------------------------------------------------------------------------------------
def laplacian(u, grid):
    '''
    Axisymmetric Laplacian u_rr + u_r / r + u_zz in conservative form. On the axis column the
    radial part is 4 (u_1 - u_0) / dr^2 (half cell of volume dr^2 / 8 with a reflected
    neighbour). Rows on the z boundaries and the outer r column are left at zero.
    '''
    u = np.asarray(u, dtype=float)
    dr, dz = grid.dr, grid.dz
    r = grid.r
    out = np.zeros_like(u)
    inner = (slice(1, -1), slice(1, -1))

    # Radial fluxes r_{i+1/2} (u_{i+1} - u_i) / dr.
    r_half = 0.5 * (r[1:] + r[:-1])
    shape = (-1,) + (1,) * (u.ndim - 1)
    flux = r_half.reshape(shape) * (u[1:] - u[:-1]) / dr
    radial = (flux[1:] - flux[:-1]) / (r[1:-1].reshape(shape) * dr)
    out[inner] = radial[:, 1:-1]
    if grid.has_axis:
        out[0, 1:-1] = 4 * (u[1, 1:-1] - u[0, 1:-1]) / dr**2

    out[:-1, 1:-1] += (u[:-1, 2:] - 2 * u[:-1, 1:-1] + u[:-1, :-2]) / dz**2
    if not grid.has_axis:
        out[0] = 0.0
    return out

def gradient(u, grid):
    ''' (u_r, u_z) by centered differences, one-sided at the edges; u_r = 0 on the axis. '''
    u_r, u_z = np.gradient(np.asarray(u, dtype=float), grid.dr, grid.dz, axis=(0, 1),
                           edge_order=2)
    if grid.has_axis:
        u_r[0] = 0.0
    return u_r, u_z

def gradient_squared(u, grid):
    u_r, u_z = gradient(u, grid)
    if u_r.ndim == 3:
        return np.sum(u_r**2 + u_z**2, axis=-1)
    return u_r**2 + u_z**2

#---------------------------------------------------------------------------------------------------
def rhs_map(u, grid):
    ''' Tangent right-hand side Lap u - (u . Lap u) u, zero on the Dirichlet nodes. '''
    lap = laplacian(u, grid)
    out = lap - np.sum(u * lap, axis=-1, keepdims=True) * u
    out[grid.dirichlet_mask()] = 0.0
    return out

def rhs_scalar(v, grid, d, pinned):
    ''' Lap v - sin v cos v / d^2 with the pinned and Dirichlet nodes held fixed. '''
    lap = laplacian(v, grid)
    free = ~(pinned | grid.dirichlet_mask())
    out = np.zeros_like(lap)
    out[free] = lap[free] - np.sin(v[free]) * np.cos(v[free]) / d[free]**2
    return out

#---------------------------------------------------------------------------------------------------
def residual_S(u, u_prev, dt, planar=False):
    '''
    Discrete -(u - u_prev) / dt + u_rr + u_r / r + u_zz + |grad u|^2 u of two map fields on the
    same grid, with centered differences and u_r / r replaced by u_rr on the axis. With planar
    set, the u_r / r term is dropped and the first column is treated as a boundary. Boundary
    nodes carry zero.
    '''
    grid = u.grid
    a, b = u.u, u_prev.u
    dr, dz = grid.dr, grid.dz
    nr = grid.nr
    out = np.zeros_like(a)

    if grid.has_axis and not planar:
        # Reflection across the axis supplies the ghost column u_{-1} = u_1.
        ext = np.concatenate((a[1:2], a), axis=0)
        left, centre, right = ext[:nr], a[:nr], a[1:]
        rows = slice(0, nr)
    else:
        left, centre, right = a[:nr - 1], a[1:nr], a[2:]
        rows = slice(1, nr)

    u_rr = (right - 2 * centre + left) / dr**2
    u_r = (right - left) / (2 * dr)
    u_zz = np.zeros_like(centre)
    u_zz[:, 1:-1] = (centre[:, 2:] - 2 * centre[:, 1:-1] + centre[:, :-2]) / dz**2
    u_z = np.zeros_like(centre)
    u_z[:, 1:-1] = (centre[:, 2:] - centre[:, :-2]) / (2 * dz)

    lap = u_rr + u_zz
    if not planar:
        r = grid.r[rows].reshape(-1, 1, 1)
        safe = np.where(r > 0, r, 1.0)
        lap = lap + np.where(r > 0, u_r / safe, u_rr)
    grad2 = np.sum(u_r**2 + u_z**2, axis=-1, keepdims=True)

    value = -(centre - b[rows]) / dt + lap + grad2 * centre
    value[:, [0, -1]] = 0.0
    out[rows] = value
    return out
