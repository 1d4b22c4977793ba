#---------------------------------------------------------------------------------------------------
__all__ = (
    'KERNEL_INDICES',
    'cos_w',
    'eval_E',
    'eval_U',
    'eval_W',
    'eval_Z',
    'eval_w',
    'grad_W',
    'grad_W_squared',
    'rotate',
    'sin_w',
    'w_rho',
)

import numpy as np

from ..types.errors import DomainError
from ..types.state import plane_coords, polar

#---------------------------------------------------------------------------------------------------
KERNEL_INDICES = tuple((l, j) for l in (-1, 0, 1) for j in (1, 2))

#---------------------------------------------------------------------------------------------------
def _radius(rho):
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0):
        raise DomainError(f'Profile radius must be non-negative, got {rho!r}.')
    return rho

def eval_w(rho):
    return np.pi - 2 * np.arctan(_radius(rho))

def w_rho(rho):
    rho = _radius(rho)
    return -2 / (1 + rho**2)

def sin_w(rho):
    rho = _radius(rho)
    return 2 * rho / (1 + rho**2)

def cos_w(rho):
    rho = _radius(rho)
    return (rho**2 - 1) / (1 + rho**2)

#---------------------------------------------------------------------------------------------------
def eval_W(y):
    y1, y2 = plane_coords(y)
    q = 1 + y1**2 + y2**2
    return np.stack((2 * y1 / q, 2 * y2 / q, (y1**2 + y2**2 - 1) / q), axis=-1)

def grad_W(y):
    '''
    Closed-form partial derivatives of the bubble. The result has shape (..., 2, 3) where index
    k along the second to last axis holds the derivative along y_k.
    '''
    y1, y2 = plane_coords(y)
    q = 1 + y1**2 + y2**2
    parts = []
    for k, yk in enumerate((y1, y2)):
        d1 = (2 * (k == 0) * q - 4 * y1 * yk) / q**2
        d2 = (2 * (k == 1) * q - 4 * y2 * yk) / q**2
        d3 = 4 * yk / q**2
        parts.append(np.stack((d1, d2, d3), axis=-1))
    return np.stack(parts, axis=-2)

def grad_W_squared(y):
    y1, y2 = plane_coords(y)
    return 8 / (1 + y1**2 + y2**2)**2

#---------------------------------------------------------------------------------------------------
def eval_E(frame_index, y):
    rho, theta = polar(y)
    if frame_index == 1:
        c = cos_w(rho)
        return np.stack((np.cos(theta) * c, np.sin(theta) * c, -sin_w(rho)), axis=-1)
    if frame_index == 2:
        return np.stack((-np.sin(theta), np.cos(theta), np.zeros_like(theta)), axis=-1)
    raise DomainError(f'Frame index must be 1 or 2, got {frame_index!r}.')

#---------------------------------------------------------------------------------------------------
def rotate(omega, v):
    v = np.asarray(v, dtype=float)
    c = np.cos(omega)
    s = np.sin(omega)
    return np.stack((c * v[..., 0] - s * v[..., 1], s * v[..., 0] + c * v[..., 1], v[..., 2]),
                    axis=-1)

#---------------------------------------------------------------------------------------------------
def eval_Z(l, j, y):
    rho, theta = polar(y)
    E1 = eval_E(1, y)
    E2 = eval_E(2, y)
    wr = w_rho(rho)[..., None]
    c = np.cos(theta)[..., None]
    s = np.sin(theta)[..., None]

    if (l, j) == (0, 1):
        return rho[..., None] * wr * E1
    if (l, j) == (0, 2):
        return rho[..., None] * wr * E2
    if (l, j) == (1, 1):
        return wr * (c * E1 + s * E2)
    if (l, j) == (1, 2):
        return wr * (s * E1 - c * E2)
    if (l, j) == (-1, 1):
        return (rho**2)[..., None] * wr * (c * E1 - s * E2)
    if (l, j) == (-1, 2):
        return (rho**2)[..., None] * wr * (s * E1 + c * E2)
    raise DomainError(f'No kernel function with index ({l}, {j}).')

#---------------------------------------------------------------------------------------------------
def eval_U(state, r, z):
    ''' Rotated and rescaled bubble Q_omega W((x - xi) / lambda) at cross-section points. '''
    return rotate(state.omega, eval_W(state.inner(r, z)))
