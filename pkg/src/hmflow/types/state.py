#---------------------------------------------------------------------------------------------------
__all__ = (
    'ModulationState',
    'PlanePoint',
    'normalize',
    'plane_coords',
    'polar',
)

import cmath
import math
import typing

import numpy as np

from .errors import DomainError

#---------------------------------------------------------------------------------------------------
class PlanePoint(typing.NamedTuple):
    y1: float
    y2: float

    @property
    def rho(self):
        return math.hypot(self.y1, self.y2)

    @property
    def theta(self):
        # Adding 0.0 turns -0.0 into 0.0 so the angle stays in (-pi, pi].
        return math.atan2(self.y2 + 0.0, self.y1)

#---------------------------------------------------------------------------------------------------
def plane_coords(y):
    y = np.asarray(y, dtype=float)
    if y.shape[-1:] != (2,):
        raise DomainError(f'Plane points need a trailing axis of length 2, got shape {y.shape}.')
    if not np.all(np.isfinite(y)):
        raise DomainError('Plane points must be finite.')
    return y[..., 0], y[..., 1]

def polar(y):
    y1, y2 = plane_coords(y)
    return np.hypot(y1, y2), np.arctan2(y2 + 0.0, y1)

#---------------------------------------------------------------------------------------------------
def normalize(v):
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise DomainError('Cannot normalize a zero vector onto the sphere.')
    return v / norm

#---------------------------------------------------------------------------------------------------
class ModulationState:
    '''
    Scale, rotation and center of the bubble at one instant. The scale and rotation are packed
    as p = lambda * exp(i omega).
    '''

    def __init__(self, lambda_, omega=0.0, xi=(1.0, 0.0)):
        lambda_ = float(lambda_)
        if not lambda_ > 0:
            raise DomainError(f'Scale must be positive, got {lambda_!r}.')
        xi1, xi2 = (float(x) for x in xi)
        self.lambda_ = lambda_
        self.omega = float(omega)
        self.xi = (xi1, xi2)

    @classmethod
    def from_p(cls, p, xi=(1.0, 0.0)):
        lambda_, omega = cmath.polar(complex(p))
        return cls(lambda_, omega, xi)

    @property
    def p(self):
        return self.lambda_ * cmath.exp(1j * self.omega)

    def inner(self, r, z):
        ''' Inner variable y = (x - xi) / lambda for cross-section points (r, z). '''
        r = np.asarray(r, dtype=float)
        z = np.asarray(z, dtype=float)
        return np.stack(((r - self.xi[0]) / self.lambda_, (z - self.xi[1]) / self.lambda_), axis=-1)

    def __repr__(self):
        return f'ModulationState(lambda_={self.lambda_!r}, omega={self.omega!r}, xi={self.xi!r})'
