#---------------------------------------------------------------------------------------------------
__all__ = (
    'kernel_K',
    'kernel_K_derivatives',
    'kernel_k',
)

import math

import numpy as np

from ..types.errors import DomainError

#---------------------------------------------------------------------------------------------------
# K(zeta) = f(zeta/4)/2 with f(x) = (1 - e^{-x})/x. Below this x the closed forms lose digits to
# cancellation and the Taylor series is used instead.
_SERIES_LIMIT = 1.0
_SERIES_TERMS = 30

def _series(x, derivative):
    # f(x) = sum_n (-1)^n x^n / (n + 1)!
    out = np.zeros_like(x)
    for n in range(derivative, _SERIES_TERMS):
        c = (-1)**n / math.factorial(n + 1)
        c *= math.perm(n, derivative)
        out = out + c * x**(n - derivative)
    return out

def _f(x):
    with np.errstate(divide='ignore', invalid='ignore'):
        closed = -np.expm1(-x) / x
    return np.where(x < _SERIES_LIMIT, _series(np.minimum(x, _SERIES_LIMIT), 0), closed)

def _x_df(x):
    # x f'(x) = (x e^{-x} + expm1(-x)) / x
    with np.errstate(divide='ignore', invalid='ignore'):
        closed = (x * np.exp(-x) + np.expm1(-x)) / x
    small = np.minimum(x, _SERIES_LIMIT)
    return np.where(x < _SERIES_LIMIT, small * _series(small, 1), closed)

def _x2_d2f(x):
    # x^2 f''(x) = (-x^2 e^{-x} - 2 x e^{-x} - 2 expm1(-x)) / x
    with np.errstate(divide='ignore', invalid='ignore'):
        closed = (-x**2 * np.exp(-x) - 2 * x * np.exp(-x) - 2 * np.expm1(-x)) / x
    small = np.minimum(x, _SERIES_LIMIT)
    return np.where(x < _SERIES_LIMIT, small**2 * _series(small, 2), closed)

#---------------------------------------------------------------------------------------------------
def kernel_K(zeta):
    ''' K(zeta) = 2 (1 - e^{-zeta/4}) / zeta, with K(0) = 1/2. '''
    zeta = np.asarray(zeta, dtype=float)
    if np.any(zeta < 0):
        raise DomainError('Kernel argument must be non-negative.')
    return 0.5 * _f(zeta / 4)

def kernel_K_derivatives(zeta):
    ''' Returns (K, zeta K', zeta^2 K'') in closed form. '''
    zeta = np.asarray(zeta, dtype=float)
    if np.any(zeta < 0):
        raise DomainError('Kernel argument must be non-negative.')
    x = zeta / 4
    return 0.5 * _f(x), 0.5 * _x_df(x), 0.5 * _x2_d2f(x)

#---------------------------------------------------------------------------------------------------
def kernel_k(z, t):
    ''' Heat kernel factor k(z, t) = 2 (1 - e^{-z^2/4t}) / z^2 = K(z^2/t) / t. '''
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError(f'Kernel time must be positive, got {t!r}.')
    z = np.asarray(z, dtype=float)
    return kernel_K(z**2 / t) / t
