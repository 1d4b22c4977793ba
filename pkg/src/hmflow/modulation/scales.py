#---------------------------------------------------------------------------------------------------
__all__ = (
    'inner_radius',
    'lambda_star',
)

import numpy as np

from ..types.errors import DomainError

#---------------------------------------------------------------------------------------------------
def lambda_star(t, T):
    ''' Model scale |log T| (T - t) / log^2(T - t) for 0 <= t < T < 1. '''
    t = np.asarray(t, dtype=float)
    if not 0 < T < 1:
        raise DomainError(f'Horizon must lie in (0, 1), got {T!r}.')
    if np.any(t >= T):
        raise DomainError(f'Times must stay below the horizon {T!r}.')
    if np.any(T - t >= 1):
        raise DomainError('Times must satisfy T - t < 1.')
    sigma = T - t
    return abs(np.log(T)) * sigma / np.log(sigma)**2

def inner_radius(t, T, beta):
    ''' R(t) = lambda_*(t)^{-beta}. '''
    if not 0 < beta < 0.5:
        raise DomainError(f'Exponent beta must lie in (0, 1/2), got {beta!r}.')
    return lambda_star(t, T)**(-beta)
