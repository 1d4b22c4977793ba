#---------------------------------------------------------------------------------------------------
__all__ = (
    'NORMS',
    'norm_nu_a',
    'norm_sharp',
    'norm_star',
    'norm_star_k',
    'norm_starstar',
    'norm_theta_l',
    'norm_triple',
    'weighted_norm',
)

import numpy as np

from ..types.errors import DomainError

#---------------------------------------------------------------------------------------------------
# Inner norms take samples on points y of shape (n_t, ..., 2), values of shape y.shape[:-1] or
# y.shape[:-1] + (3,), and the scale lam and inner radius R per time (or as scalars).

def _magnitude(values, y):
    values = np.asarray(values, dtype=float)
    points = np.shape(y)[:-1]
    if values.shape == points:
        return np.abs(values)
    if values.shape == points + (3,):
        return np.linalg.norm(values, axis=-1)
    raise DomainError(f'Field samples of shape {values.shape} do not match points {points}.')

def _per_time(x, like):
    x = np.asarray(x, dtype=float)
    return x.reshape(x.shape + (1,) * (like.ndim - x.ndim))

def _sup(ratio, mask=None):
    if mask is not None:
        ratio = np.where(mask, ratio, 0.0)
    return float(np.max(ratio)) if ratio.size else 0.0

def norm_nu_a(h, y, lam, nu, a):
    ''' sup |h| / (lam^nu (1 + |y|)^{-a}). '''
    if not nu > 0 or not 1 < a < 3:
        raise DomainError(f'Need nu > 0 and a in (1, 3), got nu = {nu!r}, a = {a!r}.')
    mag = _magnitude(h, y)
    s = np.linalg.norm(y, axis=-1)
    weight = _per_time(lam, mag)**nu * (1 + s)**(-a)
    return _sup(mag / weight)

def _gradient_part(phi, grad_phi, y):
    s = np.linalg.norm(np.asarray(y, dtype=float), axis=-1)
    mag = _magnitude(phi, y)
    grad = np.asarray(grad_phi, dtype=float)
    # Gradient samples carry a trailing derivative axis of length 2.
    gmag = np.sqrt(np.sum(grad**2, axis=tuple(range(mag.ndim, grad.ndim))))
    return mag + (1 + s) * gmag, s

def norm_star(phi, grad_phi, y, lam, R, nu, a, delta):
    '''
    sup over |y| <= 2R of (|phi| + (1 + |y|) |grad phi|) divided by
    lam^nu max(R^{delta (5 - a)} / (1 + |y|)^3, (1 + |y|)^{2 - a}).
    '''
    if not 2 < a < 3 or not 0 < delta < 1 or not nu > 0:
        raise DomainError('Need a in (2, 3), delta in (0, 1) and nu > 0.')
    top, s = _gradient_part(phi, grad_phi, y)
    Rt = _per_time(R, top)
    weight = _per_time(lam, top)**nu * np.maximum(Rt**(delta * (5 - a)) / (1 + s)**3,
                                                  (1 + s)**(2 - a))
    return _sup(top / weight, s <= 2 * Rt)

def norm_starstar(phi, grad_phi, y, lam, R, nu):
    ''' sup over |y| <= 2R of (|phi| + (1 + |y|) |grad phi|) / (lam^nu R^2 (1 + |y|)^{-1}). '''
    if not nu > 0:
        raise DomainError(f'Need nu > 0, got {nu!r}.')
    top, s = _gradient_part(phi, grad_phi, y)
    Rt = _per_time(R, top)
    weight = _per_time(lam, top)**nu * Rt**2 / (1 + s)
    return _sup(top / weight, s <= 2 * Rt)

def norm_triple(phi, grad_phi, y, lam, R, nu):
    ''' sup over |y| <= 2R of (|phi| + (1 + |y|) |grad phi|) / (lam^nu log R). '''
    if not nu > 0:
        raise DomainError(f'Need nu > 0, got {nu!r}.')
    Rv = np.asarray(R, dtype=float)
    if np.any(Rv <= 1):
        raise DomainError('The inner radius must exceed 1.')
    top, s = _gradient_part(phi, grad_phi, y)
    Rt = _per_time(Rv, top)
    weight = _per_time(lam, top)**nu * np.log(Rt)
    return _sup(top / weight, s <= 2 * Rt)

#---------------------------------------------------------------------------------------------------
def norm_sharp(psi, grad_psi, psi_T, grad_psi_T, t, T, lam, R, Theta):
    '''
    Value and gradient parts of the outer norm, for samples psi[k, ...] at times t[k] < T and
    the limits psi_T, grad_psi_T at t = T. lam and R are the scale and inner radius at t.
    '''
    if not Theta > 0:
        raise DomainError(f'Need Theta > 0, got {Theta!r}.')
    t = np.asarray(t, dtype=float)
    if np.any(t >= T) or np.any(t < 0):
        raise DomainError('Sample times must lie in [0, T).')
    psi = np.asarray(psi, dtype=float)
    grad = np.asarray(grad_psi, dtype=float)
    lam = np.asarray(lam, dtype=float)
    R = np.asarray(R, dtype=float)
    lam0, R0 = lam[0], R[0]
    if t[0] != 0:
        raise DomainError('The first sample must be at t = 0.')

    def sup_norm(x):
        return float(np.max(np.abs(x))) if x.size else 0.0

    def pointwise(x, lead):
        return np.abs(x).reshape(lead, -1).max(axis=1)

    n = t.size
    part1 = lam0**(-Theta) * sup_norm(psi) / (abs(np.log(T)) * lam0 * R0)
    part2 = lam0**(-Theta) * sup_norm(grad)
    diff = pointwise(psi - np.asarray(psi_T, dtype=float), n)
    part3 = float(np.max(lam**(-Theta - 1) / R / np.abs(np.log(T - t)) * diff))
    gdiff = pointwise(grad - np.asarray(grad_psi_T, dtype=float), n)
    part4 = float(np.max(lam**(-Theta) * gdiff))
    return part1 + part2 + part3 + part4

#---------------------------------------------------------------------------------------------------
def norm_theta_l(g, t, T, Theta, l):
    ''' sup (T - t)^{-Theta} |log(T - t)|^l |g(t)| over samples with t < T. '''
    t = np.asarray(t, dtype=float)
    if np.any(t >= T):
        raise DomainError('Sample times must stay below the horizon.')
    if not 0 < Theta < 1:
        raise DomainError(f'Need Theta in (0, 1), got {Theta!r}.')
    sigma = T - t
    return _sup(sigma**(-Theta) * np.abs(np.log(sigma))**l * np.abs(np.asarray(g)))

def norm_star_k(g_dot, t, T, k):
    ''' sup |log(T - t)|^k |g'(t)| over samples with t < T. '''
    t = np.asarray(t, dtype=float)
    if np.any(t >= T):
        raise DomainError('Sample times must stay below the horizon.')
    return _sup(np.abs(np.log(T - t))**k * np.abs(np.asarray(g_dot)))

#---------------------------------------------------------------------------------------------------
NORMS = {
    'nu_a': norm_nu_a,
    'star': norm_star,
    'starstar': norm_starstar,
    'triple': norm_triple,
    'sharp': norm_sharp,
    'theta_l': norm_theta_l,
    'star_k': norm_star_k,
}

def weighted_norm(field, norm_id, **params):
    ''' Dispatches to one of NORMS with the field samples as first argument. '''
    try:
        norm = NORMS[norm_id]
    except KeyError:
        raise DomainError(f'Unknown norm {norm_id!r}; expected one of {sorted(NORMS)}.') from None
    return norm(field, **params)
