#---------------------------------------------------------------------------------------------------
__all__ = (
    'BoundFit',
    'KernelTable',
    'default_table',
    'fit_bounds',
    'gamma',
    'gamma_direct',
    'gamma_panels',
)

import functools
import logging

import numpy as np
from scipy import integrate
from scipy.interpolate import PchipInterpolator

from ..types.errors import DomainError, QuadratureError
from .kernels import kernel_K_derivatives
from .quadrature import gauss_panels

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
# With v = 1/(1 + rho^2) the weight rho^3 w_rho^3 drho becomes -4 (1 - v) dv on [0, 1], and
# zeta = tau (1 + rho^2) = tau / v, rho^2 / (1 + rho^2) = 1 - v, cos w = 1 - 2 v.
def _bracket(l, v, tau):
    K, zK, z2K = kernel_K_derivatives(tau / v)
    if l == 1:
        return K + 2 * zK * (1 - v) - 4 * (1 - 2 * v) * z2K
    return K - z2K

def gamma_direct(l, tau, tol=1e-12):
    '''
    Gamma_l(tau) = -int_0^inf rho^3 w_rho^3 [...]_{zeta = tau (1 + rho^2)} drho by adaptive
    quadrature.
    '''
    if l not in (1, 2):
        raise DomainError(f'Gamma index must be 1 or 2, got {l!r}.')
    tau = float(tau)
    if not tau > 0:
        raise DomainError(f'Gamma argument must be positive, got {tau!r}.')

    # Structure sits at v ~ tau; break the interval there.
    points = [tau * 10.0**k for k in range(-1, 4) if tau * 10.0**k < 1]
    value, err = integrate.quad(lambda v: 4 * (1 - v) * _bracket(l, v, tau), 0.0, 1.0,
                                points=points or None, epsabs=tol, epsrel=tol, limit=400)
    if not err <= max(100 * tol, 100 * tol * abs(value)):
        raise QuadratureError(f'Gamma_{l}({tau:.6g}) did not converge: error {err:.3g}.',
                              achieved=err)
    return value

def gamma_panels(l, tau, n_panels=80, order=8):
    '''
    Vectorized Gamma_l on an array of tau: composite Gauss-Legendre in v on panels geometric
    from min(1e-4 tau, 1e-4) to 1. The skipped piece near v = 0 is below 4 v_lo^2 / tau.
    '''
    if l not in (1, 2):
        raise DomainError(f'Gamma index must be 1 or 2, got {l!r}.')
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    if np.any(tau <= 0):
        raise DomainError('Gamma argument must be positive.')

    out = np.empty_like(tau)
    for i, t in enumerate(tau):
        v_lo = min(1e-4 * t, 1e-4)
        v, w = gauss_panels(np.geomspace(v_lo, 1.0, n_panels + 1), order)
        out[i] = np.sum(w * 4 * (1 - v) * _bracket(l, v, t))
    return out

#---------------------------------------------------------------------------------------------------
class BoundFit:
    '''
    Constants of the two shape bounds |Gamma - 1| <= C tau (1 + |log tau|) for small tau and
    |Gamma| <= C / tau for large tau, taken as the maxima over the sampled table.
    '''

    def __init__(self, small, large):
        self.small = small
        self.large = large

    def __repr__(self):
        return f'BoundFit(small={self.small!r}, large={self.large!r})'

def fit_bounds(tau, g, split=1.0, small_min=1e-6):
    tau = np.asarray(tau, dtype=float)
    g = np.asarray(g, dtype=float)
    small = (tau >= small_min) & (tau <= split)
    large = tau >= split
    c_small = np.max(np.abs(g[small] - 1) / (tau[small] * (1 + np.abs(np.log(tau[small])))),
                     initial=0.0)
    c_large = np.max(np.abs(g[large]) * tau[large], initial=0.0)
    return BoundFit(float(c_small), float(c_large))

#---------------------------------------------------------------------------------------------------
class KernelTable:
    '''
    Gamma_1 and Gamma_2 sampled on log-spaced tau with monotone cubic interpolation in log tau.
    Below the table Gamma is continued by its limit 1, above it by C / tau.
    '''

    def __init__(self, tau_min=1e-8, tau_max=1e4, n=2048):
        if not 0 < tau_min < tau_max:
            raise DomainError(f'Invalid table range [{tau_min}, {tau_max}].')
        self.tau = np.geomspace(tau_min, tau_max, n)
        self.values = {l: gamma_panels(l, self.tau) for l in (1, 2)}
        log_tau = np.log(self.tau)
        self._interp = {l: PchipInterpolator(log_tau, self.values[l]) for l in (1, 2)}
        log.info('Gamma table built on [%g, %g] with %d points', tau_min, tau_max, n)

    @property
    def tau_min(self):
        return self.tau[0]

    @property
    def tau_max(self):
        return self.tau[-1]

    def __call__(self, l, tau):
        tau = np.asarray(tau, dtype=float)
        if np.any(tau <= 0):
            raise DomainError('Gamma argument must be positive.')
        inside = np.clip(tau, self.tau_min, self.tau_max)
        out = self._interp[l](np.log(inside))
        out = np.where(tau < self.tau_min, 1.0, out)
        tail = self.values[l][-1] * self.tau_max / np.maximum(tau, self.tau_max)
        return np.where(tau > self.tau_max, tail, out)

    def bound_fit(self, l, split=1.0, small_min=1e-6):
        return fit_bounds(self.tau, self.values[l], split, small_min)

#---------------------------------------------------------------------------------------------------
@functools.lru_cache(maxsize=4)
def default_table(n=2048):
    return KernelTable(n=n)

def gamma(l, tau, table=None):
    ''' Tabulated Gamma_l; pass table=False to integrate directly. '''
    if table is False:
        return np.vectorize(lambda t: gamma_direct(l, t))(tau)
    if l not in (1, 2):
        raise DomainError(f'Gamma index must be 1 or 2, got {l!r}.')
    table = default_table() if table is None else table
    return table(l, tau)
