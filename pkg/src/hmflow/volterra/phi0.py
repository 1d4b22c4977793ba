#---------------------------------------------------------------------------------------------------
__all__ = (
    'K01',
    'Phi0',
    'phi0',
)

import numpy as np

from ..inner.fields import PlaneVectorField
from ..inner.profiles import eval_E, rotate, w_rho
from ..types.errors import DomainError
from ..types.state import polar
from .kernels import kernel_k
from .quadrature import graded_panels

#---------------------------------------------------------------------------------------------------
def _duhamel(hist, t, z, n_panels, twist=0.0):
    # int_{-T}^t p'(tau) e^{-i twist} k(z, t - tau) dtau on a mesh graded towards tau = t.
    hist.require(t)
    sigma, w = graded_panels(t + hist.T, n_panels)
    p_dot = hist.p_dot(t - sigma) * np.exp(-1j * twist)
    z = np.asarray(z, dtype=float)
    k = kernel_k(z[..., None], sigma)
    return np.sum(w * p_dot * k, axis=-1)

def phi0(s, t, hist, lambda_, n_panels=2048):
    '''
    phi0(s, t) = -int_{-T}^t p'(tau) s k(sqrt(s^2 + lambda^2), t - tau) dtau, the radial profile
    of the heat-flow correction around the bubble.
    '''
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise DomainError('Radial variable must be non-negative.')
    if not lambda_ > 0:
        raise DomainError(f'Scale must be positive, got {lambda_!r}.')
    z = np.sqrt(s**2 + lambda_**2)
    return -s * _duhamel(hist, t, z, n_panels)

def Phi0(hist, t, lambda_, center, n_panels=2048):
    ''' The plane field (phi0(s) e^{i theta}, 0) around center, s e^{i theta} = x - center. '''
    xi1, xi2 = center

    def value(r, z):
        zeta = (r - xi1) + 1j * (z - xi2)
        s = np.abs(zeta)
        phase = np.where(s > 0, zeta / np.where(s > 0, s, 1.0), 1.0)
        shape = np.shape(s)
        profile = phi0(np.ravel(s), t, hist, lambda_, n_panels).reshape(shape)
        return profile * phase, np.zeros(shape)

    return PlaneVectorField(value, step=1e-6)

#---------------------------------------------------------------------------------------------------
def K01(hist, t, y, n_panels=2048):
    '''
    Heat-kernel error term in the inner variable,
    -(2/lambda) rho w_rho^2 int [Re(p' e^{-i omega}) Q E1 + Im(p' e^{-i omega}) Q E2] k dtau,
    with z = lambda sqrt(1 + rho^2).
    '''
    lam = float(hist.lambda_(t))
    if lam == 0:
        raise DomainError('Scale vanishes at the requested time.')
    omega = float(hist.omega(t))
    rho, _ = polar(y)
    flat = np.ravel(rho)
    z = lam * np.sqrt(1 + flat**2)
    integral = _duhamel(hist, t, z, n_panels, twist=omega).reshape(rho.shape)
    weight = -2 / lam * rho * w_rho(rho)**2
    a = (weight * integral.real)[..., None] * eval_E(1, y)
    b = (weight * integral.imag)[..., None] * eval_E(2, y)
    return rotate(omega, a + b)
