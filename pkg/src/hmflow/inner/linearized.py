#---------------------------------------------------------------------------------------------------
__all__ = (
    'apply_LW',
    'apply_Ltilde',
    'apply_Ltilde_definition',
    'apply_Ltilde_mode',
    'apply_Ltilde_radial',
    'project_perp',
    'scaling_rotation_error',
)

import numpy as np

from ..types.errors import DomainError
from .fields import TangentField
from .profiles import cos_w, eval_E, eval_U, eval_W, grad_W, grad_W_squared, rotate, w_rho

#---------------------------------------------------------------------------------------------------
def apply_LW(phi, y, h=1e-3):
    '''
    Linearized harmonic map operator around the bubble, Lap(phi) + |grad W|^2 phi
    + 2 (grad phi . grad W) W, with centered differences of step h for phi.
    '''
    y = np.asarray(y, dtype=float)
    e1 = np.array((h, 0.0))
    e2 = np.array((0.0, h))

    center = phi(y)
    p1, m1 = phi(y + e1), phi(y - e1)
    p2, m2 = phi(y + e2), phi(y - e2)

    lap = (p1 + m1 + p2 + m2 - 4 * center) / h**2
    d1 = (p1 - m1) / (2 * h)
    d2 = (p2 - m2) / (2 * h)

    W = eval_W(y)
    dW = grad_W(y)
    coupling = np.sum(d1 * dW[..., 0, :], axis=-1) + np.sum(d2 * dW[..., 1, :], axis=-1)
    return lap + grad_W_squared(y)[..., None] * center + 2 * coupling[..., None] * W

#---------------------------------------------------------------------------------------------------
def project_perp(Phi, reference):
    '''
    Removes the component along the reference map. Arrays are projected pointwise; callables of
    y produce a TangentField.
    '''
    if callable(Phi) or callable(reference):
        def func(y):
            v = Phi(y) if callable(Phi) else np.broadcast_to(Phi, np.shape(y)[:-1] + (3,))
            U = reference(y) if callable(reference) else reference
            return project_perp(v, U)
        ref = reference if callable(reference) else (lambda y: np.broadcast_to(
            reference, np.shape(y)[:-1] + (3,)))
        return TangentField(func, ref)

    Phi = np.asarray(Phi, dtype=float)
    U = np.asarray(reference, dtype=float)
    return Phi - np.sum(Phi * U, axis=-1, keepdims=True) * U

#---------------------------------------------------------------------------------------------------
class _Frame:
    # Rotated frame and profile quantities at cross-section points for one modulation state.
    def __init__(self, state, at):
        r, z = (np.asarray(a, dtype=float) for a in at)
        y = state.inner(r, z)
        self.rho = np.hypot(y[..., 0], y[..., 1])
        if np.any(self.rho == 0):
            raise DomainError('Polar formulas are singular at the bubble center.')
        self.theta = np.arctan2(y[..., 1] + 0.0, y[..., 0])
        self.lambda_ = state.lambda_
        self.omega = state.omega
        self.r, self.z, self.y = r, z, y
        self.QE1 = rotate(state.omega, eval_E(1, y))
        self.QE2 = rotate(state.omega, eval_E(2, y))
        self.U = eval_U(state, r, z)
        self.w_rho = w_rho(self.rho)
        self.cos_w = cos_w(self.rho)

    def combine(self, a, b):
        return a[..., None] * self.QE1 + b[..., None] * self.QE2

#---------------------------------------------------------------------------------------------------
def apply_Ltilde(Phi, state, at):
    ''' Polar form -(2/lambda) w_rho [(Phi_s . U) Q E1 - (1/s)(Phi_theta . U) Q E2]. '''
    f = _Frame(state, at)
    Phi_r, Phi_z = Phi.vector_derivatives(f.r, f.z)
    c = np.cos(f.theta)[..., None]
    s = np.sin(f.theta)[..., None]
    Phi_s = c * Phi_r + s * Phi_z
    Phi_t = -s * Phi_r + c * Phi_z
    a = np.sum(Phi_s * f.U, axis=-1)
    b = np.sum(Phi_t * f.U, axis=-1)
    return -(2 / f.lambda_) * f.combine(f.w_rho * a, -f.w_rho * b)

def apply_Ltilde_definition(Phi, state, at):
    ''' |grad U|^2 Pi Phi - 2 sum_k d_k(Phi . U) d_k U, with closed-form derivatives of U. '''
    r, z = (np.asarray(a, dtype=float) for a in at)
    y = state.inner(r, z)
    lam = state.lambda_
    U = eval_U(state, r, z)
    dW = grad_W(y)
    dU = (rotate(state.omega, dW[..., 0, :]) / lam, rotate(state.omega, dW[..., 1, :]) / lam)
    grad2 = grad_W_squared(y) / lam**2

    v = Phi.vector(r, z)
    dv = Phi.vector_derivatives(r, z)
    out = grad2[..., None] * project_perp(v, U)
    for k in range(2):
        d_dot = np.sum(dv[k] * U, axis=-1) + np.sum(v * dU[k], axis=-1)
        out = out - 2 * d_dot[..., None] * dU[k]
    return out

#---------------------------------------------------------------------------------------------------
def apply_Ltilde_mode(mode, Phi, state, at):
    f = _Frame(state, at)
    inv = 1 / f.lambda_

    if mode == 0:
        div, curl = Phi.div_curl(f.r, f.z, twist=-f.omega)
        weight = inv * f.rho * f.w_rho**2
        return f.combine(weight * div, weight * curl)

    if mode == 1:
        _, _, p_r, p_z = Phi.derivatives(f.r, f.z)
        c, s = np.cos(f.theta), np.sin(f.theta)
        weight = -2 * inv * f.w_rho * f.cos_w
        return f.combine(weight * (p_r * c + p_z * s), weight * (p_r * s - p_z * c))

    if mode == 2:
        div, curl = Phi.div_curl(f.r, f.z, twist=f.omega, conjugate=True)
        c2, s2 = np.cos(2 * f.theta), np.sin(2 * f.theta)
        weight = inv * f.rho * f.w_rho**2
        return f.combine(weight * (div * c2 - curl * s2), weight * (div * s2 + curl * c2))

    raise DomainError(f'Mode must be 0, 1 or 2, got {mode!r}.')

#---------------------------------------------------------------------------------------------------
def apply_Ltilde_radial(phi, dphi, state, at):
    '''
    Closed form for Phi = (phi(s) e^{i theta}, 0) around the bubble center:
    (2/lambda) rho w_rho^2 [Re(e^{-i omega} phi') Q E1 + (1/s) Im(e^{-i omega} phi) Q E2].
    '''
    f = _Frame(state, at)
    s = f.lambda_ * f.rho
    rot = np.exp(-1j * f.omega)
    weight = 2 / f.lambda_ * f.rho * f.w_rho**2
    return f.combine(weight * np.real(rot * dphi(s)), weight * np.imag(rot * phi(s)) / s)

#---------------------------------------------------------------------------------------------------
def scaling_rotation_error(p, p_dot, y):
    '''
    Time derivative of the bubble under a moving scale and rotation, in the rotated frame:
    -[(lambda'/lambda) rho w_rho E1 + omega' rho w_rho E2] with lambda' and omega' read off
    p = lambda e^{i omega}. A pure mode 0 field.
    '''
    p = complex(p)
    ratio = complex(p_dot) / p
    lam_rate, omega_rate = ratio.real, ratio.imag
    rho = np.hypot(*(np.asarray(y, dtype=float)[..., k] for k in range(2)))
    weight = rho * w_rho(rho)
    return -(lam_rate * weight)[..., None] * eval_E(1, y) - (omega_rate * weight)[..., None] \
        * eval_E(2, y)
