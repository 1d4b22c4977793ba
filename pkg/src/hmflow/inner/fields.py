#---------------------------------------------------------------------------------------------------
__all__ = (
    'PlaneVectorField',
    'TangentField',
    'cutoff_field',
    'k1_field',
    'kernel_field',
    'linear_field',
    'mode_field',
    'polynomial_field',
    'radial_field',
    'random_cubic_field',
    'smooth_cutoff',
    'smooth_cutoff_derivative',
)

import numpy as np

from ..types.errors import DomainError
from ..types.state import plane_coords, polar
from .profiles import eval_E, eval_W, eval_Z, w_rho

#---------------------------------------------------------------------------------------------------
class TangentField:
    '''
    R^3 valued field of the inner variable y, tangent to a reference map. An optional extent
    (half width of a square box centered at the origin) bounds where the field may be evaluated.
    '''

    def __init__(self, func, reference=eval_W, extent=None):
        self.func = func
        self.reference = reference
        self.extent = extent

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        if self.extent is not None:
            y1, y2 = plane_coords(y)
            if np.any(np.maximum(np.abs(y1), np.abs(y2)) > self.extent):
                raise DomainError(f'Evaluation outside the field extent {self.extent}.')
        return np.asarray(self.func(y), dtype=float)

    def check(self, y, tol=1e-10):
        dots = np.abs(np.sum(self(y) * self.reference(y), axis=-1))
        worst = float(np.max(dots, initial=0.0))
        if worst > tol:
            raise DomainError(f'Field is not tangent to its reference map: |h.W| = {worst:.3g}.')
        return worst

    def __add__(self, other):
        extents = [e for e in (self.extent, other.extent) if e is not None]
        return TangentField(lambda y: self.func(y) + other.func(y), self.reference,
                            min(extents) if extents else None)

    def __mul__(self, scale):
        return TangentField(lambda y: scale * self.func(y), self.reference, self.extent)

    __rmul__ = __mul__

#---------------------------------------------------------------------------------------------------
def kernel_field(l, j, weighted=False, extent=None):
    if weighted:
        def func(y):
            rho, _ = polar(y)
            return (w_rho(rho)**2)[..., None] * eval_Z(l, j, y)
    else:
        def func(y):
            return eval_Z(l, j, y)
    return TangentField(func, extent=extent)

def mode_field(k, profile):
    '''
    Mode k field Re(h(rho) e^{ik theta}) E1 + Im(h(rho) e^{ik theta}) E2 for a complex radial
    profile h.
    '''
    def func(y):
        rho, theta = polar(y)
        c = profile(rho) * np.exp(1j * k * theta)
        return np.real(c)[..., None] * eval_E(1, y) + np.imag(c)[..., None] * eval_E(2, y)
    return TangentField(func)

def k1_field(xi_dot, lambda_=1.0):
    ''' Translation error term, a mode 1 field with profile w_rho (xi1' - i xi2') / lambda. '''
    a = complex(xi_dot[0], -xi_dot[1]) / lambda_
    return mode_field(1, lambda rho: a * w_rho(rho))

#---------------------------------------------------------------------------------------------------
class PlaneVectorField:
    '''
    Field Phi(r, z) = (phi1 + i phi2, phi3) of the cross-section. The value callable returns the
    complex first component and the real third component. The Jacobian callable, when given,
    returns (F_r, F_z, phi3_r, phi3_z); otherwise centered differences with the given step are
    used.
    '''

    def __init__(self, value, jacobian=None, step=1e-5):
        self.value = value
        self.jacobian = jacobian
        self.step = step

    def __call__(self, r, z):
        F, phi3 = self.value(np.asarray(r, dtype=float), np.asarray(z, dtype=float))
        return np.asarray(F, dtype=complex), np.asarray(phi3, dtype=float)

    def vector(self, r, z):
        F, phi3 = self(r, z)
        phi3 = np.broadcast_to(phi3, F.shape)
        return np.stack((F.real, F.imag, phi3), axis=-1)

    def derivatives(self, r, z):
        r = np.asarray(r, dtype=float)
        z = np.asarray(z, dtype=float)
        if self.jacobian is not None:
            F_r, F_z, p_r, p_z = self.jacobian(r, z)
            shape = np.broadcast(r, z).shape
            return (np.broadcast_to(np.asarray(F_r, dtype=complex), shape),
                    np.broadcast_to(np.asarray(F_z, dtype=complex), shape),
                    np.broadcast_to(np.asarray(p_r, dtype=float), shape),
                    np.broadcast_to(np.asarray(p_z, dtype=float), shape))

        h = self.step
        Fp, pp = self(r + h, z)
        Fm, pm = self(r - h, z)
        F_r, p_r = (Fp - Fm) / (2 * h), (pp - pm) / (2 * h)
        Fp, pp = self(r, z + h)
        Fm, pm = self(r, z - h)
        F_z, p_z = (Fp - Fm) / (2 * h), (pp - pm) / (2 * h)
        return F_r, F_z, p_r, p_z

    def vector_derivatives(self, r, z):
        ''' Real 3-vectors Phi_r and Phi_z. '''
        F_r, F_z, p_r, p_z = self.derivatives(r, z)
        return (np.stack((F_r.real, F_r.imag, p_r), axis=-1),
                np.stack((F_z.real, F_z.imag, p_z), axis=-1))

    def div_curl(self, r, z, twist=0.0, conjugate=False):
        '''
        div and curl of the complex component after multiplying by e^{i twist}, applied to the
        conjugate component when requested.
        '''
        F_r, F_z, _, _ = self.derivatives(r, z)
        if conjugate:
            F_r, F_z = np.conj(F_r), np.conj(F_z)
        rot = np.exp(1j * twist)
        F_r, F_z = rot * F_r, rot * F_z
        return F_r.real + F_z.imag, F_r.imag - F_z.real

    def __add__(self, other):
        if self.jacobian is None or other.jacobian is None:
            jacobian = None
        else:
            def jacobian(r, z):
                return tuple(a + b for a, b in zip(self.jacobian(r, z), other.jacobian(r, z)))

        def value(r, z):
            F1, p1 = self(r, z)
            F2, p2 = other(r, z)
            return F1 + F2, p1 + p2
        return PlaneVectorField(value, jacobian, min(self.step, other.step))

    def scaled(self, c):
        c = float(c)
        jacobian = None
        if self.jacobian is not None:
            def jacobian(r, z):
                return tuple(c * d for d in self.jacobian(r, z))
        return PlaneVectorField(lambda r, z: tuple(c * v for v in self(r, z)), jacobian, self.step)

#---------------------------------------------------------------------------------------------------
def _poly_eval(coeffs, r, z):
    out = np.zeros(np.broadcast(r, z).shape)
    dr = np.zeros_like(out)
    dz = np.zeros_like(out)
    for a in range(coeffs.shape[0]):
        for b in range(coeffs.shape[1]):
            c = coeffs[a, b]
            if c == 0:
                continue
            out = out + c * r**a * z**b
            if a:
                dr = dr + c * a * r**(a - 1) * z**b
            if b:
                dz = dz + c * b * r**a * z**(b - 1)
    return out, dr, dz

def polynomial_field(coeffs, center=(0.0, 0.0)):
    '''
    Polynomial field with coeffs[m, a, b] the coefficient of (r - r0)^a (z - z0)^b in component
    m, with exact Jacobian.
    '''
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.ndim != 3 or coeffs.shape[0] != 3:
        raise DomainError(f'Polynomial coefficients need shape (3, n, m), got {coeffs.shape}.')
    r0, z0 = center

    def parts(r, z):
        return [_poly_eval(coeffs[m], r - r0, z - z0) for m in range(3)]

    def value(r, z):
        (p1, _, _), (p2, _, _), (p3, _, _) = parts(r, z)
        return p1 + 1j * p2, p3

    def jacobian(r, z):
        (_, a_r, a_z), (_, b_r, b_z), (_, c_r, c_z) = parts(r, z)
        return a_r + 1j * b_r, a_z + 1j * b_z, c_r, c_z

    return PlaneVectorField(value, jacobian)

def random_cubic_field(rng, center=(0.0, 0.0), scale=1.0):
    coeffs = scale * rng.standard_normal((3, 4, 4))
    # Keep total degree at most three.
    a, b = np.meshgrid(np.arange(4), np.arange(4), indexing='ij')
    coeffs[:, a + b > 3] = 0.0
    return polynomial_field(coeffs, center)

def linear_field(a_r, a_z, center=(0.0, 0.0), const=0.0):
    ''' Complex affine field const + a_r (r - r0) + a_z (z - z0) with vanishing third component. '''
    a_r, a_z, const = complex(a_r), complex(a_z), complex(const)
    r0, z0 = center

    def value(r, z):
        return const + a_r * (r - r0) + a_z * (z - z0), np.zeros(np.broadcast(r, z).shape)

    def jacobian(r, z):
        return a_r, a_z, 0.0, 0.0

    return PlaneVectorField(value, jacobian)

#---------------------------------------------------------------------------------------------------
def radial_field(phi, dphi, center):
    '''
    Field (phi(s) e^{i theta}, 0) where (r, z) = center + s e^{i theta}; phi and its derivative
    are complex callables of s. Not defined at s = 0.
    '''
    xi1, xi2 = center

    def value(r, z):
        zeta = (r - xi1) + 1j * (z - xi2)
        s = np.abs(zeta)
        return phi(s) * zeta / s, np.zeros(np.shape(s))

    def jacobian(r, z):
        zeta = (r - xi1) + 1j * (z - xi2)
        s = np.abs(zeta)
        g = phi(s) / s
        g_s = (dphi(s) * s - phi(s)) / s**2
        F_r = g_s * (r - xi1) / s * zeta + g
        F_z = g_s * (z - xi2) / s * zeta + 1j * g
        zero = np.zeros(np.shape(s))
        return F_r, F_z, zero, zero

    return PlaneVectorField(value, jacobian)

#---------------------------------------------------------------------------------------------------
def _bump(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1 / x[pos])
    return out

def _bump_derivative(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1 / x[pos]) / x[pos]**2
    return out

def smooth_cutoff(s):
    ''' Smooth function equal to 1 for s <= 1 and 0 for s >= 2. '''
    s = np.asarray(s, dtype=float)
    a = _bump(2 - s)
    return a / (a + _bump(s - 1))

def smooth_cutoff_derivative(s):
    s = np.asarray(s, dtype=float)
    a, b = _bump(2 - s), _bump(s - 1)
    da, db = -_bump_derivative(2 - s), _bump_derivative(s - 1)
    return (da * b - a * db) / (a + b)**2

def cutoff_field(field, center, radius):
    ''' Product of a field with smooth_cutoff(|x - center| / radius). '''
    xi1, xi2 = center

    def weight(r, z):
        d = np.hypot(r - xi1, z - xi2)
        eta = smooth_cutoff(d / radius)
        deta = smooth_cutoff_derivative(d / radius) / radius
        with np.errstate(invalid='ignore', divide='ignore'):
            ur = np.where(d > 0, (r - xi1) / d, 0.0)
            uz = np.where(d > 0, (z - xi2) / d, 0.0)
        return eta, deta * ur, deta * uz

    def value(r, z):
        eta, _, _ = weight(r, z)
        F, phi3 = field(r, z)
        return eta * F, eta * phi3

    jacobian = None
    if field.jacobian is not None:
        def jacobian(r, z):
            eta, eta_r, eta_z = weight(r, z)
            F, phi3 = field(r, z)
            F_r, F_z, p_r, p_z = field.derivatives(r, z)
            return (eta * F_r + eta_r * F, eta * F_z + eta_z * F,
                    eta * p_r + eta_r * phi3, eta * p_z + eta_z * phi3)

    return PlaneVectorField(value, jacobian, field.step)
