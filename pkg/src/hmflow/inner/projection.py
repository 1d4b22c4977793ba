#---------------------------------------------------------------------------------------------------
__all__ = (
    'ModeDecomposition',
    'ProjectionResult',
    'c_lj',
    'mode_decompose',
    'polar_rule',
)

import logging

import numpy as np
from numpy.polynomial import legendre

from ..types.errors import DomainError, QuadratureError, ReconstructionError
from .fields import kernel_field
from .profiles import eval_E

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
def polar_rule(rho_max=50.0, n_panels=64, order=8, n_theta=64):
    '''
    Tensor rule on the disc of radius rho_max: composite Gauss-Legendre in rho on panels
    clustered near the origin, uniform trapezoid in theta. Returns the points, with shape
    (n_rho, n_theta, 2), and the matching weights, including the Jacobian rho.
    '''
    nodes, weights = legendre.leggauss(order)
    edges = np.linspace(0.0, np.sqrt(rho_max), n_panels + 1)**2
    a, b = edges[:-1, None], edges[1:, None]
    rho = (0.5 * (b - a) * nodes + 0.5 * (b + a)).ravel()
    w_rho = (0.5 * (b - a) * weights).ravel()

    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    w_theta = np.full(n_theta, 2 * np.pi / n_theta)

    y = np.stack((rho[:, None] * np.cos(theta), rho[:, None] * np.sin(theta)), axis=-1)
    return y, (w_rho * rho)[:, None] * w_theta[None, :]

#---------------------------------------------------------------------------------------------------
class ProjectionResult(float):
    ''' Projection coefficient that also carries the estimated truncation tail. '''

    def __new__(cls, value, tail):
        obj = super().__new__(cls, value)
        obj.tail = tail
        return obj

#---------------------------------------------------------------------------------------------------
def _tail_estimate(h, Z, rho_max, scale, n_theta=64):
    # Power-law fit of the angular integral of h.Z between rho_max/2 and rho_max, extrapolated
    # to infinity.
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    samples = []
    for rho in (0.5 * rho_max, rho_max):
        y = np.stack((rho * np.cos(theta), rho * np.sin(theta)), axis=-1)
        g = np.abs(np.mean(np.sum(h(y) * Z(y), axis=-1))) * 2 * np.pi * rho
        samples.append(g)
    g_half, g_end = samples

    # Rounding level; nothing to extrapolate.
    if g_end * rho_max <= 1e-14 * scale:
        return g_end * rho_max
    if g_half <= g_end:
        return np.inf
    decay = np.log2(g_half / g_end)
    if decay <= 1:
        return np.inf
    return g_end * rho_max / (decay - 1)

def c_lj(h, l, j, rho_max=50.0, tol=1e-6, n_panels=64, order=8, n_theta=64):
    '''
    Projection coefficient of a tangent field on the kernel function Z_lj, normalized so that
    w_rho^2 Z_lj has coefficient one.
    '''
    if (l, j) not in ((-1, 1), (-1, 2), (0, 1), (0, 2), (1, 1), (1, 2)):
        raise DomainError(f'No kernel function with index ({l}, {j}).')

    y, weights = polar_rule(rho_max, n_panels, order, n_theta)
    Z = kernel_field(l, j)
    Z_values = Z(y)
    numerator = np.sum(weights * np.sum(h(y) * Z_values, axis=-1))
    weighted = kernel_field(l, j, weighted=True)
    denominator = np.sum(weights * np.sum(weighted(y) * Z_values, axis=-1))

    tail = _tail_estimate(h, Z, rho_max, abs(denominator), n_theta)
    relative = tail / abs(denominator)
    if not relative <= tol:
        raise QuadratureError(
            f'Projection on Z_({l},{j}) not converged: tail {relative:.3g} exceeds {tol:.3g} '
            f'at rho_max = {rho_max}.', achieved=relative)

    value = numerator / denominator
    log.debug('c_(%d,%d) = %.17g (tail %.3g)', l, j, value, relative)
    return ProjectionResult(value, relative)

#---------------------------------------------------------------------------------------------------
class ModeDecomposition:
    def __init__(self, rho, profiles, error, energy):
        self.rho = rho
        self.profiles = profiles
        self.error = error
        self.energy = energy

    def __getitem__(self, k):
        return self.profiles[k]

    def dominant(self):
        return max(self.energy, key=self.energy.get)

    def energy_fraction(self, k):
        total = sum(self.energy.values())
        return self.energy[k] / total if total else 0.0

def mode_decompose(h, k_max, rho=None, n_theta=None, tol=1e-8):
    '''
    Fourier analysis in theta of h.E1 + i h.E2, which equals the sum over k of
    h_k(rho) e^{ik theta} for h = sum_k Re(h_k e^{ik theta}) E1 + Im(h_k e^{ik theta}) E2.
    '''
    if k_max < 0:
        raise DomainError(f'Mode cutoff must be non-negative, got {k_max}.')
    if rho is None:
        rho = np.linspace(0.05, 10.0, 200)
    rho = np.asarray(rho, dtype=float)
    if n_theta is None:
        n_theta = max(64, 4 * k_max + 4)
    if n_theta <= 2 * k_max:
        raise DomainError(f'{n_theta} angles cannot resolve modes up to {k_max}.')

    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    y = np.stack((rho[:, None] * np.cos(theta), rho[:, None] * np.sin(theta)), axis=-1)
    values = h(y)
    F = np.sum(values * eval_E(1, y), axis=-1) + 1j * np.sum(values * eval_E(2, y), axis=-1)

    coeffs = np.fft.fft(F, axis=-1) / n_theta
    profiles = {k: coeffs[:, k % n_theta] for k in range(-k_max, k_max + 1)}

    recon = sum(profiles[k][:, None] * np.exp(1j * k * theta) for k in profiles)
    scale = max(float(np.max(np.abs(F), initial=0.0)), 1.0)
    error = float(np.max(np.abs(F - recon), initial=0.0)) / scale
    energy = {k: float(np.sum(np.abs(p)**2)) for k, p in profiles.items()}

    if error > tol:
        raise ReconstructionError(
            f'Modes up to {k_max} leave a reconstruction error {error:.3g} above {tol:.3g}.',
            error=error)
    return ModeDecomposition(rho, profiles, error, energy)
