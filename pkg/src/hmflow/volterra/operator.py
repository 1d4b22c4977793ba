#---------------------------------------------------------------------------------------------------
__all__ = (
    'B0',
    'B0Parts',
    'clean_bracket',
    'lambda_dot',
)

import logging

import numpy as np

from ..types.errors import DegenerateScaleError, DomainError
from .gamma import default_table
from .quadrature import gauss_panels, graded_panels

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
def lambda_dot(hist, t, method='identity', h=None):
    '''
    Rate of the scale. The identity lambda' = Re(p' e^{-i omega}) is exact; the stencil method
    differentiates |p| with centered five-point differences.
    '''
    if method == 'identity':
        return float(np.real(hist.p_dot(t) * np.exp(-1j * hist.omega(t))))
    if method != 'stencil':
        raise DomainError(f'Unknown derivative method {method!r}.')

    if h is None:
        i = np.searchsorted(hist.t, t)
        i = min(max(i, 1), hist.t.size - 1)
        h = hist.t[i] - hist.t[i - 1]
    if not hist.covers(t - 2 * h, t + 2 * h):
        raise DomainError(f'Five-point stencil of width {h:g} leaves the history at t = {t:g}.')
    lam = hist.lambda_(np.array((t - 2 * h, t - h, t + h, t + 2 * h)))
    return float((lam[0] - 8 * lam[1] + 8 * lam[2] - lam[3]) / (12 * h))

#---------------------------------------------------------------------------------------------------
class B0Parts:
    def __init__(self, b01, b02, omega, lambda_dot):
        self.b01 = b01
        self.b02 = b02
        self.omega = omega
        self.lambda_dot = lambda_dot

    @property
    def value(self):
        return 0.5 * np.exp(1j * self.omega) * (self.b01 + 1j * self.b02)

def B0(hist, t, table=None, n_panels=4096, grading=2.0, lambda_dot_method='identity',
       full_output=False):
    '''
    Nonlocal operator
    B01 = int Re(p'(tau) e^{-i omega(t)}) Gamma_1(lambda^2 / (t - tau)) dtau / (t - tau) - 2 lambda',
    B02 = int Im(p'(tau) e^{-i omega(t)}) Gamma_2(lambda^2 / (t - tau)) dtau / (t - tau),
    B0 = e^{i omega} (B01 + i B02) / 2. The integrals run over [-T, t] on a mesh graded towards
    tau = t where Gamma_l(lambda^2 / (t - tau)) vanishes.
    '''
    hist.require(t)
    lam = float(hist.lambda_(t))
    if lam == 0:
        raise DegenerateScaleError(f'Scale vanishes at t = {t:g}.')
    table = default_table() if table is None else table
    omega = float(hist.omega(t))

    s, w = graded_panels(t + hist.T, n_panels, grading)
    q = hist.p_dot(t - s) * np.exp(-1j * omega)
    arg = lam**2 / s
    b01 = np.sum(w * q.real * table(1, arg) / s)
    b02 = np.sum(w * q.imag * table(2, arg) / s)

    rate = lambda_dot(hist, t, lambda_dot_method)
    parts = B0Parts(b01 - 2 * rate, b02, omega, rate)
    log.debug('B0(%g): B01 = %.6g, B02 = %.6g', t, parts.b01, parts.b02)
    return parts if full_output else parts.value

#---------------------------------------------------------------------------------------------------
def clean_bracket(p_dot, t, T, n_panels=64, order=8):
    '''
    int_{-T}^t p'(s) / (T - s) ds - p'(t) log(T - t), integrated in u = log(T - s). Constant in t
    for p' proportional to 1 / log^2(T - t).
    '''
    if not -T <= t < T:
        raise DomainError(f'Time {t!r} outside [-T, T).')
    u, w = gauss_panels(np.linspace(np.log(T - t), np.log(2 * T), n_panels + 1), order)
    integral = np.sum(w * p_dot(T - np.exp(u)))
    return complex(integral - p_dot(np.asarray(t, dtype=float)) * np.log(T - t))
