#---------------------------------------------------------------------------------------------------
__all__ = (
    'InverseResult',
    'approx_inverse_P',
    'log_quotient_mass',
    'predicted_kappa',
)

import logging

import numpy as np
from scipy import integrate

from ..types.errors import ConvergenceError, DomainError, NondegeneracyError
from .history import PHistory, SampledFunction, p0_kappa, p0_kappa_dot
from .operator import B0
from .splitting import S_alpha, local_coefficient

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
def log_quotient_mass(T):
    '''
    int_{-T}^T p'(s) / (T - s) ds for the unit log-quotient profile p' = -|log T| / log^2(T - s),
    by quadrature in u = log(T - s).
    '''
    if not 0 < T < 0.5:
        raise DomainError(f'Horizon must lie in (0, 1/2), got {T!r}.')
    L = abs(np.log(T))
    value, _ = integrate.quad(lambda u: -L / u**2, -np.inf, np.log(2 * T))
    return value

def predicted_kappa(a_T, T):
    ''' kappa solving kappa int_{-T}^T p'(s) / (T - s) ds = a(T) for the unit profile. '''
    return complex(a_T) / log_quotient_mass(T)

#---------------------------------------------------------------------------------------------------
class InverseResult:
    def __init__(self, T, kappa, t, p, p_dot, p1, p1_dot, trace, converged, alpha):
        self.T = T
        self.kappa = kappa
        self.t = t
        self.p = p
        self.p_dot = p_dot
        self.p1 = p1
        self.p1_dot = p1_dot
        self.trace = tuple(trace)
        self.converged = converged
        self.alpha = alpha
        self.b0_residual = None

    @property
    def residual(self):
        return self.trace[-1] if self.trace else 0.0

    def p_dot_function(self):
        # p1' vanishes on [-T, 0) and is held constant beyond the last grid time.
        def p_dot(s):
            s = np.asarray(s, dtype=float)
            base = p0_kappa_dot(s, self.T, self.kappa) if self.kappa else np.zeros(s.shape)
            corr = np.interp(s, self.t, self.p1_dot.real) + 1j * np.interp(s, self.t,
                                                                          self.p1_dot.imag)
            return base + np.where(s >= 0, corr, 0.0)
        return p_dot

    def p_function(self):
        def p(s):
            s = np.asarray(s, dtype=float)
            base = p0_kappa(s, self.T, self.kappa) if self.kappa else np.zeros(s.shape)
            # p1 is constant before t = 0 and vanishes at the horizon.
            nodes = np.append(self.t, self.T)
            p1 = np.append(self.p1, 0.0)
            corr = np.interp(s, nodes, p1.real) + 1j * np.interp(s, nodes, p1.imag)
            return base + corr
        return p

    def history(self):
        return PHistory(self.T, np.linspace(-self.T, self.t[-1], 2049),
                        self.p_function()(np.linspace(-self.T, self.t[-1], 2049)),
                        p_func=self.p_function(), p_dot_func=self.p_dot_function())

#---------------------------------------------------------------------------------------------------
def _as_function(a):
    if isinstance(a, SampledFunction):
        return a
    if callable(a):
        return SampledFunction(func=a)
    return SampledFunction.constant(a)

def _residual_vector(a_vals, g, t, alpha, T):
    return a_vals - np.array([S_alpha(g, ti, alpha, T) for ti in t])

def approx_inverse_P(a, T, alpha=0.25, weight_power=1.0, n=200, sigma_min=1e-6, damping=0.5,
                     max_iter=60, tol=1e-9, nondegeneracy=1e-8, b0_points=5):
    '''
    Approximate inverse of the nonlocal operator: p = p_{0,kappa} + p_1 with p(T) = 0.

    kappa comes from the log-quotient ansatz relation kappa int p0'/(T - s) = a(T). The
    correction p_1' lives on a grid geometric in T - t over [0, T) and is found by damped
    fixed-point iteration of S_alpha[p'] = a, dropping the remainder R_alpha. Residuals are
    sup |log(T - t)|^l |a - S_alpha[p']| over the grid.
    '''
    if not 0 < T < 0.5:
        raise DomainError(f'Horizon must lie in (0, 1/2), got {T!r}.')
    a = _as_function(a)
    t = T - T * sigma_min**(np.arange(n) / (n - 1))
    a_vals = a(t)
    weight = np.abs(np.log(T - t))**weight_power

    if not np.any(a_vals) and a.is_zero():
        log.info('Zero datum; the inverse is p = 0.')
        zero = np.zeros(n, dtype=complex)
        return InverseResult(T, 0j, t, zero, zero, zero, zero, [0.0], True, alpha)

    a_T = complex(a(np.asarray(T)))
    if abs(a_T) < nondegeneracy:
        raise NondegeneracyError(f'|a(T)| = {abs(a_T):.3g} is below {nondegeneracy:.3g}.')

    kappa = predicted_kappa(a_T, T)
    L = local_coefficient(t, T, alpha)
    p1_dot = np.zeros(n, dtype=complex)

    def current(s):
        s = np.asarray(s, dtype=float)
        corr = np.interp(s, t, p1_dot.real) + 1j * np.interp(s, t, p1_dot.imag)
        return p0_kappa_dot(s, T, kappa) + np.where(s >= 0, corr, 0.0)

    res = _residual_vector(a_vals, current, t, alpha, T)
    trace = [float(np.max(weight * np.abs(res)))]
    log.info('inverse: kappa = %s, initial residual %.3g', kappa, trace[0])

    converged = False
    rising = 0
    for it in range(max_iter):
        if trace[-1] <= tol * abs(a_T):
            converged = True
            break
        p1_dot = p1_dot + damping * res / L
        res = _residual_vector(a_vals, current, t, alpha, T)
        trace.append(float(np.max(weight * np.abs(res))))
        log.debug('inverse iteration %d: residual %.6g', it + 1, trace[-1])

        rising = rising + 1 if trace[-1] >= trace[-2] else 0
        if rising >= 3:
            raise ConvergenceError(
                f'Fixed-point iteration diverged after {len(trace) - 1} iterations.', trace)
    else:
        converged = trace[-1] <= tol * abs(a_T)
        if not converged:
            log.warning('inverse: stopped after %d iterations with residual %.3g',
                        max_iter, trace[-1])

    # p1(t) = -int_t^T p1', with p1' held constant on the last gap to T.
    tail = -p1_dot[-1] * (T - t[-1])
    steps = 0.5 * (p1_dot[1:] + p1_dot[:-1]) * np.diff(t)
    p1 = tail - np.concatenate((np.cumsum(steps[::-1])[::-1], [0.0]))
    p = p0_kappa(t, T, kappa) + p1
    p_dot = p0_kappa_dot(t, T, kappa) + p1_dot

    result = InverseResult(T, kappa, t, p, p_dot, p1, p1_dot, trace, converged, alpha)
    if b0_points:
        result.b0_residual = b0_residual(result, a, weight_power, b0_points)
    return result

#---------------------------------------------------------------------------------------------------
def b0_residual(result, a, weight_power=1.0, n_points=5):
    '''
    sup |log(T - t)|^l |2 B0[p](t) - a(t)| on a few times in [0, T/2]. The factor two matches the
    normalization B0 = e^{i omega} (B01 + i B02) / 2 against the log integral.
    '''
    T = result.T
    hist = result.history()
    worst = 0.0
    for ti in np.linspace(0.0, 0.5 * T, n_points):
        value = B0(hist, ti)
        worst = max(worst, abs(np.log(T - ti))**weight_power * abs(2 * value - complex(a(ti))))
    log.info('inverse: B0 residual %.3g', worst)
    return worst
