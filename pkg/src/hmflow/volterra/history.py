#---------------------------------------------------------------------------------------------------
__all__ = (
    'PHistory',
    'SampledFunction',
    'p0_kappa',
    'p0_kappa_dot',
)

import numpy as np
from scipy import special

from ..types.errors import DomainError

#---------------------------------------------------------------------------------------------------
class SampledFunction:
    '''
    Complex function of time given either by a callable or by samples on a strictly increasing
    grid, evaluated with linear interpolation.
    '''

    def __init__(self, t=None, values=None, func=None):
        if func is None and (t is None or values is None):
            raise DomainError('A sampled function needs a callable or a grid with values.')
        self.func = func
        if t is not None:
            t = np.asarray(t, dtype=float)
            if t.ndim != 1 or t.size < 1 or np.any(np.diff(t) <= 0):
                raise DomainError('Sample times must be strictly increasing.')
            values = np.broadcast_to(np.asarray(values, dtype=complex), t.shape)
            self.t = t
            self.values = np.array(values)
        else:
            self.t = None
            self.values = None

    @classmethod
    def constant(cls, c):
        c = complex(c)
        return cls(func=lambda t: np.full(np.shape(t), c, dtype=complex))

    @property
    def span(self):
        if self.t is None:
            return (-np.inf, np.inf)
        return (self.t[0], self.t[-1])

    def __call__(self, t):
        if self.func is not None:
            return np.asarray(self.func(np.asarray(t, dtype=float)), dtype=complex)
        t = np.asarray(t, dtype=float)
        if self.t.size == 1:
            return np.full(t.shape, self.values[0])
        return (np.interp(t, self.t, self.values.real)
                + 1j * np.interp(t, self.t, self.values.imag))

    def is_zero(self):
        if self.values is not None:
            return not np.any(self.values)
        samples = self(np.linspace(0.0, 1.0, 7))
        return not np.any(samples)

#---------------------------------------------------------------------------------------------------
class PHistory:
    '''
    Trajectory of p = lambda e^{i omega} on [-T, t_end]: either callables for p and its
    derivative or samples on a strictly increasing grid. The rotation angle is the continuous
    (unwrapped) argument of p.
    '''

    def __init__(self, T, t, p, p_dot=None, p_func=None, p_dot_func=None):
        self.T = float(T)
        if not self.T > 0:
            raise DomainError(f'Horizon T must be positive, got {T!r}.')
        t = np.asarray(t, dtype=float)
        if t.ndim != 1 or t.size < 2 or np.any(np.diff(t) <= 0):
            raise DomainError('History grid must be strictly increasing with two or more points.')
        self.t = t
        self.p_samples = np.asarray(p, dtype=complex)
        if p_dot is None:
            p_dot = np.gradient(self.p_samples, t, edge_order=2)
        self.p_dot_samples = np.asarray(p_dot, dtype=complex)
        self.omega_samples = np.unwrap(np.angle(self.p_samples))
        self._p = SampledFunction(func=p_func) if p_func else SampledFunction(t, self.p_samples)
        self._p_dot = (SampledFunction(func=p_dot_func) if p_dot_func
                       else SampledFunction(t, self.p_dot_samples))

    @classmethod
    def from_functions(cls, T, t_end, p, p_dot, n=4097):
        ''' History backed by exact callables, sampled on a grid graded towards t_end. '''
        s = np.linspace(0.0, 1.0, n)
        t = t_end - (t_end + T) * (1 - s)**2
        return cls(T, t, p(t), p_dot(t), p_func=p, p_dot_func=p_dot)

    @property
    def t_start(self):
        return self.t[0]

    @property
    def t_end(self):
        return self.t[-1]

    def covers(self, a, b):
        tol = 1e-12 * max(1.0, abs(self.T))
        return self.t_start <= a + tol and b <= self.t_end + tol

    def require(self, t):
        if not self.covers(-self.T, t):
            raise DomainError(f'History on [{self.t_start:g}, {self.t_end:g}] does not cover '
                              f'[{-self.T:g}, {t:g}].')

    def p(self, t):
        return self._p(t)

    def p_dot(self, t):
        return self._p_dot(t)

    def lambda_(self, t):
        return np.abs(self.p(t))

    def omega(self, t):
        # Continuous branch: unwrapped samples interpolated, then nudged to the exact argument.
        base = np.interp(t, self.t, self.omega_samples)
        exact = np.angle(self.p(t))
        return exact + 2 * np.pi * np.round((base - exact) / (2 * np.pi))

#---------------------------------------------------------------------------------------------------
def p0_kappa(t, T, kappa):
    '''
    p(t) = kappa |log T| int_t^T ds / log^2(T - s) in closed form,
    kappa |log T| (li(T - t) - (T - t) / log(T - t)), vanishing at t = T.
    '''
    t = np.asarray(t, dtype=float)
    if not 0 < T < 1:
        raise DomainError(f'Horizon must lie in (0, 1), got {T!r}.')
    if np.any(t > T) or np.any(T - t >= 1):
        raise DomainError('Times must satisfy T - 1 < t <= T.')
    sigma = T - t
    with np.errstate(divide='ignore', invalid='ignore'):
        log_sigma = np.log(sigma)
        value = special.expi(log_sigma) - sigma / log_sigma
    value = np.where(sigma == 0, 0.0, value)
    return complex(kappa) * abs(np.log(T)) * value

def p0_kappa_dot(t, T, kappa):
    t = np.asarray(t, dtype=float)
    if np.any(t >= T) or np.any(T - t >= 1):
        raise DomainError('Times must satisfy T - 1 < t < T.')
    return -complex(kappa) * abs(np.log(T)) / np.log(T - t)**2
