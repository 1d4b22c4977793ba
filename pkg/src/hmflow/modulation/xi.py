#---------------------------------------------------------------------------------------------------
__all__ = (
    'XiTrajectory',
    'b1_main_order',
    'solve_xi',
    'xi_closed_form',
)

import logging

import numpy as np

from ..types.errors import DomainError, NumericalError

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
class XiTrajectory:
    ''' Center of the bubble on the time grid t of [0, T], with xi(T) = (r0, z0). '''

    def __init__(self, t, xi1, xi2, xi1_dot, xi2_dot):
        self.t = t
        self.xi1 = xi1
        self.xi2 = xi2
        self.xi1_dot = xi1_dot
        self.xi2_dot = xi2_dot

    @property
    def xi_dot(self):
        return self.xi1_dot + 1j * self.xi2_dot

    def at(self, t):
        return np.interp(t, self.t, self.xi1), np.interp(t, self.t, self.xi2)

    def max_error(self, r0, T):
        return float(np.max(np.abs(self.xi1 - xi_closed_form(self.t, r0, T))))

def xi_closed_form(t, r0, T):
    ''' sqrt(r0^2 + 2 (T - t)), the solution of xi1' = -1 / xi1 with xi1(T) = r0. '''
    return np.sqrt(r0**2 + 2 * (T - np.asarray(t, dtype=float)))

#---------------------------------------------------------------------------------------------------
def _rate(x):
    return -1.0 / x

def solve_xi(cfg, n_steps=1000):
    '''
    Classic RK4 integration of xi1' = -1 / xi1, xi2' = 0 backward in time from
    xi(T) = (r0, z0) down to t = 0.
    '''
    T, r0, z0 = cfg.T, cfg.r0, cfg.z0
    if n_steps < 1:
        raise DomainError(f'Step count must be positive, got {n_steps!r}.')
    if not r0 > 0:
        raise DomainError(f'Radius r0 must be positive, got {r0!r}.')

    t = np.linspace(0.0, T, n_steps + 1)
    h = -T / n_steps
    xi1 = np.empty(n_steps + 1)
    xi1[-1] = r0
    x = r0
    for i in range(n_steps, 0, -1):
        k1 = _rate(x)
        k2 = _rate(x + 0.5 * h * k1)
        k3 = _rate(x + 0.5 * h * k2)
        k4 = _rate(x + h * k3)
        x = x + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6
        if not x > 0 or not np.isfinite(x):
            raise NumericalError(f'xi1 left the half plane at t = {t[i - 1]:g}.')
        xi1[i - 1] = x

    log.debug('solve_xi: %d steps, xi1(0) = %.17g', n_steps, xi1[0])
    return XiTrajectory(t, xi1, np.full(t.shape, float(z0)), _rate(xi1), np.zeros(t.shape))

def b1_main_order(traj):
    ''' 2 (xi1' + i xi2') + 2 / xi1, vanishing along the reduced center dynamics. '''
    return 2 * traj.xi_dot + 2 / traj.xi1
