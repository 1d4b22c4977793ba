#---------------------------------------------------------------------------------------------------
__all__ = (
    'S_alpha',
    'local_coefficient',
    'split_S_R',
)

import numpy as np

from ..modulation.scales import lambda_star
from ..types.errors import DomainError
from .quadrature import log_integral

#---------------------------------------------------------------------------------------------------
def local_coefficient(t, T, alpha):
    ''' Coefficient of g(t) in S_alpha: -2 log lambda_*(t) + (1 + alpha) log(T - t). '''
    return -2 * np.log(lambda_star(t, T)) + (1 + alpha) * np.log(T - t)

def S_alpha(g, t, alpha, T, n_panels=48):
    delta = (T - t)**(1 + alpha)
    g_t = complex(g(np.asarray(t, dtype=float)))
    return g_t * local_coefficient(t, T, alpha) + log_integral(g, t, -T, delta, n_panels)

def split_S_R(g, t, alpha, T, n_panels=48):
    '''
    Splits the truncated log integral of g at the window (T - t)^{1 + alpha}:

      S = g(t) [-2 log lambda_* + (1 + alpha) log(T - t)] + int_{-T}^{t - delta} g(s) / (t - s) ds
      R = -int_{t - delta}^{t - lambda_*^2} (g(t) - g(s)) / (t - s) ds

    with delta = (T - t)^{1 + alpha}. When delta > lambda_*^2, S + R is the integral of
    g(s) / (t - s) over [-T, t - lambda_*^2]; otherwise the window is empty and R = 0.
    '''
    if not 0 < alpha < 1:
        raise DomainError(f'Window exponent must lie in (0, 1), got {alpha!r}.')
    lam = lambda_star(t, T)
    delta = (T - t)**(1 + alpha)
    g_t = complex(g(np.asarray(t, dtype=float)))

    S = S_alpha(g, t, alpha, T, n_panels)

    if delta <= lam**2:
        return complex(S), 0j

    def difference(s):
        return g_t - g(s)
    # Integral over [t - delta, t - lambda_*^2] in u = log(t - s).
    R = -log_integral(difference, t, t - delta, lam**2, n_panels)
    return complex(S), complex(R)
