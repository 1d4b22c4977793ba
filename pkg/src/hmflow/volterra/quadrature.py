#---------------------------------------------------------------------------------------------------
__all__ = (
    'gauss_panels',
    'graded_panels',
    'log_integral',
)

import functools

import numpy as np
from numpy.polynomial import legendre

#---------------------------------------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def _rule(order):
    nodes, weights = legendre.leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights

def gauss_panels(edges, order=4):
    ''' Composite Gauss-Legendre nodes and weights over consecutive panel edges. '''
    nodes, weights = _rule(order)
    edges = np.asarray(edges, dtype=float)
    a, b = edges[:-1, None], edges[1:, None]
    x = 0.5 * (b - a) * nodes + 0.5 * (b + a)
    w = 0.5 * (b - a) * weights
    return x.ravel(), w.ravel()

def graded_panels(length, n_panels, grading=2.0, order=4):
    '''
    Composite rule on [0, length] with edges length * (i / n)^grading, clustered at 0. No node
    sits on an endpoint.
    '''
    edges = length * (np.arange(n_panels + 1) / n_panels)**grading
    return gauss_panels(edges, order)

#---------------------------------------------------------------------------------------------------
def log_integral(g, t, lower, gap, n_panels=48, order=8):
    '''
    Integral of g(s) / (t - s) for s in [lower, t - gap], computed in the variable
    u = log(t - s) where the integrand becomes g(t - e^u). Empty ranges give 0.
    '''
    span = t - lower
    if gap >= span:
        return 0.0
    u, w = gauss_panels(np.linspace(np.log(gap), np.log(span), n_panels + 1), order)
    return np.sum(w * g(t - np.exp(u)))
