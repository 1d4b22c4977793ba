#---------------------------------------------------------------------------------------------------
__all__ = (
    'CondReport',
    'ReducedConfig',
    'a0_from_field',
    'check_cond_z0',
    'default_z0_field',
)

import logging

import numpy as np

from ..inner.fields import cutoff_field, linear_field
from ..types.config import Complex, Config, Float, OpenInterval, PositiveFloat
from ..types.errors import ConfigError, NondegeneracyError

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
class ReducedConfig(Config):
    '''
    Parameters of the reduced dynamics. Without a0_star the datum comes from the default
    initial field of amplitude `amplitude` cut off at `cutoff_radius` around (r0, z0).
    '''

    T = OpenInterval(0.0, 0.5)
    r0 = PositiveFloat(default=1.0)
    z0 = Float(default=0.0)
    beta = OpenInterval(0.0, 0.5, default=0.25)
    a0_star = Complex(default=None)
    amplitude = PositiveFloat(default=0.05)
    cutoff_radius = PositiveFloat(default=0.25)
    domain_bound = PositiveFloat(default=2.0)

    def validate(self):
        if self.r0**2 + 2 * self.T >= self.domain_bound**2:
            raise ConfigError(
                f'r0^2 + 2T = {self.r0**2 + 2 * self.T:g} must stay below the squared domain '
                f'bound {self.domain_bound**2:g}.')
        if self.a0_star is not None and self.a0_star == 0:
            raise NondegeneracyError('The datum a0_star must not vanish.')

    @property
    def q(self):
        return (self.r0, self.z0)

#---------------------------------------------------------------------------------------------------
def default_z0_field(q, amplitude=0.05, radius=0.25):
    ''' z0*(r, z) = A [(r - r0) + i (z - z0) / 2] cut off around q, with a vanishing third part. '''
    base = linear_field(amplitude, 0.5j * amplitude, center=q)
    return cutoff_field(base, q, radius)

def a0_from_field(Z0, q, tol=1e-8):
    ''' div z0* + i curl z0* at q. '''
    div, curl = Z0.div_curl(*q)
    a0 = complex(float(div), float(curl))
    if abs(a0) < tol:
        raise NondegeneracyError(f'div + i curl = {a0} at {tuple(q)} is degenerate.')
    log.debug('a0 at %s: %s', tuple(q), a0)
    return a0

#---------------------------------------------------------------------------------------------------
class CondReport:
    ''' The four smallness and nondegeneracy conditions on the initial field. '''

    def __init__(self):
        self.rows = []

    def add(self, name, value, bound, ok):
        self.rows.append({'name': name, 'value': float(value), 'bound': float(bound),
                          'ok': bool(ok)})

    @property
    def ok(self):
        return all(row['ok'] for row in self.rows)

    def __iter__(self):
        return iter(self.rows)

def _ball(q, radius, n_radial=8, n_theta=16):
    s = radius * np.linspace(0.0, 1.0, n_radial)[:, None]
    theta = 2 * np.pi * np.arange(n_theta)[None, :] / n_theta
    return (q[0] + s * np.cos(theta)).ravel(), (q[1] + s * np.sin(theta)).ravel()

def _c3_norm(field, q, radius, step=1e-4):
    # Values and first derivatives directly, higher orders by centered differences of the Jacobian.
    r, z = _ball(q, radius - 3 * step)
    worst = float(np.max(np.abs(field.vector(r, z))))

    def first(r, z):
        d_r, d_z = field.vector_derivatives(r, z)
        return np.concatenate((d_r, d_z), axis=-1)

    def second(r, z):
        return np.concatenate(((first(r + step, z) - first(r - step, z)) / (2 * step),
                               (first(r, z + step) - first(r, z - step)) / (2 * step)), axis=-1)

    def third(r, z):
        return np.concatenate(((second(r + step, z) - second(r - step, z)) / (2 * step),
                               (second(r, z + step) - second(r, z - step)) / (2 * step)), axis=-1)

    for order in (first, second, third):
        worst = max(worst, float(np.max(np.abs(order(r, z)))))
    return worst

def check_cond_z0(field, q, T, alpha0=0.05, alpha1=50.0, radius=0.25, rtol=1e-12):
    '''
    Evaluates the smallness and nondegeneracy conditions on the initial field. The C^3 bound is
    measured on the ball of the given radius around q, where the default field's cutoff is 1.
    '''
    report = CondReport()
    c3 = _c3_norm(field, q, radius)
    report.add('c3_norm', c3, alpha0, c3 <= alpha0 * (1 + rtol))

    at_q = float(np.linalg.norm(field.vector(*q)))
    report.add('value_at_q', at_q, 5 * T, at_q <= 5 * T)

    F_r, F_z, _, _ = field.derivatives(*q)
    D = np.array(((complex(F_r).real, complex(F_z).real), (complex(F_r).imag, complex(F_z).imag)))
    try:
        inverse = float(np.linalg.norm(np.linalg.inv(D), 2))
    except np.linalg.LinAlgError:
        inverse = np.inf
    report.add('inverse_jacobian', inverse, alpha1, inverse <= alpha1)

    div, curl = field.div_curl(*q)
    a0 = abs(complex(float(div), float(curl)))
    report.add('div_curl', a0, alpha0, alpha0 <= a0)

    for row in report:
        log.debug('cond %s: %.6g against %.6g', row['name'], row['value'], row['bound'])
    return report
