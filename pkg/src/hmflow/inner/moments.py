#---------------------------------------------------------------------------------------------------
__all__ = (
    'MOMENT_KINDS',
    'moment_integral',
    'moment_value',
)

import logging

import numpy as np
from scipy import integrate

from ..types.errors import DomainError, QuadratureError
from .profiles import cos_w, w_rho

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
# Each kind carries: the integrand in rho on [0, inf), the same integrand after the substitution
# v = 1/(1 + rho^2) on [0, 1] (a polynomial in v), an overall factor, and the closed value.
class _Moment:
    def __init__(self, direct, substituted, factor, exact):
        self.direct = direct
        self.substituted = substituted
        self.factor = factor
        self.exact = exact

MOMENT_KINDS = {
    'rho3_wrho3': _Moment(
        lambda r: r**3 * w_rho(r)**3,
        lambda v: -4 * (1 - v),
        1.0, -2.0),
    'rho_wrho2': _Moment(
        lambda r: r * w_rho(r)**2,
        lambda v: 2 + 0 * v,
        1.0, 2.0),
    'rho_wrho2_cosw': _Moment(
        lambda r: r * w_rho(r)**2 * cos_w(r),
        lambda v: 2 * (1 - 2 * v),
        1.0, 0.0),
    # Energy of the bubble, one half of the integral of |grad W|^2 = 2 w_rho^2 over the plane.
    'dirichlet_energy': _Moment(
        lambda r: r * w_rho(r)**2,
        lambda v: 2 + 0 * v,
        2 * np.pi, 4 * np.pi),
    'gradient_mass': _Moment(
        lambda r: 2 * r * w_rho(r)**2,
        lambda v: 4 + 0 * v,
        2 * np.pi, 8 * np.pi),
    # Weighted norms of the kernel functions, w_rho^2 |Z_lj|^2 integrated over the plane.
    'kernel_norm_m1': _Moment(
        lambda r: r**5 * w_rho(r)**4,
        lambda v: 8 * (1 - v)**2,
        2 * np.pi, 2 * np.pi * 8 / 3),
    'kernel_norm_0': _Moment(
        lambda r: r**3 * w_rho(r)**4,
        lambda v: 8 * v * (1 - v),
        2 * np.pi, 2 * np.pi * 4 / 3),
    'kernel_norm_1': _Moment(
        lambda r: r * w_rho(r)**4,
        lambda v: 8 * v**2,
        2 * np.pi, 2 * np.pi * 8 / 3),
}

#---------------------------------------------------------------------------------------------------
def moment_value(kind):
    try:
        return MOMENT_KINDS[kind].exact
    except KeyError:
        raise DomainError(f'Unknown moment kind {kind!r}.') from None

#---------------------------------------------------------------------------------------------------
def moment_integral(kind, method='substitution', tol=1e-10):
    '''
    Evaluates one of the profile moments by adaptive quadrature. The substitution method
    integrates over v in [0, 1]; the direct method integrates over rho in [0, inf) and serves as a
    cross-check.
    '''
    try:
        moment = MOMENT_KINDS[kind]
    except KeyError:
        raise DomainError(f'Unknown moment kind {kind!r}.') from None

    if method == 'substitution':
        value, err = integrate.quad(moment.substituted, 0.0, 1.0, epsabs=tol * 1e-2, epsrel=0)
    elif method == 'direct':
        value, err = integrate.quad(moment.direct, 0.0, np.inf, epsabs=tol * 1e-2, epsrel=1e-12,
                                    limit=200)
    else:
        raise DomainError(f'Unknown quadrature method {method!r}.')

    value *= moment.factor
    err *= moment.factor
    if not err <= tol:
        raise QuadratureError(f'Moment "{kind}" did not converge: estimated error {err:.3g} '
                              f'exceeds {tol:.3g}.', achieved=err)

    log.debug('moment %s (%s) = %.17g (error %.3g)', kind, method, value, err)
    return value
