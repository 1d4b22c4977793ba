#---------------------------------------------------------------------------------------------------
__all__ = (
    'RateTrajectory',
    'predicted_p',
)

import logging

import numpy as np

from ..volterra.inverse import approx_inverse_P
from .data import a0_from_field, default_z0_field
from .scales import inner_radius, lambda_star
from .xi import solve_xi

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
class RateTrajectory:
    '''
    Reduced prediction of p = lambda e^{i omega} on [0, T) together with the center trajectory.
    The ratio |p| / lambda_* is expected to level off at a constant multiple of |kappa|. The inner
    region has radius R(t) = lambda_*^{-beta} in the self-similar variable, so it reaches
    lambda_* R = lambda_*^{1 - beta} around the center.
    '''

    def __init__(self, a0, inverse, xi, beta=0.25):
        self.a0 = a0
        self.inverse = inverse
        self.xi = xi
        self.T = inverse.T
        self.kappa = inverse.kappa
        self.t = inverse.t
        self.p = inverse.p
        self.omega = np.unwrap(np.angle(self.p))
        self.lambda_star = lambda_star(self.t, self.T)
        self.ratio = np.abs(self.p) / self.lambda_star
        self.beta = beta
        self.inner_radius = inner_radius(self.t, self.T, beta)

    @property
    def sign_fits(self):
        # Relative distance of kappa to +a0 and to -a0.
        return {
            '+': abs(self.kappa - self.a0) / abs(self.a0),
            '-': abs(self.kappa + self.a0) / abs(self.a0),
        }

    def ratio_band(self, lower=0.25, upper=0.75):
        ''' max / min of |p| / lambda_* on [lower T, upper T]. '''
        mask = (self.t >= lower * self.T) & (self.t <= upper * self.T)
        window = self.ratio[mask]
        return float(window.max() / window.min())

    def inner_region_clear(self):
        ''' Whether the inner region lambda_* R stays closer to the center than the axis is. '''
        xi1, _ = self.xi.at(self.t)
        return bool(np.all(self.lambda_star * self.inner_radius < xi1))

    def rows(self):
        xi1, xi2 = self.xi.at(self.t)
        for i in range(self.t.size):
            yield {
                't': self.t[i],
                'xi1': xi1[i],
                'xi2': xi2[i],
                'lambda_star': self.lambda_star[i],
                're_p': self.p[i].real,
                'im_p': self.p[i].imag,
                'ratio': self.ratio[i],
            }

#---------------------------------------------------------------------------------------------------
def predicted_p(cfg, field=None, n_xi_steps=1000, **inverse_args):
    '''
    Main-order prediction of the modulation: the datum a0 (given, or div + i curl of the
    initial field at q) is constant in time and fed to the approximate inverse.
    '''
    if cfg.a0_star is not None:
        a0 = complex(cfg.a0_star)
    else:
        if field is None:
            field = default_z0_field(cfg.q, cfg.amplitude, cfg.cutoff_radius)
        a0 = a0_from_field(field, cfg.q)

    xi = solve_xi(cfg, n_xi_steps)
    inverse = approx_inverse_P(a0, cfg.T, **inverse_args)
    traj = RateTrajectory(a0, inverse, xi, cfg.beta)
    log.info('predicted_p: a0 = %s, kappa = %s, sign fits %s', a0, traj.kappa, traj.sign_fits)
    if not traj.inner_region_clear():
        log.warning('predicted_p: the inner region reaches the axis for beta = %g', cfg.beta)
    return traj
