#---------------------------------------------------------------------------------------------------
__all__ = (
    'BlowupDiagnostics',
    'BlowupFit',
    'EnergyReport',
    'degree',
    'detect_scale',
    'energy',
    'fit_blowup_time',
)

import logging

import numpy as np
from scipy import optimize

from ..types.errors import DomainError, NoBubbleError, NumericalError
from .grid import MapField, ScalarField
from .initial import embed_scalar
from .stencil import gradient_squared

log = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
def _density(field):
    # |grad u|^2 of the cross-section map; for angles the embedded map's density.
    grid = field.grid
    if isinstance(field, MapField):
        return gradient_squared(field.u, grid)
    grad2 = gradient_squared(field.v, grid)
    d = field.distance()
    safe = np.where(d > 0, d, 1.0)
    return grad2 + np.where(d > 0, np.sin(field.v)**2 / safe**2, grad2)

def detect_scale(field):
    '''
    Bubble center at the node of smallest u3 and its scale. For maps the scale is
    2 sqrt(2) / max |grad u|, exact for a rescaled bubble. For angles it is the pi/2 crossing
    radius averaged over the four grid directions from the center, so a profile leaning towards
    the axis is not read as a change of scale.
    '''
    u3 = field.u3
    index = np.unravel_index(np.argmin(u3), u3.shape)
    if not u3[index] < 0:
        raise NoBubbleError('No node with u3 < 0.')
    xi = field.grid.node(index)

    if isinstance(field, MapField):
        peak = float(np.sqrt(np.max(gradient_squared(field.u, field.grid))))
        return 2 * np.sqrt(2) / peak, xi

    return _crossing_radius(field, index), xi

def _crossing_radius(field, index):
    i, j = index
    v, grid = field.v, field.grid
    target = np.pi * np.round(v[i, j] / np.pi)
    lines = (
        (v[i:, j], grid.dr),
        (v[i::-1, j], grid.dr),
        (v[i, j:], grid.dz),
        (v[i, j::-1], grid.dz),
    )
    radii = []
    for line, h in lines:
        dev = np.abs(line - target)
        past = np.nonzero(dev >= np.pi / 2)[0]
        if past.size == 0 or past[0] == 0:
            continue
        k = past[0]
        frac = (np.pi / 2 - dev[k - 1]) / (dev[k] - dev[k - 1])
        radii.append((k - 1 + frac) * h)
    if not radii:
        raise NoBubbleError('The angle never crosses pi/2 along a grid line through the center.')
    return float(np.mean(radii))

#---------------------------------------------------------------------------------------------------
class EnergyReport:
    def __init__(self, cross_section, weighted):
        self.cross_section = cross_section
        self.weighted = weighted

    def __repr__(self):
        return f'EnergyReport(cross_section={self.cross_section!r}, weighted={self.weighted!r})'

def energy(field, region='all'):
    '''
    Half the trapezoid sum of |grad u|^2 over the grid or over a ball (center, radius), in the
    cross-section measure dr dz and in the 2 pi r dr dz measure.
    '''
    grid = field.grid
    weights = grid.trapezoid_weights()
    if region != 'all':
        (r0, z0), radius = region
        R, Z = grid.mesh()
        mask = np.hypot(R - r0, Z - z0) <= radius
        if not np.any(mask):
            raise DomainError(f'Ball of radius {radius:g} around ({r0:g}, {z0:g}) holds no node.')
        weights = np.where(mask, weights, 0.0)
    density = 0.5 * _density(field) * weights
    cross = float(np.sum(density))
    weighted = float(np.sum(2 * np.pi * grid.r[:, None] * density))
    return EnergyReport(cross, weighted)

#---------------------------------------------------------------------------------------------------
def _solid_angle(a, b, c):
    # Signed solid angle of the spherical triangle (a, b, c).
    numerator = np.sum(a * np.cross(b, c), axis=-1)
    denominator = (1 + np.sum(a * b, axis=-1) + np.sum(b * c, axis=-1)
                   + np.sum(c * a, axis=-1))
    return 2 * np.arctan2(numerator, denominator)

def degree(u):
    ''' Topological degree of the cross-section map, counting the bubble W as +1. '''
    if isinstance(u, ScalarField):
        u = embed_scalar(u)
    v = u.u
    p00, p10, p01, p11 = v[:-1, :-1], v[1:, :-1], v[:-1, 1:], v[1:, 1:]
    total = np.sum(_solid_angle(p00, p10, p11)) + np.sum(_solid_angle(p00, p11, p01))
    # Positively oriented cells of W map onto negatively oriented spherical triangles.
    return float(-total / (4 * np.pi))

#---------------------------------------------------------------------------------------------------
class BlowupFit:
    def __init__(self, T_hat, C, gamma):
        self.T_hat = T_hat
        self.C = C
        self.gamma = gamma

    def __call__(self, t):
        sigma = self.T_hat - np.asarray(t, dtype=float)
        return self.C * sigma**self.gamma / np.log(sigma)**2

    def __repr__(self):
        return f'BlowupFit(T_hat={self.T_hat!r}, C={self.C!r}, gamma={self.gamma!r})'

def fit_blowup_time(t, lambda_est):
    '''
    Least-squares fit of log lambda against log C + gamma log(T_hat - t) - 2 log|log(T_hat - t)|.
    A fit that ends on a bound of T_hat or gamma, or leaves the parameters undetermined, raises
    NumericalError rather than report a rate.
    '''
    t = np.asarray(t, dtype=float)
    lam = np.asarray(lambda_est, dtype=float)
    keep = np.isfinite(lam) & (lam > 0)
    t, lam = t[keep], lam[keep]
    if t.size < 4:
        raise DomainError('A blow-up fit needs four or more scale samples.')

    span = t[-1] - t[0]
    lower = t[-1] + 1e-9 * max(span, 1e-300)
    upper = t[0] + 0.999

    def model(s, T_hat, log_C, gamma):
        sigma = T_hat - s
        return log_C + gamma * np.log(sigma) - 2 * np.log(np.abs(np.log(sigma)))

    guess_T = min(t[-1] + 0.25 * span, 0.5 * (lower + upper))
    sigma0 = guess_T - t
    guess_C = float(np.mean(np.log(lam) - np.log(sigma0) + 2 * np.log(np.abs(np.log(sigma0)))))
    bounds = ((lower, -np.inf, 0.0), (upper, np.inf, 4.0))
    try:
        params, cov = optimize.curve_fit(model, t, np.log(lam), p0=(guess_T, guess_C, 1.0),
                                         bounds=bounds, maxfev=20000)
    except (RuntimeError, ValueError) as e:
        raise NumericalError(f'Blow-up fit failed: {e}') from None

    if not np.all(np.isfinite(np.diag(cov))):
        raise NumericalError('Blow-up fit has a singular covariance; the samples do not fix '
                             'the model.')
    for name, value, lo, hi in zip(('T_hat', 'log C', 'gamma'), params, *bounds):
        if not (np.isfinite(lo) and np.isfinite(hi)):
            continue
        slack = 1e-6 * (hi - lo)
        if value - lo <= slack or hi - value <= slack:
            raise NumericalError(f'Blow-up fit pinned {name} = {value:.6g} to its bound '
                                 f'[{lo:.6g}, {hi:.6g}]; the scale does not follow the model.')
    fit = BlowupFit(float(params[0]), float(np.exp(params[1])), float(params[2]))
    log.info('blow-up fit: %r', fit)
    return fit

#---------------------------------------------------------------------------------------------------
class BlowupDiagnostics:
    COLUMNS = ('t', 'max_grad', 'lambda_est', 'xi1_est', 'xi2_est', 'e_total', 'e_ball',
               'e_weighted')

    def __init__(self, ball_radius=0.25):
        self.ball_radius = ball_radius
        self.records = []

    def record(self, field):
        max_grad = float(np.sqrt(np.max(_density(field))))
        try:
            lam, xi = detect_scale(field)
        except NoBubbleError:
            lam, xi = np.nan, (np.nan, np.nan)
        total = energy(field)
        e_ball = np.nan
        if np.all(np.isfinite(xi)):
            e_ball = energy(field, (xi, self.ball_radius)).cross_section
        row = dict(zip(self.COLUMNS, (field.t, max_grad, lam, xi[0], xi[1],
                                        total.cross_section, e_ball, total.weighted)))
        self.records.append(row)
        return row

    def column(self, name):
        return np.array([row[name] for row in self.records])

    def __len__(self):
        return len(self.records)

    def rows(self):
        return iter(self.records)
