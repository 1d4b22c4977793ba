#---------------------------------------------------------------------------------------------------
__all__ = (
    'bubble_difference_norms',
    'click_main',
    'main',
)

import click
import numpy as np

from ..flow.norms import weighted_norm
from ..inner.profiles import eval_W, grad_W, rotate
from ..modulation.scales import inner_radius, lambda_star
from .report import configure_logging, dump_json, guarded, render_summary
from .scenario import NormsScenario, common_options, load_scenario

#---------------------------------------------------------------------------------------------------
def _inner_samples(cfg, R):
    # Points of |y| <= 2 R(t) for every sample time, shape (n_t, n_radii, n_angles, 2).
    s = np.linspace(0.0, 2.0, cfg.n_radii)[None, :, None] * R[:, None, None]
    theta = 2 * np.pi * np.arange(cfg.n_angles)[None, None, :] / cfg.n_angles
    return np.stack((s * np.cos(theta), s * np.sin(theta)), axis=-1)

def _inner_difference(y, scale, omega):
    # W(y) - W(y / scale) in the rotated frame with its y-gradient.
    value = eval_W(y) - eval_W(y / scale)
    grad = grad_W(y) - grad_W(y / scale) / scale
    return rotate(omega, value), rotate(omega, grad)

def _outer_samples(cfg):
    s = np.linspace(cfg.outer_min, cfg.outer_max, cfg.n_radii)[:, None]
    theta = 2 * np.pi * np.arange(cfg.n_angles)[None, :] / cfg.n_angles
    return (cfg.r0 + s * np.cos(theta)).ravel(), (cfg.z0 + s * np.sin(theta)).ravel()

def _outer_difference(cfg, lam, r, z):
    # U_{lam (1 + eps)} - U_lam at cross-section points for every time, with the x-gradient.
    values, grads = [], []
    for lam_k in lam:
        y = np.stack(((r - cfg.r0) / lam_k, (z - cfg.z0) / lam_k), axis=-1)
        value, grad = _inner_difference(y, 1 + cfg.eps, cfg.omega)
        values.append(-value)
        grads.append(-grad / lam_k)
    return np.array(values), np.array(grads)

def _lambda_star_dot(t, T):
    sigma = T - np.asarray(t, dtype=float)
    L = np.log(sigma)
    return -abs(np.log(T)) * (1 / L**2 - 2 / L**3)

def bubble_difference_norms(cfg):
    '''
    Weighted norms of the difference between bubbles of scales lambda_* (1 + eps) and lambda_*
    sampled at n_times instants of [0, T): the inner norms on |y| <= 2 R, the outer norm on a ring
    around (r0, z0) and the time norms of the scale difference eps lambda_*.
    '''
    t = cfg.T * np.arange(cfg.n_times) / cfg.n_times
    lam = lambda_star(t, cfg.T)
    R = inner_radius(t, cfg.T, cfg.beta)

    y = _inner_samples(cfg, R)
    phi, grad_phi = _inner_difference(y, 1 + cfg.eps, cfg.omega)
    inner = {'y': y, 'lam': lam, 'nu': cfg.nu}
    norms = {
        'nu_a': weighted_norm(phi, 'nu_a', a=cfg.a, **inner),
        'star': weighted_norm(phi, 'star', grad_phi=grad_phi, R=R, a=cfg.a, delta=cfg.delta,
                              **inner),
        'starstar': weighted_norm(phi, 'starstar', grad_phi=grad_phi, R=R, **inner),
        'triple': weighted_norm(phi, 'triple', grad_phi=grad_phi, R=R, **inner),
    }

    r, z = _outer_samples(cfg)
    psi, grad_psi = _outer_difference(cfg, lam, r, z)
    norms['sharp'] = weighted_norm(psi, 'sharp', grad_psi=grad_psi, psi_T=0.0, grad_psi_T=0.0,
                                   t=t, T=cfg.T, lam=lam, R=R, Theta=cfg.Theta)
    norms['theta_l'] = weighted_norm(cfg.eps * lam, 'theta_l', t=t, T=cfg.T, Theta=cfg.Theta,
                                     l=cfg.l)
    norms['star_k'] = weighted_norm(cfg.eps * _lambda_star_dot(t, cfg.T), 'star_k', t=t,
                                    T=cfg.T, k=cfg.k)
    return norms

#---------------------------------------------------------------------------------------------------
@click.command()
@common_options
@guarded
def click_main(config_path, out_dir, as_json, seed, overrides, verbose):
    '''
    Evaluate the weighted inner, outer and time norms of a bubble-difference field.
    '''
    configure_logging(verbose)
    cfg = load_scenario(NormsScenario, config_path, overrides)
    norms = bubble_difference_norms(cfg)
    if as_json:
        dump_json(norms)
    else:
        render_summary('Weighted norms', norms)

#---------------------------------------------------------------------------------------------------
def main():
    click_main()

#---------------------------------------------------------------------------------------------------
if __name__ == '__main__':
    main()
