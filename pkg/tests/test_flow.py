#---------------------------------------------------------------------------------------------------
import numpy as np
import pytest

from hmflow.flow.diagnostics import degree, detect_scale, energy, fit_blowup_time
from hmflow.flow.grid import Grid2D, MapField, ScalarField, default_grid
from hmflow.flow.initial import corotational_data, embed_scalar, initial_data
from hmflow.flow.norms import weighted_norm
from hmflow.flow.snapshot import read_snapshot, write_diagnostics, write_snapshot
from hmflow.flow.stencil import laplacian, residual_S
from hmflow.flow.stepper import FlowConfig, run_corotational, run_flow, step
from hmflow.inner.profiles import eval_U
from hmflow.types.errors import (
    DomainError, GeometryError, NoBubbleError, NumericalError, OutputError,
)
from hmflow.types.state import ModulationState

FOUR_PI = 4 * np.pi

def bubble(grid, lambda_, center=(1.0, 0.0)):
    R, Z = grid.mesh()
    return MapField(grid, eval_U(ModulationState(lambda_, 0.0, center), R, Z))

@pytest.fixture(scope='module')
def fine_bubble():
    return bubble(default_grid(400), 0.05)

#---------------------------------------------------------------------------------------------------
def test_grid_layout():
    grid = default_grid(8)
    assert grid.shape == (9, 9)
    assert grid.has_axis
    assert grid.node_index((1.0, 0.0)) == (4, 4)
    mask = grid.dirichlet_mask()
    assert not mask[0, 4] and mask[-1, 4] and mask[3, 0]
    assert np.sum(grid.trapezoid_weights()) == pytest.approx(4.0)

def test_grid_errors():
    with pytest.raises(GeometryError):
        Grid2D(-0.1, 1.0, 0.0, 1.0, 4, 4)
    with pytest.raises(GeometryError):
        default_grid(8).node_index((3.0, 0.0))
    with pytest.raises(GeometryError):
        ScalarField(Grid2D(0.5, 1.0, 0.0, 1.0, 4, 4), np.zeros((5, 5)))
    with pytest.raises(DomainError):
        MapField(default_grid(4), np.ones((5, 5, 3)))

def test_laplacian_of_quadratic():
    grid = Grid2D(0.0, 1.0, -1.0, 1.0, 20, 20)
    R, Z = grid.mesh()
    lap = laplacian(R**2 + Z**2, grid)
    # Exact for r^2 + z^2 off the Dirichlet nodes.
    assert np.allclose(lap[:-1, 1:-1], 6.0)

#---------------------------------------------------------------------------------------------------
def test_e3_is_fixed():
    u = MapField.constant(default_grid(16))
    new = step(u, 0.1 * u.grid.h**2)
    assert np.array_equal(new.u, u.u)
    assert new.t == pytest.approx(0.1 * u.grid.h**2)
    assert not np.any(residual_S(new, u, 1e-3))

def test_step_rejects_large_dt():
    u = MapField.constant(default_grid(16))
    with pytest.raises(DomainError):
        step(u, u.grid.h**2)

def test_planar_residual_of_bubble_is_second_order():
    def worst(n):
        grid = Grid2D(0.5, 1.5, -0.5, 0.5, n, n)
        u = bubble(grid, 0.2)
        return np.max(np.abs(residual_S(u, u, 1.0, planar=True)))
    assert worst(64) / worst(128) >= 3.0

@pytest.mark.parametrize('seed', [0, 1, 2])
def test_energy_decreases_along_the_flow(seed):
    rng = np.random.default_rng(seed)
    state = ModulationState(rng.uniform(0.12, 0.2), rng.uniform(0, 2 * np.pi),
                            (rng.uniform(0.9, 1.1), rng.uniform(-0.1, 0.1)))
    grid = default_grid(96)
    u0 = initial_data(state, 0.25, grid)
    result = run_flow(u0, FlowConfig({'t_end': 200 * 0.1 * grid.h**2, 'diag_every': 1}))
    assert result.reason == 't_end'
    diag = result.diagnostics
    energies = diag.column('e_weighted')
    assert len(energies) == result.steps + 1
    assert energies[0] == pytest.approx(energy(u0).weighted)
    assert np.all(np.diff(energies) <= 1e-8)
    assert energies[-1] < energies[0]
    assert np.all(diag.column('lambda_est') >= 4 * grid.h)

def test_constant_map_run_stops_at_end_time():
    u = MapField.constant(default_grid(16))
    result = run_flow(u, FlowConfig({'t_end': 1e-4}))
    assert result.reason == 't_end'
    assert result.steps == 1
    assert result.field.t == pytest.approx(1e-4)
    assert np.isnan(result.diagnostics.column('lambda_est')).all()

#---------------------------------------------------------------------------------------------------
def test_bubble_energy_is_one_quantum(fine_bubble):
    assert energy(fine_bubble).cross_section == pytest.approx(FOUR_PI, rel=0.02)
    ball = energy(fine_bubble, ((1.0, 0.0), 0.5)).cross_section
    assert ball == pytest.approx(FOUR_PI, rel=0.03)

def test_bubble_scale_and_degree(fine_bubble):
    lam, xi = detect_scale(fine_bubble)
    assert lam == pytest.approx(0.05, rel=0.02)
    assert xi == pytest.approx((1.0, 0.0))
    assert degree(fine_bubble) == pytest.approx(1.0, abs=0.02)

def test_cut_off_bubble_has_degree_one():
    u = initial_data(ModulationState(0.05, 0.3), 0.25, default_grid(200))
    assert degree(u) == pytest.approx(1.0, abs=0.02)
    assert np.all(u.u[-1] == (0.0, 0.0, 1.0))

def test_no_bubble_in_constant_map():
    u = MapField.constant(default_grid(8))
    with pytest.raises(NoBubbleError):
        detect_scale(u)
    assert energy(u).weighted == 0
    assert degree(u) == 0

def test_energy_region_without_nodes():
    with pytest.raises(DomainError):
        energy(MapField.constant(default_grid(8)), ((0.9, 0.1), 1e-3))

#---------------------------------------------------------------------------------------------------
@pytest.fixture(scope='module')
def angle_bubble():
    grid = Grid2D(0.5, 1.5, -0.5, 0.5, 256, 256)
    return corotational_data(0.02, (1.0, 0.0), 0.2, grid)

def test_angle_bubble_diagnostics(angle_bubble):
    assert angle_bubble.mode == 'point'
    assert angle_bubble.v[angle_bubble.center_index] == pytest.approx(np.pi)
    lam, xi = detect_scale(angle_bubble)
    assert lam == pytest.approx(0.02, rel=0.05)
    assert xi == pytest.approx((1.0, 0.0))
    assert energy(angle_bubble).cross_section == pytest.approx(FOUR_PI, rel=0.05)
    assert degree(angle_bubble) == pytest.approx(1.0, abs=0.05)

def test_embedded_angle_matches_bubble(angle_bubble):
    u = embed_scalar(angle_bubble)
    assert u.u[angle_bubble.center_index] == pytest.approx((0.0, 0.0, -1.0))

def test_zero_angle_stays_zero():
    v0 = ScalarField(default_grid(16), np.zeros((17, 17)))
    result = run_corotational(v0, FlowConfig({'t_end': 1e-4}))
    assert result.reason == 't_end'
    assert not np.any(result.field.v)
    assert len(result.diagnostics) == 2

def test_angle_scale_ignores_a_leaning_profile(angle_bubble):
    # A profile shifted by s along r moves the two radial crossings by -s and +s; the
    # one-sided crossing would read it 10% wide.
    grid = angle_bubble.grid
    R, Z = grid.mesh()
    shift = 0.5 * grid.dr
    d = np.hypot(R - 1.0 + shift, Z)
    v = angle_bubble.v.copy()
    v[d < 0.1] = 2 * np.arctan(0.02 / d[d < 0.1])
    v[angle_bubble.center_index] = np.pi
    leaning = angle_bubble.replace(v, 0.0)
    lam, _ = detect_scale(leaning)
    assert lam == pytest.approx(detect_scale(angle_bubble)[0], rel=0.01)

@pytest.mark.slow
def test_angle_and_map_runs_agree():
    grid = default_grid(256)
    v0 = corotational_data(0.1, (1.0, 0.0), 0.25, grid)
    cfg = FlowConfig({'t_end': 0.01, 'diag_every': 200})
    angle = run_corotational(v0, cfg).diagnostics
    full = run_flow(embed_scalar(v0), cfg).diagnostics
    assert np.allclose(angle.column('t'), full.column('t'))
    lam_angle, lam_map = angle.column('lambda_est'), full.column('lambda_est')
    resolved = lam_map >= 8 * grid.h
    assert np.sum(resolved) >= 4
    gap = np.abs(lam_angle - lam_map)[resolved] / lam_map[resolved]
    assert np.max(gap) <= 0.05

@pytest.mark.slow
def test_corotational_blowup_run():
    grid = default_grid(256)
    v0 = corotational_data(0.05, (1.0, 0.0), 0.25, grid)
    result = run_corotational(v0, FlowConfig({'t_end': 0.05, 'diag_every': 100}))
    diag = result.diagnostics
    # The 3-cell stop caps the resolvable growth of max |grad v| near lambda0 / (3 h).
    settled = len(diag) // 4
    lam = diag.column('lambda_est')[settled:]
    assert np.all(np.diff(lam) <= 1e-6 * lam[:-1])
    assert lam[-1] < lam[0]
    max_grad = diag.column('max_grad')
    assert max_grad[-1] > max_grad[0]
    quantum = diag.column('e_ball')[settled:] / FOUR_PI
    assert np.all(np.abs(quantum - 1) <= 0.15)

def test_corotational_errors():
    with pytest.raises(DomainError):
        corotational_data(0.1, (1.0, 0.0), 0.25, default_grid(16), mode='ring')
    with pytest.raises(GeometryError):
        corotational_data(0.1, (1.0, 0.0), 0.6, default_grid(16))
    with pytest.raises(DomainError):
        run_corotational(MapField.constant(default_grid(4)))

#---------------------------------------------------------------------------------------------------
def test_fit_recovers_blowup_time():
    T = 1e-2
    t = np.linspace(0.0, 0.9 * T, 30)
    lam = (T - t) / np.log(T - t)**2
    fit = fit_blowup_time(t, lam)
    assert fit.T_hat == pytest.approx(T, rel=1e-3)
    assert fit.gamma == pytest.approx(1.0, abs=1e-2)
    assert fit(t[5]) == pytest.approx(lam[5], rel=1e-3)

def test_fit_refuses_a_growing_scale():
    # Every admissible model decreases in t, so gamma ends on its lower bound.
    t = np.linspace(0.0, 0.05, 20)
    with pytest.raises(NumericalError):
        fit_blowup_time(t, 0.05 * (1 + 2 * t))

def test_fit_refuses_a_constant_scale():
    with pytest.raises(NumericalError):
        fit_blowup_time(np.linspace(0.0, 0.05, 20), np.full(20, 0.05))

def test_fit_needs_samples():
    with pytest.raises(DomainError):
        fit_blowup_time([0.0, 0.1, 0.2, 0.3], [1.0, np.nan, 0.5, 0.2])

#---------------------------------------------------------------------------------------------------
def test_snapshot_read_back(tmp_path):
    u = initial_data(ModulationState(0.2), 0.25, default_grid(16))
    path = write_snapshot(tmp_path / 'map.csv', u)
    back = read_snapshot(path)
    assert np.array_equal(back.u, u.u)
    assert back.grid.bounds == u.grid.bounds

    v = corotational_data(0.1, (1.0, 0.0), 0.25, default_grid(16))
    back = read_snapshot(write_snapshot(tmp_path / 'angle.csv', v), center=v.center)
    assert np.array_equal(back.v, v.v)
    assert back.mode == 'point'

def test_snapshot_header(tmp_path):
    path = write_snapshot(tmp_path / 'e3.csv', MapField.constant(default_grid(2), t=0.5))
    lines = path.read_text().splitlines()
    assert lines[:3] == ['nr,nz,r_min,r_max,z_min,z_max,t', '2,2,0,2,-1,1,0.5', 'u1,u2,u3']
    assert len(lines) == 3 + 9

def test_diagnostics_file(tmp_path):
    result = run_flow(MapField.constant(default_grid(8)), FlowConfig({'t_end': 1e-3}))
    path = write_diagnostics(tmp_path / 'diagnostics.csv', result.diagnostics)
    lines = path.read_text().splitlines()
    assert lines[0] == 't,max_grad,lambda_est,xi1_est,xi2_est,e_total,e_ball,e_weighted'
    assert len(lines) == 1 + len(result.diagnostics)

def test_snapshot_write_failure(tmp_path):
    with pytest.raises(OutputError):
        write_snapshot(tmp_path / 'missing' / 'map.csv', MapField.constant(default_grid(2)))

#---------------------------------------------------------------------------------------------------
@pytest.fixture
def samples():
    rng = np.random.default_rng(3)
    y = rng.uniform(-4.0, 4.0, (3, 50, 2))
    lam = np.array([0.1, 0.05, 0.02])
    return y, lam, np.linalg.norm(y, axis=-1)

def test_inner_norms_of_their_weights(samples):
    y, lam, s = samples
    lam_t = lam[:, None]
    R = np.full(3, 10.0)
    h = lam_t**0.5 * (1 + s)**-2.5
    assert weighted_norm(h, 'nu_a', y=y, lam=lam, nu=0.5, a=2.5) == pytest.approx(1.0)
    star = lam_t**0.5 * np.maximum(10.0**(0.5 * 2.5) / (1 + s)**3, (1 + s)**-0.5)
    zero_grad = np.zeros(y.shape)
    assert weighted_norm(star, 'star', grad_phi=zero_grad, y=y, lam=lam, R=R, nu=0.5, a=2.5,
                         delta=0.5) == pytest.approx(1.0)
    starstar = lam_t**0.5 * 100.0 / (1 + s)
    assert weighted_norm(starstar, 'starstar', grad_phi=zero_grad, y=y, lam=lam, R=R,
                         nu=0.5) == pytest.approx(1.0)
    triple = np.broadcast_to(lam_t**0.5 * np.log(10.0), s.shape)
    assert weighted_norm(triple, 'triple', grad_phi=zero_grad, y=y, lam=lam, R=R,
                         nu=0.5) == pytest.approx(1.0)

def test_time_norms_of_their_weights():
    T = 1e-2
    t = np.linspace(0.0, 0.99 * T, 40)
    sigma = T - t
    g = sigma**0.5 / np.abs(np.log(sigma))**2
    assert weighted_norm(g, 'theta_l', t=t, T=T, Theta=0.5, l=2) == pytest.approx(1.0)
    g_dot = np.abs(np.log(sigma))**-1.0
    assert weighted_norm(g_dot, 'star_k', t=t, T=T, k=1) == pytest.approx(1.0)

def test_outer_norm_of_zero():
    T = 1e-2
    t = np.array([0.0, 0.5 * T])
    psi = np.zeros((2, 10))
    value = weighted_norm(psi, 'sharp', grad_psi=np.zeros((2, 10, 2)), psi_T=0.0,
                          grad_psi_T=0.0, t=t, T=T, lam=np.array([2e-3, 1e-3]),
                          R=np.array([5.0, 6.0]), Theta=0.5)
    assert value == 0

def test_norm_arguments(samples):
    y, lam, s = samples
    with pytest.raises(DomainError):
        weighted_norm(s, 'nu_b', y=y, lam=lam, nu=0.5, a=2.5)
    with pytest.raises(DomainError):
        weighted_norm(s, 'nu_a', y=y, lam=lam, nu=0.5, a=3.5)
