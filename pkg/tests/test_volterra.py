#---------------------------------------------------------------------------------------------------
import numpy as np
import pytest

from hmflow.volterra.gamma import KernelTable, fit_bounds, gamma, gamma_direct, gamma_panels
from hmflow.volterra.history import PHistory, SampledFunction, p0_kappa, p0_kappa_dot
from hmflow.volterra.inverse import (
    approx_inverse_P, b0_residual, log_quotient_mass, predicted_kappa,
)
from hmflow.volterra.kernels import kernel_K, kernel_K_derivatives, kernel_k
from hmflow.volterra.operator import B0, clean_bracket, lambda_dot
from hmflow.volterra.phi0 import phi0
from hmflow.volterra.quadrature import log_integral
from hmflow.volterra.splitting import S_alpha, split_S_R
from hmflow.modulation.scales import lambda_star
from hmflow.types.errors import DegenerateScaleError, DomainError, NondegeneracyError

@pytest.fixture(scope='module')
def small_table():
    return KernelTable(1e-8, 1e4, 256)

#---------------------------------------------------------------------------------------------------
def test_heat_kernel_limits():
    assert kernel_k(0.0, 0.25) == pytest.approx(2.0)
    assert kernel_k(1e-9, 1.0) == pytest.approx(0.5)
    assert kernel_K(0.0) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        kernel_k(1.0, 0.0)

def test_K_is_decreasing():
    zeta = np.geomspace(1e-6, 1e3, 400)
    assert np.all(np.diff(kernel_K(zeta)) < 0)

def test_K_derivatives_match_differences():
    zeta = np.array([1e-3, 0.5, 3.9, 4.1, 20.0, 300.0])
    h1, h2 = 1e-5 * zeta, 1e-3 * zeta
    K, zK, z2K = kernel_K_derivatives(zeta)
    d1 = (kernel_K(zeta + h1) - kernel_K(zeta - h1)) / (2 * h1)
    d2 = (kernel_K(zeta + h2) - 2 * K + kernel_K(zeta - h2)) / h2**2
    assert np.allclose(zK, zeta * d1, rtol=1e-6, atol=1e-12)
    assert np.allclose(z2K, zeta**2 * d2, rtol=1e-4, atol=1e-9)

#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize('l', [1, 2])
def test_gamma_at_zero(l):
    assert gamma_panels(l, [1e-8])[0] == pytest.approx(1.0, abs=1e-5)

@pytest.mark.parametrize('l', [1, 2])
@pytest.mark.parametrize('tau', [1e-3, 1.0, 100.0])
def test_gamma_panels_match_adaptive(l, tau):
    assert gamma_panels(l, [tau])[0] == pytest.approx(gamma_direct(l, tau, tol=1e-10),
                                                      rel=1e-6, abs=1e-9)

def test_gamma_decay_and_table(small_table):
    for l in (1, 2):
        fit = small_table.bound_fit(l)
        assert np.isfinite(fit.small) and np.isfinite(fit.large)
        tau = np.geomspace(2.0, 1e4, 20)
        assert np.all(np.abs(gamma(l, tau, small_table)) <= 1.2 * fit.large / tau)
        mid = np.array([3e-4, 0.7, 55.0])
        assert np.allclose(small_table(l, mid), gamma_panels(l, mid), rtol=1e-3, atol=1e-6)
        assert small_table(l, 1e-12) == 1.0

def test_fit_bounds_from_samples():
    tau = np.array([1e-3, 1e-1, 10.0])
    fit = fit_bounds(tau, np.array([1.001, 1.2, 0.3]))
    assert fit.large == pytest.approx(3.0)
    assert fit.small == pytest.approx(0.2 / (0.1 * (1 + np.log(10))))

def test_gamma_rejects_bad_arguments():
    with pytest.raises(DomainError):
        gamma_panels(3, [1.0])
    with pytest.raises(DomainError):
        gamma_panels(1, [0.0])
    with pytest.raises(DomainError):
        KernelTable(1.0, 0.5, 8)

#---------------------------------------------------------------------------------------------------
def test_sampled_function():
    f = SampledFunction([0.0, 1.0], [0.0, 2 + 2j])
    assert f(0.5) == pytest.approx(1 + 1j)
    assert SampledFunction.constant(0).is_zero()
    with pytest.raises(DomainError):
        SampledFunction([1.0, 0.0], [0.0, 1.0])

def test_history_angle_is_continuous():
    t = np.linspace(-1.0, 1.0, 401)
    p = 0.1 * np.exp(3j * t)
    hist = PHistory(1.0, t, p)
    assert np.allclose(hist.omega(np.array([-0.95, 0.9])), [-2.85, 2.7], atol=1e-10)
    assert hist.lambda_(0.3) == pytest.approx(0.1)

def test_p0_closed_form():
    T = 1e-2
    assert p0_kappa(T, T, 1.0) == 0
    t = np.array([0.0, 0.004, 0.009])
    h = 1e-7
    fd = (p0_kappa(t + h, T, 1.0) - p0_kappa(t - h, T, 1.0)) / (2 * h)
    assert np.allclose(fd, p0_kappa_dot(t, T, 1.0), rtol=1e-6)

#---------------------------------------------------------------------------------------------------
def _kappa_history(T, kappa=1.0, t_end=None):
    t_end = 0.5 * T if t_end is None else t_end
    return PHistory.from_functions(T, t_end, lambda s: p0_kappa(s, T, kappa),
                                   lambda s: p0_kappa_dot(s, T, kappa))

def test_phi0_vanishing_cases():
    T = 1e-2
    still = PHistory.from_functions(T, 0.0, lambda s: np.full(np.shape(s), 0.1 + 0j),
                                    lambda s: np.zeros(np.shape(s), dtype=complex))
    assert np.allclose(phi0(np.array([0.1, 0.5]), 0.0, still, 0.1), 0.0)
    assert phi0(np.array([0.0]), 0.0, _kappa_history(T), 0.1)[0] == 0
    with pytest.raises(DomainError):
        phi0(np.array([0.1]), 0.9 * T, _kappa_history(T), 0.1)

def test_B0_of_constant_history(small_table):
    T = 1e-2
    hist = PHistory.from_functions(T, 0.0, lambda s: np.full(np.shape(s), 0.1 + 0.05j),
                                   lambda s: np.zeros(np.shape(s), dtype=complex))
    assert abs(B0(hist, 0.0, small_table)) <= 1e-14

def test_B0_rejects_vanishing_scale(small_table):
    T = 1e-2
    hist = PHistory.from_functions(T, 0.0, lambda s: np.zeros(np.shape(s), dtype=complex),
                                   lambda s: np.zeros(np.shape(s), dtype=complex))
    with pytest.raises(DegenerateScaleError):
        B0(hist, 0.0, small_table)

def test_lambda_dot_methods_agree():
    T = 1e-2
    hist = _kappa_history(T)
    exact = lambda_dot(hist, 0.2 * T)
    assert exact == pytest.approx(float(p0_kappa_dot(0.2 * T, T, 1.0).real))
    assert lambda_dot(hist, 0.2 * T, 'stencil') == pytest.approx(exact, rel=1e-6)

def test_B0_rotates_with_constant_phase(small_table):
    T = 1e-3
    hist = _kappa_history(T)
    turn = np.exp(0.7j)
    turned = PHistory.from_functions(T, 0.5 * T, lambda s: turn * p0_kappa(s, T, 1.0),
                                     lambda s: turn * p0_kappa_dot(s, T, 1.0))
    base = B0(hist, 0.2 * T, small_table, full_output=True)
    assert base.lambda_dot == pytest.approx(lambda_dot(hist, 0.2 * T))
    assert np.isfinite(base.value)
    assert B0(turned, 0.2 * T, small_table) == pytest.approx(turn * base.value, rel=1e-10)

def test_clean_bracket_is_constant():
    T = 1e-3
    p_dot = lambda s: p0_kappa_dot(s, T, 1.0)
    values = [clean_bracket(p_dot, t, T) for t in (0.0, 0.25 * T, 0.5 * T, 0.9 * T)]
    assert np.max(np.abs(np.array(values) - values[0])) <= 1e-6 * abs(values[0])
    assert values[0] == pytest.approx(abs(np.log(T)) / np.log(2 * T), rel=1e-8)

#---------------------------------------------------------------------------------------------------
def test_log_integral_empty_range():
    assert log_integral(lambda s: np.ones_like(s), 0.0, -1.0, 2.0) == 0.0

def test_split_of_constant_has_no_remainder():
    T = 1e-2
    S, R = split_S_R(lambda s: np.full(np.shape(s), 2.0 + 0j), 0.2 * T, 0.25, T)
    assert R == 0
    assert S == S_alpha(lambda s: np.full(np.shape(s), 2.0 + 0j), 0.2 * T, 0.25, T)

@pytest.mark.parametrize('t', [0.0, 0.003, 0.008])
def test_split_of_linear_function(t):
    T, alpha = 1e-2, 0.25
    g = lambda s: (T - np.asarray(s, dtype=float)) + 0j
    S, R = split_S_R(g, t, alpha, T)
    lam2 = lambda_star(t, T)**2
    assert R.real == pytest.approx((T - t)**(1 + alpha) - lam2, rel=1e-10)
    assert S + R == pytest.approx(log_integral(g, t, -T, lam2, n_panels=96), rel=1e-10)

def test_split_rejects_alpha():
    with pytest.raises(DomainError):
        split_S_R(lambda s: s, 0.0, 1.5, 1e-2)

#---------------------------------------------------------------------------------------------------
def test_log_quotient_mass():
    T = 1e-3
    assert log_quotient_mass(T) == pytest.approx(abs(np.log(T)) / np.log(2 * T), rel=1e-8)
    assert predicted_kappa(1.0, T) == pytest.approx(1 / log_quotient_mass(T))
    with pytest.raises(DomainError):
        log_quotient_mass(0.7)

@pytest.fixture(scope='module')
def unit_inverse():
    return approx_inverse_P(1.0, 1e-3, b0_points=0)

def test_inverse_converges(unit_inverse):
    trace = np.array(unit_inverse.trace)
    assert unit_inverse.converged
    assert unit_inverse.residual <= 1e-9
    assert len(trace) >= 6
    assert np.all(np.diff(trace[:6]) < 0)

def test_inverse_kappa_matches_log_quotient_relation(unit_inverse):
    # int_{-T}^T ds / ((T - s) log^2(T - s)) = 1 / |log 2T| against the unit profile.
    T = 1e-3
    assert unit_inverse.kappa.real == pytest.approx(-abs(np.log(2 * T)) / abs(np.log(T)),
                                                    rel=0.1)
    assert unit_inverse.kappa.imag == 0

def test_inverse_vanishes_at_horizon(unit_inverse):
    p = unit_inverse.p_function()
    assert p(1e-3) == 0
    assert np.all(np.abs(unit_inverse.p) > 0)

def test_inverse_b0_residual_is_logarithmically_small(unit_inverse):
    # |2 B0 - a| = O(|a| / |log T|) on [0, T/2], weighted by |log(T - t)| <= |log(T / 2)|.
    T = 1e-3
    residual = b0_residual(unit_inverse, SampledFunction.constant(1.0))
    assert residual <= 2 * abs(np.log(T / 2)) / abs(np.log(T))

def test_B0_stays_in_log_band_for_the_ansatz():
    T = 1e-3
    hist = _kappa_history(T)
    values = np.array([B0(hist, t) for t in np.linspace(0.0, 0.5 * T, 5)])
    drift = np.max(np.abs(values - values[0])) / abs(values[0])
    assert drift <= 1 / abs(np.log(T))

def test_inverse_of_zero():
    result = approx_inverse_P(0.0, 1e-2)
    assert result.kappa == 0
    assert not np.any(result.p)

def test_inverse_rejects_degenerate_datum():
    T = 1e-2
    with pytest.raises(NondegeneracyError):
        approx_inverse_P(lambda t: t - T, T)

def test_inverse_rejects_horizon():
    with pytest.raises(DomainError):
        approx_inverse_P(1.0, 0.6)
