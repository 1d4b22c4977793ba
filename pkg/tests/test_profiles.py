#---------------------------------------------------------------------------------------------------
import numpy as np
import pytest

from hmflow.inner.moments import MOMENT_KINDS, moment_integral, moment_value
from hmflow.inner.profiles import (
    KERNEL_INDICES, cos_w, eval_E, eval_U, eval_W, eval_Z, eval_w, grad_W, grad_W_squared, rotate,
    sin_w, w_rho,
)
from hmflow.types.errors import DomainError
from hmflow.types.state import ModulationState, PlanePoint, normalize

RNG = np.random.default_rng(7)
POINTS = np.concatenate((RNG.normal(scale=2.0, size=(40, 2)), [(0.0, 0.0), (1.0, 0.0)]))

#---------------------------------------------------------------------------------------------------
def test_profile_values():
    assert eval_w(0.0) == pytest.approx(np.pi)
    assert eval_w(1.0) == pytest.approx(np.pi / 2)
    assert w_rho(0.0) == pytest.approx(-2.0)
    rho = np.linspace(0.0, 20.0, 101)
    assert np.allclose(sin_w(rho)**2 + cos_w(rho)**2, 1.0, atol=1e-12)
    assert np.allclose(sin_w(rho), -rho * w_rho(rho), atol=1e-12)
    assert np.allclose(np.sin(eval_w(rho)), sin_w(rho), atol=1e-12)

def test_negative_radius_rejected():
    with pytest.raises(DomainError):
        eval_w(-1.0)

def test_bubble_values():
    assert np.allclose(eval_W((0.0, 0.0)), (0.0, 0.0, -1.0))
    assert np.allclose(eval_W((1.0, 0.0)), (1.0, 0.0, 0.0))
    assert np.allclose(eval_W((1e8, 0.0)), (0.0, 0.0, 1.0), atol=1e-7)

def test_plane_point():
    assert PlanePoint(0.0, 0.0).theta == 0.0
    assert PlanePoint(-1.0, -0.0).theta == pytest.approx(np.pi)
    assert PlanePoint(3.0, 4.0).rho == pytest.approx(5.0)

#---------------------------------------------------------------------------------------------------
def test_frame_is_orthonormal():
    W, E1, E2 = eval_W(POINTS), eval_E(1, POINTS), eval_E(2, POINTS)
    for a in (W, E1, E2):
        assert np.allclose(np.linalg.norm(a, axis=-1), 1.0, atol=1e-12)
    for a, b in ((W, E1), (W, E2), (E1, E2)):
        assert np.allclose(np.sum(a * b, axis=-1), 0.0, atol=1e-12)

def test_frame_examples():
    assert np.allclose(eval_E(2, (1.0, 0.0)), (0.0, 1.0, 0.0))
    assert np.allclose(eval_E(1, (1.0, 0.0)), (0.0, 0.0, -1.0))

def test_rotation():
    v = normalize(RNG.normal(size=(10, 3)))
    back = rotate(-0.8, rotate(0.8, v))
    assert np.allclose(back, v, atol=1e-14)
    assert np.allclose(np.linalg.norm(rotate(2.1, v), axis=-1), 1.0)

def test_normalize_rejects_zero():
    with pytest.raises(DomainError):
        normalize((0.0, 0.0, 0.0))

#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize('l, j', KERNEL_INDICES)
def test_kernels_are_tangent(l, j):
    Z = eval_Z(l, j, POINTS)
    assert np.allclose(np.sum(Z * eval_W(POINTS), axis=-1), 0.0, atol=1e-12)

def test_kernel_examples():
    assert np.allclose(eval_Z(0, 1, (0.0, 0.0)), 0.0)
    assert np.allclose(eval_Z(1, 1, (1.0, 0.0)), (0.0, 0.0, 1.0))
    rho = 1e4
    assert rho**2 * w_rho(rho) == pytest.approx(-2.0, rel=1e-6)

def test_unknown_kernel():
    with pytest.raises(DomainError):
        eval_Z(2, 1, (1.0, 0.0))

#---------------------------------------------------------------------------------------------------
def test_grad_W_matches_differences():
    h = 1e-6
    grad = grad_W(POINTS)
    for k in range(2):
        e = np.zeros(2)
        e[k] = h
        fd = (eval_W(POINTS + e) - eval_W(POINTS - e)) / (2 * h)
        assert np.allclose(grad[..., k, :], fd, atol=1e-7)
    rho = np.linalg.norm(POINTS, axis=-1)
    assert np.allclose(np.sum(grad**2, axis=(-2, -1)), grad_W_squared(POINTS))
    assert np.allclose(grad_W_squared(POINTS), 2 * w_rho(rho)**2)

def test_eval_U_at_center():
    state = ModulationState(0.1, 0.4, (1.0, 0.5))
    assert np.allclose(eval_U(state, 1.0, 0.5), (0.0, 0.0, -1.0))
    assert state.p == pytest.approx(0.1 * np.exp(0.4j))
    again = ModulationState.from_p(state.p, state.xi)
    assert again.lambda_ == pytest.approx(0.1)
    assert again.omega == pytest.approx(0.4)

def test_state_rejects_zero_scale():
    with pytest.raises(DomainError):
        ModulationState(0.0)

#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize('kind', ['rho_wrho2', 'rho3_wrho3', 'rho_wrho2_cosw'])
def test_moments(kind):
    assert abs(moment_integral(kind) - moment_value(kind)) <= 1e-8

def test_dirichlet_energy():
    assert abs(moment_integral('dirichlet_energy') - 4 * np.pi) <= 1e-6
    assert moment_value('gradient_mass') == pytest.approx(8 * np.pi)

@pytest.mark.parametrize('kind', sorted(MOMENT_KINDS))
def test_substitution_matches_direct(kind):
    direct = moment_integral(kind, method='direct', tol=1e-6)
    assert direct == pytest.approx(moment_value(kind), abs=1e-6)

def test_unknown_moment():
    with pytest.raises(DomainError):
        moment_integral('nothing')
