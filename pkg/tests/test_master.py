"""Master-equation coefficients, sign-change detection, crossover maps."""
import numpy as np
import pytest

from gaussolve import (BathSpec, GaussolveError, TimeGrid, crossover_map,
                       detect_sign_changes, master_coefficients, solve_greens)
from gaussolve.greens import GreensSolution


def synthetic_solution(u, grid, bath=None):
    if bath is None:
        bath = BathSpec(eta=0.1, s=1.0, omega_c=5.0, T_s=0.0)
    u = np.asarray(u, dtype=complex)
    ud = np.gradient(u, grid.h, edge_order=2)
    n_out = grid.n_steps // grid.decimation + 1
    return GreensSolution(bath=bath, grid=grid, u=u, u_dot=ud,
                          v=np.zeros(n_out), v_dot=np.zeros(n_out))


class TestMasterCoefficients:
    def test_free_evolution(self):
        bath = BathSpec(eta=0.0, s=1.0, omega_c=5.0, T_s=0.0)
        grid = TimeGrid(t_max=5.0, n_steps=1000, decimation=10)
        coeffs = master_coefficients(solve_greens(bath, grid))
        assert np.max(np.abs(coeffs.omega_prime - 1.0)) < 1e-8
        assert np.max(np.abs(coeffs.gamma)) < 1e-8
        assert np.max(np.abs(coeffs.gamma_tilde)) < 1e-8
        assert not coeffs.singular_mask.any()

    def test_pure_decay_gives_constant_gamma(self):
        grid = TimeGrid(t_max=1.0, n_steps=100, decimation=10)
        u = np.exp((-1j - 0.25) * grid.times)
        coeffs = master_coefficients(synthetic_solution(u, grid))
        assert np.allclose(coeffs.gamma, 0.25, atol=1e-3)
        assert np.allclose(coeffs.omega_prime, 1.0, atol=1e-3)

    def test_singular_points_masked(self):
        grid = TimeGrid(t_max=1.0, n_steps=100, decimation=10)
        u = np.exp(-1j * grid.times)
        u[50] = 1e-9  # output index 5
        coeffs = master_coefficients(synthetic_solution(u, grid))
        assert coeffs.singular_mask[5]
        assert np.isnan(coeffs.gamma[5])
        assert np.isnan(coeffs.omega_prime[5])
        assert np.isfinite(coeffs.gamma[4])

    def test_all_singular_rejected(self):
        grid = TimeGrid(t_max=1.0, n_steps=100, decimation=10)
        u = np.full(101, 1e-9, dtype=complex)
        with pytest.raises(GaussolveError):
            master_coefficients(synthetic_solution(u, grid))


class TestBackflow:
    @pytest.mark.parametrize("s", [1.0, 0.5])
    def test_strong_coupling_gamma_goes_negative(self, s, solve_cache):
        # at twice the critical coupling the dissipation rate reverses sign,
        # the signature of information backflow
        coeffs = master_coefficients(solve_cache(s, 2.0, 1.0))
        assert detect_sign_changes(coeffs.gamma, coeffs.times)


class TestDetectSignChanges:
    def test_sine_crossings(self):
        t = np.linspace(0.0, 7.0, 701)
        found = detect_sign_changes(np.sin(t), t)
        assert len(found) == 2
        (t1, d1), (t2, d2) = found
        assert t1 == pytest.approx(np.pi, abs=1e-3)
        assert d1 == "+-"
        assert t2 == pytest.approx(2.0 * np.pi, abs=1e-3)
        assert d2 == "-+"

    def test_no_crossing(self):
        t = np.linspace(0.0, 1.0, 11)
        assert detect_sign_changes(t + 1.0, t) == []

    def test_nan_acts_as_gap(self):
        t = np.linspace(0.0, 1.0, 5)
        s = np.array([1.0, 0.5, np.nan, -0.5, -1.0])
        assert detect_sign_changes(s, t) == []

    def test_length_validation(self):
        with pytest.raises(ValueError):
            detect_sign_changes(np.array([1.0]), np.array([0.0]))
        with pytest.raises(ValueError):
            detect_sign_changes(np.array([1.0, 2.0]), np.array([0.0]))


class TestCrossoverMap:
    def test_synthetic_boundary(self):
        # gamma = (eta_s - 1) sin t: rows above eta_s = 1 cross +- at t = pi
        eta = np.linspace(0.5, 1.5, 5)
        t = np.linspace(0.0, 6.0, 121)
        gamma = (eta[:, None] - 1.0) * np.sin(t)[None, :]
        c = (eta ** 2)[:, None] * np.ones_like(t)[None, :]
        cmap = crossover_map(eta, t, c, gamma)
        rows = sorted({e for e, _, _ in cmap.boundary})
        assert rows == [1.25, 1.5]
        for e, tc, direction in cmap.boundary:
            assert direction == "+-"
            assert tc == pytest.approx(np.pi, abs=0.05)
        # dC/deta of C = eta^2 is 2 eta (central differences are exact here)
        assert np.allclose(cmap.dC_deta[:, 0], 2.0 * eta)
        # dgamma/dt of the eta_s = 1.5 row is 0.5 cos t
        assert np.allclose(cmap.dgamma_dt[-1], 0.5 * np.cos(t), atol=1e-3)

    def test_shape_validation(self):
        eta = np.linspace(0.5, 1.5, 3)
        t = np.linspace(0.0, 1.0, 4)
        good = np.zeros((3, 4))
        with pytest.raises(ValueError):
            crossover_map(eta, t, good, np.zeros((4, 3)))
        with pytest.raises(ValueError):
            crossover_map(eta[:2], t, good[:2], good[:2])
