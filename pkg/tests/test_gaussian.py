"""Gaussian moments, covariance propagation, coherence, Wigner density."""
import math

import numpy as np
import pytest

from gaussolve import (CovarianceMatrix, InitialMoments, PhysicalityError,
                       StateSpec, coherence, covariance_at, initial_moments,
                       mean_number, wigner)


def thermal_entropy_bits(n):
    """(n+1) log2(n+1) - n log2(n); entropy of a thermal state."""
    if n == 0:
        return 0.0
    return (n + 1.0) * math.log2(n + 1.0) - n * math.log2(n)


class TestInitialMoments:
    def test_vacuum(self):
        m = initial_moments(StateSpec())
        assert m.mean_a == 0
        assert m.var_a == 0
        assert m.cov_na == 0

    def test_coherent(self):
        m = initial_moments(StateSpec(alpha=1 + 2j))
        assert m.mean_a == 1 + 2j
        assert m.var_a == 0
        assert m.cov_na == 0

    def test_squeezed(self):
        m = initial_moments(StateSpec(r=1.0))
        assert m.var_a == pytest.approx(-math.cosh(1.0) * math.sinh(1.0))
        assert m.cov_na == pytest.approx(math.sinh(1.0) ** 2)

    def test_unphysical_rejected(self):
        with pytest.raises(ValueError):
            InitialMoments(mean_a=0, var_a=2.0, cov_na=0.5)
        with pytest.raises(ValueError):
            InitialMoments(mean_a=0, var_a=0, cov_na=-0.1)
        with pytest.raises(ValueError):
            StateSpec(alpha=float("inf"))


class TestCovariance:
    def test_vacuum_is_identity(self):
        cov = covariance_at(initial_moments(StateSpec()), 1.0 + 0j, 0.0)
        assert cov.v11 == cov.v22 == 1.0
        assert cov.v12 == 0.0
        assert cov.nu == 1.0

    def test_squeezed_diagonal(self):
        # r = 1 at t = 0 gives diag(e^-2, e^2)
        cov = covariance_at(initial_moments(StateSpec(r=1.0)), 1.0 + 0j, 0.0)
        assert cov.v11 == pytest.approx(math.exp(-2.0), abs=1e-10)
        assert cov.v22 == pytest.approx(math.exp(2.0), abs=1e-10)
        assert cov.v12 == pytest.approx(0.0, abs=1e-12)

    def test_rotation_mixes_quadratures(self):
        # u = e^{-i pi/4}: u^2 = -i turns the squeezing fully into V12
        m = initial_moments(StateSpec(r=1.0))
        cov = covariance_at(m, np.exp(-1j * np.pi / 4.0), 0.0)
        assert cov.v11 == pytest.approx(cov.v22)
        assert cov.v12 == pytest.approx(2.0 * math.cosh(1.0) * math.sinh(1.0))
        assert cov.nu == pytest.approx(1.0, abs=1e-12)

    def test_mean_displaces(self):
        cov = covariance_at(initial_moments(StateSpec(alpha=2.0)), 1j, 0.0)
        assert cov.mean_xi == pytest.approx((0.0, 4.0))

    def test_thermal_noise_adds_to_diagonal(self):
        cov = covariance_at(initial_moments(StateSpec()), 0.5 + 0j, 0.3)
        assert cov.v11 == cov.v22 == pytest.approx(1.6)

    def test_unphysical_rejected(self):
        m = initial_moments(StateSpec())
        with pytest.raises(ValueError):
            covariance_at(m, 1.0 + 0j, -0.1)

    def test_mean_number(self):
        m = initial_moments(StateSpec(alpha=2.0, r=1.0))
        n = mean_number(m, 0.5 + 0j, 0.3)
        assert n == pytest.approx(0.25 * (math.sinh(1.0) ** 2 + 4.0) + 0.3)


class TestCoherence:
    def test_vacuum_has_none(self):
        cov = CovarianceMatrix(1.0, 1.0, 0.0)
        assert coherence(cov, 0.0) == 0.0

    def test_coherent_alpha_one_is_two_bits(self):
        cov = covariance_at(initial_moments(StateSpec(alpha=1.0)), 1.0 + 0j, 0.0)
        assert coherence(cov, 1.0) == pytest.approx(2.0, abs=1e-9)

    def test_squeezed_closed_form(self):
        state = StateSpec(r=1.0)
        cov = covariance_at(initial_moments(state), 1.0 + 0j, 0.0)
        nbar = math.sinh(1.0) ** 2
        assert coherence(cov, nbar) == pytest.approx(thermal_entropy_bits(nbar), abs=1e-9)

    def test_thermal_state_has_none(self):
        # nu = 2 nbar + 1 for a thermal state; the two entropies cancel
        nbar = 0.7
        cov = CovarianceMatrix(2 * nbar + 1, 2 * nbar + 1, 0.0)
        assert coherence(cov, nbar) == pytest.approx(0.0, abs=1e-12)

    def test_invalid_inputs(self):
        cov = CovarianceMatrix(1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            coherence(cov, -0.5)
        with pytest.raises(PhysicalityError):
            coherence(CovarianceMatrix(0.5, 0.5, 0.0), 1.0)


class TestStrongCouplingShape:
    def test_sudden_death_and_revival(self, solve_cache):
        # weakly displaced, weakly squeezed state at strong Ohmic coupling:
        # coherence collapses to a few percent of its initial value, then
        # partially revives as information flows back from the bath
        sol = solve_cache(1.0, 2.0, 1.0)
        m = initial_moments(StateSpec(alpha=0.1, r=0.1))
        u = sol.u_output
        c = np.array([
            coherence(covariance_at(m, u[i], sol.v[i]),
                      mean_number(m, u[i], sol.v[i]))
            for i in range(len(u))
        ])
        imin = int(np.argmin(c))
        assert c[imin] < 0.10 * c[0]
        assert np.max(c[imin:]) > 1.5 * c[imin]


class TestWigner:
    def test_vacuum_peak(self):
        cov = CovarianceMatrix(1.0, 1.0, 0.0)
        assert wigner(cov, (0.0, 0.0)) == pytest.approx(1.0 / (2.0 * math.pi))

    def test_normalization(self):
        cov = covariance_at(initial_moments(StateSpec(alpha=0.5, r=0.5)), 1.0 + 0j, 0.2)
        ax = np.linspace(-10.0, 10.0, 201)
        grid = np.array([[wigner(cov, (x1, x2)) for x2 in ax] for x1 in ax])
        total = np.trapezoid(np.trapezoid(grid, ax, axis=1), ax)
        assert total == pytest.approx(1.0, abs=1e-6)

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            wigner(CovarianceMatrix(0.0, 0.0, 0.0), (0.0, 0.0))
