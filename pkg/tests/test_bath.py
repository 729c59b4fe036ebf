"""Reservoir spectral density, memory kernel, and thermal kernel."""
import math

import numpy as np
import pytest

from gaussolve import (BathSpec, QuadratureSpec, QuadratureError, bose_occupation,
                       critical_coupling, memory_kernel, spectral_density,
                       thermal_kernel)
from gaussolve.bath import (memory_kernel_quadrature, thermal_kernel_grid,
                            thermal_kernel_quadrature)

OHMIC = BathSpec(eta=0.1, s=1.0, omega_c=5.0, T_s=1.0)


class TestBathSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            BathSpec(eta=-0.1, s=1.0, omega_c=5.0, T_s=1.0)
        with pytest.raises(ValueError):
            BathSpec(eta=0.1, s=0.0, omega_c=5.0, T_s=1.0)
        with pytest.raises(ValueError):
            BathSpec(eta=0.1, s=1.0, omega_c=-5.0, T_s=1.0)
        with pytest.raises(ValueError):
            BathSpec(eta=0.1, s=1.0, omega_c=5.0, T_s=-1.0)
        with pytest.raises(ValueError):
            BathSpec(eta=0.1, s=1.0, omega_c=5.0, T_s=1.0, omega0=0.0)

    def test_critical_coupling_closed_forms(self):
        # eta_c = omega0 / (omega_c Gamma(s))
        assert critical_coupling(1.0, 5.0) == pytest.approx(0.2)
        assert critical_coupling(0.5, 5.0) == pytest.approx(1.0 / (5.0 * math.sqrt(math.pi)))
        assert critical_coupling(3.0, 5.0) == pytest.approx(0.1)
        assert critical_coupling(1.0, 5.0, omega0=2.0) == pytest.approx(0.4)

    def test_eta_ratio_roundtrip(self):
        bath = BathSpec.from_eta_ratio(2.0, s=0.5, omega_c=5.0, T_s=1.0)
        assert bath.eta_ratio == pytest.approx(2.0)
        assert bath.eta == pytest.approx(2.0 * bath.eta_c)


class TestSpectralDensity:
    def test_closed_form_values(self):
        # J(omega) = eta omega^s omega_c^(1-s) exp(-omega/omega_c)
        assert spectral_density(OHMIC, 5.0) == pytest.approx(0.1 * 5.0 * math.exp(-1.0))
        sub = BathSpec(eta=0.1, s=0.5, omega_c=5.0, T_s=0.0)
        assert spectral_density(sub, 5.0) == pytest.approx(0.1 * 5.0 * math.exp(-1.0))
        assert spectral_density(OHMIC, 0.0) == 0.0

    def test_negative_frequency_rejected(self):
        with pytest.raises(ValueError):
            spectral_density(OHMIC, -1.0)

    def test_quadrature_integrates_total_weight(self):
        # int_0^inf J = eta omega_c^2 Gamma(s+1); the omega_max=10 omega_c tail
        # contributes < 1e-3 relative only for the super-Ohmic case, so extend it
        for s in (0.5, 1.0, 3.0):
            bath = BathSpec(eta=0.1, s=s, omega_c=5.0, T_s=0.0)
            quad = QuadratureSpec.for_bath(bath, tail_factor=30.0, n_nodes=1024)
            om, w = quad.nodes_weights()
            total = np.sum(w * spectral_density(bath, om))
            exact = bath.eta * bath.omega_c ** 2 * math.gamma(s + 1.0)
            assert total == pytest.approx(exact, rel=1e-6)

    def test_quadrature_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(omega_max=50.0, n_nodes=32)
        with pytest.raises(ValueError):
            QuadratureSpec(omega_max=-1.0)
        with pytest.raises(ValueError):
            QuadratureSpec(omega_max=50.0, scheme="simpson")
        with pytest.raises(ValueError):
            QuadratureSpec.for_bath(OHMIC, tail_factor=4.0)


class TestBoseOccupation:
    def test_values(self):
        assert bose_occupation(1.0, 0.0) == 0.0
        assert bose_occupation(1.0, 1.0) == pytest.approx(1.0 / (math.e - 1.0))
        # high-temperature limit nbar -> T/omega
        assert bose_occupation(1.0, 100.0) == pytest.approx(99.5, abs=0.01)

    def test_nonpositive_frequency_rejected(self):
        with pytest.raises(ValueError):
            bose_occupation(0.0, 1.0)
        with pytest.raises(ValueError):
            bose_occupation(np.array([1.0, -2.0]), 1.0)


class TestMemoryKernel:
    def test_value_at_zero(self):
        # g(0) = eta omega_c^2 Gamma(s+1)
        for s in (0.5, 1.0, 3.0):
            bath = BathSpec(eta=0.1, s=s, omega_c=5.0, T_s=0.0)
            assert memory_kernel(bath, 0.0) == pytest.approx(
                0.1 * 25.0 * math.gamma(s + 1.0))

    @pytest.mark.parametrize("s", [0.5, 1.0, 3.0])
    @pytest.mark.parametrize("dt", [0.0, 0.05, 0.3, 1.0])
    def test_matches_direct_quadrature(self, s, dt):
        bath = BathSpec(eta=0.1, s=s, omega_c=5.0, T_s=0.0)
        quad = QuadratureSpec.for_bath(bath, tail_factor=30.0, n_nodes=4096)
        ref = memory_kernel_quadrature(bath, quad, dt)
        assert memory_kernel(bath, dt) == pytest.approx(ref, rel=1e-6)

    def test_vectorized(self):
        dts = np.array([0.0, 0.1, 0.2])
        vals = memory_kernel(OHMIC, dts)
        assert vals.shape == (3,)
        assert vals[1] == pytest.approx(memory_kernel(OHMIC, 0.1))


class TestThermalKernel:
    def test_zero_when_cold_or_uncoupled(self):
        cold = BathSpec(eta=0.1, s=1.0, omega_c=5.0, T_s=0.0)
        free = BathSpec(eta=0.0, s=1.0, omega_c=5.0, T_s=1.0)
        dts = np.linspace(0.0, 2.0, 5)
        assert np.all(thermal_kernel_grid(cold, dts) == 0)
        assert np.all(thermal_kernel_grid(free, dts) == 0)

    def test_frozen_quadrature_references(self):
        # independently integrated with a 4096-node rule out to 30 omega_c
        assert thermal_kernel(OHMIC, 0.0) == pytest.approx(
            0.12673772054237642 + 0j, rel=1e-9)
        assert thermal_kernel(OHMIC, 0.3) == pytest.approx(
            0.11342136365025134 - 0.04012712252349521j, rel=1e-9)
        hot_sub = BathSpec(eta=0.05, s=0.5, omega_c=5.0, T_s=20.0)
        assert thermal_kernel(hot_sub, 0.1) == pytest.approx(
            7.80805542216987 - 1.6492804954469515j, rel=1e-6)

    @pytest.mark.parametrize("s,T_s", [(0.5, 1.0), (1.0, 1.0), (3.0, 20.0)])
    def test_matches_direct_quadrature(self, s, T_s):
        bath = BathSpec(eta=0.1, s=s, omega_c=5.0, T_s=T_s)
        quad = QuadratureSpec.for_bath(bath, tail_factor=30.0, n_nodes=4096)
        for dt in (0.0, 0.1, 0.4):
            ref = thermal_kernel_quadrature(bath, quad, dt)
            assert thermal_kernel(bath, dt) == pytest.approx(ref, rel=1e-6)

    def test_hermitian_symmetry(self):
        val = thermal_kernel(OHMIC, 0.7)
        assert thermal_kernel(OHMIC, -0.7) == pytest.approx(np.conj(val))

    def test_series_convergence_guard(self):
        hot = BathSpec(eta=0.1, s=1.0, omega_c=5.0, T_s=20.0)
        with pytest.raises(QuadratureError):
            thermal_kernel_grid(hot, np.array([0.0]), n_terms=8)
