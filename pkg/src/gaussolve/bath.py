"""Ohmic-family reservoir: spectral density, memory and thermal kernels.

All frequencies are in units of the system frequency omega0 (omega0 = 1
unless overridden) and temperature is the dimensionless T_s = k_B T / omega0
with hbar = k_B = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gamma as gamma_fn

from .errors import QuadratureError

__all__ = [
    "BathSpec",
    "QuadratureSpec",
    "spectral_density",
    "critical_coupling",
    "bose_occupation",
    "memory_kernel",
    "memory_kernel_quadrature",
    "thermal_kernel",
    "thermal_kernel_grid",
    "thermal_kernel_quadrature",
]


@dataclass(frozen=True)
class BathSpec:
    """Reservoir parameters plus the system frequency.

    eta is the absolute coupling strength; use ``from_eta_ratio`` to build a
    spec from a multiple of the critical coupling eta_c = omega0/(omega_c Gamma(s)).
    """

    eta: float
    s: float
    omega_c: float
    T_s: float
    omega0: float = 1.0

    def __post_init__(self):
        if self.s <= 0:
            raise ValueError(f"Ohmicity exponent must be positive, got s={self.s}")
        if self.omega_c <= 0:
            raise ValueError(f"cutoff must be positive, got omega_c={self.omega_c}")
        if self.eta < 0:
            raise ValueError(f"coupling must be nonnegative, got eta={self.eta}")
        if self.T_s < 0:
            raise ValueError(f"temperature must be nonnegative, got T_s={self.T_s}")
        if self.omega0 <= 0:
            raise ValueError(f"system frequency must be positive, got omega0={self.omega0}")

    @property
    def eta_c(self) -> float:
        return critical_coupling(self.s, self.omega_c, self.omega0)

    @property
    def eta_ratio(self) -> float:
        return self.eta / self.eta_c

    @classmethod
    def from_eta_ratio(cls, eta_over_eta_c: float, s: float, omega_c: float,
                       T_s: float, omega0: float = 1.0) -> "BathSpec":
        eta = eta_over_eta_c * critical_coupling(s, omega_c, omega0)
        return cls(eta=eta, s=s, omega_c=omega_c, T_s=T_s, omega0=omega0)


@dataclass(frozen=True)
class QuadratureSpec:
    """Discretization of the frequency integrals on (0, omega_max].

    ``gl-panels`` uses geometrically graded panels with an 8-point
    Gauss-Legendre rule per panel; the grading resolves the omega^(s-1)
    behavior at the origin down to s = 1/2.  ``trapezoid`` integrates on the
    sqrt-transformed axis (same endpoint handling).
    """

    omega_max: float
    n_nodes: int = 512
    scheme: str = "gl-panels"

    def __post_init__(self):
        if self.n_nodes < 64:
            raise ValueError(f"need at least 64 nodes, got {self.n_nodes}")
        if self.omega_max <= 0:
            raise ValueError("omega_max must be positive")
        if self.scheme not in ("gl-panels", "trapezoid"):
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")

    @classmethod
    def for_bath(cls, bath: BathSpec, tail_factor: float = 10.0,
                 n_nodes: int = 512) -> "QuadratureSpec":
        # >= 8 omega_c keeps the exp(-omega/omega_c) tail below 1e-6 relative
        if tail_factor < 8.0:
            raise ValueError("omega_max must be at least 8 omega_c")
        return cls(omega_max=tail_factor * bath.omega_c, n_nodes=n_nodes)

    def nodes_weights(self, n_nodes: int | None = None):
        """Return quadrature nodes and weights on (0, omega_max]."""
        n = self.n_nodes if n_nodes is None else n_nodes
        if self.scheme == "trapezoid":
            # omega = y^2 removes the omega^(s-1) endpoint singularity for s >= 1/2
            y = np.linspace(0.0, np.sqrt(self.omega_max), n)
            w = np.full(n, y[1] - y[0])
            w[0] *= 0.5
            w[-1] *= 0.5
            return y * y, 2.0 * y * w
        per_panel = 8
        n_panels = max(n // per_panel, 8)
        # geometric grading toward omega = 0; the uncovered sliver below the
        # smallest edge contributes < 1e-8 relative for s >= 1/2
        ratio = 1e-16 ** (1.0 / n_panels)
        edges = self.omega_max * ratio ** np.arange(n_panels, -1, -1)
        x, w = leggauss(per_panel)
        lo, hi = edges[:-1], edges[1:]
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
        weights = (half[:, None] * w[None, :]).ravel()
        return nodes, weights


def spectral_density(bath: BathSpec, omega):
    """J(omega) = eta omega^s omega_c^(1-s) exp(-omega/omega_c), omega >= 0."""
    om = np.asarray(omega, dtype=float)
    if np.any(om < 0):
        raise ValueError("spectral density is defined for omega >= 0 only")
    out = bath.eta * om ** bath.s * bath.omega_c ** (1.0 - bath.s) * np.exp(-om / bath.omega_c)
    return out if out.ndim else float(out)


def critical_coupling(s: float, omega_c: float, omega0: float = 1.0) -> float:
    """eta_c = omega0 / (omega_c Gamma(s)); a localized mode forms above it."""
    if s <= 0:
        raise ValueError(f"Ohmicity exponent must be positive, got s={s}")
    if omega_c <= 0:
        raise ValueError(f"cutoff must be positive, got omega_c={omega_c}")
    return omega0 / (omega_c * gamma_fn(s))


def bose_occupation(omega, T_s: float):
    """Mean thermal occupation 1/(exp(omega/T_s) - 1); zero at T_s = 0."""
    om = np.asarray(omega, dtype=float)
    if np.any(om <= 0):
        raise ValueError("bose_occupation requires omega > 0")
    if T_s == 0:
        out = np.zeros_like(om)
    else:
        out = 1.0 / np.expm1(om / T_s)
    return out if out.ndim else float(out)


def memory_kernel(bath: BathSpec, dt):
    """g(dt) = int_0^inf J(omega) exp(-i omega dt) domega, in closed form.

    Equals eta omega_c^2 Gamma(s+1) (1 + i omega_c dt)^(-(s+1)) on the
    principal branch; the kernel depends on the time difference only.
    """
    d = np.asarray(dt, dtype=float)
    z = (1.0 + 1j * bath.omega_c * d) ** (-(bath.s + 1.0))
    out = bath.eta * bath.omega_c ** 2 * gamma_fn(bath.s + 1.0) * z
    return out if out.ndim else complex(out)


def memory_kernel_quadrature(bath: BathSpec, quad: QuadratureSpec, dt: float) -> complex:
    """Direct quadrature of the defining integral (test oracle for the closed form)."""
    om, w = quad.nodes_weights()
    integrand = spectral_density(bath, om) * np.exp(-1j * om * dt)
    return complex(np.sum(w * integrand))


def _thermal_series(bath: BathSpec, dts: np.ndarray, n_terms: int) -> np.ndarray:
    # Bose expansion nbar = sum_m exp(-m omega/T_s); each term integrates to the
    # same Gamma closed form as the memory kernel.  The tail beyond n_terms is
    # summed by the Euler-Maclaurin midpoint rule, accurate to O(M^-(s+3)).
    prefac = bath.eta * bath.omega_c ** (1.0 - bath.s) * gamma_fn(bath.s + 1.0)
    base = 1.0 / bath.omega_c + 1j * dts  # shape (len(dts),)
    m = np.arange(1, n_terms + 1) / bath.T_s
    terms = (base[:, None] + m[None, :]) ** (-(bath.s + 1.0))
    tail = ((base + (n_terms + 0.5) / bath.T_s) ** (-bath.s)
            * bath.T_s / bath.s)
    return prefac * (terms.sum(axis=1) + tail)


def thermal_kernel_grid(bath: BathSpec, dts: np.ndarray, n_terms: int = 2000,
                        rel_tol: float = 1e-6) -> np.ndarray:
    """gtilde(dt) = int_0^inf J(omega) nbar(omega) exp(-i omega dt) domega.

    Evaluated in closed form (Bose series) for every dt in ``dts`` (dts >= 0);
    negative differences follow from Hermitian symmetry
    gtilde(-dt) = conj(gtilde(dt)).  Raises QuadratureError when halving the
    series length moves any value by more than ``rel_tol`` relative to the
    kernel scale.
    """
    dts = np.asarray(dts, dtype=float)
    if bath.T_s == 0 or bath.eta == 0:
        return np.zeros(dts.shape, dtype=complex)
    fine = _thermal_series(bath, dts, n_terms)
    coarse = _thermal_series(bath, dts, n_terms // 2)
    scale = np.max(np.abs(fine))
    err = np.max(np.abs(fine - coarse))
    if scale > 0 and err > rel_tol * scale:
        raise QuadratureError(
            f"thermal kernel series not converged: halving the length moved "
            f"the result by {err / scale:.3e} relative (tol {rel_tol:.1e}); "
            f"n_terms={n_terms}, s={bath.s}, T_s={bath.T_s}"
        )
    return fine


def thermal_kernel(bath: BathSpec, dt: float, n_terms: int = 2000) -> complex:
    """Scalar thermal kernel; Hermitian symmetry handled for negative dt."""
    val = thermal_kernel_grid(bath, np.array([abs(dt)]), n_terms=n_terms)[0]
    return complex(np.conj(val)) if dt < 0 else complex(val)


def thermal_kernel_quadrature(bath: BathSpec, quad: QuadratureSpec, dt: float) -> complex:
    """Direct frequency quadrature of the thermal kernel (test oracle).

    Accurate while |dt| stays small against the quadrature's panel widths;
    the production path is the closed-form series above.
    """
    om, w = quad.nodes_weights()
    integrand = (spectral_density(bath, om) * bose_occupation(om, bath.T_s)
                 * np.exp(-1j * om * dt))
    return complex(np.sum(w * integrand))
