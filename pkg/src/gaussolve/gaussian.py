"""Gaussian states: moments, covariance propagation, coherence, Wigner function.

Quadratures are x = a + a^dag, p = -i(a - a^dag), so the vacuum covariance is
the identity and the symplectic eigenvalue nu = sqrt(det V) >= 1.  The
squeezing convention is S(r) = exp[r(a^2 - a^dag^2)] with r real, giving
Var(a) = -cosh(r) sinh(r); this r is twice the usual half-exponent parameter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PhysicalityError

__all__ = [
    "StateSpec",
    "InitialMoments",
    "CovarianceMatrix",
    "initial_moments",
    "covariance_at",
    "mean_number",
    "coherence",
    "wigner",
]

_NU_TOL = 1e-6
_XLOGX_FLOOR = 1e-12
_COHERENCE_CLAMP = -1e-9


@dataclass(frozen=True)
class StateSpec:
    """Displaced squeezed state D(alpha) S(r) |0>; (0, 0) is the vacuum."""

    alpha: complex = 0.0
    r: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.r) and np.isfinite(complex(self.alpha))):
            raise ValueError("state parameters must be finite")


@dataclass(frozen=True)
class InitialMoments:
    """First and second moments of a(0); Var(a^dag) is always conj(var_a)."""

    mean_a: complex
    var_a: complex
    cov_na: float  # <a^dag a> - |<a>|^2, nonnegative

    def __post_init__(self):
        if self.cov_na < 0:
            raise ValueError(f"cov_na must be nonnegative, got {self.cov_na}")
        if abs(self.var_a) > self.cov_na + 1.0 + 1e-12:
            raise ValueError("|Var(a)| <= Cov(a^dag,a) + 1 violated; moments unphysical")


@dataclass(frozen=True)
class CovarianceMatrix:
    v11: float
    v22: float
    v12: float
    mean_xi: tuple[float, float] = (0.0, 0.0)

    @property
    def det(self) -> float:
        return self.v11 * self.v22 - self.v12 ** 2

    @property
    def nu(self) -> float:
        return math.sqrt(max(self.det, 0.0))

    def as_array(self) -> np.ndarray:
        return np.array([[self.v11, self.v12], [self.v12, self.v22]])


def initial_moments(state: StateSpec) -> InitialMoments:
    """Moments of D(alpha) S(r) |0> from the Bogoliubov relations."""
    r = state.r
    return InitialMoments(
        mean_a=complex(state.alpha),
        var_a=-math.cosh(r) * math.sinh(r),
        cov_na=math.sinh(r) ** 2,
    )


def covariance_at(m: InitialMoments, u: complex, v: float) -> CovarianceMatrix:
    """Propagate the covariance matrix through (u, v).

    V11/V22 = 1 + 2v + 2|u|^2 Cov(a^dag,a) +/- 2 Re[u^2 Var(a)],
    V12 = 2 Im[u^2 Var(a)]; the imaginary residue cancels exactly because
    Var(a^dag) = conj(Var(a)).
    """
    if v < 0:
        raise ValueError(f"v must be nonnegative, got {v}")
    u2var = u * u * m.var_a
    common = 1.0 + 2.0 * v + 2.0 * abs(u) ** 2 * m.cov_na
    mean = u * m.mean_a
    cov = CovarianceMatrix(
        v11=common + 2.0 * u2var.real,
        v22=common - 2.0 * u2var.real,
        v12=2.0 * u2var.imag,
        mean_xi=(2.0 * mean.real, 2.0 * mean.imag),
    )
    if cov.det < (1.0 - _NU_TOL) ** 2:
        raise PhysicalityError(
            f"symplectic eigenvalue nu={cov.nu:.9f} < 1 - {_NU_TOL:g}: "
            "uncertainty relation violated (solver inaccuracy upstream)"
        )
    return cov


def mean_number(m: InitialMoments, u: complex, v: float) -> float:
    """<a^dag a>(t) = |u|^2 <a^dag a>(0) + v."""
    return abs(u) ** 2 * (m.cov_na + abs(m.mean_a) ** 2) + v


def _xlog2x(x: float) -> float:
    if x < _XLOGX_FLOOR:
        return 0.0
    return x * math.log2(x)


def coherence(cov: CovarianceMatrix, nbar: float) -> float:
    """Relative entropy of coherence (bits) of a one-mode Gaussian state.

    Distance to the nearest incoherent Gaussian state, which is the thermal
    state sharing the state's mean number nbar; nu = sqrt(det V).
    """
    if nbar < 0:
        raise ValueError(f"nbar must be nonnegative, got {nbar}")
    nu = cov.nu
    if nu < 1.0 - _NU_TOL:
        raise PhysicalityError(f"nu={nu:.9f} < 1 - {_NU_TOL:g}")
    c = (
        _xlog2x((nu - 1.0) / 2.0)
        - _xlog2x((nu + 1.0) / 2.0)
        + _xlog2x(nbar + 1.0)
        - _xlog2x(nbar)
    )
    if c < _COHERENCE_CLAMP:
        raise PhysicalityError(f"coherence {c:.3e} below roundoff clamp")
    return max(c, 0.0)


def wigner(cov: CovarianceMatrix, xi) -> float:
    """Gaussian Wigner density at the phase-space point xi = (xi1, xi2)."""
    det = cov.det
    if det < 1e-12:
        raise ValueError(f"covariance matrix is singular (det={det:.3e})")
    d = np.asarray(xi, dtype=float) - np.asarray(cov.mean_xi)
    # 2x2 inverse spelled out
    quad = (cov.v22 * d[0] ** 2 - 2.0 * cov.v12 * d[0] * d[1] + cov.v11 * d[1] ** 2) / det
    return float(np.exp(-0.5 * quad) / (2.0 * math.pi * math.sqrt(det)))
