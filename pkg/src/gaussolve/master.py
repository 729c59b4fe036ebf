"""Time-local master-equation coefficients and crossover diagnostics.

omega0'(t) = -Im[udot/u] (so free evolution gives omega0' = omega0),
gamma(t) = -Re[udot/u],
gammatilde(t) = vdot(t) - 2 v(t) Re[udot(t)/u(t)].
Negative gamma intervals signal information backflow (non-Markovian regime).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GaussolveError
from .greens import GreensSolution

__all__ = [
    "MasterCoefficients",
    "CrossoverMap",
    "master_coefficients",
    "detect_sign_changes",
    "crossover_map",
]

DEFAULT_U_FLOOR = 1e-6


@dataclass(frozen=True)
class MasterCoefficients:
    times: np.ndarray
    omega_prime: np.ndarray
    gamma: np.ndarray
    gamma_tilde: np.ndarray
    singular_mask: np.ndarray  # True where |u| < u_floor; entries there are NaN


@dataclass(frozen=True)
class CrossoverMap:
    eta_s: np.ndarray
    times: np.ndarray
    dgamma_dt: np.ndarray  # shape (len(eta_s), len(times))
    dC_deta: np.ndarray
    boundary: list  # (eta_s, t, direction) backflow-onset points


def master_coefficients(sol: GreensSolution, omega0: float | None = None,
                        u_floor: float = DEFAULT_U_FLOOR) -> MasterCoefficients:
    """Evaluate the coefficients on the decimated output grid.

    Points where |u| < u_floor are genuinely divergent and are masked with
    NaN rather than clamped.
    """
    if omega0 is None:
        omega0 = sol.bath.omega0
    u = sol.u_output
    ud = sol.u_dot_output
    mask = np.abs(u) < u_floor
    if np.all(mask):
        raise GaussolveError("all output points singular (|u| < u_floor everywhere)")
    ratio = np.full(len(u), complex(np.nan, np.nan))
    ratio[~mask] = ud[~mask] / u[~mask]
    re = np.real(ratio)
    coeffs = MasterCoefficients(
        times=sol.t_output,
        omega_prime=-np.imag(ratio),
        gamma=-re,
        gamma_tilde=sol.v_dot - 2.0 * sol.v * re,
        singular_mask=mask,
    )
    return coeffs


def detect_sign_changes(series: np.ndarray, times: np.ndarray):
    """Zero crossings of a sampled series, linearly interpolated.

    Returns (t_cross, direction) pairs with direction "+-" or "-+".  NaN
    entries act as gaps: crossings are only reported between adjacent finite
    samples, and the series endpoints are never reported.
    """
    s = np.asarray(series, dtype=float)
    t = np.asarray(times, dtype=float)
    if len(s) != len(t) or len(s) < 2:
        raise ValueError("series and times must have equal length >= 2")
    out = []
    for i in range(len(s) - 1):
        a, b = s[i], s[i + 1]
        if not (np.isfinite(a) and np.isfinite(b)):
            continue
        if a * b < 0.0:
            tc = t[i] - a * (t[i + 1] - t[i]) / (b - a)
            out.append((float(tc), "+-" if a > 0 else "-+"))
    return out


def crossover_map(eta_s: np.ndarray, times: np.ndarray,
                  coherence_table: np.ndarray,
                  gamma_table: np.ndarray) -> CrossoverMap:
    """Crossover diagnostics on a rectangular (eta_s, t) sweep.

    dC/deta_s and dgamma/dt are central differences along their axes.  The
    boundary lists the backflow-onset points: positions where gamma crosses
    from positive to negative as t increases, i.e. where the dissipation flips
    direction and the dynamics turns non-Markovian.
    """
    eta_s = np.asarray(eta_s, dtype=float)
    times = np.asarray(times, dtype=float)
    ct = np.asarray(coherence_table, dtype=float)
    gt = np.asarray(gamma_table, dtype=float)
    shape = (len(eta_s), len(times))
    if ct.shape != shape or gt.shape != shape:
        raise ValueError(
            f"tables must be rectangular with shape {shape}, got C {ct.shape} "
            f"and gamma {gt.shape}"
        )
    if len(eta_s) < 3 or len(times) < 3:
        raise ValueError("need at least 3 points per axis")
    dC_deta = np.gradient(ct, eta_s, axis=0, edge_order=2)
    dgamma_dt = np.gradient(gt, times, axis=1, edge_order=2)
    boundary = []
    for i, es in enumerate(eta_s):
        for tc, direction in detect_sign_changes(gt[i], times):
            if direction == "+-":
                boundary.append((float(es), tc, direction))
    return CrossoverMap(eta_s=eta_s, times=times, dgamma_dt=dgamma_dt,
                        dC_deta=dC_deta, boundary=boundary)
