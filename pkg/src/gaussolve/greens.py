"""Volterra solve for the retarded amplitude u(t) and the fluctuation v(t).

u obeys  du/dt = -i omega0 u(t) - int_0^t g(t - tau) u(tau) dtau,  u(0) = 1,
and the accumulated thermal fluctuation is the equal-time double integral
v(t) = int_0^t dtau1 int_0^t dtau2 u(t - tau1) gtilde(tau1 - tau2) u*(t - tau2).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .bath import BathSpec, memory_kernel, thermal_kernel_grid
from .errors import GaussolveError, InstabilityError

__all__ = ["TimeGrid", "GreensSolution", "solve_u", "compute_v", "v_dot", "solve_greens"]

# |u| may exceed 1 by at most this much before the solve is declared unstable
_U_OVERSHOOT_LIMIT = 1e-4
_V_NEGATIVE_FLOOR = -1e-9
_V_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class TimeGrid:
    """Uniform solver grid with decimated output every ``decimation`` steps."""

    t_max: float
    n_steps: int
    decimation: int = 1

    def __post_init__(self):
        if self.t_max <= 0 or self.n_steps < 1:
            raise ValueError("need t_max > 0 and n_steps >= 1")
        if self.decimation < 1 or self.n_steps % self.decimation != 0:
            raise ValueError("decimation must divide n_steps")

    @property
    def h(self) -> float:
        return self.t_max / self.n_steps

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_steps + 1) * self.h

    @property
    def output_times(self) -> np.ndarray:
        return self.times[:: self.decimation]

    @property
    def h_out(self) -> float:
        return self.h * self.decimation

    def check_resolves(self, bath: BathSpec) -> None:
        # the kernel support ~1/omega_c must be resolved
        if self.h > 0.1 / bath.omega_c + 1e-15:
            raise ValueError(
                f"step h={self.h:g} too coarse for omega_c={bath.omega_c:g}; "
                f"need h <= {0.1 / bath.omega_c:g}"
            )

    @classmethod
    def default(cls, t_max: float = 20.0, h: float = 0.005,
                decimation: int = 20) -> "TimeGrid":
        n = int(round(t_max / h))
        return cls(t_max=t_max, n_steps=n, decimation=decimation)


@dataclass(frozen=True)
class GreensSolution:
    """u, u_dot on the full grid; v, v_dot on the decimated output grid."""

    bath: BathSpec
    grid: TimeGrid
    u: np.ndarray
    u_dot: np.ndarray
    v: np.ndarray
    v_dot: np.ndarray

    @property
    def t_output(self) -> np.ndarray:
        return self.grid.output_times

    @property
    def u_output(self) -> np.ndarray:
        return self.u[:: self.grid.decimation]

    @property
    def u_dot_output(self) -> np.ndarray:
        return self.u_dot[:: self.grid.decimation]


def solve_u(bath: BathSpec, grid: TimeGrid):
    """Integrate the u equation; returns (u, u_dot) on the full grid.

    Implicit trapezoid step with the memory convolution by the trapezoid
    rule over the stored history.  The right-hand side is linear in the new
    value, so each implicit step is solved exactly: second order, A-stable,
    and modulus-preserving when the kernel vanishes.  u_dot is the equation
    right-hand side at the accepted values.
    """
    grid.check_resolves(bath)
    h = grid.h
    n = grid.n_steps
    g = memory_kernel(bath, grid.times)
    u = np.empty(n + 1, dtype=complex)
    f = np.empty(n + 1, dtype=complex)  # stored right-hand sides (u_dot)
    u[0] = 1.0
    f[0] = -1j * bath.omega0

    # F(u_new) = -a u_new - base with the new-endpoint kernel term kept symbolic
    a = 1j * bath.omega0 + 0.5 * h * g[0]
    denom = 1.0 + 0.5 * h * a
    for k in range(n):
        # trapezoid memory sum over history; base excludes the t_{k+1} endpoint
        base = h * np.dot(g[k + 1:0:-1], u[: k + 1])
        base -= 0.5 * h * g[k + 1] * u[0]
        u[k + 1] = (u[k] + 0.5 * h * (f[k] - base)) / denom
        f[k + 1] = -a * u[k + 1] - base
        if abs(u[k + 1]) > 1.0 + _U_OVERSHOOT_LIMIT:
            raise InstabilityError(
                f"|u|={abs(u[k + 1]):.6f} > 1+{_U_OVERSHOOT_LIMIT:g} at "
                f"t={(k + 1) * h:.4f}; reduce the step size h={h:g}"
            )
    return u, f


def compute_v(bath: BathSpec, grid: TimeGrid, u: np.ndarray) -> np.ndarray:
    """Equal-time fluctuation v at the decimated output times.

    The double trapezoid sum collapses to a lag sum over the autocorrelation
    of the weighted history, using gtilde only at grid differences.
    """
    out_idx = np.arange(0, grid.n_steps + 1, grid.decimation)
    v = np.zeros(len(out_idx))
    if bath.T_s == 0 or bath.eta == 0:
        return v
    gt = thermal_kernel_grid(bath, grid.times)
    h = grid.h
    max_imag = 0.0
    for i, k in enumerate(out_idx):
        if k == 0:
            continue
        a = u[k::-1].copy()  # a[j] = u(t_k - tau_j)
        a[0] *= 0.5
        a[-1] *= 0.5
        a *= h
        # c[d + k] = sum_j a[j + d] conj(a[j]) for lag d
        c = fftconvolve(a, np.conj(a)[::-1])
        pos = c[k:]  # lags 0..k
        total = pos[0] * gt[0] + 2.0 * np.sum(np.real(pos[1: k + 1] * gt[1: k + 1]))
        max_imag = max(max_imag, abs(total.imag))
        v[i] = total.real
    scale = max(np.max(v), 1.0)
    if max_imag > _V_IMAG_TOL * scale:
        raise GaussolveError(
            f"imaginary residual {max_imag:.3e} in v exceeds tolerance "
            f"{_V_IMAG_TOL:g} * {scale:.3e}"
        )
    if np.min(v) < _V_NEGATIVE_FLOOR * scale:
        raise GaussolveError(f"v dipped to {np.min(v):.3e}; solver inaccuracy upstream")
    np.clip(v, 0.0, None, out=v)
    return v


def v_dot(v: np.ndarray, h_out: float) -> np.ndarray:
    """Second-order finite differences on the uniform output grid."""
    v = np.asarray(v, dtype=float)
    if len(v) < 3:
        raise ValueError("need at least 3 output points to differentiate v")
    out = np.empty_like(v)
    out[1:-1] = (v[2:] - v[:-2]) / (2.0 * h_out)
    out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h_out)
    out[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h_out)
    return out


def solve_greens(bath: BathSpec, grid: TimeGrid) -> GreensSolution:
    """Solve u, then v and its derivative; bundle everything for downstream use."""
    u, u_d = solve_u(bath, grid)
    v = compute_v(bath, grid, u)
    return GreensSolution(bath=bath, grid=grid, u=u, u_dot=u_d,
                          v=v, v_dot=v_dot(v, grid.h_out))
