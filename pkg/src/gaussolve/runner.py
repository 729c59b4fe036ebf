"""Orchestration: scenarios, parameter sweeps, crossover maps, oracle checks.

All outputs are deterministic CSV/JSON: fixed column order, 17-significant-
digit decimal floats, LF line endings, assembly in lexicographic cell order
regardless of worker scheduling.
"""
from __future__ import annotations

import dataclasses
import json
import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .bath import BathSpec, QuadratureSpec
from .config import OracleCheckParams, ScenarioConfig, SweepConfig
from .errors import ConfigError, GaussolveError
from .gaussian import (StateSpec, coherence, covariance_at, initial_moments,
                       mean_number, wigner)
from .greens import GreensSolution, TimeGrid, solve_greens
from .master import crossover_map, master_coefficients
from .oracle import discretize, discretize_gl, oracle_u, oracle_v

__all__ = [
    "SCENARIO_COLUMNS",
    "SWEEP_COLUMNS",
    "run_scenario",
    "run_sweep",
    "run_crossover",
    "run_oracle_check",
]

SCENARIO_COLUMNS = [
    "t", "re_u", "im_u", "abs_u", "v", "V11", "V22", "V12", "nu", "nbar",
    "C_bits", "omega_prime", "gamma", "gamma_tilde", "singular_flag",
]
SWEEP_COLUMNS = [
    "s", "T_s", "eta_over_eta_c", "alpha", "r", "t",
    "C_bits", "gamma", "abs_u", "v", "status",
]

WORKERS_ENV = "GAUSSOLVE_WORKERS"


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    xf = float(x)
    if np.isnan(xf):
        return "nan"
    return f"{xf:.17g}"


def _write_csv(path: Path, header: list[str], rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def _write_manifest(out_dir: Path, resolved: dict) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = {
        "package": "gaussolve",
        "version": __version__,
        "resolved_config": resolved,
    }
    path = out_dir / "manifest.json"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def _resolved_scenario(cfg: ScenarioConfig) -> dict:
    return {
        "kind": "scenario",
        "bath": dataclasses.asdict(cfg.bath),
        "state": {"alpha": [cfg.state.alpha.real, cfg.state.alpha.imag], "r": cfg.state.r},
        "grid": dataclasses.asdict(cfg.grid),
        "outputs": {
            "timeseries": cfg.write_timeseries,
            "wigner_snapshot": cfg.wigner_snapshot,
        },
        "oracle": dataclasses.asdict(cfg.oracle),
        "output_path": cfg.output_path,
    }


def scenario_table(bath: BathSpec, state: StateSpec, grid: TimeGrid,
                   sol: GreensSolution | None = None):
    """Compute the full per-time-step scenario table (list of row tuples)."""
    if sol is None:
        sol = solve_greens(bath, grid)
    coeffs = master_coefficients(sol)
    m = initial_moments(state)
    rows = []
    u_out = sol.u_output
    for i, t in enumerate(sol.t_output):
        u = u_out[i]
        v = sol.v[i]
        cov = covariance_at(m, u, v)
        nbar = mean_number(m, u, v)
        rows.append((
            t, u.real, u.imag, abs(u), v,
            cov.v11, cov.v22, cov.v12, cov.nu, nbar,
            coherence(cov, nbar),
            coeffs.omega_prime[i], coeffs.gamma[i], coeffs.gamma_tilde[i],
            int(coeffs.singular_mask[i]),
        ))
    return rows, sol, coeffs


def run_scenario(cfg: ScenarioConfig, out_dir: str | Path | None = None) -> dict:
    """Execute one scenario; returns the paths of everything written."""
    out = Path(out_dir if out_dir is not None else cfg.output_path)
    rows, sol, _ = scenario_table(cfg.bath, cfg.state, cfg.grid)
    written = {"manifest": str(_write_manifest(out, _resolved_scenario(cfg)))}
    if cfg.write_timeseries:
        path = out / "timeseries.csv"
        _write_csv(path, SCENARIO_COLUMNS, rows)
        written["timeseries"] = str(path)
    if cfg.wigner_snapshot is not None:
        written["wigner"] = _write_wigner(cfg, sol, out)
    return written


def _write_wigner(cfg: ScenarioConfig, sol: GreensSolution, out: Path) -> list[str]:
    snap = cfg.wigner_snapshot
    extent = float(snap.get("extent", 6.0))
    points = int(snap.get("points", 81))
    axis = np.linspace(-extent, extent, points)
    m = initial_moments(cfg.state)
    t_out = sol.t_output
    paths = []
    for t_req in snap["times"]:
        i = int(np.argmin(np.abs(t_out - float(t_req))))
        cov = covariance_at(m, sol.u_output[i], sol.v[i])
        rows = [(x1, x2, wigner(cov, (x1, x2))) for x1 in axis for x2 in axis]
        path = out / f"wigner_t{t_out[i]:g}.csv"
        _write_csv(path, ["xi1", "xi2", "W"], rows)
        paths.append(str(path))
    return paths


# ---------------------------------------------------------------------------
# sweeps

def _resolve_workers(parallelism: int) -> int:
    n = parallelism if parallelism > 0 else (os.cpu_count() or 1)
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        n = min(n, max(int(cap), 1))
    return n


def _sweep_bath_cell(args):
    """Worker: solve one bath and evaluate every requested state on it."""
    (s, T_s, eta_s, omega_c, omega0, grid, states) = args
    try:
        bath = BathSpec.from_eta_ratio(eta_s, s=s, omega_c=omega_c,
                                       T_s=T_s, omega0=omega0)
        sol = solve_greens(bath, grid)
        coeffs = master_coefficients(sol)
        u_out = sol.u_output
        per_state = {}
        for alpha, r in states:
            m = initial_moments(StateSpec(alpha=alpha, r=r))
            c_bits = np.array([
                coherence(covariance_at(m, u_out[i], sol.v[i]),
                          mean_number(m, u_out[i], sol.v[i]))
                for i in range(len(u_out))
            ])
            per_state[(alpha, r)] = c_bits
        return {
            "status": "ok",
            "t": sol.t_output,
            "abs_u": np.abs(u_out),
            "v": sol.v,
            "gamma": coeffs.gamma,
            "C": per_state,
        }
    except GaussolveError as exc:
        return {"status": f"error:{exc}"}


def _sweep_cells(cfg: SweepConfig):
    states = tuple((a, r) for a in cfg.alpha for r in cfg.r)
    cells = []
    for s in cfg.s:
        for T_s in cfg.T_s:
            for eta_s in cfg.eta_over_eta_c:
                cells.append((s, T_s, eta_s, cfg.omega_c, cfg.omega0,
                              cfg.grid, states))
    return cells


def _run_cells(cells, parallelism: int):
    workers = _resolve_workers(parallelism)
    if workers <= 1 or len(cells) <= 1:
        return [_sweep_bath_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_bath_cell, cells))


def _resolved_sweep(cfg: SweepConfig) -> dict:
    return {
        "kind": "sweep",
        "axes": {
            "eta_over_eta_c": list(cfg.eta_over_eta_c),
            "T_s": list(cfg.T_s),
            "s": list(cfg.s),
            "alpha": list(cfg.alpha),
            "r": list(cfg.r),
        },
        "omega_c": cfg.omega_c,
        "omega0": cfg.omega0,
        "grid": dataclasses.asdict(cfg.grid),
        "parallelism": cfg.parallelism,
        "output_path": cfg.output_path,
    }


def run_sweep(cfg: SweepConfig, out_dir: str | Path | None = None) -> dict:
    """Execute the sweep; one long-format CSV ordered lexicographically."""
    out = Path(out_dir if out_dir is not None else cfg.output_path)
    cells = _sweep_cells(cfg)
    results = _run_cells(cells, cfg.parallelism)
    n_t = len(cfg.grid.output_times)
    rows = []
    for (s, T_s, eta_s, _, _, _, states), res in zip(cells, results):
        for alpha, r in states:
            if res["status"] != "ok":
                rows.extend((s, T_s, eta_s, alpha, r, t, np.nan, np.nan,
                             np.nan, np.nan, res["status"])
                            for t in cfg.grid.output_times)
                continue
            c_bits = res["C"][(alpha, r)]
            rows.extend((s, T_s, eta_s, alpha, r, res["t"][i], c_bits[i],
                         res["gamma"][i], res["abs_u"][i], res["v"][i], "ok")
                        for i in range(n_t))
    path = out / "sweep.csv"
    _write_csv(path, SWEEP_COLUMNS, rows)
    manifest = _write_manifest(out, _resolved_sweep(cfg))
    return {"sweep": str(path), "manifest": manifest}


def run_crossover(cfg: SweepConfig, out_dir: str | Path | None = None) -> dict:
    """Crossover maps over (eta_s, t) for one fixed state and bath family."""
    if len(cfg.eta_over_eta_c) < 3:
        raise ConfigError("crossover needs at least 3 eta_over_eta_c values")
    for name in ("s", "T_s", "alpha", "r"):
        if len(getattr(cfg, name)) != 1:
            raise ConfigError(f"crossover sweeps vary eta_over_eta_c only; "
                              f"axis {name} must have exactly one value")
    out = Path(out_dir if out_dir is not None else cfg.output_path)
    cells = _sweep_cells(cfg)
    results = _run_cells(cells, cfg.parallelism)
    times = cfg.grid.output_times
    eta_s = np.array(cfg.eta_over_eta_c)
    state_key = (cfg.alpha[0], cfg.r[0])
    c_table = np.full((len(eta_s), len(times)), np.nan)
    g_table = np.full((len(eta_s), len(times)), np.nan)
    gt_table = np.full((len(eta_s), len(times)), np.nan)
    for i, res in enumerate(results):
        if res["status"] != "ok":
            continue
        c_table[i] = res["C"][state_key]
        g_table[i] = res["gamma"]
        gt_table[i] = _gamma_tilde_from_cell(cells[i], res)
    cmap = crossover_map(eta_s, times, c_table, g_table)
    written = {}
    grids = {
        "dC_deta.csv": cmap.dC_deta,
        "dgamma_dt.csv": cmap.dgamma_dt,
        "gamma.csv": g_table,
        "gamma_tilde.csv": gt_table,
        "coherence.csv": c_table,
    }
    header = ["eta_s"] + [ _fmt(t) for t in times ]
    for name, table in grids.items():
        rows = [(eta_s[i], *table[i]) for i in range(len(eta_s))]
        path = out / name
        _write_csv(path, header, rows)
        written[name] = str(path)
    bpath = out / "boundary.csv"
    _write_csv(bpath, ["eta_s", "t", "direction"], cmap.boundary)
    written["boundary.csv"] = str(bpath)
    resolved = _resolved_sweep(cfg)
    resolved["kind"] = "crossover"
    written["manifest"] = str(_write_manifest(out, resolved))
    return written


def _gamma_tilde_from_cell(cell, res):
    # gamma_tilde = v_dot + 2 v gamma on the output grid (v_dot by differences)
    from .greens import v_dot
    grid: TimeGrid = cell[5]
    vd = v_dot(res["v"], grid.h_out)
    return vd + 2.0 * res["v"] * res["gamma"]


# ---------------------------------------------------------------------------
# oracle check

def run_oracle_check(cfg: ScenarioConfig, out_dir: str | Path | None = None):
    """Compare the Volterra (u, v) against the finite-mode reference.

    Returns (report dict, passed flag); the report is also written as JSON.
    """
    out = Path(out_dir if out_dir is not None else cfg.output_path)
    params: OracleCheckParams = cfg.oracle
    sol = solve_greens(cfg.bath, cfg.grid)
    t_out = sol.t_output
    omega_max = params.omega_max or 10.0 * cfg.bath.omega_c

    build = discretize if params.placement == "midpoint" else discretize_gl
    db = build(cfg.bath, n_modes=params.n_modes, omega_max=omega_max)
    u_ref = oracle_u(db, t_out)
    v_ref = oracle_v(db, t_out, cfg.bath.T_s)
    db2 = build(cfg.bath, n_modes=2 * params.n_modes, omega_max=omega_max)
    u_ref2 = oracle_u(db2, t_out)

    u_err = float(np.max(np.abs(sol.u_output - u_ref)))
    v_scale = float(np.max(v_ref))
    if v_scale > 0:
        v_err = float(np.max(np.abs(sol.v - v_ref)) / v_scale)
    else:
        v_err = float(np.max(np.abs(sol.v - v_ref)))
    n_delta = float(np.max(np.abs(u_ref2 - u_ref)))
    passed = u_err <= params.u_threshold and v_err <= params.v_threshold
    report = {
        "u_max_abs_error": u_err,
        "v_max_rel_error": v_err,
        "oracle_n_convergence_delta": n_delta,
        "n_modes": params.n_modes,
        "omega_max": omega_max,
        "u_threshold": params.u_threshold,
        "v_threshold": params.v_threshold,
        "passed": passed,
    }
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "oracle_report.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    _write_manifest(out, _resolved_scenario(cfg))
    return report, passed
