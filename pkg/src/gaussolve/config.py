"""Declarative run configurations (JSON) for the CLI.

One scenario or one sweep per file; CLI flags override individual keys with
dot-path syntax (e.g. ``--set bath.T_s=20``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bath import BathSpec
from .errors import ConfigError
from .gaussian import StateSpec
from .greens import TimeGrid

__all__ = [
    "ScenarioConfig",
    "SweepConfig",
    "OracleCheckParams",
    "load_config",
    "apply_overrides",
]

DEFAULT_GRID = {"t_max": 20.0, "n_steps": 4000, "decimation": 20}
DEFAULT_SWEEP_CELL_CAP = 10_000
AXIS_NAMES = ("eta_over_eta_c", "T_s", "s", "alpha", "r")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigError(msg)


def _bath_from_dict(d: dict) -> BathSpec:
    _require(isinstance(d, dict), "bath section must be an object")
    has_eta = "eta" in d
    has_ratio = "eta_over_eta_c" in d
    _require(has_eta != has_ratio,
             "bath must specify exactly one of eta / eta_over_eta_c")
    try:
        common = dict(
            s=float(d.get("s", 1.0)),
            omega_c=float(d.get("omega_c", 5.0)),
            T_s=float(d.get("T_s", 0.0)),
            omega0=float(d.get("omega0", 1.0)),
        )
        if has_eta:
            return BathSpec(eta=float(d["eta"]), **common)
        return BathSpec.from_eta_ratio(float(d["eta_over_eta_c"]), **common)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid bath parameters: {exc}") from exc


def _state_from_dict(d: dict) -> StateSpec:
    _require(isinstance(d, dict), "state section must be an object")
    alpha = d.get("alpha", 0.0)
    if isinstance(alpha, (list, tuple)):
        _require(len(alpha) == 2, "alpha as a pair must be [re, im]")
        alpha = complex(alpha[0], alpha[1])
    try:
        return StateSpec(alpha=complex(alpha), r=float(d.get("r", 0.0)))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid state parameters: {exc}") from exc


def _grid_from_dict(d: dict | None) -> TimeGrid:
    merged = dict(DEFAULT_GRID, **(d or {}))
    try:
        return TimeGrid(t_max=float(merged["t_max"]),
                        n_steps=int(merged["n_steps"]),
                        decimation=int(merged["decimation"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid grid parameters: {exc}") from exc


@dataclass(frozen=True)
class OracleCheckParams:
    n_modes: int = 600
    omega_max: float | None = None  # defaults to 10 omega_c
    u_threshold: float = 5e-3
    v_threshold: float = 5e-3
    placement: str = "gl-panels"  # or "midpoint"

    @classmethod
    def from_dict(cls, d: dict | None) -> "OracleCheckParams":
        d = d or {}
        placement = str(d.get("placement", "gl-panels"))
        _require(placement in ("gl-panels", "midpoint"),
                 f"oracle placement must be gl-panels or midpoint, got {placement!r}")
        try:
            return cls(
                n_modes=int(d.get("n_modes", 600)),
                omega_max=None if d.get("omega_max") is None else float(d["omega_max"]),
                u_threshold=float(d.get("u_threshold", 5e-3)),
                v_threshold=float(d.get("v_threshold", 5e-3)),
                placement=placement,
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"invalid oracle parameters: {exc}") from exc


@dataclass(frozen=True)
class ScenarioConfig:
    bath: BathSpec
    state: StateSpec
    grid: TimeGrid
    output_path: str
    write_timeseries: bool = True
    wigner_snapshot: dict | None = None  # {"times": [...], "extent": float, "points": int}
    oracle: OracleCheckParams = field(default_factory=OracleCheckParams)
    raw: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_dict(cls, d: dict) -> "ScenarioConfig":
        _require(isinstance(d, dict), "config must be a JSON object")
        _require("bath" in d, "scenario config needs a bath section")
        outputs = d.get("outputs", {})
        _require(isinstance(outputs, dict), "outputs must be an object")
        snapshot = outputs.get("wigner_snapshot")
        if snapshot is not None:
            _require(isinstance(snapshot, dict) and "times" in snapshot,
                     "wigner_snapshot needs a times list")
        return cls(
            bath=_bath_from_dict(d["bath"]),
            state=_state_from_dict(d.get("state", {})),
            grid=_grid_from_dict(d.get("grid")),
            output_path=str(d.get("output_path", "out")),
            write_timeseries=bool(outputs.get("timeseries", True)),
            wigner_snapshot=snapshot,
            oracle=OracleCheckParams.from_dict(d.get("oracle")),
            raw=d,
        )


def _axis_values(spec, name: str) -> tuple[float, ...]:
    if isinstance(spec, dict):
        try:
            start, stop, count = float(spec["start"]), float(spec["stop"]), int(spec["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"axis {name}: range needs start/stop/count: {exc}") from exc
        _require(count >= 1, f"axis {name}: count must be >= 1")
        _require(count == 1 or stop > start, f"axis {name}: range must be increasing")
        return tuple(np.linspace(start, stop, count).tolist())
    if isinstance(spec, (int, float)):
        return (float(spec),)
    if isinstance(spec, list):
        _require(len(spec) >= 1, f"axis {name}: empty list")
        vals = []
        for x in spec:
            try:
                vals.append(float(x))
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"axis {name}: non-numeric entry {x!r}") from exc
        _require(all(b > a for a, b in zip(vals, vals[1:])),
                 f"axis {name}: values must be strictly increasing")
        return tuple(vals)
    raise ConfigError(f"axis {name}: expected number, list, or start/stop/count range")


@dataclass(frozen=True)
class SweepConfig:
    eta_over_eta_c: tuple
    T_s: tuple
    s: tuple
    alpha: tuple
    r: tuple
    omega_c: float
    omega0: float
    grid: TimeGrid
    output_path: str
    parallelism: int = 0  # 0 = auto
    cell_cap: int = DEFAULT_SWEEP_CELL_CAP
    raw: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        _require(isinstance(d, dict), "config must be a JSON object")
        axes = d.get("axes")
        _require(isinstance(axes, dict), "sweep config needs an axes section")
        missing = [n for n in AXIS_NAMES if n not in axes]
        _require(not missing, f"sweep axes missing: {', '.join(missing)}")
        values = {n: _axis_values(axes[n], n) for n in AXIS_NAMES}
        cap = int(d.get("cell_cap", DEFAULT_SWEEP_CELL_CAP))
        total = 1
        for n in AXIS_NAMES:
            total *= len(values[n])
        _require(total <= cap, f"sweep has {total} cells, exceeding the cap of {cap}")
        cfg = cls(
            eta_over_eta_c=values["eta_over_eta_c"],
            T_s=values["T_s"],
            s=values["s"],
            alpha=values["alpha"],
            r=values["r"],
            omega_c=float(d.get("omega_c", 5.0)),
            omega0=float(d.get("omega0", 1.0)),
            grid=_grid_from_dict(d.get("grid")),
            output_path=str(d.get("output_path", "out")),
            parallelism=int(d.get("parallelism", 0)),
            cell_cap=cap,
            raw=d,
        )
        _require(cfg.parallelism >= 0, "parallelism must be >= 0")
        return cfg

    @property
    def n_cells(self) -> int:
        return (len(self.s) * len(self.T_s) * len(self.eta_over_eta_c)
                * len(self.alpha) * len(self.r))


def load_config(path: str | Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must contain a JSON object")
    return data


def apply_overrides(data: dict, overrides: list[str]) -> dict:
    """Apply ``--set dotted.path=value`` overrides; values parse as JSON literals."""
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} must have the form key.path=value")
        path, raw_value = item.split("=", 1)
        keys = [k for k in path.strip().split(".") if k]
        if not keys:
            raise ConfigError(f"override {item!r} has an empty key path")
        try:
            value = json.loads(raw_value)
        except json.JSONDecodeError:
            value = raw_value
        node = data
        for k in keys[:-1]:
            nxt = node.get(k)
            if not isinstance(nxt, dict):
                nxt = {}
                node[k] = nxt
            node = nxt
        node[keys[-1]] = value
    return data
