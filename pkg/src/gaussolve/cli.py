"""Command-line entry point.

Subcommands: solve, sweep, crossover, oracle-check.  Exit codes: 0 success,
2 configuration error, 3 numerical failure, 4 oracle-check failure.
"""
from __future__ import annotations

import argparse
import sys

from .config import (ScenarioConfig, SweepConfig, apply_overrides, load_config)
from .errors import ConfigError, GaussolveError
from .runner import run_crossover, run_oracle_check, run_scenario, run_sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_ORACLE = 4


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("config", help="JSON config file")
    p.add_argument("--set", dest="overrides", action="append", default=[],
                   metavar="KEY.PATH=VALUE", help="override a config key")
    p.add_argument("--out", default=None, help="output directory (overrides output_path)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussolve",
        description="Non-Markovian dynamics of a single bosonic Gaussian mode",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("solve", "sweep", "crossover", "oracle-check"):
        _add_common(sub.add_parser(name))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data = apply_overrides(load_config(args.config), args.overrides)
        if args.command == "solve":
            cfg = ScenarioConfig.from_dict(data)
            written = run_scenario(cfg, out_dir=args.out)
            for key, path in written.items():
                print(f"{key}: {path}")
        elif args.command == "sweep":
            cfg = SweepConfig.from_dict(data)
            written = run_sweep(cfg, out_dir=args.out)
            for key, path in written.items():
                print(f"{key}: {path}")
        elif args.command == "crossover":
            cfg = SweepConfig.from_dict(data)
            written = run_crossover(cfg, out_dir=args.out)
            for key, path in written.items():
                print(f"{key}: {path}")
        else:  # oracle-check
            cfg = ScenarioConfig.from_dict(data)
            report, passed = run_oracle_check(cfg, out_dir=args.out)
            print(f"u max abs error: {report['u_max_abs_error']:.3e} "
                  f"(threshold {report['u_threshold']:.1e})")
            print(f"v max rel error: {report['v_max_rel_error']:.3e} "
                  f"(threshold {report['v_threshold']:.1e})")
            print(f"oracle N-convergence delta: {report['oracle_n_convergence_delta']:.3e}")
            print("PASS" if passed else "FAIL")
            if not passed:
                return EXIT_ORACLE
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GaussolveError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
