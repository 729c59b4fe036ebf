"""Regenerate the committed figure-recipe configs in configs/.

Each config reproduces one figure panel with omega_c = 5 omega0. Panels a-d
of the timeseries families (figs 1-6) are the four (coupling, temperature)
corners; the surface families (figs 7-9) fix the state per panel and sweep
the coupling axis; the crossover families (figs 10-12) emit the coefficient
maps. The "figure" and "plot" keys are annotations for the plotting CLI and
for humans; the solver ignores them.
"""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "configs"

ETA_AXIS = {"start": 0.1, "stop": 3.0, "count": 30}
CORNERS = [("a", 0.01, 1.0), ("b", 0.01, 20.0), ("c", 2.0, 1.0), ("d", 2.0, 20.0)]
SURFACE_STATES = [("a", 0.1, 0.1), ("b", 0.1, 2.0), ("c", 4.0, 0.1), ("d", 4.0, 2.0)]


def write(name, cfg):
    cfg["output_path"] = f"out/{name}"
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(cfg, indent=2) + "\n")


def timeseries_family(fig, s, param, values):
    for panel, eta_s, T_s in CORNERS:
        axes = {"eta_over_eta_c": eta_s, "T_s": T_s, "s": s,
                "alpha": 0.0, "r": 0.0}
        axes[param] = values
        write(f"fig{fig}{panel}", {
            "figure": f"{fig}{panel}",
            "command": "sweep",
            "axes": axes,
            "plot": {"kind": "timeseries", "input": "sweep.csv",
                     "y": "C_bits", "series": param},
        })


def surface_family(fig, s):
    for panel, alpha, r in SURFACE_STATES:
        write(f"fig{fig}{panel}", {
            "figure": f"{fig}{panel}",
            "command": "sweep",
            "axes": {"eta_over_eta_c": ETA_AXIS, "T_s": [1.0, 20.0],
                     "s": s, "alpha": alpha, "r": r},
            "plot": {"kind": "surface3d", "input": "sweep.csv", "z": "C_bits",
                     "filter_one_of": {"T_s": [1.0, 20.0]}},
        })


def crossover_panel(name, s, T_s, kind, source):
    write(name, {
        "figure": name.removeprefix("fig"),
        "command": "crossover",
        "axes": {"eta_over_eta_c": ETA_AXIS, "T_s": T_s, "s": s,
                 "alpha": 4.0, "r": 0.1},
        "plot": {"kind": kind, "input": source},
    })


def main():
    OUT.mkdir(exist_ok=True)
    timeseries_family(1, 1.0, "alpha", [1.0, 2.0, 3.0, 4.0])
    timeseries_family(2, 0.5, "alpha", [1.0, 2.0, 3.0, 4.0])
    timeseries_family(3, 3.0, "alpha", [1.0, 2.0, 3.0, 4.0])
    timeseries_family(4, 1.0, "r", [0.5, 1.0, 1.5, 2.0])
    timeseries_family(5, 0.5, "r", [0.5, 1.0, 1.5, 2.0])
    timeseries_family(6, 3.0, "r", [0.5, 1.0, 1.5, 2.0])
    surface_family(7, 1.0)
    surface_family(8, 0.5)
    surface_family(9, 3.0)
    # coherence sensitivity maps over (eta_s, t)
    crossover_panel("fig10a", 1.0, 1.0, "surface3d", "dC_deta.csv")
    crossover_panel("fig10b", 0.5, 1.0, "surface3d", "dC_deta.csv")
    crossover_panel("fig10c", 1.0, 20.0, "surface3d", "dC_deta.csv")
    crossover_panel("fig10d", 0.5, 20.0, "surface3d", "dC_deta.csv")
    # dissipation-rate maps; gamma depends on neither state nor temperature
    crossover_panel("fig11a", 1.0, 1.0, "contour", "gamma.csv")
    crossover_panel("fig11b", 0.5, 1.0, "contour", "gamma.csv")
    crossover_panel("fig11c", 1.0, 1.0, "contour", "dgamma_dt.csv")
    crossover_panel("fig11d", 0.5, 1.0, "contour", "dgamma_dt.csv")
    # fluctuation-rate maps
    crossover_panel("fig12a", 1.0, 1.0, "contour", "gamma_tilde.csv")
    crossover_panel("fig12b", 0.5, 1.0, "contour", "gamma_tilde.csv")
    crossover_panel("fig12c", 1.0, 20.0, "contour", "gamma_tilde.csv")
    crossover_panel("fig12d", 0.5, 20.0, "contour", "gamma_tilde.csv")
    print(f"wrote {len(list(OUT.glob('fig*.json')))} configs to {OUT}")


if __name__ == "__main__":
    main()
