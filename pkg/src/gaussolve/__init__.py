"""Exact non-Markovian dynamics of a single bosonic Gaussian mode.

A single mode coupled to an Ohmic-family thermal reservoir: retarded
amplitude u(t) and thermal fluctuation v(t) from a Volterra solve, the
time-evolved covariance matrix, relative entropy of coherence, and the
time-local master-equation coefficients with crossover diagnostics.
"""

__version__ = "0.1.0"

from .bath import (BathSpec, QuadratureSpec, bose_occupation, critical_coupling,
                   memory_kernel, spectral_density, thermal_kernel)
from .errors import (ConfigError, GaussolveError, InstabilityError,
                     PhysicalityError, QuadratureError)
from .gaussian import (CovarianceMatrix, InitialMoments, StateSpec, coherence,
                       covariance_at, initial_moments, mean_number, wigner)
from .greens import GreensSolution, TimeGrid, compute_v, solve_greens, solve_u, v_dot
from .master import (CrossoverMap, MasterCoefficients, crossover_map,
                     detect_sign_changes, master_coefficients)
from .oracle import (DiscretizedBath, discretize, discretize_gl, oracle_u,
                     oracle_v, propagator_row)

__all__ = [
    "__version__",
    "BathSpec", "QuadratureSpec", "spectral_density", "critical_coupling",
    "memory_kernel", "thermal_kernel", "bose_occupation",
    "TimeGrid", "GreensSolution", "solve_u", "compute_v", "v_dot", "solve_greens",
    "StateSpec", "InitialMoments", "CovarianceMatrix", "initial_moments",
    "covariance_at", "mean_number", "coherence", "wigner",
    "MasterCoefficients", "CrossoverMap", "master_coefficients",
    "detect_sign_changes", "crossover_map",
    "DiscretizedBath", "discretize", "discretize_gl", "propagator_row",
    "oracle_u", "oracle_v",
    "GaussolveError", "ConfigError", "InstabilityError", "QuadratureError",
    "PhysicalityError",
]
