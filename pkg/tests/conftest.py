"""Shared fixtures: cached Volterra solves reused across test modules.

Solving one bath at the default grid takes about a second, so every test
that needs a trajectory goes through the session-scoped cache keyed by
(s, eta_over_eta_c, T_s).
"""
import pytest

from gaussolve import BathSpec, TimeGrid, solve_greens

OMEGA_C = 5.0


@pytest.fixture(scope="session")
def default_grid():
    return TimeGrid.default()


@pytest.fixture(scope="session")
def solve_cache(default_grid):
    cache = {}

    def get(s, eta_ratio, T_s):
        key = (s, eta_ratio, T_s)
        if key not in cache:
            bath = BathSpec.from_eta_ratio(eta_ratio, s=s, omega_c=OMEGA_C, T_s=T_s)
            cache[key] = solve_greens(bath, default_grid)
        return cache[key]

    return get
