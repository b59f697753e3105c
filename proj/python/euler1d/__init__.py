"""1D isentropic Euler solver with reflecting walls and a time-periodic outer force.

The heavy lifting lives in the compiled extension; this package re-exports the
public surface.
"""

from ._core import (  # noqa: F401
    ConfigError,
    DivergenceError,
    GasParams,
    GasState,
    GridSpec,
    NumericalError,
    ReconstructionError,
    RiemannPair,
    SchemeConstants,
    build_grid,
    c_gamma,
    char_speeds,
    decay_bound,
    decay_diagnostic,
    derive_constants,
    entropy_production,
    eta_star,
    find_periodic_orbit,
    g_sources,
    invariants_of,
    pressure,
    q_star,
    run_period,
    sample_riemann,
    shock_speed,
    solve_riemann,
    state_of,
    v_weight,
    zeta,
)

__all__ = [
    "ConfigError",
    "DivergenceError",
    "GasParams",
    "GasState",
    "GridSpec",
    "NumericalError",
    "ReconstructionError",
    "RiemannPair",
    "SchemeConstants",
    "build_grid",
    "c_gamma",
    "char_speeds",
    "decay_bound",
    "decay_diagnostic",
    "derive_constants",
    "entropy_production",
    "eta_star",
    "find_periodic_orbit",
    "g_sources",
    "invariants_of",
    "pressure",
    "q_star",
    "run_period",
    "sample_riemann",
    "shock_speed",
    "solve_riemann",
    "state_of",
    "v_weight",
    "zeta",
]
