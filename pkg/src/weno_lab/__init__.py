"""Fifth-order finite-difference WENO schemes for hyperbolic conservation laws.

Reconstruction kernels for WENO-JS, -M, -Z, -NS, -P and MWENO-P, Lax-Friedrichs
flux splitting, SSP Runge-Kutta stepping, characteristic-wise Euler solvers in
one and two dimensions, and the benchmark catalog used to compare them.
"""

from .errors import (CacheCorruption, ConfigError, DegenerateInput, NonConvergence,
                     NumericalFailure, WenoLabError)
from .harness import (ConvergenceRow, RunConfig, RunResult, compare_schemes, convergence_table,
                      error_norms, run_simulation)
from .kernels import VARIANTS, SchemeParams, nonlinear_weights, reconstruct_minus, reconstruct_plus
from .problems import ProblemSpec, exact_solution, list_problems, make_problem
from .riemann import exact_riemann

__version__ = "0.1.0"

__all__ = [
    "CacheCorruption", "ConfigError", "DegenerateInput", "NonConvergence", "NumericalFailure",
    "WenoLabError", "ConvergenceRow", "RunConfig", "RunResult", "compare_schemes",
    "convergence_table", "error_norms", "run_simulation", "VARIANTS", "SchemeParams",
    "nonlinear_weights", "reconstruct_minus", "reconstruct_plus", "ProblemSpec",
    "exact_solution", "list_problems", "make_problem", "exact_riemann",
]
