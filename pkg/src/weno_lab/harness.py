"""Run orchestration, error norms, convergence tables and scheme comparisons."""

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, NumericalFailure, WenoLabError
from .euler import euler_rhs_1d, euler_rhs_2d, field_speeds, rt_gravity_source
from .gas import check_admissible, cons_to_prim, pressure, sound_speed
from .kernels import SchemeParams
from .problems import exact_solution, make_problem, riemann_exact_profile
from .scalar import max_wave_speed, scalar_rhs
from .timestepping import INTEGRATORS, DtPolicy, compute_dt

log = logging.getLogger(__name__)

SOURCES = {"rt_gravity": rt_gravity_source}


@dataclass(frozen=True)
class RunConfig:
    """One simulation.  ``None`` fields fall back to the problem defaults."""

    problem: str
    params: SchemeParams = field(default_factory=SchemeParams)
    n: object = None
    cfl: float | None = None
    dt_mode: str | None = None
    t_end: float | None = None
    integrator: str | None = None
    snapshot_times: tuple = ()
    max_steps: int = 10_000_000

    def resolve(self):
        spec = make_problem(self.problem)
        n = spec.n if self.n is None else self.n
        if spec.ndim == 2 and np.isscalar(n):
            n = (int(n), int(n))
        if spec.ndim == 1 and not np.isscalar(n):
            raise ConfigError(f"{spec.name} is one-dimensional; got grid {n}")
        integrator = self.integrator or spec.integrator
        if integrator not in INTEGRATORS:
            raise ConfigError(f"unknown integrator {integrator!r}")
        policy = DtPolicy(self.dt_mode or spec.dt_mode, spec.cfl if self.cfl is None else self.cfl)
        t_end = spec.t_end if self.t_end is None else float(self.t_end)
        if not t_end > 0.0:
            raise ConfigError("t_end must be positive")
        return spec, spec.make_grid(n), policy, integrator, t_end


@dataclass
class RunResult:
    spec: object
    grid: object
    params: SchemeParams
    t: float
    u: np.ndarray
    steps: int
    diagnostics: list
    snapshots: dict
    wall_time: float

    def primitive(self):
        """Final state: scalar ``u`` or primitive Euler variables."""
        if not self.spec.is_euler:
            return self.u
        return cons_to_prim(self.u, self.spec.gamma)


def make_rhs(spec, grid, params):
    """``L(u, t)`` for the problem's semi-discretization."""
    bcs = spec.bcs
    if not spec.is_euler:
        model = spec.flux_model()
        return lambda u, t: scalar_rhs(u, model, params, bcs, grid, t)
    gamma = spec.gamma
    ic = spec.boundary_data
    if spec.ndim == 1:
        return lambda U, t: euler_rhs_1d(U, bcs, params, grid, gamma, t, ic)
    src = SOURCES[spec.source] if spec.source else None
    return lambda U, t: euler_rhs_2d(U, bcs, params, grid, gamma, t, ic, src)


def initial_state(spec, grid):
    if spec.ndim == 1:
        return np.asarray(spec.initial_condition(grid.x), dtype=float)
    X, Y = grid.mesh()
    return spec.initial_condition(X, Y)


def stable_speed(spec, grid, u):
    """Effective ``alpha`` so that ``dt = cfl * dx / alpha`` respects the CFL limit."""
    if not spec.is_euler:
        return max_wave_speed(u, spec.flux_model())
    if spec.ndim == 1:
        return float(max(np.max(s) for s in field_speeds(u, spec.gamma)))
    rho = u[0]
    a = sound_speed(rho, pressure(u, spec.gamma), spec.gamma)
    ax = float(np.max(np.abs(u[1] / rho) + a))
    ay = float(np.max(np.abs(u[2] / rho) + a))
    return ax + ay * grid.dx / grid.dy


def _totals(spec, grid, u):
    vol = grid.dx if spec.ndim == 1 else grid.dx * grid.dy
    if u.ndim == 1:
        return (float(np.sum(u) * vol),)
    return tuple(float(np.sum(c) * vol) for c in u)


def _check_state(spec, u, step):
    if spec.is_euler:
        try:
            check_admissible(u[0], pressure(u, spec.gamma))
        except NumericalFailure as exc:
            raise NumericalFailure(exc.message, location=exc.location, step=step) from None
    elif not np.all(np.isfinite(u)):
        raise NumericalFailure("non-finite scalar state", location=int(np.argmax(~np.isfinite(u))),
                               step=step)


def run_simulation(cfg, diagnostics=True):
    """Integrate one configuration to its final time.

    Every step checks finiteness (and positivity of density and pressure for
    Euler); violations raise :class:`NumericalFailure` with step and cell.
    """
    spec, grid, policy, integrator, t_end = cfg.resolve()
    step_fn = INTEGRATORS[integrator]
    L = make_rhs(spec, grid, cfg.params)
    u = initial_state(spec, grid)
    _check_state(spec, u, 0)
    dx = grid.dx
    t = 0.0
    steps = 0
    diag = []
    snaps = {}
    pending = sorted(float(s) for s in cfg.snapshot_times if 0.0 < s < t_end)
    start = time.perf_counter()
    while t < t_end:
        if steps >= cfg.max_steps:
            raise NumericalFailure(f"step limit {cfg.max_steps} reached at t={t}", step=steps)
        alpha = stable_speed(spec, grid, u)
        target = pending[0] if pending else t_end
        dt = compute_dt(policy, dx, alpha, t, target)
        try:
            u = step_fn(L, u, dt, t)
        except NumericalFailure as exc:
            raise NumericalFailure(exc.message, location=exc.location, step=steps + 1) from None
        steps += 1
        t = target if t + dt >= target else t + dt
        _check_state(spec, u, steps)
        if diagnostics:
            diag.append({"step": steps, "t": t, "dt": dt, "alpha": alpha,
                         "totals": _totals(spec, grid, u)})
        if pending and t == pending[0]:
            snaps[pending.pop(0)] = u.copy()
    wall = time.perf_counter() - start
    log.info("%s %s N=%s: %d steps in %.2fs", spec.name, cfg.params.label,
             grid.n if spec.ndim == 1 else (grid.nx, grid.ny), steps, wall)
    return RunResult(spec, grid, cfg.params, t, u, steps, diag, snaps, wall)


def error_norms(numeric, exact, dx):
    """``(L1, Linf)`` of the pointwise error; L1 is ``dx * sum |e|``."""
    numeric = np.asarray(numeric, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if numeric.shape != exact.shape:
        raise ValueError(f"length mismatch: {numeric.shape} vs {exact.shape}")
    e = np.abs(numeric - exact)
    return float(dx * np.sum(e)), float(np.max(e)) if e.size else 0.0


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    l1: float
    linf: float
    l1_order: float | None = None
    linf_order: float | None = None


def observed_order(e_coarse, e_fine, ratio=2.0):
    return math.log(e_coarse / e_fine) / math.log(ratio)


def order_rows(ns, l1s, linfs):
    """Attach observed orders to an error sequence (grid ratio taken from ``ns``)."""
    rows = []
    for i, (n, a, b) in enumerate(zip(ns, l1s, linfs)):
        if i == 0:
            rows.append(ConvergenceRow(int(n), a, b))
            continue
        r = n / ns[i - 1]
        rows.append(ConvergenceRow(int(n), a, b, observed_order(l1s[i - 1], a, r),
                                   observed_order(linfs[i - 1], b, r)))
    return rows


def convergence_table(problem, params, ns, cfl=0.5, dt_mode="convergence", integrator="rk4",
                      t_end=None):
    """Errors against the analytic solution for each resolution in ``ns``."""
    spec = make_problem(problem)
    if spec.exact != "analytic":
        raise ConfigError(f"{problem} has no analytic solution for a convergence study")
    l1s, linfs = [], []
    for n in ns:
        res = run_simulation(RunConfig(problem, params, n=int(n), cfl=cfl, dt_mode=dt_mode,
                                       integrator=integrator, t_end=t_end), diagnostics=False)
        ex = exact_solution(spec, res.grid.x, res.t)
        l1, linf = error_norms(res.u, ex, res.grid.dx)
        l1s.append(l1)
        linfs.append(linf)
    return order_rows(list(ns), l1s, linfs)


def reference_field(spec, grid, t, reference_n=None, cache_dir=None):
    """Exact or reference values of the compared field (``u`` or density) on ``grid``."""
    if spec.exact == "analytic":
        return exact_solution(spec, grid.x, t)
    if spec.exact == "exact_riemann":
        return riemann_exact_profile(spec, grid.x, t)[0]
    if spec.exact == "fine_grid_reference":
        from .reference import reference_solution
        ref = reference_solution(spec, reference_n or spec.reference_n, t_end=t, cache_dir=cache_dir)
        return ref.sample(grid.x)[0]
    raise ConfigError(f"{spec.name} has no exact or reference solution")


@dataclass
class CompareRow:
    problem: str
    variant: str
    n: int
    l1: float | None
    linf: float | None
    status: str
    message: str = ""


def compare_schemes(problem, variants, n=None, cfl=None, t_end=None, reference_n=None,
                    cache_dir=None, param_overrides=None):
    """Run each variant on the same grid and measure its error.

    Failures are caught per variant and reported in the row's ``status``.
    Returns ``(rows, results)`` where ``results`` maps variant to
    :class:`RunResult` (or ``None`` on failure).
    """
    spec = make_problem(problem)
    rows, results = [], {}
    overrides = param_overrides or {}
    for v in variants:
        params = SchemeParams.for_variant(v, **overrides)
        try:
            res = run_simulation(RunConfig(problem, params, n=n, cfl=cfl, t_end=t_end),
                                 diagnostics=False)
        except WenoLabError as exc:
            rows.append(CompareRow(problem, params.variant, n or spec.n, None, None, "failed", str(exc)))
            results[params.variant] = None
            continue
        results[params.variant] = res
        if spec.ndim != 1 or spec.exact == "none":
            rows.append(CompareRow(problem, params.variant, res.grid.n if spec.ndim == 1 else n,
                                   None, None, "ok"))
            continue
        field_now = res.u if not spec.is_euler else res.u[0]
        ref = reference_field(spec, res.grid, res.t, reference_n, cache_dir)
        l1, linf = error_norms(field_now, ref, res.grid.dx)
        rows.append(CompareRow(problem, params.variant, res.grid.n, l1, linf, "ok"))
    return rows, results
