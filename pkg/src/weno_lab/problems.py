"""Benchmark catalog: initial data, boundary conditions and exact solutions."""

import json
import math
from dataclasses import dataclass

import numpy as np

from .boundary import PERIODIC, REFLECTIVE, TRANSMISSIVE, BoundaryCondition
from .errors import ConfigError, NonConvergence
from .gas import GasModel, prim_to_cons
from .grid import Grid1D, Grid2D
from .riemann import exact_riemann, star_state
from .scalar import FluxModel

POLICIES = ("analytic", "exact_riemann", "fine_grid_reference", "none")


@dataclass(frozen=True)
class ProblemSpec:
    """One named benchmark.

    The initial condition is looked up by ``name``, so a spec serializes to
    plain JSON and back.  ``riemann`` holds ``(left, right, x0)`` primitive
    data for shock-tube problems.
    """

    name: str
    ndim: int
    bounds: tuple
    model: str  # "linear_advection" | "burgers" | "euler"
    bcs: dict
    t_end: float
    n: object  # int, or (nx, ny)
    cfl: float = 0.5
    exact: str = "none"
    dt_mode: str = "cfl"
    integrator: str = "rk3"
    speed: float = 1.0
    gamma: float = 1.4
    riemann: tuple | None = None
    source: str | None = None
    reference_n: int | None = None
    description: str = ""

    def __post_init__(self):
        if not self.t_end > 0.0:
            raise ConfigError(f"{self.name}: t_end must be positive")
        if self.exact not in POLICIES:
            raise ConfigError(f"{self.name}: unknown exact-solution policy {self.exact!r}")
        if self.exact == "exact_riemann" and (self.model != "euler" or self.ndim != 1 or self.riemann is None):
            raise ConfigError(f"{self.name}: exact_riemann policy needs 1D Euler Riemann data")
        if self.exact == "analytic" and self.model == "euler":
            raise ConfigError(f"{self.name}: analytic policy is for scalar models")

    @property
    def is_euler(self):
        return self.model == "euler"

    def flux_model(self):
        return FluxModel("burgers" if self.model == "burgers" else "linear_advection", self.speed)

    def gas(self):
        return GasModel(self.gamma)

    def make_grid(self, n=None):
        n = self.n if n is None else n
        if self.ndim == 1:
            return Grid1D(int(n), *self.bounds)
        nx, ny = (n, n) if np.isscalar(n) else n
        return Grid2D(int(nx), int(ny), *self.bounds)

    def initial_condition(self, *coords):
        """Initial data at the given coordinates (conservative for Euler)."""
        return _IC[self.name](self, *coords)

    def boundary_data(self, *coords, t=0.0):
        """Prescribed state at time ``t`` for ``far_field`` boundaries (the initial data otherwise)."""
        if t > 0.0 and self.name in _FAR_FIELD:
            return _FAR_FIELD[self.name](self, *coords, t)
        return self.initial_condition(*coords)

    def to_dict(self):
        d = dict(self.__dict__)
        d["bcs"] = {k: v.to_dict() for k, v in self.bcs.items()}
        d["bounds"] = list(self.bounds)
        if isinstance(self.n, tuple):
            d["n"] = list(self.n)
        if self.riemann is not None:
            d["riemann"] = [list(self.riemann[0]), list(self.riemann[1]), self.riemann[2]]
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["bcs"] = {k: BoundaryCondition.from_dict(v) for k, v in d["bcs"].items()}
        d["bounds"] = tuple(d["bounds"])
        if isinstance(d["n"], list):
            d["n"] = tuple(d["n"])
        if d.get("riemann") is not None:
            wl, wr, x0 = d["riemann"]
            d["riemann"] = (tuple(wl), tuple(wr), x0)
        return cls(**d)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


# --- initial conditions ----------------------------------------------------

def _sin(spec, x):
    return np.sin(np.pi * x)


def _sin_critical(spec, x):
    return np.sin(np.pi * x - np.sin(np.pi * x) / np.pi)


def _sin_cubed(spec, x):
    return np.sin(np.pi * x) ** 3


def _piecewise_sine(spec, x):
    u = -np.sin(np.pi * x) - 0.5 * x ** 3
    return np.where(x >= 0.0, u + 1.0, u)


def _square_wave(spec, x):
    return np.where((x >= -0.5) & (x < 0.5), 1.0, 0.0)


def _burgers_sin(spec, x):
    return -np.sin(np.pi * x)


def _burgers_shifted(spec, x):
    return 0.5 + np.sin(np.pi * x)


# derivatives of the Burgers initial data, for the characteristic solve
_DIC = {
    "burgers_sin": lambda x: -np.pi * np.cos(np.pi * x),
    "burgers_shifted_sin": lambda x: np.pi * np.cos(np.pi * x),
}


def _riemann_ic(spec, x):
    wl, wr, x0 = spec.riemann
    W = np.where(x < x0, np.array(wl)[:, None], np.array(wr)[:, None])
    return prim_to_cons(W, spec.gamma)


def _shock_entropy(spec, x):
    left = np.array([3.857143, 2.629369, 10.33333])
    W = np.where(x < -4.0, left[:, None],
                 np.array([1.0 + 0.2 * np.sin(5.0 * x), np.zeros_like(x), np.ones_like(x)]))
    return prim_to_cons(W, spec.gamma)


RIEMANN2D_STATES = {
    "ne": (1.5, 0.0, 0.0, 1.5),
    "nw": (0.5323, 1.206, 0.0, 0.3),
    "sw": (0.138, 1.206, 1.206, 0.029),
    "se": (0.5323, 0.0, 1.206, 0.3),
}


def _riemann2d(spec, X, Y):
    east = X >= 0.8
    north = Y >= 0.8
    W = np.empty((4,) + X.shape)
    for key, mask in (("ne", east & north), ("nw", ~east & north),
                      ("sw", ~east & ~north), ("se", east & ~north)):
        W[:, mask] = np.array(RIEMANN2D_STATES[key])[:, None]
    return prim_to_cons(W, spec.gamma)


def _edge_riemann(lo, hi, s, t, normal, gamma):
    """Exact 1D solution across an edge: ``lo`` below/left of ``s = 0``, tangential velocity advected."""
    tang = 3 - normal
    WL = (lo[0], lo[normal], lo[3])
    WR = (hi[0], hi[normal], hi[3])
    rho, un, p = exact_riemann(WL, WR, s / t, gamma)
    _, us = star_state(WL, WR, gamma)
    W = np.empty((4,) + np.shape(s))
    W[0], W[normal], W[3] = rho, un, p
    W[tang] = np.where(s / t <= us, lo[tang], hi[tang])
    return W


def _riemann2d_far_field(spec, X, Y, t):
    # Away from the quadrant corner each edge only sees the 1D Riemann
    # problem between its two adjacent quadrants.
    st = {k: np.array(v) for k, v in RIEMANN2D_STATES.items()}
    g = spec.gamma
    W = np.empty((4,) + X.shape)
    sides = (
        (Y < 0.0, st["sw"], st["se"], X - 0.8, 1),
        (Y > 1.0, st["nw"], st["ne"], X - 0.8, 1),
        ((X < 0.0) & (Y >= 0.0) & (Y <= 1.0), st["sw"], st["nw"], Y - 0.8, 2),
        ((X > 1.0) & (Y >= 0.0) & (Y <= 1.0), st["se"], st["ne"], Y - 0.8, 2),
    )
    done = np.zeros(X.shape, dtype=bool)
    for mask, lo, hi, s, normal in sides:
        if np.any(mask):
            W[:, mask] = _edge_riemann(lo, hi, s[mask], t, normal, g)
            done |= mask
    if not np.all(done):
        raise ConfigError("riemann2d far-field data requested inside the domain")
    return prim_to_cons(W, g)


def _rayleigh_taylor(spec, X, Y):
    g = spec.gamma
    lower = Y < 0.5
    rho = np.where(lower, 2.0, 1.0)
    p = np.where(lower, 2.0 * Y + 1.0, Y + 1.5)
    a = np.sqrt(g * p / rho)
    v = -0.025 * a * np.cos(8.0 * np.pi * X)
    return prim_to_cons(np.array([rho, np.zeros_like(X), v, p]), g)


def mach_shock_states(mach=10.0, rho1=1.4, p1=1.0, gamma=1.4, angle_deg=60.0):
    """Pre- and postshock primitive states of a shock moving into gas at rest.

    The shock line makes ``angle_deg`` with the x-axis and moves along its
    normal ``(sin a, -cos a)`` at ``mach`` times the upstream sound speed.
    """
    a1 = math.sqrt(gamma * p1 / rho1)
    m2 = mach * mach
    rho2 = rho1 * (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0)
    p2 = p1 * (2.0 * gamma * m2 - (gamma - 1.0)) / (gamma + 1.0)
    w = mach * a1 * (1.0 - rho1 / rho2)
    ang = math.radians(angle_deg)
    post = (rho2, w * math.sin(ang), -w * math.cos(ang), p2)
    pre = (rho1, 0.0, 0.0, p1)
    return pre, post


DMR_X0 = 1.0 / 6.0


def _double_mach(spec, X, Y):
    pre, post = mach_shock_states(gamma=spec.gamma)
    behind = X < DMR_X0 + Y / math.tan(math.pi / 3.0)
    W = np.where(behind[None], np.array(post).reshape(4, 1, 1), np.array(pre).reshape(4, 1, 1))
    return prim_to_cons(W, spec.gamma)


_FAR_FIELD = {"riemann2d": _riemann2d_far_field}

_IC = {
    "advection_sin": _sin,
    "advection_sin_critical": _sin_critical,
    "advection_sin_cubed": _sin_cubed,
    "advection_piecewise_sine": _piecewise_sine,
    "advection_square_wave": _square_wave,
    "burgers_sin": _burgers_sin,
    "burgers_shifted_sin": _burgers_shifted,
    "sod_modified": _riemann_ic,
    "lax": _riemann_ic,
    "shock_entropy": _shock_entropy,
    "riemann2d": _riemann2d,
    "rayleigh_taylor": _rayleigh_taylor,
    "double_mach": _double_mach,
}


def _periodic_1d():
    return {"left": PERIODIC, "right": PERIODIC}


def _transmissive_1d():
    return {"left": TRANSMISSIVE, "right": TRANSMISSIVE}


def _catalog():
    adv = dict(ndim=1, bounds=(-1.0, 1.0), model="linear_advection", bcs=_periodic_1d(),
               integrator="rk4")
    smooth = dict(adv, t_end=2.0, n=160, exact="analytic", dt_mode="convergence")
    burg = dict(ndim=1, bounds=(-1.0, 1.0), model="burgers", bcs=_periodic_1d(), n=200,
                exact="fine_grid_reference", reference_n=2000, integrator="rk4")
    tube = dict(ndim=1, model="euler", bcs=_transmissive_1d(), n=200)
    pre, post = mach_shock_states()
    entries = [
        ProblemSpec("advection_sin", description="u_t + u_x = 0, u0 = sin(pi x)", **smooth),
        ProblemSpec("advection_sin_critical",
                    description="u0 = sin(pi x - sin(pi x)/pi): f' = 0 with f'' != 0", **smooth),
        ProblemSpec("advection_sin_cubed",
                    description="u0 = sin(pi x)^3: f' = f'' = 0 with f''' != 0", **smooth),
        ProblemSpec("advection_piecewise_sine", t_end=8.0, n=200, exact="analytic",
                    description="piecewise sine with a jump at x = 0", **adv),
        ProblemSpec("advection_square_wave", t_end=10.0, n=200, exact="analytic",
                    description="unit square wave on [-0.5, 0.5)", **adv),
        ProblemSpec("burgers_sin", t_end=1.5, description="Burgers, u0 = -sin(pi x)", **burg),
        ProblemSpec("burgers_shifted_sin", t_end=0.55, description="Burgers, u0 = 1/2 + sin(pi x)",
                    **burg),
        ProblemSpec("sod_modified", bounds=(0.0, 1.0), t_end=0.2, exact="exact_riemann",
                    riemann=((1.0, 0.75, 1.0), (0.125, 0.0, 0.1), 0.5), reference_n=2000,
                    description="modified Sod shock tube (sonic rarefaction)", **tube),
        ProblemSpec("lax", bounds=(-5.0, 5.0), t_end=1.3, exact="exact_riemann",
                    riemann=((0.445, 0.698, 3.528), (0.5, 0.0, 0.571), 0.0), reference_n=2000,
                    description="Lax shock tube", **tube),
        ProblemSpec("shock_entropy", bounds=(-5.0, 5.0), t_end=1.8, exact="fine_grid_reference",
                    reference_n=2000, description="Mach 3 shock / entropy wave interaction",
                    **tube),
        ProblemSpec("riemann2d", ndim=2, bounds=(0.0, 1.0, 0.0, 1.0), model="euler",
                    bcs={s: BoundaryCondition("far_field") for s in ("left", "right", "bottom", "top")},
                    t_end=0.8, n=(400, 400), description="four-shock 2D Riemann problem"),
        ProblemSpec("rayleigh_taylor", ndim=2, bounds=(0.0, 0.25, 0.0, 1.0), model="euler",
                    gamma=5.0 / 3.0, source="rt_gravity",
                    bcs={"left": REFLECTIVE, "right": REFLECTIVE,
                         "bottom": BoundaryCondition("dirichlet", (1.0, 0.0, 0.0, 1.0)),
                         "top": BoundaryCondition("dirichlet", (2.0, 0.0, 0.0, 2.5))},
                    t_end=1.95, n=(125, 500), description="Rayleigh-Taylor instability"),
        ProblemSpec("double_mach", ndim=2, bounds=(0.0, 4.0, 0.0, 1.0), model="euler",
                    bcs={"left": BoundaryCondition("dirichlet", post),
                         "right": TRANSMISSIVE,
                         "bottom": BoundaryCondition("dmr_special", post, pre, 10.0, DMR_X0),
                         "top": BoundaryCondition("dmr_special", post, pre, 10.0, DMR_X0)},
                    t_end=0.2, n=(1600, 400), description="double Mach reflection, Mach 10"),
    ]
    return {p.name: p for p in entries}


CATALOG = _catalog()


def list_problems():
    return sorted(CATALOG)


def make_problem(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise ConfigError(f"unknown problem {name!r}; known: {', '.join(list_problems())}") from None


def _wrap(x, lo, hi):
    return lo + np.mod(x - lo, hi - lo)


def burgers_breaking_time(spec, samples=20001):
    lo, hi = spec.bounds
    xs = np.linspace(lo, hi, samples)
    slope = np.min(_DIC[spec.name](xs))
    return math.inf if slope >= 0.0 else -1.0 / slope


def exact_solution(spec, x, t, tol=1e-13, maxiter=100):
    """Exact solution of a scalar problem at points ``x`` and time ``t``.

    Advection transports the initial profile with periodic wrap.  Burgers is
    solved along characteristics ``u = u0(x - u t)`` by Newton iteration and is
    only defined before shocks form.
    """
    if spec.exact != "analytic" and spec.model != "burgers":
        raise ConfigError(f"{spec.name} has no analytic solution")
    x = np.asarray(x, dtype=float)
    lo, hi = spec.bounds
    if spec.model == "linear_advection":
        return spec.initial_condition(_wrap(x - spec.speed * t, lo, hi))
    if spec.model != "burgers":
        raise ConfigError(f"{spec.name} has no analytic solution")
    if t == 0.0:
        return spec.initial_condition(x)
    if t >= burgers_breaking_time(spec):
        raise NonConvergence(f"{spec.name}: characteristics cross before t={t}")
    u0, du0 = _IC[spec.name], _DIC[spec.name]
    u = spec.initial_condition(x)
    for _ in range(maxiter):
        xi = _wrap(x - u * t, lo, hi)
        F = u - u0(spec, xi)
        dF = 1.0 + t * du0(xi)
        step = F / dF
        u = u - step
        if np.max(np.abs(step)) <= tol * max(1.0, float(np.max(np.abs(u)))):
            return u
    raise NonConvergence(f"{spec.name}: characteristic Newton solve did not converge")


def riemann_exact_profile(spec, x, t):
    """Exact primitive ``(rho, u, p)`` of a shock-tube problem."""
    wl, wr, x0 = spec.riemann
    if t == 0.0:
        return np.where(np.asarray(x) < x0, np.array(wl)[:, None], np.array(wr)[:, None])
    return exact_riemann(wl, wr, (np.asarray(x) - x0) / t, spec.gamma)
