"""Explicit Runge-Kutta steps and time-step policies.

Right-hand sides are callables ``L(u, t)``; states are anything supporting
``+`` and scalar ``*`` (floats or numpy arrays).
"""

from dataclasses import dataclass

from .errors import ConfigError, DegenerateInput


def rk3_step(L, u, dt, t=0.0):
    """Three-stage TVD Runge-Kutta (Shu-Osher form)."""
    u1 = u + dt * L(u, t)
    u2 = 0.75 * u + 0.25 * u1 + 0.25 * dt * L(u1, t + dt)
    return u / 3.0 + (2.0 / 3.0) * u2 + (2.0 / 3.0) * dt * L(u2, t + 0.5 * dt)


def rk4_step(L, u, dt, t=0.0):
    """Classical four-stage Runge-Kutta written in the staged form."""
    u1 = u + 0.5 * dt * L(u, t)
    u2 = u + 0.5 * dt * L(u1, t + 0.5 * dt)
    u3 = u + dt * L(u2, t + 0.5 * dt)
    return (-u + u1 + 2.0 * u2 + u3) / 3.0 + (dt / 6.0) * L(u3, t + dt)


INTEGRATORS = {"rk3": rk3_step, "rk4": rk4_step}


@dataclass(frozen=True)
class DtPolicy:
    """``cfl``: dt = cfl dx / alpha.  ``convergence``: dt = c0 dx^exponent.

    ``c0`` defaults to ``cfl_number``.
    """

    mode: str = "cfl"
    cfl_number: float = 0.5
    exponent: float = 1.25
    c0: float | None = None

    def __post_init__(self):
        if self.mode not in ("cfl", "convergence"):
            raise ConfigError(f"unknown dt mode {self.mode!r}")
        if not 0.0 < self.cfl_number <= 1.0:
            raise ConfigError(f"cfl number must lie in (0, 1], got {self.cfl_number}")

    @property
    def constant(self):
        return self.cfl_number if self.c0 is None else self.c0


def compute_dt(policy, dx, alpha, t_now, t_end):
    """Next step size; the last step is cut so that ``t_now + dt == t_end``."""
    if not dx > 0.0:
        raise DegenerateInput(f"dx must be positive, got {dx}")
    if not t_now < t_end:
        raise DegenerateInput(f"t_now={t_now} is not before t_end={t_end}")
    if policy.mode == "cfl":
        if not alpha > 0.0:
            raise DegenerateInput("cfl time step with zero wave speed")
        dt = policy.cfl_number * dx / alpha
    else:
        dt = policy.constant * dx ** policy.exponent
    remaining = t_end - t_now
    return remaining if dt >= remaining else dt
