"""Scalar conservation laws: flux models, Lax-Friedrichs splitting, semi-discrete RHS."""

from dataclasses import dataclass

import numpy as np

from .boundary import apply_boundary
from .errors import ConfigError, NumericalFailure
from .grid import NGHOST
from .kernels import reconstruct_minus, reconstruct_plus


@dataclass(frozen=True)
class FluxModel:
    """``linear_advection`` (f = a u) or ``burgers`` (f = u^2/2)."""

    kind: str = "linear_advection"
    speed: float = 1.0

    def __post_init__(self):
        if self.kind not in ("linear_advection", "burgers"):
            raise ConfigError(f"unknown flux model {self.kind!r}")

    def flux(self, u):
        if self.kind == "burgers":
            return 0.5 * u * u
        return self.speed * u

    def wave_speed(self, u):
        if self.kind == "burgers":
            return np.abs(u)
        return np.abs(self.speed) * np.ones_like(u, dtype=float)


def split_lf(u, model, alpha):
    """Global Lax-Friedrichs splitting ``f = f+ + f-`` with ``f± = (f(u) ± alpha u)/2``."""
    if np.any(alpha < model.wave_speed(u)):
        raise ValueError(f"split_lf: alpha={alpha} below the local wave speed")
    f = model.flux(u)
    return 0.5 * (f + alpha * u), 0.5 * (f - alpha * u)


def max_wave_speed(u, model):
    """Largest ``|f'(u)|`` over the (padded) field."""
    return float(np.max(model.wave_speed(u)))


def interface_fluxes(P, model, params, alpha=None, weights=None):
    """Numerical fluxes at the ``n + 1`` interfaces of a padded field ``P``.

    Entry ``i`` is the flux between interior cells ``i - 1`` and ``i``.
    """
    n = P.shape[-1] - 2 * NGHOST
    if alpha is None:
        alpha = max_wave_speed(P, model)
    f = model.flux(P)
    fp = 0.5 * (f + alpha * P)
    fm = 0.5 * (f - alpha * P)
    m = n + 1
    wp = tuple(fp[k:k + m] for k in range(5))
    wm = tuple(fm[k + 1:k + 1 + m] for k in range(5))
    return reconstruct_plus(wp, params, weights) + reconstruct_minus(wm, params, weights)


def scalar_rhs(u, model, params, bcs, grid, t=0.0, weights=None):
    """``-(fhat[j+1/2] - fhat[j-1/2]) / dx`` for every interior cell.

    ``weights`` pins the reconstruction weights (used to check the linear
    scheme); normally the nonlinear weights of ``params`` apply.
    """
    P = np.empty(u.shape[0] + 2 * NGHOST)
    P[NGHOST:-NGHOST] = u
    apply_boundary(P, bcs, grid, t)
    if not np.all(np.isfinite(P)):
        bad = int(np.argmax(~np.isfinite(P))) - NGHOST
        raise NumericalFailure("non-finite value in scalar field", location=bad)
    F = interface_fluxes(P, model, params, weights=weights)
    return -(F[1:] - F[:-1]) / grid.dx

