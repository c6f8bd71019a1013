"""Ideal-gas state relations for the 1D and 2D Euler equations.

Conservative arrays carry the component on axis 0: ``(rho, rho*u, E)`` in 1D
and ``(rho, rho*u, rho*v, E)`` in 2D; primitive arrays are ``(rho, u, p)`` and
``(rho, u, v, p)``.  Trailing axes are arbitrary grid axes.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, NumericalFailure


@dataclass(frozen=True)
class GasModel:
    gamma: float = 1.4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ConfigError(f"gamma must exceed 1, got {self.gamma}")


def _first_bad(mask):
    idx = np.argwhere(mask)
    if idx.size == 0:
        return None
    loc = tuple(int(i) for i in idx[0])
    return loc[0] if len(loc) == 1 else loc


def check_admissible(rho, p, what="state"):
    """Raise :class:`NumericalFailure` unless ``rho > 0`` and ``p > 0`` everywhere.

    Non-finite values count as inadmissible.
    """
    bad = ~(np.isfinite(rho) & np.isfinite(p) & (rho > 0.0) & (p > 0.0))
    if np.any(bad):
        loc = _first_bad(bad)
        r = np.asarray(rho)[loc] if np.ndim(rho) else rho
        pp = np.asarray(p)[loc] if np.ndim(p) else p
        raise NumericalFailure(f"inadmissible {what}: rho={float(r):.6g}, p={float(pp):.6g}", location=loc)


def prim_to_cons(W, gamma=1.4, check=True):
    W = np.asarray(W, dtype=float)
    g1 = gamma - 1.0
    if W.shape[0] == 3:
        rho, u, p = W
        if check:
            check_admissible(rho, p, "primitive state")
        return np.array([rho, rho * u, p / g1 + 0.5 * rho * u * u])
    if W.shape[0] == 4:
        rho, u, v, p = W
        if check:
            check_admissible(rho, p, "primitive state")
        return np.array([rho, rho * u, rho * v, p / g1 + 0.5 * rho * (u * u + v * v)])
    raise ValueError(f"expected 3 or 4 components, got {W.shape[0]}")


def pressure(U, gamma=1.4):
    U = np.asarray(U, dtype=float)
    if U.shape[0] == 3:
        rho, m, E = U
        return (gamma - 1.0) * (E - 0.5 * m * m / rho)
    rho, mx, my, E = U
    return (gamma - 1.0) * (E - 0.5 * (mx * mx + my * my) / rho)


def cons_to_prim(U, gamma=1.4, check=True):
    U = np.asarray(U, dtype=float)
    rho = U[0]
    p = pressure(U, gamma)
    if check:
        check_admissible(rho, p, "conservative state")
    if U.shape[0] == 3:
        return np.array([rho, U[1] / rho, p])
    return np.array([rho, U[1] / rho, U[2] / rho, p])


def sound_speed(rho, p, gamma=1.4):
    return np.sqrt(gamma * p / rho)


def physical_flux(U, gamma=1.4, axis=0):
    """Euler flux along ``axis`` (0 = x, 1 = y; 1D states only allow x)."""
    U = np.asarray(U, dtype=float)
    p = pressure(U, gamma)
    if U.shape[0] == 3:
        rho, m, E = U
        u = m / rho
        return np.array([m, m * u + p, u * (E + p)])
    rho, mx, my, E = U
    if axis == 0:
        u = mx / rho
        return np.array([mx, mx * u + p, my * u, u * (E + p)])
    v = my / rho
    return np.array([my, mx * v, my * v + p, v * (E + p)])
