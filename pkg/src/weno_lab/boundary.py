"""Boundary conditions and ghost-cell filling.

Padded arrays carry ``NGHOST`` ghost cells on each side of every spatial
axis.  Filling reads only interior cells (or fixed data), so applying a
boundary condition twice is the same as applying it once.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .gas import prim_to_cons
from .grid import NGHOST, Grid1D, Grid2D

KINDS = ("periodic", "transmissive", "reflective", "dirichlet", "initial", "far_field", "dmr_special")
SIDES_1D = ("left", "right")
SIDES_2D = ("left", "right", "bottom", "top")

G = NGHOST


@dataclass(frozen=True)
class BoundaryCondition:
    """Ghost-fill rule for one side of the domain.

    ``state`` is the primitive Dirichlet state (a 1-tuple for scalar fields).
    ``initial`` freezes the ghost cells at the initial data; ``far_field``
    sets them from the problem's time-dependent boundary data.  ``dmr_special``
    is the double-Mach-reflection rule: ``state`` is the postshock state,
    ``pre_state`` the unshocked gas, ``mach`` the shock Mach number and ``x0``
    the point where the 60-degree shock meets y = 0.  On a bottom side it
    imposes the postshock state for x < x0 and a reflecting wall elsewhere;
    on a top side it follows the exact shock motion.
    """

    kind: str
    state: tuple | None = None
    pre_state: tuple | None = None
    mach: float | None = None
    x0: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown boundary kind {self.kind!r}")
        if self.kind == "dirichlet" and self.state is None:
            raise ConfigError("dirichlet boundary needs a state")
        if self.kind == "dmr_special" and None in (self.state, self.pre_state, self.mach, self.x0):
            raise ConfigError("dmr_special boundary needs state, pre_state, mach and x0")
        for name in ("state", "pre_state"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, tuple(float(s) for s in val))

    def to_dict(self):
        return {k: (list(v) if isinstance(v, tuple) else v)
                for k, v in self.__dict__.items() if v is not None}

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


PERIODIC = BoundaryCondition("periodic")
TRANSMISSIVE = BoundaryCondition("transmissive")
REFLECTIVE = BoundaryCondition("reflective")


def dmr_shock_x(y, t, x0, shock_speed):
    """x-position at height ``y`` of a 60-degree shock moving at ``shock_speed``."""
    return x0 + y / math.tan(math.pi / 3.0) + shock_speed * t / math.sin(math.pi / 3.0)


def _ix(axis, sl):
    return (slice(None),) * axis + (sl,)


def _const(state, scalar, gamma, ndim):
    if scalar:
        return float(state[0])
    return prim_to_cons(np.array(state, dtype=float), gamma).reshape((-1,) + (1,) * (ndim - 1))


def _fill_side(P, axis, n, lo, bc, *, t, gamma, normal, ic, coords):
    """Fill the ghost layers of ``P`` on one side of spatial ``axis``.

    ``coords()`` returns the physical coordinates of the ghost block, as a
    1-tuple ``(X,)`` in 1D or ``(X, Y)`` in 2D.
    """
    scalar = P.ndim == 1
    ghost = _ix(axis, slice(0, G) if lo else slice(n + G, n + 2 * G))
    kind = bc.kind
    if kind == "periodic":
        P[ghost] = P[_ix(axis, slice(n, n + G) if lo else slice(G, 2 * G))]
    elif kind == "transmissive":
        P[ghost] = P[_ix(axis, slice(G, G + 1) if lo else slice(n + G - 1, n + G))]
    elif kind == "reflective" or (kind == "dmr_special" and lo):
        P[ghost] = P[_ix(axis, slice(2 * G - 1, G - 1, -1) if lo else slice(n + G - 1, n - 1, -1))]
        if normal is not None:
            P[(normal,) + ghost[1:]] *= -1.0
        if kind == "dmr_special":
            X = coords()[0]
            post = _const(bc.state, scalar, gamma, P.ndim)
            P[ghost] = np.where((X < bc.x0)[None], post, P[ghost])
    elif kind == "dirichlet":
        P[ghost] = _const(bc.state, scalar, gamma, P.ndim)
    elif kind == "initial":
        if ic is None:
            raise ConfigError("'initial' boundary requires the initial-condition callable")
        P[ghost] = ic(*coords())
    elif kind == "far_field":
        if ic is None:
            raise ConfigError("'far_field' boundary requires the boundary-data callable")
        P[ghost] = ic(*coords(), t=t)
    else:  # dmr_special on the top side
        X, Y = coords()
        post = _const(bc.state, scalar, gamma, P.ndim)
        pre = _const(bc.pre_state, scalar, gamma, P.ndim)
        a_pre = math.sqrt(gamma * bc.pre_state[-1] / bc.pre_state[0])
        xs = dmr_shock_x(Y, t, bc.x0, bc.mach * a_pre)
        P[ghost] = np.where((X < xs)[None], post, pre)
    return P


def apply_boundary(P, bcs, grid, t=0.0, gamma=1.4, ic=None):
    """Fill the ghost cells of the padded array ``P`` in place and return it.

    ``bcs`` maps side names (``left``/``right`` and, in 2D, ``bottom``/``top``)
    to :class:`BoundaryCondition`.  ``ic`` is the conservative initial data as
    a callable of the coordinates (and keyword ``t`` for ``far_field``
    sides), needed only by ``initial`` and ``far_field`` sides.
    Reflective sides negate the momentum normal to the wall.
    """
    if isinstance(grid, Grid1D):
        axis = P.ndim - 1
        normal = 1 if P.ndim == 2 else None
        xp = grid.x_padded
        for side, lo in (("left", True), ("right", False)):
            sl = slice(0, G) if lo else slice(grid.n + G, grid.n + 2 * G)
            _fill_side(P, axis, grid.n, lo, bcs[side], t=t, gamma=gamma, normal=normal, ic=ic,
                       coords=lambda sl=sl: (xp[sl],))
        return P

    if not isinstance(grid, Grid2D):
        raise TypeError(f"unsupported grid {grid!r}")
    nx, ny = grid.nx, grid.ny
    xp, yp = grid.xgrid.x_padded, grid.ygrid.x_padded
    # x-sides on interior rows first, then y-sides across the full padded x
    # range, which also fills the corners.
    Q = P[:, :, G:ny + G]
    for side, lo in (("left", True), ("right", False)):
        sl = slice(0, G) if lo else slice(nx + G, nx + 2 * G)
        _fill_side(Q, 1, nx, lo, bcs[side], t=t, gamma=gamma, normal=1, ic=ic,
                   coords=lambda sl=sl: np.meshgrid(xp[sl], yp[G:ny + G], indexing="ij"))
    for side, lo in (("bottom", True), ("top", False)):
        sl = slice(0, G) if lo else slice(ny + G, ny + 2 * G)
        _fill_side(P, 2, ny, lo, bcs[side], t=t, gamma=gamma, normal=2, ic=ic,
                   coords=lambda sl=sl: np.meshgrid(xp, yp[sl], indexing="ij"))
    return P


def pad(u, bcs, grid, t=0.0, gamma=1.4, ic=None):
    """Copy ``u`` into a fresh padded array and fill its ghost cells."""
    u = np.asarray(u, dtype=float)
    if isinstance(grid, Grid1D):
        P = np.empty(u.shape[:-1] + (u.shape[-1] + 2 * G,))
        P[..., G:-G] = u
    else:
        P = np.empty((u.shape[0], u.shape[1] + 2 * G, u.shape[2] + 2 * G))
        P[:, G:-G, G:-G] = u
    return apply_boundary(P, bcs, grid, t, gamma, ic)
