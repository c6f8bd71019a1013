"""Compressible Euler equations: Roe averages, characteristic WENO fluxes, 1D/2D RHS.

Interface fluxes follow the characteristic-wise recipe: Roe-average the two
cells adjacent to the interface, project the six-cell stencil of states and
fluxes onto the left eigenvectors, split each characteristic component with a
Lax-Friedrichs constant, WENO-reconstruct the two halves, and project back.
The 2D operator applies the same 1D sweep along rows and along columns; the
y-sweep permutes the momentum components so that the sweep always sees the
normal momentum in slot 1.
"""

import os
from collections import namedtuple

import numpy as np

from .boundary import apply_boundary
from .errors import NumericalFailure
from .gas import (GasModel, check_admissible, cons_to_prim, physical_flux, pressure,  # noqa: F401
                  prim_to_cons, sound_speed)
from .grid import NGHOST
from .kernels import reconstruct_minus, reconstruct_plus

G = NGHOST

RoeAverage = namedtuple("RoeAverage", "u v H a")
EigenSystem = namedtuple("EigenSystem", "lambdas R L")

# swaps x- and y-momentum of a 2D state
YPERM = (0, 2, 1, 3)

USE_JIT = not os.environ.get("WENO_LAB_NO_JIT")


def roe_average(UL, UR, gamma=1.4):
    """Square-root-density weighted interface state.

    ``v`` is ``None`` for 1D states.  Raises :class:`NumericalFailure` for
    inadmissible inputs or a non-positive averaged sound speed.
    """
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    pL, pR = pressure(UL, gamma), pressure(UR, gamma)
    check_admissible(UL[0], pL, "left Roe state")
    check_admissible(UR[0], pR, "right Roe state")
    avg = _roe(UL, UR, pL, pR, gamma)
    if np.any(~(avg.a > 0.0)):
        raise NumericalFailure("Roe average has imaginary sound speed")
    return avg


def _roe(UL, UR, pL, pR, gamma):
    sL, sR = np.sqrt(UL[0]), np.sqrt(UR[0])
    inv = 1.0 / (sL + sR)
    # sqrt(rho) * u = m / sqrt(rho); sqrt(rho) * H = (E + p) / sqrt(rho)
    u = (UL[1] / sL + UR[1] / sR) * inv
    H = ((UL[-1] + pL) / sL + (UR[-1] + pR) / sR) * inv
    if UL.shape[0] == 4:
        v = (UL[2] / sL + UR[2] / sR) * inv
        q2 = u * u + v * v
    else:
        v = None
        q2 = u * u
    a2 = (gamma - 1.0) * (H - 0.5 * q2)
    a = np.sqrt(np.where(a2 > 0.0, a2, np.nan))
    return RoeAverage(u, v, H, a)


def _eigvecs(u, v, H, a, gamma):
    """Right/left eigenvector matrices as nested lists ``R[row][col]``.

    Columns of R (and rows of L) are ordered u-a, u, [shear,] u+a.
    """
    b1 = (gamma - 1.0) / (a * a)
    ua = u * a
    ia = 1.0 / a
    if v is None:
        b2 = 0.5 * b1 * u * u
        one = np.ones_like(u)
        R = [[one, one, one],
             [u - a, u, u + a],
             [H - ua, 0.5 * u * u, H + ua]]
        L = [[0.5 * (b2 + u * ia), -0.5 * (b1 * u + ia), 0.5 * b1],
             [1.0 - b2, b1 * u, -b1],
             [0.5 * (b2 - u * ia), -0.5 * (b1 * u - ia), 0.5 * b1]]
        return R, L
    q2 = u * u + v * v
    b2 = 0.5 * b1 * q2
    one = np.ones_like(u)
    zero = np.zeros_like(u)
    R = [[one, one, zero, one],
         [u - a, u, zero, u + a],
         [v, v, one, v],
         [H - ua, 0.5 * q2, v, H + ua]]
    L = [[0.5 * (b2 + u * ia), -0.5 * (b1 * u + ia), -0.5 * b1 * v, 0.5 * b1],
         [1.0 - b2, b1 * u, b1 * v, -b1],
         [-v, zero, one, zero],
         [0.5 * (b2 - u * ia), -0.5 * (b1 * u - ia), -0.5 * b1 * v, 0.5 * b1]]
    return R, L


def eigensystem(avg, gamma=1.4, direction=0):
    """Eigenvalues and eigenvectors of the flux Jacobian at a Roe state.

    Returns arrays ``lambdas`` with shape ``(m, ...)`` and ``R``, ``L`` with
    shape ``(m, m, ...)`` where ``L @ R = I``.  ``direction`` 1 selects the
    y-flux Jacobian of a 2D state.
    """
    u, v, H, a = avg
    a = np.asarray(a, dtype=float)
    if np.any(~(a > 0.0)):
        raise NumericalFailure("eigensystem: sound speed is not positive")
    if v is not None and direction == 1:
        u, v = v, u
    R, L = _eigvecs(u, v, H, a, gamma)
    R = np.array(R, dtype=float)
    L = np.array(L, dtype=float)
    if v is None:
        lam = np.array([u - a, u, u + a])
    else:
        lam = np.array([u - a, u, u, u + a])
        if direction == 1:
            p = list(YPERM)
            R = R[p, :]
            L = L[:, p]
    return EigenSystem(lam, R, L)


def field_speeds(U, gamma=1.4):
    """``|lambda_m|`` per characteristic field for each state (normal direction = slot 1)."""
    rho = U[0]
    u = U[1] / rho
    a = sound_speed(rho, pressure(U, gamma), gamma)
    if U.shape[0] == 3:
        return [np.abs(u - a), np.abs(u), np.abs(u + a)]
    return [np.abs(u - a), np.abs(u), np.abs(u), np.abs(u + a)]


def _char_flux(Us, Fs, alpha, params, gamma):
    """Characteristic WENO flux from six stencil states/fluxes (cells j-2 .. j+3)."""
    m = Us[0].shape[0]
    UL, UR = Us[2], Us[3]
    avg = _roe(UL, UR, pressure(UL, gamma), pressure(UR, gamma), gamma)
    R, L = _eigvecs(avg.u, avg.v, avg.H, avg.a, gamma)
    fhat = []
    for f in range(m):
        Lf = L[f]
        s = [sum(Lf[c] * U[c] for c in range(m)) for U in Us]
        q = [sum(Lf[c] * F[c] for c in range(m)) for F in Fs]
        af = alpha[f]
        qp = tuple(0.5 * (q[k] + af * s[k]) for k in range(5))
        qm = tuple(0.5 * (q[k] - af * s[k]) for k in range(1, 6))
        fhat.append(reconstruct_plus(qp, params) + reconstruct_minus(qm, params))
    return np.array([sum(R[r][f] * fhat[f] for f in range(m)) for r in range(m)])


def char_interface_flux(stencil, params, gamma=1.4, alpha=None):
    """Numerical flux at the interface in the middle of a six-cell stencil.

    ``stencil`` has shape ``(m, 6, ...)`` (conservative states of cells
    j-2 .. j+3, x-direction).  ``alpha`` gives one Lax-Friedrichs constant per
    characteristic field; by default the largest ``|lambda_m|`` over the
    stencil is used.
    """
    stencil = np.asarray(stencil, dtype=float)
    Us = [stencil[:, k] for k in range(6)]
    for k, U in enumerate(Us):
        check_admissible(U[0], pressure(U, gamma), f"stencil cell {k}")
    Fs = [physical_flux(U, gamma) for U in Us]
    if alpha is None:
        speeds = [field_speeds(U, gamma) for U in Us]
        alpha = [np.max([sp[f] for sp in speeds], axis=0) for f in range(stencil.shape[0])]
    out = _char_flux(Us, Fs, alpha, params, gamma)
    if not np.all(np.isfinite(out)):
        raise NumericalFailure("non-finite characteristic flux")
    return out


def sweep_fluxes(P, params, gamma=1.4, compiled=None):
    """Interface fluxes along the last axis of a padded state array.

    ``P`` has shape ``(m, ..., n + 6)`` with the sweep-normal momentum in
    slot 1; returns ``(m, ..., n + 1)``.  Lax-Friedrichs constants are global
    per field: the largest ``|lambda_m|`` over every cell of ``P``.

    ``compiled`` selects the loop kernel in :mod:`weno_lab.fast` (default:
    on unless ``WENO_LAB_NO_JIT`` is set) or the vectorized numpy path.
    """
    n1 = P.shape[-1] - 2 * G + 1
    F = physical_flux(P, gamma)
    alpha = [float(np.max(s)) for s in field_speeds(P, gamma)]
    if USE_JIT if compiled is None else compiled:
        from . import fast
        m = P.shape[0]
        lines = (m, -1, P.shape[-1])
        out = fast.sweep(P.reshape(lines), F.reshape(lines), pressure(P, gamma).reshape(lines[1:]),
                         alpha, params, gamma)
        return out.reshape(P.shape[:-1] + (n1,))
    Us = [P[..., k:k + n1] for k in range(6)]
    Fs = [F[..., k:k + n1] for k in range(6)]
    return _char_flux(Us, Fs, alpha, params, gamma)


def _check_padded(P, gamma, offset):
    rho = P[0]
    p = pressure(P, gamma)
    bad = ~(np.isfinite(rho) & np.isfinite(p) & (rho > 0.0) & (p > 0.0))
    if np.any(bad):
        loc = tuple(int(i) - o for i, o in zip(np.argwhere(bad)[0], offset))
        loc = loc[0] if len(loc) == 1 else loc
        raise NumericalFailure("non-physical or non-finite state", location=loc)


def euler_rhs_1d(U, bcs, params, grid, gamma=1.4, t=0.0, ic=None, return_fluxes=False):
    """Semi-discrete RHS for 1D Euler states ``U`` of shape ``(3, n)``."""
    P = np.empty((3, U.shape[1] + 2 * G))
    P[:, G:-G] = U
    apply_boundary(P, bcs, grid, t, gamma, ic)
    _check_padded(P, gamma, (G,))
    Fh = sweep_fluxes(P, params, gamma)
    rhs = -(Fh[:, 1:] - Fh[:, :-1]) / grid.dx
    if not np.all(np.isfinite(rhs)):
        bad = int(np.argwhere(~np.isfinite(rhs))[0][1])
        raise NumericalFailure("non-finite Euler RHS", location=bad)
    return (rhs, Fh) if return_fluxes else rhs


def rt_gravity_source(U):
    """Rayleigh-Taylor gravity: ``rho`` into y-momentum, ``rho v`` into energy."""
    S = np.zeros_like(U)
    S[2] = U[0]
    S[3] = U[2]
    return S


def euler_rhs_2d(U, bcs, params, grid, gamma=1.4, t=0.0, ic=None, source=None):
    """Semi-discrete RHS for 2D Euler states ``U`` of shape ``(4, nx, ny)``.

    ``source`` is an optional pointwise term ``S(U)`` added after both sweeps.
    """
    nx, ny = U.shape[1], U.shape[2]
    P = np.empty((4, nx + 2 * G, ny + 2 * G))
    P[:, G:-G, G:-G] = U
    apply_boundary(P, bcs, grid, t, gamma, ic)
    _check_padded(P[:, :, G:-G], gamma, (G, 0))
    _check_padded(P[:, G:-G, :], gamma, (0, G))

    # x-sweep: lines are rows of constant y
    Px = np.ascontiguousarray(P[:, :, G:-G].transpose(0, 2, 1))
    Fx = sweep_fluxes(Px, params, gamma)
    rhs = -((Fx[:, :, 1:] - Fx[:, :, :-1]) / grid.dx).transpose(0, 2, 1)

    # y-sweep on momentum-permuted states
    Py = np.ascontiguousarray(P[list(YPERM), G:-G, :])
    Fy = sweep_fluxes(Py, params, gamma)
    ry = -(Fy[:, :, 1:] - Fy[:, :, :-1]) / grid.dy
    rhs = rhs + ry[list(YPERM)]

    if source is not None:
        rhs = rhs + source(U)
    if not np.all(np.isfinite(rhs)):
        loc = tuple(int(i) for i in np.argwhere(~np.isfinite(rhs))[0][1:])
        raise NumericalFailure("non-finite Euler RHS", location=loc)
    return rhs
