"""Exact solution of the 1D Euler Riemann problem for an ideal gas.

Star pressure from Newton iteration on the two-wave pressure function, then
sampling of the self-similar solution along rays ``xi = x/t``.
"""

import math

import numpy as np

from .errors import NonConvergence, NumericalFailure


def _wave_function(p, rho, pk, ak, gamma):
    """Pressure function of one wave family and its derivative."""
    if p > pk:  # shock
        A = 2.0 / ((gamma + 1.0) * rho)
        B = (gamma - 1.0) / (gamma + 1.0) * pk
        sq = math.sqrt(A / (p + B))
        return (p - pk) * sq, sq * (1.0 - 0.5 * (p - pk) / (p + B))
    # rarefaction
    r = (p / pk) ** ((gamma - 1.0) / (2.0 * gamma))
    f = 2.0 * ak / (gamma - 1.0) * (r - 1.0)
    df = 1.0 / (rho * ak) * (p / pk) ** (-(gamma + 1.0) / (2.0 * gamma))
    return f, df


def star_state(WL, WR, gamma=1.4, tol=1e-12, maxiter=100):
    """``(p_star, u_star)`` between the two nonlinear waves."""
    rl, ul, pl = map(float, WL)
    rr, ur, pr = map(float, WR)
    if min(rl, pl, rr, pr) <= 0.0:
        raise NumericalFailure("exact_riemann: nonpositive density or pressure")
    al = math.sqrt(gamma * pl / rl)
    ar = math.sqrt(gamma * pr / rr)
    du = ur - ul
    if 2.0 / (gamma - 1.0) * (al + ar) <= du:
        raise NumericalFailure("exact_riemann: initial data generate vacuum")

    # two-rarefaction guess, always positive
    z = (gamma - 1.0) / (2.0 * gamma)
    p = ((al + ar - 0.5 * (gamma - 1.0) * du) / (al / pl ** z + ar / pr ** z)) ** (1.0 / z)
    p = max(p, 1e-14)
    for _ in range(maxiter):
        fl, dfl = _wave_function(p, rl, pl, al, gamma)
        fr, dfr = _wave_function(p, rr, pr, ar, gamma)
        step = (fl + fr + du) / (dfl + dfr)
        p_new = p - step
        if p_new <= 0.0:
            p_new = 0.5 * p
        if abs(p_new - p) <= tol * 0.5 * (p_new + p):
            p = p_new
            break
        p = p_new
    else:
        raise NonConvergence("exact_riemann: star-pressure Newton iteration did not converge")
    fl, _ = _wave_function(p, rl, pl, al, gamma)
    fr, _ = _wave_function(p, rr, pr, ar, gamma)
    return p, 0.5 * (ul + ur) + 0.5 * (fr - fl)


def exact_riemann(WL, WR, xi, gamma=1.4):
    """Primitive state ``(rho, u, p)`` of the exact solution along ``x/t = xi``.

    ``xi`` may be a scalar or an array; the result has shape ``(3,) + shape(xi)``.
    """
    rl, ul, pl = map(float, WL)
    rr, ur, pr = map(float, WR)
    ps, us = star_state(WL, WR, gamma)
    xi = np.asarray(xi, dtype=float)
    g = gamma
    gm, gp = g - 1.0, g + 1.0
    al = math.sqrt(g * pl / rl)
    ar = math.sqrt(g * pr / rr)

    rho = np.empty_like(xi)
    u = np.empty_like(xi)
    p = np.empty_like(xi)

    # left of contact
    left = xi <= us
    if ps > pl:
        rs = rl * (ps / pl + gm / gp) / (gm / gp * ps / pl + 1.0)
        S = ul - al * math.sqrt(gp / (2 * g) * ps / pl + gm / (2 * g))
        pre = left & (xi <= S)
        star = left & (xi > S)
        _set(rho, u, p, pre, rl, ul, pl)
        _set(rho, u, p, star, rs, us, ps)
    else:
        rs = rl * (ps / pl) ** (1.0 / g)
        ast = al * (ps / pl) ** (gm / (2 * g))
        head, tail = ul - al, us - ast
        pre = left & (xi <= head)
        fan = left & (xi > head) & (xi < tail)
        star = left & (xi >= tail)
        _set(rho, u, p, pre, rl, ul, pl)
        _set(rho, u, p, star, rs, us, ps)
        x = xi[fan]
        c = 2.0 / gp + gm / (gp * al) * (ul - x)
        rho[fan] = rl * c ** (2.0 / gm)
        u[fan] = 2.0 / gp * (al + 0.5 * gm * ul + x)
        p[fan] = pl * c ** (2.0 * g / gm)

    right = ~left
    if ps > pr:
        rs = rr * (ps / pr + gm / gp) / (gm / gp * ps / pr + 1.0)
        S = ur + ar * math.sqrt(gp / (2 * g) * ps / pr + gm / (2 * g))
        post = right & (xi >= S)
        star = right & (xi < S)
        _set(rho, u, p, post, rr, ur, pr)
        _set(rho, u, p, star, rs, us, ps)
    else:
        rs = rr * (ps / pr) ** (1.0 / g)
        ast = ar * (ps / pr) ** (gm / (2 * g))
        head, tail = ur + ar, us + ast
        post = right & (xi >= head)
        fan = right & (xi < head) & (xi > tail)
        star = right & (xi <= tail)
        _set(rho, u, p, post, rr, ur, pr)
        _set(rho, u, p, star, rs, us, ps)
        x = xi[fan]
        c = 2.0 / gp - gm / (gp * ar) * (ur - x)
        rho[fan] = rr * c ** (2.0 / gm)
        u[fan] = 2.0 / gp * (-ar + 0.5 * gm * ur + x)
        p[fan] = pr * c ** (2.0 * g / gm)

    return np.array([rho, u, p])


def _set(rho, u, p, mask, r, uu, pp):
    rho[mask] = r
    u[mask] = uu
    p[mask] = pp
