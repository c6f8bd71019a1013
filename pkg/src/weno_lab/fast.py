"""Compiled characteristic-wise Euler sweep.

Loop-level transcription of :func:`weno_lab.euler.sweep_fluxes` and of the
weight formulas in :mod:`weno_lab.kernels`.  The numpy versions remain the
reference; tests check that both agree to rounding.
"""

import numpy as np
from numba import njit

from .kernels import VARIANTS

CODES = {v: i for i, v in enumerate(VARIANTS)}  # JS M Z NS P MP
D0, D1, D2 = 0.1, 0.6, 0.3


@njit(cache=True)
def _map(o, d):
    return o * (d + d * d - 3.0 * d * o + o * o) / (d * d + o * (1.0 - 2.0 * d))


@njit(cache=True)
def _gns(x):
    x3 = x * x * x
    return x3 / (1.0 + x3)


@njit(cache=True)
def weno5(f0, f1, f2, f3, f4, code, eps, xi, delta, zp):
    """Reconstructed value at x[j+1/2] from one five-point window."""
    q0 = (2.0 * f0 - 7.0 * f1 + 11.0 * f2) / 6.0
    q1 = (-f1 + 5.0 * f2 + 2.0 * f3) / 6.0
    q2 = (2.0 * f2 + 5.0 * f3 - f4) / 6.0
    if code <= 2:
        a0 = f0 - 2.0 * f1 + f2
        b0 = f0 - 4.0 * f1 + 3.0 * f2
        a1 = f1 - 2.0 * f2 + f3
        b1 = f3 - f1
        a2 = f2 - 2.0 * f3 + f4
        b2 = 3.0 * f2 - 4.0 * f3 + f4
        c = 13.0 / 12.0
        s0 = c * a0 * a0 + 0.25 * b0 * b0
        s1 = c * a1 * a1 + 0.25 * b1 * b1
        s2 = c * a2 * a2 + 0.25 * b2 * b2
        if code == 2:
            tau = abs(s0 - s2)
            r0 = tau / (s0 + eps)
            r1 = tau / (s1 + eps)
            r2 = tau / (s2 + eps)
            if zp == 2:
                r0, r1, r2 = r0 * r0, r1 * r1, r2 * r2
            w0, w1, w2 = D0 * (1.0 + r0), D1 * (1.0 + r1), D2 * (1.0 + r2)
        else:
            t0, t1, t2 = eps + s0, eps + s1, eps + s2
            w0, w1, w2 = D0 / (t0 * t0), D1 / (t1 * t1), D2 / (t2 * t2)
            if code == 1:
                s = w0 + w1 + w2
                w0, w1, w2 = _map(w0 / s, D0), _map(w1 / s, D1), _map(w2 / s, D2)
    else:
        d = f3 - f2
        l10 = f0 - 3.0 * f1 + 2.0 * f2
        l20 = f0 - 2.0 * f1 + f2
        l21 = f1 - 2.0 * f2 + f3
        l22 = f2 - 2.0 * f3 + f4
        s0 = xi * abs(l10) + abs(l20)
        s1 = xi * abs(d) + abs(l21)
        s2 = xi * abs(d) + abs(l22)
        t = s0 - s2
        if code == 3:
            g = _gns(abs(d))
            num = 0.5 * (t * t + g * g)
        else:
            if code == 4:
                num = t * t
            else:
                e = l20 + l22 - 2.0 * l21
                num = e * e
            s1 = (1.0 + delta) * s1
            s2 = (1.0 - delta) * s2
        t0, t1, t2 = s0 + eps, s1 + eps, s2 + eps
        w0 = D0 * (1.0 + num / (t0 * t0))
        w1 = D1 * (1.0 + num / (t1 * t1))
        w2 = D2 * (1.0 + num / (t2 * t2))
    s = w0 + w1 + w2
    return (w0 / s) * q0 + (w1 / s) * q1 + (w2 / s) * q2


@njit(cache=True)
def _eig(u, v, H, a, gamma, m, R, L):
    b1 = (gamma - 1.0) / (a * a)
    ua = u * a
    ia = 1.0 / a
    if m == 3:
        b2 = 0.5 * b1 * u * u
        R[0, 0], R[0, 1], R[0, 2] = 1.0, 1.0, 1.0
        R[1, 0], R[1, 1], R[1, 2] = u - a, u, u + a
        R[2, 0], R[2, 1], R[2, 2] = H - ua, 0.5 * u * u, H + ua
        L[0, 0], L[0, 1], L[0, 2] = 0.5 * (b2 + u * ia), -0.5 * (b1 * u + ia), 0.5 * b1
        L[1, 0], L[1, 1], L[1, 2] = 1.0 - b2, b1 * u, -b1
        L[2, 0], L[2, 1], L[2, 2] = 0.5 * (b2 - u * ia), -0.5 * (b1 * u - ia), 0.5 * b1
        return
    q2 = u * u + v * v
    b2 = 0.5 * b1 * q2
    R[0, 0], R[0, 1], R[0, 2], R[0, 3] = 1.0, 1.0, 0.0, 1.0
    R[1, 0], R[1, 1], R[1, 2], R[1, 3] = u - a, u, 0.0, u + a
    R[2, 0], R[2, 1], R[2, 2], R[2, 3] = v, v, 1.0, v
    R[3, 0], R[3, 1], R[3, 2], R[3, 3] = H - ua, 0.5 * q2, v, H + ua
    L[0, 0], L[0, 1], L[0, 2], L[0, 3] = 0.5 * (b2 + u * ia), -0.5 * (b1 * u + ia), -0.5 * b1 * v, 0.5 * b1
    L[1, 0], L[1, 1], L[1, 2], L[1, 3] = 1.0 - b2, b1 * u, b1 * v, -b1
    L[2, 0], L[2, 1], L[2, 2], L[2, 3] = -v, 0.0, 1.0, 0.0
    L[3, 0], L[3, 1], L[3, 2], L[3, 3] = 0.5 * (b2 - u * ia), -0.5 * (b1 * u - ia), -0.5 * b1 * v, 0.5 * b1


@njit(cache=True)
def _sweep(P, F, p, alpha, gamma, code, eps, xi, delta, zp):
    m, nl, npad = P.shape
    n1 = npad - 5
    out = np.empty((m, nl, n1))
    R = np.empty((m, m))
    L = np.empty((m, m))
    s = np.empty(6)
    q = np.empty(6)
    fh = np.empty(m)
    for line in range(nl):
        for i in range(n1):
            jl, jr = i + 2, i + 3
            sl, sr = np.sqrt(P[0, line, jl]), np.sqrt(P[0, line, jr])
            inv = 1.0 / (sl + sr)
            u = (P[1, line, jl] / sl + P[1, line, jr] / sr) * inv
            H = ((P[m - 1, line, jl] + p[line, jl]) / sl + (P[m - 1, line, jr] + p[line, jr]) / sr) * inv
            if m == 4:
                v = (P[2, line, jl] / sl + P[2, line, jr] / sr) * inv
                q2 = u * u + v * v
            else:
                v = 0.0
                q2 = u * u
            a2 = (gamma - 1.0) * (H - 0.5 * q2)
            a = np.sqrt(a2) if a2 > 0.0 else np.nan
            _eig(u, v, H, a, gamma, m, R, L)
            for f in range(m):
                for k in range(6):
                    acc_s = 0.0
                    acc_q = 0.0
                    for c in range(m):
                        acc_s += L[f, c] * P[c, line, i + k]
                        acc_q += L[f, c] * F[c, line, i + k]
                    s[k] = acc_s
                    q[k] = acc_q
                af = alpha[f]
                hp = weno5(0.5 * (q[0] + af * s[0]), 0.5 * (q[1] + af * s[1]),
                           0.5 * (q[2] + af * s[2]), 0.5 * (q[3] + af * s[3]),
                           0.5 * (q[4] + af * s[4]), code, eps, xi, delta, zp)
                hm = weno5(0.5 * (q[5] - af * s[5]), 0.5 * (q[4] - af * s[4]),
                           0.5 * (q[3] - af * s[3]), 0.5 * (q[2] - af * s[2]),
                           0.5 * (q[1] - af * s[1]), code, eps, xi, delta, zp)
                fh[f] = hp + hm
            for r in range(m):
                acc = 0.0
                for f in range(m):
                    acc += R[r, f] * fh[f]
                out[r, line, i] = acc
    return out


def sweep(P, F, p, alpha, params, gamma):
    """Interface fluxes along the last axis of ``P`` with shape ``(m, lines, n + 6)``."""
    return _sweep(np.ascontiguousarray(P), np.ascontiguousarray(F), np.ascontiguousarray(p),
                  np.asarray(alpha, dtype=float), float(gamma), CODES[params.variant],
                  float(params.eps), float(params.xi), float(params.delta), int(params.zp))
