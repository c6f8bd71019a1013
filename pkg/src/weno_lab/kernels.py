"""Pointwise fifth-order WENO reconstruction kernels.

Every function takes a five-point window ``w = (f[j-2], f[j-1], f[j], f[j+1], f[j+2])``
of one split-flux component and works on the positive interface ``x[j+1/2]``.
The entries may be floats or equally shaped numpy arrays; all arithmetic is
elementwise, so the same code reconstructs a single interface or a whole grid.

All differences are undivided: nothing here divides by the grid spacing.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError, DegenerateInput

VARIANTS = ("JS", "M", "Z", "NS", "P", "MP")

# Ideal weights of the 3-point substencils S0, S1, S2.
IDEAL_WEIGHTS = (0.1, 0.6, 0.3)

DEFAULT_EPS = {"JS": 1e-6, "M": 1e-40, "Z": 1e-40, "NS": 1e-40, "P": 1e-40, "MP": 1e-40}

_ALIASES = {
    "js": "JS", "weno-js": "JS",
    "m": "M", "weno-m": "M",
    "z": "Z", "weno-z": "Z",
    "ns": "NS", "weno-ns": "NS",
    "p": "P", "weno-p": "P",
    "mp": "MP", "mweno-p": "MP",
}


def canonical_variant(name):
    """Map ``"mp"``, ``"MWENO-P"``, ``"MP"`` ... to the canonical tag."""
    key = str(name).strip()
    if key in VARIANTS:
        return key
    try:
        return _ALIASES[key.lower()]
    except KeyError:
        raise ConfigError(f"unknown WENO variant {name!r}; expected one of {VARIANTS}") from None


@dataclass(frozen=True)
class SchemeParams:
    """Everything that selects one WENO flavour.

    ``xi`` is used by NS/P/MP, ``delta`` by P/MP and ``zp`` by Z only.
    """

    variant: str = "MP"
    eps: float = 1e-40
    xi: float = 0.1
    delta: float = 0.05
    zp: int = 2

    def __post_init__(self):
        object.__setattr__(self, "variant", canonical_variant(self.variant))
        if not self.eps > 0.0:
            raise ConfigError(f"eps must be positive, got {self.eps}")
        if not self.xi >= 0.0:
            raise ConfigError(f"xi must be nonnegative, got {self.xi}")
        if not -1.0 < self.delta < 1.0:
            raise ConfigError(f"delta must lie in (-1, 1), got {self.delta}")
        if self.zp not in (1, 2):
            raise ConfigError(f"zp must be 1 or 2, got {self.zp}")

    @classmethod
    def for_variant(cls, variant, **overrides):
        """Parameters with the published defaults for ``variant``.

        Keyword arguments set to ``None`` are ignored, so CLI values can be
        passed straight through.
        """
        v = canonical_variant(variant)
        params = cls(variant=v, eps=DEFAULT_EPS[v])
        overrides = {k: val for k, val in overrides.items() if val is not None}
        return replace(params, **overrides) if overrides else params

    @property
    def label(self):
        return {"JS": "WENO-JS", "M": "WENO-M", "Z": "WENO-Z", "NS": "WENO-NS",
                "P": "WENO-P", "MP": "MWENO-P"}[self.variant]


def candidate_fluxes(w):
    """Third-order substencil values at ``x[j+1/2]``."""
    f0, f1, f2, f3, f4 = w
    return (
        (2.0 * f0 - 7.0 * f1 + 11.0 * f2) / 6.0,
        (-f1 + 5.0 * f2 + 2.0 * f3) / 6.0,
        (2.0 * f2 + 5.0 * f3 - f4) / 6.0,
    )


def beta_js(w):
    """Jiang-Shu smoothness indicators (squared undivided differences)."""
    f0, f1, f2, f3, f4 = w
    a0 = f0 - 2.0 * f1 + f2
    b0 = f0 - 4.0 * f1 + 3.0 * f2
    a1 = f1 - 2.0 * f2 + f3
    b1 = f3 - f1
    a2 = f2 - 2.0 * f3 + f4
    b2 = 3.0 * f2 - 4.0 * f3 + f4
    c = 13.0 / 12.0
    return (c * a0 * a0 + 0.25 * b0 * b0,
            c * a1 * a1 + 0.25 * b1 * b1,
            c * a2 * a2 + 0.25 * b2 * b2)


def undivided_diffs(w):
    """Signed first and second undivided differences on each substencil.

    Returns ``(L1, L2)``, each a triple indexed by substencil k.  The first
    differences use coefficients ``(1-k, 2k-3, 2-k)``, which makes ``L1[1]``
    and ``L1[2]`` both equal to ``f[j+1] - f[j]``.
    """
    f0, f1, f2, f3, f4 = w
    d = f3 - f2
    L1 = (f0 - 3.0 * f1 + 2.0 * f2, d, d)
    L2 = (f0 - 2.0 * f1 + f2, f1 - 2.0 * f2 + f3, f2 - 2.0 * f3 + f4)
    return L1, L2


def beta_ns(w, xi):
    """L1-type indicators ``xi*|L1_k| + |L2_k|``."""
    L1, L2 = undivided_diffs(w)
    return tuple(xi * np.abs(a) + np.abs(b) for a, b in zip(L1, L2))


def apply_delta(b, delta):
    """Rebalance indicators toward the symmetric substencils: (b0, (1+d)b1, (1-d)b2)."""
    return (b[0], (1.0 + delta) * b[1], (1.0 - delta) * b[2])


def tau5(b):
    """Global indicator ``|b0 - b2|`` of WENO-Z."""
    return np.abs(b[0] - b[2])


def _g_ns(x):
    x3 = x * x * x
    return x3 / (1.0 + x3)


def zeta_ns(b, L11):
    """Global indicator of WENO-NS: ``(|b0-b2|^2 + g(|L11|)^2) / 2``.

    ``g(x) = x^3/(1+x^3)`` is evaluated on ``|L11|`` so the pole at -1 is
    never reached; an input of exactly -1 is still rejected because the raw
    formula is undefined there.
    """
    if np.any(np.asarray(L11) == -1.0):
        raise DegenerateInput("zeta_ns: L11 == -1 is a pole of g(x) = x^3/(1+x^3)")
    g = _g_ns(np.abs(L11))
    t = b[0] - b[2]
    return 0.5 * (t * t + g * g)


def zeta_p(b):
    """Global indicator of WENO-P: ``(b0 - b2)^2``."""
    t = b[0] - b[2]
    return t * t


def eta_mp(w):
    """Global indicator of MWENO-P.

    ``|L2_0 + L2_2 - 2 L2_1|^2``, i.e. the squared fourth undivided difference
    of the window.
    """
    _, L2 = undivided_diffs(w)
    t = L2[0] + L2[2] - 2.0 * L2[1]
    return t * t


def map_weight(omega, d):
    """Henrick mapping ``g_d(omega)``; fixes 0, d and 1."""
    return omega * (d + d * d - 3.0 * d * omega + omega * omega) / (d * d + omega * (1.0 - 2.0 * d))


def _normalize(a0, a1, a2):
    s = a0 + a1 + a2
    return a0 / s, a1 / s, a2 / s


def _js_weights(b, eps):
    d0, d1, d2 = IDEAL_WEIGHTS
    t0, t1, t2 = eps + b[0], eps + b[1], eps + b[2]
    return _normalize(d0 / (t0 * t0), d1 / (t1 * t1), d2 / (t2 * t2))


def _perturbed_weights(num, den, eps):
    # alpha_k = d_k (1 + num / (den_k + eps)^2)
    d0, d1, d2 = IDEAL_WEIGHTS
    t0, t1, t2 = den[0] + eps, den[1] + eps, den[2] + eps
    return _normalize(d0 * (1.0 + num / (t0 * t0)),
                      d1 * (1.0 + num / (t1 * t1)),
                      d2 * (1.0 + num / (t2 * t2)))


def nonlinear_weights(w, p):
    """Normalized nonlinear weights ``(omega0, omega1, omega2)`` for variant ``p.variant``."""
    v = p.variant
    eps = p.eps
    if v == "JS":
        return _js_weights(beta_js(w), eps)
    if v == "M":
        om = _js_weights(beta_js(w), eps)
        return _normalize(*(map_weight(o, d) for o, d in zip(om, IDEAL_WEIGHTS)))
    if v == "Z":
        b = beta_js(w)
        tau = tau5(b)
        d0, d1, d2 = IDEAL_WEIGHTS
        r0, r1, r2 = tau / (b[0] + eps), tau / (b[1] + eps), tau / (b[2] + eps)
        if p.zp == 2:
            r0, r1, r2 = r0 * r0, r1 * r1, r2 * r2
        return _normalize(d0 * (1.0 + r0), d1 * (1.0 + r1), d2 * (1.0 + r2))

    L1, L2 = undivided_diffs(w)
    b = tuple(p.xi * np.abs(a) + np.abs(c) for a, c in zip(L1, L2))
    if v == "NS":
        return _perturbed_weights(zeta_ns(b, L1[1]), b, eps)
    bt = apply_delta(b, p.delta)
    if v == "P":
        return _perturbed_weights(zeta_p(b), bt, eps)
    if v == "MP":
        t = L2[0] + L2[2] - 2.0 * L2[1]
        return _perturbed_weights(t * t, bt, eps)
    raise ConfigError(f"unknown variant {v!r}")


def reconstruct_plus(w, p, weights=None):
    """WENO value at ``x[j+1/2]`` from the upwind-left window.

    ``weights`` pins the combination weights (e.g. to ``IDEAL_WEIGHTS``);
    by default the nonlinear weights of ``p`` are used.
    """
    q0, q1, q2 = candidate_fluxes(w)
    om = nonlinear_weights(w, p) if weights is None else weights
    return om[0] * q0 + om[1] * q1 + om[2] * q2


def reconstruct_minus(w, p, weights=None):
    """Mirror image of :func:`reconstruct_plus`.

    ``w`` holds ``(f[j-1], ..., f[j+3])``; the value at ``x[j+1/2]`` is the
    plus reconstruction of the reversed window.
    """
    return reconstruct_plus(tuple(reversed(tuple(w))), p, weights)
