"""Empirical order of |omega_k - d_k| as the window shrinks onto a point."""

import numpy as np
import pytest

from weno_lab.kernels import IDEAL_WEIGHTS, SchemeParams, nonlinear_weights

HS = 2.0 ** -np.arange(4, 9)


def weight_deviation(f, x0, h, variant):
    # interface x[j+1/2] sits on x0; window cells j-2 .. j+2
    w = tuple(f(x0 + (k - 2.5) * h) for k in range(5))
    om = nonlinear_weights(w, SchemeParams.for_variant(variant))
    return max(abs(o - d) for o, d in zip(om, IDEAL_WEIGHTS))


def slope(f, x0, variant, hs=HS):
    e = np.array([weight_deviation(f, x0, h, variant) for h in hs])
    return np.polyfit(np.log(hs), np.log(e), 1)[0]


def sin1(x):
    return np.sin(np.pi * x)


def sin3(x):
    return np.sin(np.pi * x) ** 3


POINTS = {
    "generic": (sin1, 0.3),
    "f'=0": (sin1, 0.5),
    "f'=f''=0": (sin3, 0.0),
}


@pytest.mark.parametrize("where", list(POINTS))
def test_mweno_p_weights_converge_at_least_third_order(where):
    f, x0 = POINTS[where]
    assert slope(f, x0, "MP") >= 3.0


@pytest.mark.parametrize("variant", ["NS", "P"])
def test_ns_and_p_lose_weight_order_at_second_order_critical_point(variant):
    f, x0 = POINTS["f'=f''=0"]
    assert slope(f, x0, variant) < 3.0


def test_js_weights_only_second_order_at_generic_point():
    f, x0 = POINTS["generic"]
    assert slope(f, x0, "JS", 2.0 ** -np.arange(3, 7)) == pytest.approx(2.0, abs=0.2)
