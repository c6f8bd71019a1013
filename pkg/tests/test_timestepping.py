import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weno_lab.errors import ConfigError, DegenerateInput
from weno_lab.timestepping import DtPolicy, compute_dt, rk3_step, rk4_step


@pytest.mark.parametrize("z", [0.3, -0.7, 1.1 - 0.4j, -2.0 + 1.0j])
def test_amplification_factors(z):
    # on u' = lam u each step multiplies by the truncated exponential
    L = lambda u, t: z * u
    assert rk3_step(L, 1.0 + 0j, 1.0) == pytest.approx(1 + z + z ** 2 / 2 + z ** 3 / 6, abs=1e-14)
    assert rk4_step(L, 1.0 + 0j, 1.0) == pytest.approx(
        1 + z + z ** 2 / 2 + z ** 3 / 6 + z ** 4 / 24, abs=1e-14)


def _integrate(step, L, u0, t_end, n):
    u, t, dt = u0, 0.0, t_end / n
    for _ in range(n):
        u = step(L, u, dt, t)
        t += dt
    return u


def test_rk4_order_on_nonautonomous_problem():
    # u' = cos(t) u, u(0) = 1  ->  u = exp(sin t)
    L = lambda u, t: np.cos(t) * u
    exact = np.exp(np.sin(2.0))
    e = [abs(_integrate(rk4_step, L, 1.0, 2.0, n) - exact) for n in (20, 40, 80)]
    assert np.log2(e[1] / e[2]) == pytest.approx(4.0, abs=0.1)


def test_rk3_order():
    L = lambda u, t: np.cos(t) * u
    exact = np.exp(np.sin(2.0))
    e = [abs(_integrate(rk3_step, L, 1.0, 2.0, n) - exact) for n in (20, 40, 80)]
    assert np.log2(e[1] / e[2]) == pytest.approx(3.0, abs=0.1)


def test_rk3_is_convex_combination_of_euler_steps():
    # TVD: with a contractive forward-Euler step, RK3 is contractive too
    L = lambda u, t: -u
    assert abs(rk3_step(L, 1.0, 1.0)) <= 1.0


def test_cfl_and_convergence_modes():
    assert compute_dt(DtPolicy("cfl", 0.5), 0.01, 2.0, 0.0, 1.0) == pytest.approx(0.0025)
    assert compute_dt(DtPolicy("convergence", 0.5), 0.01, 2.0, 0.0, 1.0) == pytest.approx(
        0.5 * 0.01 ** 1.25)
    assert DtPolicy("convergence", 0.5, c0=0.2).constant == 0.2


def test_final_step_is_truncated():
    assert compute_dt(DtPolicy("cfl", 0.5), 0.1, 1.0, 0.98, 1.0) == pytest.approx(0.02)


def test_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        compute_dt(DtPolicy("cfl"), 0.1, 0.0, 0.0, 1.0)
    with pytest.raises(DegenerateInput):
        compute_dt(DtPolicy("cfl"), 0.1, 1.0, 1.0, 1.0)
    with pytest.raises(ConfigError):
        DtPolicy("adaptive")
    with pytest.raises(ConfigError):
        DtPolicy("cfl", 1.5)


@given(st.floats(1e-4, 1.0), st.floats(1e-3, 50.0), st.floats(0.0, 0.999), st.floats(0.05, 1.0))
def test_dt_never_overshoots(dx, alpha, t_now, cfl):
    dt = compute_dt(DtPolicy("cfl", cfl), dx, alpha, t_now, 1.0)
    assert 0.0 < dt <= 1.0 - t_now + 1e-15
    assert dt <= cfl * dx / alpha * (1 + 1e-12)
