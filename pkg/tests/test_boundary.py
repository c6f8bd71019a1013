import math

import numpy as np
import pytest

from weno_lab.boundary import (PERIODIC, REFLECTIVE, TRANSMISSIVE, BoundaryCondition,
                               apply_boundary, dmr_shock_x, pad)
from weno_lab.errors import ConfigError
from weno_lab.grid import NGHOST as G
from weno_lab.grid import Grid1D, Grid2D
from weno_lab.problems import make_problem
from weno_lab.riemann import exact_riemann


def test_periodic_and_transmissive_1d():
    g = Grid1D(8, 0.0, 1.0)
    u = np.arange(8.0)
    P = pad(u, {"left": PERIODIC, "right": PERIODIC}, g)
    np.testing.assert_array_equal(P[:G], u[-G:])
    np.testing.assert_array_equal(P[-G:], u[:G])
    P = pad(u, {"left": TRANSMISSIVE, "right": TRANSMISSIVE}, g)
    assert np.all(P[:G] == 0.0) and np.all(P[-G:] == 7.0)


def test_reflective_mirrors_and_negates_normal_momentum():
    g = Grid1D(8, 0.0, 1.0)
    U = np.vstack([np.arange(1.0, 9.0), np.arange(8.0) + 1, np.full(8, 5.0)])
    P = pad(U, {"left": REFLECTIVE, "right": REFLECTIVE}, g)
    np.testing.assert_array_equal(P[0, :G], U[0, G - 1::-1])
    np.testing.assert_array_equal(P[1, :G], -U[1, G - 1::-1])
    np.testing.assert_array_equal(P[1, -G:], -U[1, :-G - 1:-1])


def test_dirichlet_sets_conservative_state():
    g = Grid1D(8, 0.0, 1.0)
    bc = BoundaryCondition("dirichlet", (2.0, 1.0, 1.0))
    P = pad(np.ones((3, 8)), {"left": bc, "right": TRANSMISSIVE}, g)
    np.testing.assert_allclose(P[:, 0], [2.0, 2.0, 1.0 / 0.4 + 1.0])


@pytest.mark.parametrize("name", ["riemann2d", "rayleigh_taylor", "double_mach"])
def test_fill_is_idempotent(name, rng):
    spec = make_problem(name)
    g = spec.make_grid((20, 16))
    U = spec.initial_condition(*g.mesh())
    U = U * (1.0 + 0.01 * rng.random(U.shape))
    P = pad(U, spec.bcs, g, t=0.05, gamma=spec.gamma, ic=spec.boundary_data)
    Q = apply_boundary(P.copy(), spec.bcs, g, t=0.05, gamma=spec.gamma, ic=spec.boundary_data)
    np.testing.assert_array_equal(P, Q)
    assert np.all(np.isfinite(P))


def test_dmr_shock_trace_on_top_boundary():
    assert dmr_shock_x(1.0, 0.0, 1.0 / 6.0, 10.0) == pytest.approx(1.0 / 6.0 + 1.0 / math.tan(math.pi / 3))
    assert dmr_shock_x(0.0, 0.1, 0.0, 10.0) == pytest.approx(1.0 / math.sin(math.pi / 3))


def test_dmr_ghost_cells_follow_the_shock():
    spec = make_problem("double_mach")
    g = spec.make_grid((400, 100))
    U = spec.initial_condition(*g.mesh())
    for t in (0.0, 0.1):
        P = pad(U, spec.bcs, g, t=t, gamma=spec.gamma, ic=spec.boundary_data)
        X, Y = g.mesh(padded=True)
        bc = spec.bcs["top"]
        a = math.sqrt(1.4 * bc.pre_state[3] / bc.pre_state[0])
        top = P[0, :, -G:]
        xs = dmr_shock_x(Y[:, -G:], t, bc.x0, 10.0 * a)
        np.testing.assert_array_equal(top > 5.0, X[:, -G:] < xs)
        # bottom: postshock inflow left of x0, wall to the right
        bot = P[:, G:-G, :G]
        left = g.xgrid.x < bc.x0
        assert np.allclose(bot[0, left], bc.state[0])
        np.testing.assert_array_equal(bot[2, ~left], -P[2, G:-G, 2 * G - 1:G - 1:-1][~left])


def test_far_field_edges_follow_the_1d_riemann_solutions():
    spec = make_problem("riemann2d")
    g = spec.make_grid((40, 40))
    X, Y = g.mesh()
    P0 = pad(spec.initial_condition(X, Y), spec.bcs, g, t=0.0, ic=spec.boundary_data)
    Xp, Yp = g.mesh(padded=True)
    np.testing.assert_allclose(P0, spec.initial_condition(Xp, Yp), rtol=1e-15)
    t = 0.3
    P = pad(spec.initial_condition(X, Y), spec.bcs, g, t=t, ic=spec.boundary_data)
    # top ghosts: nw | ne along x
    nw, ne = (0.5323, 1.206, 0.3), (1.5, 0.0, 1.5)
    rho, _, _ = exact_riemann(nw, ne, (g.xgrid.x_padded - 0.8) / t)
    np.testing.assert_allclose(P[0, :, -1], rho, rtol=1e-14)


def test_bad_boundary_specs():
    with pytest.raises(ConfigError):
        BoundaryCondition("outflow")
    with pytest.raises(ConfigError):
        BoundaryCondition("dirichlet")
    with pytest.raises(ConfigError):
        BoundaryCondition("dmr_special", state=(1, 0, 0, 1))
    g = Grid2D(8, 8, 0.0, 1.0, 0.0, 1.0)
    with pytest.raises(ConfigError):
        pad(np.ones((4, 8, 8)), {s: BoundaryCondition("initial") for s in
                                 ("left", "right", "bottom", "top")}, g)


def test_round_trip_dict():
    bc = BoundaryCondition("dmr_special", (8.0, 1.0, -0.5, 116.5), (1.4, 0, 0, 1), 10.0, 1 / 6)
    assert BoundaryCondition.from_dict(bc.to_dict()) == bc
