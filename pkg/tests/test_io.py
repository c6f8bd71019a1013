import numpy as np
import pytest

from weno_lab import io
from weno_lab.grid import Grid1D, Grid2D
from weno_lab.harness import CompareRow, ConvergenceRow


def test_field_csv_header_and_read_back(tmp_path, rng):
    g = Grid1D(17, 0.0, 1.0)
    rho, u = rng.normal(size=17), rng.normal(size=17)
    path = io.write_field_csv(tmp_path / "f.csv", g.x, {"rho": rho, "u": u})
    header, data = io.read_csv(path)
    assert header == ["x", "rho", "u"]
    # 16 significant digits: read-back agrees to the printed precision
    np.testing.assert_allclose(data[:, 1], rho, rtol=1e-15, atol=0)
    assert path.read_text().splitlines()[1].split(",")[1] == f"{rho[0]:.15e}"


def test_field_csv_rejects_bad_input(tmp_path):
    with pytest.raises(ValueError):
        io.write_field_csv(tmp_path / "f.csv", [0.0, 1.0], {})
    with pytest.raises(ValueError):
        io.write_field_csv(tmp_path / "f.csv", [0.0, 1.0], {"u": [1.0]})


def test_write_failure_names_the_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError, match="file"):
        io.write_field_csv(blocker / "sub" / "f.csv", [0.0], {"u": [1.0]})


def test_table_csv(tmp_path):
    rows = [ConvergenceRow(10, 1e-3, 2e-3), ConvergenceRow(20, 3.125e-5, 6.25e-5, 5.0, 5.0)]
    path = io.write_table_csv(tmp_path / "t.csv", rows)
    lines = path.read_text().splitlines()
    assert lines[0] == "N,L1,L1_order,Linf,Linf_order"
    assert lines[1] == "10,1.000000000000000e-03,,2.000000000000000e-03,"
    header, data = io.read_csv(path)
    assert np.isnan(data[0, 2]) and data[1, 4] == 5.0


def test_field2d_csv_layout(tmp_path):
    g = Grid2D(6, 7, 0.0, 1.0, 0.0, 2.0)
    X, Y = g.mesh()
    prim = (X + 10 * Y, X, Y, np.ones_like(X))
    path = io.write_field2d_csv(tmp_path / "d.csv", g, prim)
    text = path.read_text()
    assert text.splitlines()[0] == "x,y,rho,u,v,p"
    assert text.count("\n\n") == 7
    header, data = io.read_csv(path)
    assert data.shape == (42, 6)
    # x runs fastest
    np.testing.assert_allclose(data[:6, 0], g.xgrid.x)
    np.testing.assert_allclose(data[:, 2], data[:, 0] + 10 * data[:, 1])


def test_compare_csv(tmp_path):
    rows = [CompareRow("lax", "JS", 200, 0.01, 0.2, "ok"),
            CompareRow("lax", "MP", 200, None, None, "failed", "boom")]
    lines = io.write_compare_csv(tmp_path / "c.csv", rows).read_text().splitlines()
    assert lines[0] == "problem,scheme,N,L1,Linf,status"
    assert lines[2] == "lax,MP,200,,,failed"


def test_plot_scripts(tmp_path):
    a = io.write_field_csv(tmp_path / "a.csv", [0.0, 1.0], {"u": [1.0, 2.0]})
    b = io.write_field_csv(tmp_path / "b.csv", [0.0, 1.0], {"u": [1.0, 2.0]})
    gp = io.emit_plot_script(tmp_path / "p.gp", "profile", {"WENO-JS": a, "reference": b})
    text = gp.read_text()
    assert "'a.csv'" in text and "'b.csv'" in text and str(tmp_path) not in text
    assert text.count("title 'WENO-JS'") == 1 and "with lines lw 2 title 'reference'" in text
    again = io.emit_plot_script(tmp_path / "p.gp", "profile", {"WENO-JS": a, "reference": b})
    assert again.read_text() == text
    g = Grid2D(6, 6, 0.0, 1.0, 0.0, 1.0)
    d = io.write_field2d_csv(tmp_path / "d.csv", g, np.ones((4, 6, 6)))
    text = io.emit_plot_script(tmp_path / "d.gp", "contour", {"rho": d}).read_text()
    assert "set cntrparam levels 30" in text
    with pytest.raises(FileNotFoundError):
        io.emit_plot_script(tmp_path / "x.gp", "profile", {"x": tmp_path / "missing.csv"})
    with pytest.raises(ValueError):
        io.emit_plot_script(tmp_path / "x.gp", "surface", {"x": a})
