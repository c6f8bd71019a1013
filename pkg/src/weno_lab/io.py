"""CSV emission and gnuplot script generation.

Numbers are written with 16 significant digits so repeated runs diff
byte-for-byte.
"""

import os
from pathlib import Path

import numpy as np

FMT = "{:.15e}"  # 16 significant digits
FMT_EXACT = "{:.16e}"  # 17 digits: float64 round-trips exactly
TABLE_HEADER = ("N", "L1", "L1_order", "Linf", "Linf_order")
FIELD2D_HEADER = ("x", "y", "rho", "u", "v", "p")


def _fmt(v):
    if v is None or (isinstance(v, float) and np.isnan(v)):
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return FMT.format(float(v))


def _write(path, header, rows, block=None):
    """Write ``rows`` under ``header``; a blank line follows every ``block`` rows."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for i, row in enumerate(rows, 1):
                fh.write(",".join(_fmt(v) for v in row) + "\n")
                if block and i % block == 0:
                    fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def field_csv_text(x, fields, fmt=FMT):
    """CSV text for 1D fields: header ``x,<name>...``."""
    if not fields:
        raise ValueError("no fields to write")
    names = list(fields)
    cols = [np.asarray(x, dtype=float)] + [np.asarray(fields[k], dtype=float) for k in names]
    lines = [",".join(["x"] + names)]
    for row in zip(*cols):
        lines.append(",".join(fmt.format(v) for v in row))
    return "\n".join(lines) + "\n"


def write_field_csv(path, x, fields):
    """1D fields sampled at cell centres ``x``; ``fields`` maps name to values."""
    if not fields:
        raise ValueError("no fields to write")
    names = list(fields)
    cols = [np.asarray(x, dtype=float)] + [np.asarray(fields[k], dtype=float) for k in names]
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise ValueError("field lengths differ from the coordinate length")
    return _write(path, ["x"] + names, zip(*cols))


def write_field2d_csv(path, grid, prim):
    """2D primitive state ``(rho, u, v, p)``, one row per cell.

    Rows run along x within blocks of constant y; blocks are separated by a
    blank line so gnuplot reads the file as gridded data.
    """
    X, Y = grid.mesh()
    cols = [X.T.ravel(), Y.T.ravel()] + [np.asarray(c).T.ravel() for c in prim]
    return _write(path, FIELD2D_HEADER, zip(*cols), block=grid.nx)


def write_table_csv(path, rows):
    """Convergence table rows (:class:`~weno_lab.harness.ConvergenceRow`)."""
    return _write(path, TABLE_HEADER,
                  ((r.n, r.l1, r.l1_order, r.linf, r.linf_order) for r in rows))


def write_compare_csv(path, rows):
    header = ("problem", "scheme", "N", "L1", "Linf", "status")
    return _write(path, header, ((r.problem, r.variant, r.n, r.l1, r.linf, r.status) for r in rows))


def read_csv(path):
    """``(header, data)`` with empty cells read as NaN."""
    with open(path) as fh:
        lines = [ln for ln in fh.read().splitlines() if ln and not ln.startswith("#")]
    header = lines[0].split(",")
    data = np.array([[float(v) if v else np.nan for v in ln.split(",")] for ln in lines[1:]])
    return header, data


def _rel(target, base_dir):
    return os.path.relpath(target, base_dir)


def emit_plot_script(path, kind, csvs, title="", levels=30, xcol=1, ycol=2):
    """Write a gnuplot script next to the CSVs it plots.

    ``kind="profile"``: ``csvs`` maps curve label to CSV path; each file is
    drawn as one curve (column ``ycol`` against ``xcol``), with labels
    containing "exact" or "reference" drawn as lines and the rest as points.
    ``kind="contour"``: ``csvs`` holds one 2D field CSV; density is drawn with
    ``levels`` contour levels.
    """
    path = Path(path)
    base = path.parent
    missing = [str(p) for p in csvs.values() if not Path(p).exists()]
    if missing:
        raise FileNotFoundError(f"plot script refers to missing CSVs: {', '.join(missing)}")
    out = path.with_suffix(".png").name
    lines = [
        "set datafile separator ','",
        "set terminal pngcairo size 1200,800",
        f"set output '{out}'",
        f"set title '{title}'",
    ]
    if kind == "profile":
        lines += ["set key outside right", "set xlabel 'x'"]
        plots = []
        for label, csv in csvs.items():
            style = "lines lw 2" if ("exact" in label or "reference" in label) else "linespoints pt 6 ps 0.6"
            plots.append(f"'{_rel(csv, base)}' using {xcol}:{ycol} skip 1 with {style} title '{label}'")
        lines.append("plot " + ", \\\n     ".join(plots))
    elif kind == "contour":
        (label, csv), = csvs.items()
        lines += [
            "set view map",
            "unset surface",
            "set contour base",
            f"set cntrparam levels {int(levels)}",
            "set size ratio -1",
            "set xlabel 'x'",
            "set ylabel 'y'",
            f"splot '{_rel(csv, base)}' using 1:2:3 skip 1 with lines lc rgb 'black' notitle",
        ]
    else:
        raise ValueError(f"unknown plot kind {kind!r}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    return path
