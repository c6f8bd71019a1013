"""``weno-lab`` command line.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O failure.
"""

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .errors import ConfigError, NumericalFailure
from .harness import (RunConfig, compare_schemes, convergence_table, reference_field,
                      run_simulation)
from .kernels import VARIANTS, SchemeParams, canonical_variant
from .problems import CATALOG, list_problems, make_problem, riemann_exact_profile

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4

SCHEMES = ("js", "m", "z", "ns", "p", "mp")
# keys accepted in --config files (same names as the long flags)
CONFIG_KEYS = ("problem", "scheme", "n", "nx", "ny", "cfl", "t_end", "eps", "xi", "delta", "zp",
               "dt_mode", "out", "emit_plots", "reference_n", "integrator")

log = logging.getLogger("weno_lab")


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        vals = [int(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or comma list of INTs, got {text!r}") from None
    if not vals or min(vals) <= 0:
        raise argparse.ArgumentTypeError(f"grid sizes must be positive, got {text!r}")
    return vals


def build_parser():
    top = argparse.ArgumentParser(prog="weno-lab",
                                  description="Fifth-order finite-difference WENO solvers.")
    top.add_argument("-v", "--verbose", action="store_true")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, multi_scheme=False):
        p.add_argument("--config", type=Path, help="key=value file; flags override it")
        p.add_argument("--problem")
        p.add_argument("--scheme", help="comma list of schemes" if multi_scheme else None)
        p.add_argument("--n", type=_int_list)
        p.add_argument("--cfl", type=float)
        p.add_argument("--t-end", type=float)
        p.add_argument("--eps", type=float)
        p.add_argument("--xi", type=float)
        p.add_argument("--delta", type=float)
        p.add_argument("--zp", type=int, choices=(1, 2))
        p.add_argument("--dt-mode", choices=("cfl", "convergence"))
        p.add_argument("--integrator", choices=("rk3", "rk4"))
        p.add_argument("--out", type=Path)
        p.add_argument("--emit-plots", action="store_true", default=None)
        p.add_argument("--reference-n", type=int)

    common(sub.add_parser("convergence", help="error/order table against an analytic solution"))
    common(sub.add_parser("solve1d", help="one 1D run, field CSV"))
    p2 = sub.add_parser("solve2d", help="one 2D run, field CSV")
    common(p2)
    p2.add_argument("--nx", type=int)
    p2.add_argument("--ny", type=int)
    common(sub.add_parser("compare", help="several schemes on one problem"), multi_scheme=True)
    sub.add_parser("list-problems", help="print the benchmark catalog")
    return top


def read_config(path):
    """Parse a ``key=value`` file (``#`` comments, dashes or underscores in keys)."""
    cfg = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc.strerror or exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: bad config entry {raw!r}")
        cfg[key] = val.strip()
    return cfg


def _coerce(key, val):
    conv = {"n": _int_list, "nx": int, "ny": int, "cfl": float, "t_end": float, "eps": float,
            "xi": float, "delta": float, "zp": int, "reference_n": int, "out": Path,
            "emit_plots": lambda v: str(v).lower() in ("1", "true", "yes", "on")}
    try:
        return conv[key](val) if key in conv else val
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise UsageError(f"config value {key}={val!r}: {exc}") from None


def merge_config(args):
    """Fill unset flags from ``--config``; flags always win."""
    path = getattr(args, "config", None)
    if path is None:
        return args
    for key, val in read_config(path).items():
        if getattr(args, key, None) is None:
            setattr(args, key, _coerce(key, val))
    return args


def validate(args):
    """Check every flag before computation starts; returns the scheme list."""
    if args.problem is None:
        raise UsageError("--problem is required")
    try:
        spec = make_problem(args.problem)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    names = (args.scheme or "mp").split(",")
    if args.command != "compare" and len(names) != 1:
        raise UsageError(f"{args.command} takes a single --scheme")
    schemes = []
    for s in names:
        if s.strip().lower() not in SCHEMES and s.strip() not in VARIANTS:
            raise UsageError(f"unknown scheme {s!r}; expected one of {', '.join(SCHEMES)}")
        schemes.append(canonical_variant(s))
    for key in ("cfl", "t_end"):
        val = getattr(args, key)
        if val is not None and not val > 0.0:
            raise UsageError(f"--{key.replace('_', '-')} must be positive")
    if args.zp is not None and args.zp not in (1, 2):
        raise UsageError("--zp must be 1 or 2")
    try:
        for v in schemes:
            _params(args, v)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    if args.command == "convergence" and spec.exact != "analytic":
        raise UsageError(f"{spec.name} has no analytic solution; use compare")
    if args.command in ("solve1d", "compare", "convergence") and spec.ndim != 1:
        raise UsageError(f"{spec.name} is two-dimensional; use solve2d")
    if args.command == "solve2d" and spec.ndim != 2:
        raise UsageError(f"{spec.name} is one-dimensional; use solve1d")
    if args.command in ("solve1d", "compare") and args.n is not None and len(args.n) != 1:
        raise UsageError(f"{args.command} takes a single --n")
    if args.command == "convergence" and args.n is None:
        raise UsageError("convergence needs --n LIST")
    if args.reference_n is not None and args.reference_n <= 0:
        raise UsageError("--reference-n must be positive")
    return spec, schemes


def _params(args, variant):
    return SchemeParams.for_variant(variant, eps=args.eps, xi=args.xi, delta=args.delta, zp=args.zp)


def _out(args):
    out = args.out or Path(".")
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc.strerror or exc}") from exc
    return out


def cmd_convergence(args, spec, schemes):
    v = schemes[0]
    params = _params(args, v)
    rows = convergence_table(spec.name, params, args.n, cfl=args.cfl or spec.cfl,
                             dt_mode=args.dt_mode or "convergence",
                             integrator=args.integrator or "rk4", t_end=args.t_end)
    path = io.write_table_csv(_out(args) / f"convergence_{spec.name}_{v.lower()}.csv", rows)
    print(f"{params.label} on {spec.name}")
    print(f"{'N':>6} {'L1':>12} {'order':>6} {'Linf':>12} {'order':>6}")
    for r in rows:
        o1 = "" if r.l1_order is None else f"{r.l1_order:.2f}"
        oi = "" if r.linf_order is None else f"{r.linf_order:.2f}"
        print(f"{r.n:>6} {r.l1:12.4e} {o1:>6} {r.linf:12.4e} {oi:>6}")
    print(f"wrote {path}")


def _profile_fields(res):
    if res.spec.is_euler:
        rho, u, p = res.primitive()
        return {"rho": rho, "u": u, "p": p}
    return {"u": res.u}


def _reference_csv(args, spec, grid, t, out):
    """Write the exact/reference profile on ``grid``; ``None`` when the problem has none."""
    if spec.exact == "none":
        return None
    if spec.exact == "exact_riemann":
        rho, u, p = riemann_exact_profile(spec, grid.x, t)
        fields = {"rho": rho, "u": u, "p": p}
        label = "exact"
    else:
        val = reference_field(spec, grid, t, args.reference_n)
        fields = {"rho" if spec.is_euler else "u": val}
        label = "exact" if spec.exact == "analytic" else "reference"
    return label, io.write_field_csv(out / f"{spec.name}_{label}_N{grid.n}.csv", grid.x, fields)


def cmd_solve1d(args, spec, schemes):
    v = schemes[0]
    n = args.n[0] if args.n else None
    res = run_simulation(RunConfig(spec.name, _params(args, v), n=n, cfl=args.cfl,
                                   dt_mode=args.dt_mode, t_end=args.t_end,
                                   integrator=args.integrator), diagnostics=False)
    out = _out(args)
    path = io.write_field_csv(out / f"{spec.name}_{v.lower()}_N{res.grid.n}.csv", res.grid.x,
                              _profile_fields(res))
    print(f"{spec.name} {res.params.label} N={res.grid.n}: t={res.t:.6g} in {res.steps} steps")
    print(f"wrote {path}")
    if args.emit_plots:
        curves = {res.params.label: path}
        ref = _reference_csv(args, spec, res.grid, res.t, out)
        if ref:
            curves[ref[0]] = ref[1]
        script = io.emit_plot_script(path.with_suffix(".gp"), "profile", curves,
                                     title=f"{spec.name} t={res.t:g}")
        print(f"wrote {script}")


def cmd_solve2d(args, spec, schemes):
    v = schemes[0]
    nx, ny = spec.n
    if args.n:
        nx = ny = args.n[0]
    nx = args.nx or nx
    ny = args.ny or ny
    res = run_simulation(RunConfig(spec.name, _params(args, v), n=(nx, ny), cfl=args.cfl,
                                   dt_mode=args.dt_mode, t_end=args.t_end,
                                   integrator=args.integrator), diagnostics=False)
    out = _out(args)
    path = io.write_field2d_csv(out / f"{spec.name}_{v.lower()}_{nx}x{ny}.csv", res.grid,
                                res.primitive())
    print(f"{spec.name} {res.params.label} {nx}x{ny}: t={res.t:.6g} in {res.steps} steps")
    print(f"wrote {path}")
    if args.emit_plots:
        script = io.emit_plot_script(path.with_suffix(".gp"), "contour", {"rho": path},
                                     title=f"{spec.name} density t={res.t:g}")
        print(f"wrote {script}")


def cmd_compare(args, spec, schemes):
    n = args.n[0] if args.n else None
    overrides = {"eps": args.eps, "xi": args.xi, "delta": args.delta, "zp": args.zp}
    rows, results = compare_schemes(spec.name, schemes, n=n, cfl=args.cfl, t_end=args.t_end,
                                    reference_n=args.reference_n, param_overrides=overrides)
    out = _out(args)
    table = io.write_compare_csv(out / f"compare_{spec.name}.csv", rows)
    curves = {}
    for r in rows:
        res = results[r.variant]
        line = f"{r.variant:>3} N={r.n}: {r.status}"
        if r.l1 is not None:
            line += f"  L1={r.l1:.4e}  Linf={r.linf:.4e}"
        if r.message:
            line += f"  ({r.message})"
        print(line)
        if res is not None:
            curves[res.params.label] = io.write_field_csv(
                out / f"{spec.name}_{r.variant.lower()}_N{res.grid.n}.csv", res.grid.x,
                _profile_fields(res))
    print(f"wrote {table}")
    if args.emit_plots and curves:
        res = next(r for r in results.values() if r is not None)
        ref = _reference_csv(args, spec, res.grid, res.t, out)
        if ref:
            curves[ref[0]] = ref[1]
        script = io.emit_plot_script(out / f"compare_{spec.name}.gp", "profile", curves,
                                     title=f"{spec.name} t={res.t:g}")
        print(f"wrote {script}")
    if any(r.status != "ok" for r in rows):
        raise NumericalFailure("one or more schemes failed")


def cmd_list(args):
    for name in list_problems():
        p = CATALOG[name]
        n = p.n if p.ndim == 1 else "x".join(map(str, p.n))
        print(f"{name:<26} {p.ndim}D  N={n:<9} t={p.t_end:<5g} {p.exact:<20} {p.description}")


COMMANDS = {"convergence": cmd_convergence, "solve1d": cmd_solve1d, "solve2d": cmd_solve2d,
            "compare": cmd_compare}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "list-problems":
        cmd_list(args)
        return EXIT_OK
    try:
        merge_config(args)
        spec, schemes = validate(args)
        COMMANDS[args.command](args, spec, schemes)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"weno-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"weno-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, ArithmeticError) as exc:
        print(f"weno-lab: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"weno-lab: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
