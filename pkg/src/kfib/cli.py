"""``kfib`` command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import closedform, factorization, indexing, roots, tables, triangle, verify
from .errors import ConvergenceFailure
from .polycore import eval_rational, render
from .recurrence import fib_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None = None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, default=str) + "\n"


def _fmt(args, default: str = "text") -> str:
    return args.format or default


def _frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# -- commands -----------------------------------------------------------------

def cmd_eval(args) -> int:
    F = fib_poly(args.n, args.k)
    value = None
    if args.x is not None:
        try:
            value = eval_rational(F, Fraction(args.x))
        except ValueError as exc:
            raise UsageError(f"bad --x value {args.x!r}") from exc
    fmt = _fmt(args)
    if fmt == "json":
        out = {"n": args.n, "k": args.k, "poly": render(F), "terms": [[e, c] for e, c in F.items()]}
        if value is not None:
            out["x"], out["value"] = args.x, _frac(value)
        _emit(_json_text(out))
    elif fmt == "csv":
        _emit(_csv_text(["exponent", "coefficient"], [[e, c] for e, c in F.items()]))
    else:
        _emit(render(F) + "\n")
        if value is not None:
            _emit(f"F({args.x}) = {_frac(value)}\n")
    return EXIT_OK


def cmd_profile(args) -> int:
    prof = indexing.profile(args.n, args.k).as_dict()
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_json_text(prof))
    elif fmt == "csv":
        _emit(_csv_text(list(prof), [list(prof.values())]))
    else:
        _emit("".join(f"{key}: {'' if v is None else v}\n" for key, v in prof.items()))
    return EXIT_OK


def cmd_vanish(args) -> int:
    k = args.k
    blocks = indexing.vanishing_indices(k)
    ns = indexing.vanishing_set(k)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_json_text({"k": k, "count": len(ns), "blocks": blocks, "indices": ns}))
    elif fmt == "csv":
        _emit(_csv_text(["n"], [[n] for n in ns]))
    else:
        parts = [f"[{hi}]" if hi == lo else f"[{lo}, {hi}]" for hi, lo in blocks]
        _emit(f"k={k}: {len(ns)} vanishing indices\n" + "\n".join(parts) + "\n")
    return EXIT_OK


def cmd_triangle(args) -> int:
    k, R, C = args.k, args.rows, args.cols
    ms = [-m for m in range(1, R + 1)] if args.neg else list(range(R))
    rows = [[m] + list(triangle.row(k, m, C).coeffs) for m in ms]
    marks = {}
    if args.tag is not None:
        if args.tag > 0:
            raise UsageError("--tag needs n <= 0")
        marks = {cell: "*" for cell in triangle.tag_cells(k, [args.tag], R, C)}
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_json_text({"k": k, "rows": {str(r[0]): r[1:] for r in rows},
                          "tagged": sorted([list(c) for c in marks])}))
    elif fmt == "csv":
        _emit(_csv_text(["m"] + [str(j) for j in range(C)], rows))
    else:
        cells = [[str(r[0])] + [f"{v}{marks.get((r[0], j), '')}" for j, v in enumerate(r[1:])] for r in rows]
        grid = [["m\\j"] + [str(j) for j in range(C)]] + cells
        widths = [max(len(g[c]) for g in grid) for c in range(C + 1)]
        _emit("".join("  ".join(g[c].rjust(widths[c]) for c in range(C + 1)) + "\n" for g in grid))
        if args.tag is not None:
            _emit(f"* cells summed for n={args.tag}: {render(triangle.assemble_neg(k, args.tag))}\n")
    return EXIT_OK


def cmd_factor(args) -> int:
    fac = factorization.factorize(args.n, args.k)
    out = {"n": args.n, "k": args.k, "r": fac.r, "rho": fac.rho,
           "Q": render(fac.Q_xi).replace("x", "xi"), "factored": fac.render()}
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_json_text(out))
    elif fmt == "csv":
        _emit(_csv_text(list(out), [list(out.values())]))
    else:
        _emit(f"{fac.render()}\nr={fac.r} rho={fac.rho} Q(xi)={out['Q']}\n")
    return EXIT_OK


def cmd_sigma(args) -> int:
    spec = closedform.sigma(args.n, args.k)
    sig = [_frac(v) for v in spec.sigma]
    out = {"n": args.n, "k": args.k, "N": spec.N, "sigma": sig,
           "root_sum": _frac(spec.root_sum), "root_product": _frac(spec.root_product)}
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_json_text(out))
    elif fmt == "csv":
        _emit(_csv_text(["h", "sigma"], [[h, v] for h, v in enumerate(sig, 1)]))
    else:
        _emit("".join(f"sigma_{h} = {v}\n" for h, v in enumerate(sig, 1)))
        _emit(f"sum = {out['root_sum']}\nproduct = {out['root_product']}\n")
    return EXIT_OK


def cmd_roots(args) -> int:
    rep = roots.find_roots(args.n, args.k, args.tol)
    fmt = _fmt(args, "json")
    if fmt == "json":
        _emit(_json_text(rep.as_dict()))
    elif fmt == "csv":
        _emit(_csv_text(["re", "im"], [[f"{z.real:.12g}", f"{z.imag:.12g}"] for z in rep.xi_roots]))
    else:
        _emit(f"zeta = {rep.zeta:.12g}\nresidual = {rep.residual:.3e}\n")
        _emit("".join(f"xi = {z.real:.12g} {'+' if z.imag >= 0 else '-'} {abs(z.imag):.12g}i\n"
                      for z in rep.xi_roots))
        _emit("real x roots: " + ", ".join(f"{x:.9g}" for x in rep.x_real_roots) + "\n")
    return EXIT_OK


def cmd_zeta(args) -> int:
    lo, hi = sorted((args.start, args.stop))
    rows = roots.zeta_sweep(args.k, range(lo, hi + 1), args.tol, args.jobs)
    failed = [r for r in rows if r.error]
    if args.csv or _fmt(args, "csv") == "csv":
        _emit(roots.zeta_csv(rows), args.csv)
    elif _fmt(args) == "json":
        _emit(_json_text([{"n": r.n, "zeta": r.zeta, "r": r.r, "error": r.error} for r in rows]))
    else:
        _emit("".join(f"{r.n:6d}  {r.zeta:.12g}  r={r.r}\n" for r in rows))
    for r in failed:
        print(f"warning: {r.error}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_argand(args) -> int:
    pts = roots.argand_rows(args.n, args.k, args.tol)
    if args.csv or _fmt(args, "csv") == "csv":
        _emit(roots.argand_csv(pts), args.csv)
    elif _fmt(args) == "json":
        _emit(_json_text([{"re": a, "im": b} for a, b in pts]))
    else:
        _emit("".join(f"{a:.12g} {b:+.12g}i\n" for a, b in pts))
    return EXIT_OK


def cmd_table(args) -> int:
    fmt = _fmt(args)
    if fmt == "text":
        _emit(tables.render_table(args.which, args.full, args.tags))
        return EXIT_OK
    header, rows = tables.table_rows(args.which, args.full, args.tags)
    if fmt == "json":
        _emit(_json_text([dict(zip(header, r)) for r in rows]))
    else:
        _emit(_csv_text(header, rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = tuple(s for s in (args.suites or "").split(",") if s)
    try:
        cfg = verify.VerifyConfig(args.k_max, args.n_max, args.tol, suites, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results = verify.run(cfg)
    fmt = _fmt(args)
    if fmt == "json":
        text = _json_text(verify.report_json(results))
    elif fmt == "csv":
        text = verify.report_csv(results)
    else:
        text = verify.report_text(results, timing=not args.no_timing)
    _emit(text, args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_figure_data(args) -> int:
    if args.figure == "fig1":
        text = tables.fig1_csv(args.k or 5, args.n_max or 60)
    elif args.figure == "fig2":
        cases = ((args.n, args.k),) if args.n is not None and args.k else tables.FIG2_CASES
        text = tables.fig2_csv(cases, args.tol)
    else:
        cases = tables.FIG3_CASES
        if args.k:
            cases = ((args.k, -1 if args.negative else 1),)
        text = tables.fig3_csv(args.n_max or 200, cases, args.tol, args.jobs)
    _emit(text, args.csv)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


_GLOBAL_DEFAULTS = {"format": None, "tol": roots.DEFAULT_TOL, "jobs": 1}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--tol", type=_positive_float, default=argparse.SUPPRESS,
                        help="root residual tolerance (default 1e-9)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")

    p = argparse.ArgumentParser(prog="kfib", parents=[common],
                                description="k-generalized Fibonacci polynomials: exact tables, checks and root data")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    def nk(sp, need_n=True):
        sp.add_argument("--k", type=int, required=True)
        if need_n:
            sp.add_argument("--n", type=int, required=True)

    sp = add("eval", cmd_eval, "print F_{n,k}(x), optionally its value at a rational x")
    nk(sp)
    sp.add_argument("--x", help="rational evaluation point, e.g. 1 or -3/2")
    nk(add("profile", cmd_profile, "q, r, rho, degree and vanishing status of an index"))
    nk(add("vanish", cmd_vanish, "identically vanishing indices for k"), need_n=False)

    sp = add("triangle", cmd_triangle, "rows of the left-justified k-nomial triangle")
    nk(sp, need_n=False)
    sp.add_argument("--rows", type=int, default=3)
    sp.add_argument("--cols", type=int, default=12)
    sp.add_argument("--neg", action="store_true", help="negative rows -1, -2, ...")
    sp.add_argument("--tag", type=int, help="mark the diagonal read for F_{n,k}, n <= 0")

    nk(add("factor", cmd_factor, "x^r (x^k+1)^rho Q(x^k) factorization"))
    nk(add("sigma", cmd_sigma, "elementary symmetric polynomials of the xi-roots"))
    nk(add("roots", cmd_roots, "root report of P_{n,k}(xi) (JSON by default)"))

    sp = add("zeta", cmd_zeta, "zeta_{n,k} over a range of n")
    nk(sp, need_n=False)
    sp.add_argument("--from", dest="start", type=int, required=True)
    sp.add_argument("--to", dest="stop", type=int, required=True)
    sp.add_argument("--csv", metavar="PATH", help="write n,zeta,r rows here")

    sp = add("argand", cmd_argand, "re,im of every x-root")
    nk(sp)
    sp.add_argument("--csv", metavar="PATH")

    sp = add("table", cmd_table, "regenerate a published table")
    sp.add_argument("which", choices=sorted(tables.TABLES))
    sp.add_argument("--full", action="store_true", help="print polynomials instead of ellipses")
    sp.add_argument("--tags", action="store_true", help="letter tags in table2")

    sp = add("verify", cmd_verify, "run the cross-check suites")
    sp.add_argument("--k-max", type=int, default=6)
    sp.add_argument("--n-max", type=int, default=150, help="largest |n|")
    sp.add_argument("--suites", help="comma separated; choices: " + ", ".join(verify.SUITES))
    sp.add_argument("--output", metavar="PATH")
    sp.add_argument("--no-timing", action="store_true", help="omit per-suite timing lines")

    sp = add("figure-data", cmd_figure_data, "CSV data behind the figures")
    sp.add_argument("figure", choices=("fig1", "fig2", "fig3"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--n", type=int, help="fig2: a single index instead of the default pair")
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--negative", action="store_true", help="fig3 with --k: sweep n < 0")
    sp.add_argument("--csv", metavar="PATH")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # parents share Action objects, so global defaults are filled in here
    # rather than with set_defaults, which would clobber the subparsers
    for name, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # bad arguments, including k < 2 and vanishing indices
        print(f"kfib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceFailure as exc:
        print(f"kfib: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:
        print(f"kfib: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

if __name__ == "__main__":
    sys.exit(main())
