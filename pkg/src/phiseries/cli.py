"""Command line front end: ``phiseries eval|sweep|compare``.

Exit codes: 0 success, 2 usage error, 3 convergence failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import io
import math
import sys

from . import analysis, series
from .errors import ConvergenceError, DomainError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4


def fmt(v: float) -> str:
    """17 significant digits; zero is always written as ``0``."""
    if v == 0:
        v = 0.0
    return format(v, ".17g")


def _real(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return v


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return n


def _int_list(text: str) -> list[int]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("need at least one term count")
    return [_positive_int(t.strip()) for t in items]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phiseries",
        description="Normal CDF and erf from the double-factorial series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", choices=["pdf", "cdf", "erf", "T"])
    ev.add_argument("x", type=_real)
    ev.add_argument("--mu", type=_real, default=None)
    ev.add_argument("--sigma", type=_real, default=None)
    ev.add_argument("--c", type=_real, default=0.0, help="constant of T (default 0)")
    trunc = ev.add_mutually_exclusive_group()
    trunc.add_argument("--terms", type=_positive_int, help="fixed number of terms")
    trunc.add_argument("--rel-tol", type=_real, default=series.DEFAULT_REL_TOL)
    ev.add_argument("--max-terms", type=_positive_int, default=series.DEFAULT_MAX_TERMS)

    for name, help_ in (
        ("sweep", "tabulate oracle erf and fixed-n series on a grid"),
        ("compare", "print max abs/rel error per n"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--from", dest="lo", type=_real, default=-2.5)
        p.add_argument("--to", dest="hi", type=_real, default=2.5)
        p.add_argument("--step", type=_real, default=0.05)
        p.add_argument(
            "--terms", type=_int_list, default=list(analysis.DEFAULT_N_VALUES),
            help="comma separated term counts (default 2,4,...,20)",
        )
        if name == "sweep":
            p.add_argument("--format", choices=["csv", "svg"], default="csv")
            p.add_argument("--out", default=None, help="output file (default stdout)")
    return parser


def _policy(args) -> series.TruncationPolicy:
    if args.terms is not None:
        return series.FixedTerms(args.terms)
    return series.Adaptive(args.rel_tol, args.max_terms)


def cmd_eval(args, out) -> int:
    x = args.x
    params = None
    if args.mu is not None or args.sigma is not None:
        params = series.NormalParams(
            0.0 if args.mu is None else args.mu,
            1.0 if args.sigma is None else args.sigma,
        )
    policy = _policy(args)
    if args.function == "pdf":
        value = series.phi(x) if params is None else series.phi_general(x, params)
        result = series.EvalResult(value, 0, 0.0)
    elif args.function == "cdf":
        if params is None:
            result = series.std_normal_cdf(x, policy)
        else:
            result = series.normal_cdf(x, params, policy)
    elif args.function == "erf":
        result = series.erf_series(x, policy)
    else:
        result = series.antiderivative_T(x, args.c, policy)
    out.write(f"value={fmt(result.value)}\n")
    out.write(f"terms_used={result.terms_used}\n")
    out.write(f"last_term_magnitude={fmt(result.last_term_magnitude)}\n")
    return EXIT_OK


def sweep_csv(table: analysis.ErfTable) -> str:
    buf = io.StringIO()
    header = ["x", "oracle_erf"] + [f"series_n{n}" for n in table.n_values]
    buf.write(",".join(header) + "\n")
    for k, x in enumerate(table.xs):
        row = [x, table.oracle[k]] + [table.series[n][k] for n in table.n_values]
        buf.write(",".join(fmt(v) for v in row) + "\n")
    return buf.getvalue()


_PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
]


def sweep_svg(table: analysis.ErfTable) -> str:
    """Static 800x500 line plot: oracle plus one polyline per n."""
    width, height = 800, 500
    left, right, top, bottom = 60, 160, 20, 40
    pw, ph = width - left - right, height - top - bottom
    curves = [("oracle erf", "#000000", table.oracle)]
    for k, n in enumerate(table.n_values):
        curves.append((f"n={n}", _PALETTE[k % len(_PALETTE)], table.series[n]))
    x0, x1 = table.xs[0], table.xs[-1]
    if x1 == x0:
        x1 = x0 + 1.0
    ys = [y for _, _, vals in curves for y in vals]
    y0, y1 = min(ys), max(ys)
    if y1 == y0:
        y0, y1 = y0 - 1.0, y1 + 1.0

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return top + (y1 - y) / (y1 - y0) * ph

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for frac in (0.0, 0.5, 1.0):
        xv = x0 + frac * (x1 - x0)
        yv = y0 + frac * (y1 - y0)
        lines.append(
            f'<text x="{sx(xv):.2f}" y="{height - bottom + 16}" font-size="12" '
            f'text-anchor="middle">{xv:.4g}</text>'
        )
        lines.append(
            f'<text x="{left - 6}" y="{sy(yv) + 4:.2f}" font-size="12" '
            f'text-anchor="end">{yv:.4g}</text>'
        )
    for k, (label, colour, vals) in enumerate(curves):
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(table.xs, vals))
        lines.append(
            f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{pts}"/>'
        )
        ly = top + 14 + 18 * k
        lx = width - right + 12
        lines.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 20}" y2="{ly - 4}" '
            f'stroke="{colour}" stroke-width="2"/>'
        )
        lines.append(f'<text x="{lx + 26}" y="{ly}" font-size="12">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _grid(args):
    return analysis.Grid(args.lo, args.hi, args.step)


def cmd_sweep(args, out) -> int:
    table = analysis.erf_table(_grid(args), args.terms)
    text = sweep_csv(table) if args.format == "csv" else sweep_svg(table)
    if args.out is None:
        out.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_compare(args, out) -> int:
    out.write("n,max_abs_error,max_rel_error,argmax_x\n")
    for r in analysis.sweep_erf(_grid(args), args.terms):
        out.write(f"{r.n},{fmt(r.max_abs_error)},{fmt(r.max_rel_error)},{fmt(r.argmax_x)}\n")
    return EXIT_OK


_COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "compare": cmd_compare}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (DomainError, ValueError) as exc:
        err.write(f"phiseries: error: {exc}\n")
        return EXIT_USAGE
    except ConvergenceError as exc:
        err.write(f"phiseries: {exc}\n")
        if exc.partial is not None:
            p = exc.partial
            err.write(
                f"partial value={fmt(p.value)} terms_used={p.terms_used} "
                f"last_term_magnitude={fmt(p.last_term_magnitude)}\n"
            )
        return EXIT_CONVERGENCE
    except OSError as exc:
        err.write(f"phiseries: I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
