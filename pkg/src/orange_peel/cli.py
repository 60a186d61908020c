"""Command-line front end: ``orange-peel {peel,euler,converge,diffract,clothoid}``.

Exit codes: 0 success, 2 invalid arguments, 3 numerical non-convergence,
4 I/O failure. Everything is validated and computed before any file is
touched, and files are written through a temporary name, so a failing run
leaves no partial output.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from typing import Sequence

from .applications import SlitChord, slit_intensity
from .convergence import as_integer_N, convergence_study
from .curves import SampledCurve
from .euler_spiral import LIMIT, clothoid_transition, sample_euler
from .peel_spiral import PeelParams, sample_peel
from .quadrature import QuadratureError, QuadratureSpec
from .svg import render_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

CURVE_HEADER = "t,x,y,phi,kappa"


class UsageError(ValueError):
    pass


def fmt(v: float) -> str:
    """17 significant digits, enough to re-parse to the same double."""
    return format(float(v), ".17g")


def curve_csv(curve: SampledCurve, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(CURVE_HEADER)
    cols = (curve.t, curve.x, curve.y, curve.phi, curve.kappa)
    for row in zip(*(c.tolist() for c in cols)):
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _stage(path: str, text: str) -> str:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".orange-peel-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
    except BaseException:
        os.unlink(tmp)
        raise
    return tmp


def _write_all(outputs: Sequence[tuple[str | None, str]]) -> None:
    """Write every file or none of them; ``None``/``-`` paths go to stdout."""
    staged = []
    try:
        for path, text in outputs:
            if path not in (None, "-"):
                staged.append((_stage(path, text), path))
    except BaseException:
        for tmp, _ in staged:
            os.unlink(tmp)
        raise
    for tmp, path in staged:
        os.replace(tmp, path)
    for path, text in outputs:
        if path in (None, "-"):
            sys.stdout.write(text)


def _quad(args) -> QuadratureSpec:
    try:
        return QuadratureSpec(abs_tol=args.abs_tol, rel_tol=args.rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _check_svg_target(args) -> None:
    _require(not (args.svg and args.svg == "-"), "--svg needs a file path")


def cmd_peel(args) -> list[tuple[str | None, str]]:
    _require(math.isfinite(args.n) and args.n > 0, f"--n must be a positive number, got {args.n!r}")
    _require(args.samples >= 3, f"--samples must be at least 3, got {args.samples}")
    _check_svg_target(args)
    p = PeelParams(args.n, _quad(args))
    curve = sample_peel(p, args.samples)
    comments = [f"peel N={fmt(args.n)} samples={args.samples} a={fmt(p.a)}"]
    out = [(args.out, curve_csv(curve, comments))]
    if args.svg:
        out.append((args.svg, render_svg(curve.x, curve.y)))
    return out


def cmd_euler(args) -> list[tuple[str | None, str]]:
    _require(
        math.isfinite(args.t_min) and math.isfinite(args.t_max),
        "--t-min and --t-max must be finite",
    )
    _require(args.t_min < args.t_max, f"need --t-min < --t-max, got {args.t_min!r} >= {args.t_max!r}")
    _require(args.samples >= 2, f"--samples must be at least 2, got {args.samples}")
    _check_svg_target(args)
    curve = sample_euler(args.t_min, args.t_max, args.samples)
    comments = [f"euler t_min={fmt(args.t_min)} t_max={fmt(args.t_max)} samples={args.samples}"]
    out = [(args.out, curve_csv(curve, comments))]
    if args.svg:
        marks = [(LIMIT, LIMIT), (-LIMIT, -LIMIT)]
        out.append((args.svg, render_svg(curve.x, curve.y, marks)))
    return out


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--n-list must be comma-separated numbers, got {text!r}") from None
    try:
        return [as_integer_N(v) for v in values]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_converge(args) -> list[tuple[str | None, str]]:
    _require(args.n_list is not None, "--n-list is required")
    Ns = _parse_n_list(args.n_list)
    _require(len(set(Ns)) >= 3, f"need at least 3 distinct N values for a slope, got {len(set(Ns))}")
    T = args.t_rescaled
    _require(math.isfinite(T) and T > 0, f"--t-rescaled must be positive, got {T!r}")
    n_min = min(Ns)
    _require(
        T <= math.sqrt(math.pi * n_min),
        f"--t-rescaled {T!r} violates T <= sqrt(pi*N) = {math.sqrt(math.pi * n_min)!r} for N={n_min}",
    )
    _require(args.samples >= 10, f"--samples must be at least 10, got {args.samples}")
    report = convergence_study(Ns, T, args.samples, _quad(args))
    lines = [f"# converge T={fmt(T)} samples={args.samples}", "N,T,abs_error,rescaled_error"]
    for e in report.entries:
        lines.append(",".join([str(e.N), fmt(e.T), fmt(e.sup_error_absolute), fmt(e.sup_error_rescaled)]))
    lines.append(f"# fitted_slope={fmt(report.fitted_slope)}")
    args._message = f"fitted_slope={report.fitted_slope:.6f}\n"
    return [(args.out, "\n".join(lines) + "\n")]


def cmd_diffract(args) -> list[tuple[str | None, str]]:
    _require(not (math.isnan(args.t1) or math.isnan(args.t2)), "--t1/--t2 must not be NaN")
    chord = SlitChord.between(args.t1, args.t2)
    value = slit_intensity(chord)
    if args.normalize:
        value /= math.pi
    return [(None, format(value, ".12g") + "\n")]


def cmd_clothoid(args) -> list[tuple[str | None, str]]:
    _require(args.rate is not None and math.isfinite(args.rate) and args.rate > 0,
             f"--rate must be positive, got {args.rate!r}")
    _require(args.length is not None and math.isfinite(args.length) and args.length > 0,
             f"--length must be positive, got {args.length!r}")
    _require(args.samples >= 2, f"--samples must be at least 2, got {args.samples}")
    curve = clothoid_transition(args.rate, args.length, args.samples)
    comments = [f"clothoid rate={fmt(args.rate)} length={fmt(args.length)} samples={args.samples}"]
    return [(args.out, curve_csv(curve, comments))]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orange-peel",
        description="Orange-peel spiral, Euler spiral and their applications.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_quad(p):
        p.add_argument("--abs-tol", type=float, default=1e-10, help="quadrature absolute tolerance")
        p.add_argument("--rel-tol", type=float, default=1e-10, help="quadrature relative tolerance")

    def add_out(p, svg=False):
        p.add_argument("--out", default=None, help="CSV output path (default: stdout)")
        if svg:
            p.add_argument("--svg", default=None, help="optional SVG output path")

    p = sub.add_parser("peel", help="sample the flattened orange-peel spiral")
    p.add_argument("--n", type=float, default=3.0, help="number of windings N (strip width 1/N)")
    p.add_argument("--samples", type=int, default=10001)
    add_out(p, svg=True)
    add_quad(p)
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("euler", help="sample the Euler spiral")
    p.add_argument("--t-min", type=float, default=-8.0)
    p.add_argument("--t-max", type=float, default=8.0)
    p.add_argument("--samples", type=int, default=10001)
    add_out(p, svg=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("converge", help="measure peel -> Euler spiral convergence")
    p.add_argument("--n-list", default="4,8,16,32,64", help="comma-separated integer N values")
    p.add_argument("--t-rescaled", type=float, default=1.0, help="rescaled half-window T")
    p.add_argument("--samples", type=int, default=1001)
    add_out(p)
    add_quad(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser(
        "diffract",
        help="slit intensity as a squared Euler-spiral chord",
        description="Use --t1=-inf / --t2=inf (with '=') for edges at infinity.",
    )
    p.add_argument("--t1", type=float, default=-math.inf)
    p.add_argument("--t2", type=float, default=math.inf)
    p.add_argument("--normalize", action="store_true", help="divide by the open-aperture value pi")
    p.set_defaults(func=cmd_diffract)

    p = sub.add_parser("clothoid", help="railway transition curve")
    p.add_argument("--rate", type=float, required=True, help="curvature gain per unit length")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--samples", type=int, default=101)
    add_out(p)
    p.set_defaults(func=cmd_clothoid)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    args._message = ""
    try:
        outputs = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"orange-peel {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, ArithmeticError) as exc:
        print(f"orange-peel {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    try:
        _write_all(outputs)
        if args._message:
            sys.stdout.write(args._message)
    except OSError as exc:
        print(f"orange-peel {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
