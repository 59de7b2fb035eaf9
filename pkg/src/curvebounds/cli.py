"""Command-line front end.

Exit codes: 0 on success, 2 for unparsable input, 3 for parameters
outside the domain of the requested computation.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Optional, Sequence

from . import report as rpt
from .families import DomainError
from .filling import parse_slope
from .laurent import parse_poly

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class _InputError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvebounds",
        description="Genus, gonality and degree bounds for character-variety curves.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="Newton polygon bounds for a Laurent polynomial in x, y")
    p.add_argument("polynomial")

    p = sub.add_parser("dtk", help="double twist knot J(k,l)")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)

    p = sub.add_parser("optb", help="once-punctured torus bundle M_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("fill", help="Dehn filling slope p/q")
    p.add_argument("slope")
    p.add_argument("--surface-degree", type=int, default=1)
    p.add_argument("--isolated", action="store_true", help="cusp is geometrically isolated")

    p = sub.add_parser("fib", help="trace polynomial f_k, g_k or h_k")
    p.add_argument("kind", choices=("f", "g", "h"))
    p.add_argument("k", type=int)

    p = sub.add_parser("spectral", help="eigenvalue and injectivity-radius bounds")
    p.add_argument("gonality", type=int)
    p.add_argument("genus", type=int)

    for name, action in sub.choices.items():
        action.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                            help="emit a JSON report")
    return parser


def _parse(fn, text):
    try:
        return fn(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _dispatch(args) -> rpt.InvariantReport:
    cmd = args.command
    if cmd == "poly":
        return rpt.poly_report(_parse(parse_poly, args.polynomial))
    if cmd == "dtk":
        return rpt.dtk_report(args.k, args.l)
    if cmd == "optb":
        return rpt.optb_report(args.n)
    if cmd == "fill":
        slope = _parse(parse_slope, args.slope)
        return rpt.fill_report(slope, args.surface_degree, args.isolated)
    if cmd == "fib":
        return rpt.fib_report(args.kind, args.k)
    if cmd == "spectral":
        return rpt.spectral_report(args.gonality, args.genus)
    raise AssertionError(cmd)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = _dispatch(args)
    except _InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    if args.json:
        stdout.write(rpt.emit_json(report).decode("utf-8"))
    else:
        stdout.write(rpt.render_text(report))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
