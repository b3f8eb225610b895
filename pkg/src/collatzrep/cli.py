"""Command-line interface: ``collatzrep <command> ...``.

Exit status is 0 on success, 1 when an argument is outside the domain of the
operation, 2 on usage errors (malformed rationals or sequences included).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import checks
from .approximation import approximate, digits_of
from .cycles import find_absolute_loops
from .figures import DEFAULT_VIEWPORT, emit, seq_label, to_decimal
from .geometry import ResourceError, fractal_graph, point_of
from .inversion import invert
from .rational import DomainError, format_rational, odd_rational, parse_rational
from .sequences import parse_sequence, represent

DEFAULT_MAX_STEPS = 10_000
DEFAULT_DEC = 12

# argparse treats "-5/3" or "-4,3,-4,1" as an option string unless told otherwise
_NEGATIVE_ARG = re.compile(r"^-\d[\d/.,\-]*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_ARG


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError:
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def _sequence(text: str):
    try:
        return parse_sequence(text)
    except DomainError:
        raise argparse.ArgumentTypeError(f"malformed sequence {text!r}") from None


def _finite(text: str) -> tuple[int, ...]:
    body = re.sub(r"\s+", "", text)
    if not re.fullmatch(r"\[(\d+(,\d+)*)?\]", body):
        raise argparse.ArgumentTypeError(f"malformed finite sequence {text!r}")
    return tuple(int(t) for t in body[1:-1].split(",") if t)


def _viewport(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"viewport needs xmin,xmax,ymin,ymax, got {text!r}")
    return tuple(_rational(p) for p in parts)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return n


def _exact_dec(label: str, value: Fraction, dec: int) -> str:
    return f"{label}: {format_rational(value)}  (~{to_decimal(value, dec)})"


def cmd_repr(args, out) -> None:
    r = represent(odd_rational(args.a), args.max_steps)
    out.write(f"{r}\n")


def cmd_invert(args, out) -> None:
    a = invert(args.seq, check=args.check)
    out.write(format_rational(a) + "\n")
    if args.dec:
        out.write(to_decimal(a, args.dec) + "\n")


def cmd_point(args, out) -> None:
    x, y = point_of(args.seq)
    out.write(f"{format_rational(x)} {format_rational(y)}\n")
    if args.dec:
        out.write(f"{to_decimal(x, args.dec)} {to_decimal(y, args.dec)}\n")


def cmd_fractal(args, out) -> None:
    if args.format == "svg" and args.output is None:
        raise _Usage("svg output needs -o FILE (or -o - for standard output)")
    data = emit(fractal_graph(args.depth), args.format, args.viewport, args.dec)
    _write(data, args.output, out)


def cmd_approx(args, out) -> None:
    res = approximate(args.z, args.eps)
    out.write(f"sequence: {seq_label(res.sequence)}\n")
    out.write(_exact_dec("value", res.value, args.dec) + "\n")
    out.write(_exact_dec("error", res.error, args.dec) + "\n")
    if args.trace:
        for k, r in enumerate(res.trace, 1):
            out.write(
                f"round {k}: twos={r.twos_appended} ones={r.ones_appended} "
                f"w={format_rational(r.error_before)} error={format_rational(r.error_after)}\n"
            )
        out.write(f"final twos: {res.final_twos}\n")
    if args.digits:
        out.write(f"digits: {seq_label(digits_of(args.z, args.digits))}\n")


def cmd_digits(args, out) -> None:
    out.write(seq_label(digits_of(args.z, args.digits)) + "\n")


def cmd_loops(args, out) -> None:
    res = find_absolute_loops(args.min, args.max, args.max_steps, workers=args.workers)
    if args.format == "json":
        doc = {
            "min": res.lo,
            "max": res.hi,
            "max_steps": res.max_steps,
            "scanned": res.scanned,
            "loops": [
                {
                    "members": [format_rational(m) for m in r.members],
                    "quotient_cycle": list(r.quotient_cycle),
                    "canonical": r.canonical,
                }
                for r in res.loops
            ],
            "undecided": res.undecided,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    out.write(f"scanned {res.scanned} odd integers in [{res.lo}, {res.hi}], max steps {res.max_steps}\n")
    for k, r in enumerate(res.loops, 1):
        members = ", ".join(format_rational(m) for m in r.members)
        out.write(f"loop {k}: [{members}]  quotients ({','.join(map(str, r.quotient_cycle))})\n")
    out.write(f"undecided: {len(res.undecided)}\n")
    for x in res.undecided:
        out.write(f"  {x}\n")


def cmd_verify(args, out) -> None:
    t0 = time.perf_counter()
    report = checks.verify(args.depth)
    out.write(checks.format_report(report))
    # runtime goes to stderr so stdout stays reproducible
    print(f"runtime: {time.perf_counter() - t0:.2f} s", file=sys.stderr)
    if not report.passed:
        raise _Failed()


class _Usage(Exception):
    pass


class _Failed(Exception):
    pass


def _write(data: bytes, path: str | None, out) -> None:
    if path is None or path == "-":
        out.write(data.decode())
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="collatzrep", description="Collatz representations of odd rationals.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("repr", help="Collatz representation of an odd rational")
    s.add_argument("a", type=_rational)
    s.add_argument("--max-steps", type=_positive, default=DEFAULT_MAX_STEPS)
    s.set_defaults(func=cmd_repr)

    s = sub.add_parser("invert", help="odd rational with a given eventually periodic representation")
    s.add_argument("seq", type=_sequence, help="e.g. '[4,1,(3)]'")
    s.add_argument("--dec", type=_positive, default=None, help="also print a decimal rendering")
    s.add_argument("--check", action="store_true", help="run the result forward as a self-check")
    s.set_defaults(func=cmd_invert)

    s = sub.add_parser("point", help="the point P(A) for A over {1,2}")
    s.add_argument("seq", type=_finite, help="e.g. '[1,2]' or '[]'")
    s.add_argument("--dec", type=_positive, default=None)
    s.set_defaults(func=cmd_point)

    s = sub.add_parser("fractal", help="emit the graph P_n as svg, csv or json")
    s.add_argument("--depth", type=_nonneg, required=True)
    s.add_argument("--format", choices=("svg", "csv", "json"), default="csv")
    s.add_argument("--viewport", type=_viewport, default=DEFAULT_VIEWPORT, help="xmin,xmax,ymin,ymax")
    s.add_argument("--dec", type=_positive, default=DEFAULT_DEC)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_fractal)

    s = sub.add_parser("approx", help="approximate z <= -1 by C^-1[A,(1)] with A over {1,2}")
    s.add_argument("z", type=_rational)
    s.add_argument("--eps", type=_rational, required=True)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--digits", type=_positive, default=None)
    s.add_argument("--dec", type=_positive, default=DEFAULT_DEC)
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("digits", help="leading digits of the {1,2}-expansion of z <= -1")
    s.add_argument("z", type=_rational)
    s.add_argument("--digits", type=_positive, default=20)
    s.set_defaults(func=cmd_digits)

    s = sub.add_parser("loops", help="search odd integers for absolutely periodic orbits")
    s.add_argument("--min", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--max-steps", type=_positive, default=DEFAULT_MAX_STEPS)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--workers", type=_positive, default=1)
    s.set_defaults(func=cmd_loops)

    s = sub.add_parser("verify", help="run the exact identity checks up to a depth")
    s.add_argument("--depth", type=_nonneg, default=3)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        args.func(args, sys.stdout)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except _Failed:
        return 1
    except (DomainError, ResourceError) as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
