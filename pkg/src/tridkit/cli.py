"""``tridkit`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 singular matrix,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import CSV_HEADER, OPERATIONS, run_bench
from .core import determinant
from .errors import ParseError, SingularMatrixError
from .inverse import hadamard_factors, invert
from .scalars import MODES, default_mode, format_scalar
from .textio import format_grid, parse_tridiag
from .verify import verify_matrix

EXIT_OK, EXIT_USAGE, EXIT_SINGULAR, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="tridkit", description="Determinants and inverses of tridiagonal matrices.")
    parser.add_argument("command", choices=("det", "inv", "factors", "verify", "bench"))
    parser.add_argument("file", nargs="?", help="band text file ('-' or omitted: stdin)")
    parser.add_argument("--mode", choices=MODES, default=None,
                        help="scalar mode (default: $TRIDKIT_MODE or double)")
    parser.add_argument("--tol", type=float, default=0.0, help="relative breakdown threshold")
    parser.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    parser.add_argument("--sizes", default="256,512,1024", help="bench: comma-separated orders")
    parser.add_argument("--ops", default=",".join(OPERATIONS), help="bench: comma-separated operations")
    parser.add_argument("--reps", type=int, default=3, help="bench: timed repetitions")
    parser.add_argument("--seed", type=int, default=0, help="bench: RNG seed")
    return parser


def _json_scalar(x, mode):
    if mode == "rational":
        return format_scalar(x, mode)
    return float(x)


def _emit_grid(name, grid, mode, fmt, out):
    if fmt == "csv":
        print(format_grid(grid, mode, sep=","), file=out)
    else:
        print(format_grid(grid, mode), file=out)


def _read_matrix(args, mode, stdin):
    if args.file in (None, "-"):
        text = stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    return parse_tridiag(text, mode)


def _cmd_det(A, args, mode, out):
    det = determinant(A, args.tol)
    if args.format == "json":
        json.dump({"n": A.n, "det": _json_scalar(det, mode)}, out)
        print(file=out)
    elif args.format == "csv":
        print("det", file=out)
        print(format_scalar(det, mode, None if mode == "rational" else 17), file=out)
    else:
        print(format_scalar(det, mode, None if mode == "rational" else 17), file=out)
    return EXIT_OK


def _cmd_inv(A, args, mode, out):
    try:
        inv = invert(A, args.tol)
    except SingularMatrixError:
        print("SINGULAR", file=out)
        return EXIT_SINGULAR
    if args.format == "json":
        json.dump({
            "n": inv.n,
            "delta": _json_scalar(inv.delta, mode),
            "alpha": [[_json_scalar(x, mode) for x in row] for row in inv.alpha],
        }, out)
        print(file=out)
    else:
        _emit_grid("alpha", inv.alpha, mode, args.format, out)
    return EXIT_OK


def _cmd_factors(A, args, mode, out):
    try:
        fac = hadamard_factors(A, args.tol)
    except SingularMatrixError:
        print("SINGULAR", file=out)
        return EXIT_SINGULAR
    if args.format == "json":
        json.dump({
            "delta": _json_scalar(fac.delta, mode),
            "R": [[format_scalar(x, mode) for x in row] for row in fac.R],
            "S": [[format_scalar(x, mode) for x in row] for row in fac.S],
        }, out)
        print(file=out)
        return EXIT_OK
    print("R", file=out)
    _emit_grid("R", fac.R, mode, args.format, out)
    print("S", file=out)
    _emit_grid("S", fac.S, mode, args.format, out)
    return EXIT_OK


def _cmd_verify(A, args, mode, out):
    report = verify_matrix(A, args.tol)
    if args.format == "json":
        json.dump({"passed": report.passed,
                   "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                              for c in report.checks]}, out)
        print(file=out)
    else:
        for c in report.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            print(line, file=out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _int_list(text, what):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--{what} expects comma-separated integers, got {text!r}") from None


def _cmd_bench(args, out):
    sizes = _int_list(args.sizes, "sizes")
    ops = [x.strip() for x in args.ops.split(",") if x.strip()]
    bad = [op for op in ops if op not in OPERATIONS]
    if bad or not sizes or any(n < 1 for n in sizes):
        raise UsageError(f"bad bench arguments: sizes={sizes}, unknown ops={bad}")
    records = run_bench(sizes, ops, seed=args.seed, reps=args.reps, mode=args.mode or "scaled")
    if args.format == "json":
        json.dump([r.__dict__ for r in records], out)
        print(file=out)
    else:
        print(CSV_HEADER, file=out)
        for r in records:
            print(r.csv_row(), file=out, flush=True)
    return EXIT_OK


def run_cli(argv=None, stdin=None, stdout=None, stderr=None):
    """Run one command and return its exit code."""
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_intermixed_args(argv)
        mode = args.mode or default_mode()
        if args.command == "bench":
            return _cmd_bench(args, out)
        A = _read_matrix(args, mode, stdin)
        handler = {"det": _cmd_det, "inv": _cmd_inv, "factors": _cmd_factors, "verify": _cmd_verify}
        return handler[args.command](A, args, mode, out)
    except UsageError as exc:
        print(f"tridkit: error: {exc}", file=err)
        return EXIT_USAGE
    except (ParseError, ValueError, OSError) as exc:
        print(f"tridkit: error: {exc}", file=err)
        return EXIT_USAGE


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
