"""Command-line interface: ``nodaljac <command> [flags]``.

Exit codes: 0 success, 1 usage error, 2 validation or arithmetic error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from . import _backend
from .bench import DEFAULT_DEGREES, DEFAULT_PRIME, BenchConfig, run_benchmark, write_report
from .nodal import NodalCurve
from .poly import random_irreducible

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


def _load_curve(path: str) -> NodalCurve:
    return NodalCurve.from_text(Path(path).read_text(encoding="utf-8"))


def _element_text(arg: str) -> str:
    # an element is given inline ("identity", "h=...") or as a file holding one
    s = arg.strip()
    if s == "identity" or s.startswith("h=") or not Path(arg).is_file():
        return s
    return Path(arg).read_text(encoding="utf-8").strip()


def cmd_curve_gen(args) -> None:
    rng = random.Random(args.seed)
    curve = NodalCurve(args.p, random_irreducible(args.degree, args.p, rng))
    Path(args.out).write_text(curve.to_text(), encoding="utf-8")
    print(f"wrote {args.out}")


def cmd_random_element(args) -> None:
    curve = _load_curve(args.curve)
    print(curve.format_element(curve.random_element(random.Random(args.seed))))


def cmd_add(args) -> None:
    curve = _load_curve(args.curve)
    a = curve.parse_element(_element_text(args.a))
    b = curve.parse_element(_element_text(args.b))
    print(curve.format_element(curve.add(a, b)))


def cmd_smul(args) -> None:
    curve = _load_curve(args.curve)
    e = curve.parse_element(_element_text(args.e))
    print(curve.format_element(curve.scalar_mul(args.n, e)))


def cmd_neg(args) -> None:
    curve = _load_curve(args.curve)
    print(curve.format_element(curve.neg(curve.parse_element(_element_text(args.e)))))


def cmd_validate(args) -> None:
    curve = _load_curve(args.curve)
    curve.parse_element(_element_text(args.e))
    print("valid")


def cmd_order(args) -> None:
    print(_load_curve(args.curve).order())


def cmd_embed(args) -> None:
    curve = _load_curve(args.curve)
    print(curve.to_mumford(curve.parse_element(_element_text(args.e))).to_text())


def cmd_bench(args) -> int:
    cfg = BenchConfig(
        p=args.p, degrees=args.degrees, scalar=args.scalar, repetitions=args.reps, seed=args.seed
    )
    print(f"# kernels={_backend.name} p={cfg.p} scalar={cfg.scalar} reps={cfg.repetitions}")
    print(f"{'degree':>6} {'nodal_s':>12} {'cantor_s':>12} {'ratio':>9}")

    def show(row):
        print(f"{row.degree:>6} {row.nodal_seconds:>12.6f} {row.cantor_seconds:>12.6f} {row.ratio:>9.2f}", flush=True)

    failures: list = []
    rows = run_benchmark(cfg, failures=failures, progress=show)
    if rows:
        dat = write_report(rows, args.out, cfg)
        print(f"wrote {args.out} and {dat}")
    for d, msg in failures:
        print(f"error: degree {d}: {msg}", file=sys.stderr)
    return EXIT_MATH if failures else EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run

    failed = 0
    for name, ok, detail in run(quick=args.quick):
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
        failed += not ok
    print(f"{failed} failed" if failed else "all checks passed")
    return EXIT_MATH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nodaljac", description="Group law on generalized Jacobians of nodal curves y^2 = x f(x)^2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("curve-gen", help="random curve y^2 = x f(x)^2 with f irreducible")
    p.add_argument("--p", type=_int, required=True)
    p.add_argument("--degree", type=_int, required=True)
    p.add_argument("--seed", type=_int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curve_gen)

    p = sub.add_parser("random-element", help="uniform random non-identity element")
    p.add_argument("--curve", required=True)
    p.add_argument("--seed", type=_int, default=None)
    p.set_defaults(func=cmd_random_element)

    p = sub.add_parser("add", help="sum of two elements")
    p.add_argument("--curve", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("smul", help="scalar multiple n*e")
    p.add_argument("--curve", required=True)
    p.add_argument("--n", type=_int, required=True)
    p.add_argument("--e", required=True)
    p.set_defaults(func=cmd_smul)

    for name, func, help_ in (
        ("neg", cmd_neg, "inverse element"),
        ("validate", cmd_validate, "check that an element is valid on the curve"),
        ("embed", cmd_embed, "Mumford pair [f^2, h f] of an element"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--curve", required=True)
        p.add_argument("--e", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("order", help="group order p^d -+ 1")
    p.add_argument("--curve", required=True)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("bench", help="time nodal vs Cantor scalar multiplication")
    p.add_argument("--degrees", type=_int_list, default=list(DEFAULT_DEGREES))
    p.add_argument("--p", type=_int, default=DEFAULT_PRIME)
    p.add_argument("--scalar", type=_int, default=None, help="defaults to p")
    p.add_argument("--reps", type=_int, default=5)
    p.add_argument("--seed", type=_int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="exhaustive small-curve checks")
    p.add_argument("--quick", action="store_true", help="only (7, x^2+1)")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        rc = args.func(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    return rc or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
