"""Command-line front end: ``twistorcalc verify|table|verlinde|dims``."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cyclotomic import VerlindeParams, verlinde_float, verlinde_number
from .errors import FloatUnreliable, NonDominant, NonIntegral, TwistorCalcError
from .report import PAPER_TABLE, SELECTORS, run_suite, table_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse already exits with 2; keep that explicit
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twistorcalc", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("selector", nargs="?", default="all", choices=["all", *SELECTORS])
    v.add_argument("--format", choices=["text", "json"], default="text")

    t = sub.add_parser("table", help="a_k, b_k, d_k for k = 0..kmax")
    t.add_argument("--kmax", type=int, default=8)
    t.add_argument("--format", choices=["text", "json"], default="text")

    w = sub.add_parser("verlinde", help="rank-2 Verlinde number")
    w.add_argument("--genus", type=int, required=True)
    w.add_argument("--level", type=int, required=True)
    w.add_argument("--method", choices=["exact", "float"], default="exact")
    w.add_argument("--cross-check", action="store_true",
                   help="compare with the Riemann-Roch polynomial (genus 3 only)")

    d = sub.add_parser("dims", help="Weyl dimension of an so(2n) module")
    d.add_argument("--rank", type=int, required=True)
    d.add_argument("--weight", required=True, help="comma-separated highest weight, e.g. 2,1,0,0")
    return p


def _cmd_verify(args) -> int:
    report = run_suite(args.selector)
    print(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_table(args) -> int:
    if args.kmax < 0:
        print("twistorcalc: --kmax must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    rows = table_rows(args.kmax)
    mismatches = [k for k, a, b, d in rows if k < len(PAPER_TABLE["a"])
                  and (a, b, d) != tuple(PAPER_TABLE[n][k] for n in "abd")]
    if args.format == "json":
        print(json.dumps({"rows": [{"k": k, "a": a, "b": b, "d": d} for k, a, b, d in rows],
                          "mismatches": mismatches}, indent=2, sort_keys=True))
    else:
        w = max(len(str(rows[-1][2])), 5)
        print(f"{'k':>3} {'a_k':>{w}} {'b_k':>{w}} {'d_k':>{w}}")
        for k, a, b, d in rows:
            print(f"{k:>3} {a:>{w}} {b:>{w}} {d:>{w}}")
        for k in mismatches:
            print(f"mismatch with reference table at k={k}", file=sys.stderr)
    return EXIT_FAIL if mismatches else EXIT_OK


def _cmd_verlinde(args) -> int:
    try:
        params = VerlindeParams(args.genus, args.level)
    except ValueError as exc:
        print(f"twistorcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.cross_check and params.genus != 3:
        print("twistorcalc: --cross-check is only available for genus 3", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.method == "float":
            value, residual = verlinde_float(params)
            print(f"{value}  (residual {residual:.3e})")
        else:
            value = verlinde_number(params)
            print(value)
    except (FloatUnreliable, NonIntegral) as exc:
        print(f"twistorcalc: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.cross_check:
        from .geometry import index_d_direct
        expected = index_d_direct()(params.level - 1)
        ok = expected == value
        print(f"cross-check d_{params.level - 1} = {expected}: {'pass' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def _cmd_dims(args) -> int:
    from .lie import weyl_dim
    try:
        weight = tuple(int(x) for x in args.weight.split(","))
        print(weyl_dim(args.rank, weight))
    except (ValueError, NonDominant) as exc:
        print(f"twistorcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"verify": _cmd_verify, "table": _cmd_table,
               "verlinde": _cmd_verlinde, "dims": _cmd_dims}[args.command]
    try:
        return handler(args)
    except TwistorCalcError as exc:
        print(f"twistorcalc: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
