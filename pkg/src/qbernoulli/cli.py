"""Command-line interface: ``table``, ``audit``, ``integrate`` and ``limit``."""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional, Tuple

from . import __version__
from .audit import run_audit
from .errors import QBernoulliError
from .padic import PadicQ, IntegrandSpec, closed_form, volkenborn, volkenborn_multi
from .tables import FAMILIES, FORMATS, emit_table, parse_range, table_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _span(text: str) -> Tuple[int, int]:
    try:
        return parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or A..B, got {text!r}") from None


def _override(text: str) -> Tuple[str, str, Tuple[int, int]]:
    # CASE-ID:sym=A..B
    try:
        cid, rest = text.split(":", 1)
        sym, span = rest.split("=", 1)
        return cid, sym, parse_range(span)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected CASE:SYM=A..B, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qbernoulli", description="Exact q-Bernoulli, q-Stirling and q-Euler numbers.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="tabulate a number family")
    t.add_argument("--family", required=True, choices=FAMILIES)
    t.add_argument("--n", type=_span)
    t.add_argument("--k", type=_span)
    t.add_argument("--m", type=_span)
    t.add_argument("--x", type=_span, help="argument of the polynomial families (default 0)")
    t.add_argument("--format", default="csv", choices=FORMATS)
    t.add_argument("--out")

    a = sub.add_parser("audit", help="run the identity audit")
    a.add_argument("--ids", default="all", help="comma-separated case ids, or 'all'")
    a.add_argument("--max-n", type=int)
    a.add_argument("--range", dest="overrides", action="append", type=_override, default=[],
                   metavar="CASE:SYM=A..B", help="override one parameter range (repeatable)")
    a.add_argument("--report")
    a.add_argument("--timings", action="store_true", help="record per-case milliseconds in the report")

    i = sub.add_parser("integrate", help="p-adic Riemann sum of a catalog integrand")
    i.add_argument("--p", type=int, required=True)
    i.add_argument("--q-offset", type=int, required=True, help="q = 1 + T*p")
    i.add_argument("--N", type=int, required=True)
    i.add_argument("--integrand", required=True)
    i.add_argument("--measure", default="bosonic", choices=("bosonic", "fermionic"))
    i.add_argument("--reference", default="auto", choices=("auto", "none"))
    i.add_argument("--digits", type=int)
    i.add_argument("--factorize", action="store_true", help="use the product form for multivariate integrands")

    lim = sub.add_parser("limit", help="classical q -> 1 values")
    lim.add_argument("--family", required=True, choices=FAMILIES)
    lim.add_argument("--m", type=_span, required=True)
    return parser


def _ranges(args) -> Dict[str, Tuple[int, int]]:
    return {k: getattr(args, k) for k in ("n", "k", "m", "x") if getattr(args, k) is not None}


def _write(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_table(args) -> int:
    _write(emit_table(args.family, _ranges(args), args.format), args.out)
    return EXIT_OK


def _cmd_audit(args) -> int:
    ids = args.ids.strip()
    selection = "all" if ids == "all" else [s.strip() for s in ids.split(",") if s.strip()]
    overrides: Dict[str, Dict[str, Tuple[int, int]]] = {}
    for cid, sym, span in args.overrides:
        overrides.setdefault(cid, {})[sym] = span
    report = run_audit(selection, overrides, args.max_n, args.timings)
    for r in report.results:
        line = f"{r.status:<24} {r.id}"
        if r.counterexample:
            ce = r.counterexample
            params = ", ".join(f"{k}={v}" for k, v in ce["params"].items())
            line += f"  [{params}] lhs={ce['lhs']} rhs={ce['rhs']}"
        print(line)
    s = report.summary
    print(f"pass {s['pass']}, fail {s['fail']}, expected-fail-confirmed {s['expected_fail_confirmed']}")
    if args.report:
        _write(report.to_json(), args.report)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_integrate(args) -> int:
    q = PadicQ.from_offset(args.p, args.q_offset)
    f = IntegrandSpec.parse(args.integrand)
    if f.multivariate:
        value = volkenborn_multi(f, q, args.N, args.measure, args.digits, args.factorize)
    else:
        value = volkenborn(f, q, args.N, args.measure, args.digits)
    print(f"integrand  {f}")
    print(f"q          {q.q}")
    print(f"measure    {args.measure}")
    print(f"N          {args.N}")
    print(f"sum        {value}")
    if args.reference == "auto":
        exact = closed_form(f, args.measure)
        diff = value - q.evaluate(exact, args.N + 12 + int(value.abs_prec))
        print(f"exact      {exact}")
        print(f"valuation  {diff.val}")
    return EXIT_OK


def _cmd_limit(args) -> int:
    ranges = {"m": args.m} if args.family in ("carlitz-beta", "classical-limits") else {"n": args.m}
    cols, rows = table_rows(args.family, ranges)
    if args.family == "classical-limits":
        for r in rows:
            print(" ".join(r))
        return EXIT_OK
    for r in rows:
        idx = ",".join(f"{c}={v}" for c, v in zip(cols, r) if c not in ("value", "limit_q1"))
        print(f"{idx} {r[cols.index('limit_q1')]}")
    return EXIT_OK


_COMMANDS = {"table": _cmd_table, "audit": _cmd_audit, "integrate": _cmd_integrate, "limit": _cmd_limit}


def cli_main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (QBernoulliError, ValueError, KeyError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_main())
