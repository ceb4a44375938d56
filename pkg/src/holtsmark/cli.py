"""Command-line front end: point evaluation, tables and the truncation-order figure data.

    holtsmark eval --beta 1 --method lee
    holtsmark table --from 0 --to 5 --step 0.5 --function H --format json
    holtsmark figure --which small --orders 4,16,64 --from 0 --to 4 --step 0.05

Exit status is 0 on success, 2 for bad arguments and 3 when an evaluator
raises; the error class name goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .errors import HoltsmarkError
from .evaluators import SWITCHOVER, MethodId, asymptotic_partial, evaluate, s_auto, small_series_partial

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EVAL = 3

FLOAT_FMT = "%.17g"

FIGURE_DEFAULTS = {"small": (0.0, 5.0), "large": (1.0, 8.0)}


@dataclass(frozen=True)
class OutputRecord:
    beta: float
    value: float
    method: str
    err_estimate: float
    terms_used: int


FIELDS = ("beta", "value", "method", "err_estimate", "terms_used")


def _fmt(x) -> str:
    return FLOAT_FMT % x if isinstance(x, float) else str(x)


def grid(start: float, stop: float, step: float) -> list[float]:
    """Points start, start+step, ... up to stop (inclusive within rounding)."""
    if not step > 0.0:
        raise ValueError("step must be positive")
    if stop < start:
        raise ValueError("--to must not be below --from")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [round(start + i * step, 12) for i in range(n + 1)]


def parse_orders(text: str) -> list[int]:
    try:
        orders = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}") from exc
    if not orders or any(n <= 0 for n in orders):
        raise argparse.ArgumentTypeError("orders must be positive integers")
    return orders


def _method(text: str) -> MethodId:
    try:
        return MethodId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"unknown method {text!r}") from exc


def _function(text: str) -> str:
    if text.upper() not in ("S", "H"):
        raise argparse.ArgumentTypeError("function must be S or H")
    return text.upper()


def write_rows(rows: Iterable[dict], fields: Sequence[str], fmt: str, out) -> None:
    rows = list(rows)
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([_fmt(row[k]) for k in fields])


def _record(function: str, method: MethodId, beta: float, tol, switchover: float) -> OutputRecord:
    r = evaluate(function, method, beta, tol, switchover=switchover)
    return OutputRecord(beta, r.value, r.method.value, r.err_estimate, r.terms_used)


def cmd_eval(args, out) -> None:
    rec = _record(args.function, args.method, args.beta, args.tol, args.switchover)
    write_rows([asdict(rec)], FIELDS, args.format, out)


def cmd_table(args, out) -> None:
    recs = [asdict(_record(args.function, args.method, b, args.tol, args.switchover)) for b in args.grid]
    write_rows(recs, FIELDS, args.format, out)


def figure_rows(which: str, orders: Sequence[int], points: Sequence[float]) -> list[dict]:
    """Truncated expansions at each order next to the exact S."""
    partial = small_series_partial if which == "small" else asymptotic_partial
    rows = []
    for b in points:
        row = {"beta": b}
        for n in orders:
            row[f"order_{n}"] = partial(b, n, "S")
        row["exact"] = s_auto(b).value
        rows.append(row)
    return rows


def cmd_figure(args, out) -> None:
    rows = figure_rows(args.which, args.orders, args.grid)
    fields = ["beta"] + [f"order_{n}" for n in args.orders] + ["exact"]
    write_rows(rows, fields, args.format, out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="holtsmark", description="Holtsmark density S and field distribution H.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_method=True):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        if with_method:
            sp.add_argument("--function", type=_function, default="S", help="S (density) or H (field distribution)")
            sp.add_argument("--method", type=_method, default=MethodId.AUTO,
                            help="auto, series, asymptotic, lee, airy-closed, bessel-closed or quadrature")
            sp.add_argument("--tol", type=float, default=None,
                            help="series rel_tol, or absolute tolerance for quadrature")
            sp.add_argument("--switchover", type=float, default=SWITCHOVER,
                            help="beta above which auto uses the asymptotic series (default %(default)s)")

    e = sub.add_parser("eval", help="evaluate at one beta")
    e.add_argument("--beta", type=float, required=True)
    common(e)
    e.set_defaults(run=cmd_eval)

    t = sub.add_parser("table", help="evaluate on a grid")
    t.add_argument("--from", dest="start", type=float, default=0.0)
    t.add_argument("--to", dest="stop", type=float, default=5.0)
    t.add_argument("--step", type=float, default=0.1)
    common(t)
    t.set_defaults(run=cmd_table)

    f = sub.add_parser(
        "figure",
        help="truncated small- or large-beta expansions of S against the exact value",
        description="Order counts retained terms: n = 0..order-1 for the small-beta series, "
        "n = 1..order for the large-beta expansion.",
    )
    f.add_argument("--which", choices=("small", "large"), default="small")
    f.add_argument("--orders", type=parse_orders, default=[4, 16, 64], help="comma-separated, e.g. 4,16,64")
    f.add_argument("--from", dest="start", type=float, default=None,
                   help="default 0 for small, 1 for large")
    f.add_argument("--to", dest="stop", type=float, default=None, help="default 5 for small, 8 for large")
    f.add_argument("--step", type=float, default=0.05)
    common(f, with_method=False)
    f.set_defaults(run=cmd_figure)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command in ("table", "figure"):
        start, stop = args.start, args.stop
        if args.command == "figure":
            lo, hi = FIGURE_DEFAULTS[args.which]
            start = lo if start is None else start
            stop = hi if stop is None else stop
            if args.which == "large" and start <= 0.0:
                print("error: the large-beta expansion needs --from > 0", file=sys.stderr)
                return EXIT_USAGE
        try:
            args.grid = grid(start, stop, args.step)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        args.run(args, out)
    except HoltsmarkError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
