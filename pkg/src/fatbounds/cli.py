"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import averaged, bounds, lattice, unloading, verify
from .arith import approx, format_rational, isqrt

SCHEMA = 1

TABLE_COLUMNS = ("easy_floor", "easy_ratio", "lambda", "general_best", "roe_R", "r_n", "exact", "xu", "nagata")
NEEDS_N3 = {"roe_R", "r_n"}


class UsageError(Exception):
    pass


def _rational_text(q: Fraction, digits: int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{format_rational(q)} (≈ {approx(q, digits)})"


def _rational_json(q: Fraction, digits: int) -> dict:
    return {"exact": format_rational(q), "approx": "≈" + approx(q, digits)}


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _range(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            a, b = (int(x) for x in text.split(":", 1))
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


# --- commands ---------------------------------------------------------------


def report_dict(rep: bounds.BoundReport, digits: int) -> dict:
    return {
        "schema": SCHEMA,
        "m": rep.m,
        "n": rep.n,
        "easy_floor": rep.easy_floor,
        "easy_ratio": {**_rational_json(rep.easy_ratio, digits), "bound": rep.easy_ratio_bound},
        "lambda": {**_rational_json(rep.lambda_value, digits), "bound": rep.lambda_bound},
        "general_best": {
            "d": rep.general_pair.d,
            "r": rep.general_pair.r,
            **_rational_json(rep.general_value, digits),
            "bound": rep.general_bound,
            "note": "ceiling of m*n*d/r; degrees are integers",
        },
        "roe_R": rep.roe_R,
        "roe_r": None if rep.roe_r is None else {**_rational_json(rep.roe_r, digits), "bound": rep.averaged_bound},
        "exact_small_n": rep.exact_small_n,
        "xu_threshold": {"approx": "≈" + rep.xu_threshold, "note": "informational"} if rep.xu_threshold else None,
        "best": {"value": rep.best, "source": rep.best_source},
        "nagata_holds_at_best": rep.nagata_holds_at_best,
    }


def report_text(rep: bounds.BoundReport, digits: int) -> str:
    lines = [
        f"d({rep.m},{rep.n}) lower bounds",
        f"  easy floor      m*floor(sqrt n)       {rep.easy_floor}",
        f"  easy ratio      m*n/ceil(sqrt n)      {_rational_text(rep.easy_ratio, digits)} -> {rep.easy_ratio_bound}",
        f"  lambda          m*lambda_n            {_rational_text(rep.m * rep.lambda_value, digits)} -> {rep.lambda_bound}",
        f"  general (d,r)   d={rep.general_pair.d} r={rep.general_pair.r}"
        f"             {_rational_text(rep.m * rep.general_value, digits)} -> {rep.general_bound}",
    ]
    if rep.roe_R is not None:
        lines.append(f"  roe unloading   R(m,n)                {rep.roe_R}")
        lines.append(
            f"  roe averaged    m*r(n)                {_rational_text(rep.m * rep.roe_r, digits)} -> {rep.averaged_bound}"
        )
    if rep.exact_small_n is not None:
        lines.append(f"  exact small-n   ceil(c_n*m)           {rep.exact_small_n}")
    if rep.xu_threshold:
        lines.append(f"  xu threshold    (informational)       ≈ {rep.xu_threshold}")
    lines.append(f"best: {rep.best} ({rep.best_source})")
    lines.append(f"nagata d > m sqrt(n) at best: {rep.nagata_holds_at_best}")
    return "\n".join(lines)


def cmd_bound(args) -> str:
    rep = bounds.bound_report(args.m, args.n, args.digits)
    return _dump(report_dict(rep, args.digits)) if args.format == "json" else report_text(rep, args.digits)


def cmd_lambda(args) -> str:
    pair = bounds.lambda_pair(args.n)
    lam = pair.value(args.n)
    out = {
        "schema": SCHEMA,
        "n": args.n,
        "d": pair.d,
        "r": pair.r,
        "lambda": _rational_json(lam, args.digits),
    }
    if args.m is not None:
        out["m"] = args.m
        out["bound"] = bounds.lambda_bound(args.m, args.n)
    if args.format == "json":
        return _dump(out)
    text = f"lambda_{args.n} = {_rational_text(lam, args.digits)}  (d={pair.d}, r={pair.r})"
    if args.m is not None:
        text += f"\nd({args.m},{args.n}) >= {out['bound']}"
    return text


def cmd_roe_r(args) -> str:
    if args.n < 3:
        raise UsageError("roe-r needs n >= 3")
    r = averaged.roe_r(args.n)
    upper = averaged.roe_upper_bound_analytic(args.n, args.digits)
    gap = averaged.compare_lambda_r(args.n)
    if args.format == "json":
        return _dump(
            {
                "schema": SCHEMA,
                "n": args.n,
                "r": _rational_json(r, args.digits),
                "analytic_upper": {"approx": "≈" + upper, "rounding": "up"},
                "lambda_minus_r": _rational_json(gap, args.digits),
            }
        )
    return "\n".join(
        [
            f"r({args.n}) = {_rational_text(r, args.digits)}",
            f"sqrt(n-1) - pi/8 + 1/sqrt(n-1) <= ≈ {upper}",
            f"lambda_{args.n} - r({args.n}) = {_rational_text(gap, args.digits)}",
        ]
    )


def cmd_unload(args) -> tuple[str, int]:
    if args.n < 3:
        raise UsageError("unload needs n >= 3")
    results = {}
    timings = {}
    if args.engine in ("naive", "both"):
        t0 = time.perf_counter()
        results["naive"] = unloading.roe_R_naive(args.m, args.n)[0]
        timings["naive"] = time.perf_counter() - t0
    if args.engine in ("block", "both"):
        t0 = time.perf_counter()
        R, states = unloading.roe_R_block(args.m, args.n)
        results["block"] = R
        timings["block"] = time.perf_counter() - t0
    lines = []
    if args.trace:
        if args.engine == "naive":
            trace = unloading.roe_R_naive(args.m, args.n, want_trace=True)[1]
        else:
            trace = unloading.block_trace(args.m, args.n)
        lines.append(unloading.format_trace(trace))
    status = 0
    if len(set(results.values())) > 1:
        status = 1
        lines.append(f"ENGINE DISAGREEMENT: naive R = {results['naive']}, block R = {results['block']}")
        naive_trace = unloading.format_trace(unloading.roe_R_naive(args.m, args.n, want_trace=True)[1])
        block_trace = unloading.format_trace(unloading.block_trace(args.m, args.n))
        lines.extend(difflib.unified_diff(naive_trace.splitlines(), block_trace.splitlines(), "naive", "block", lineterm=""))
        return "\n".join(lines), status
    R = next(iter(results.values()))
    for engine, secs in timings.items():
        lines.append(f"{engine}: R({args.m},{args.n}) = {results[engine]}  [{secs:.4f} s]")
    if args.engine == "both":
        lines.append("engines agree")
    lines.append(f"R = {R}")
    return "\n".join(lines), status


def _table_cell(col: str, m: int, n: int, digits: int):
    if col == "easy_floor":
        return bounds.easy_bound_floor(m, n)
    if col == "easy_ratio":
        return bounds.easy_bound_ratio(m, n)[1]
    if col == "lambda":
        return bounds.lambda_bound(m, n)
    if col == "general_best":
        return bounds.general_bound(m, n, bounds.optimize_dr(n)[0])
    if col == "roe_R":
        return unloading.roe_R_block(m, n)[0]
    if col == "r_n":
        return format_rational(averaged.roe_r(n))
    if col == "exact":
        return bounds.small_n_exact(m, n) if n <= 9 else ""
    if col == "xu":
        return "≈" + bounds.xu_threshold(m, n, digits) if n >= 2 else ""
    if col == "nagata":
        best = max(bounds.lambda_bound(m, n), bounds.general_bound(m, n, bounds.optimize_dr(n)[0]))
        if n >= 3:
            best = max(best, unloading.roe_R_block(m, n)[0])
        if n <= 9:
            best = max(best, bounds.small_n_exact(m, n))
        return str(bounds.nagata_holds(best, m, n)).lower()
    raise UsageError(f"unknown column {col!r}")


def build_table(m_range, n_range, columns: Sequence[str], digits: int = 6) -> list[dict]:
    if not columns:
        raise UsageError("at least one column is required")
    unknown = [c for c in columns if c not in TABLE_COLUMNS]
    if unknown:
        raise UsageError(f"unknown columns {unknown}; choose from {', '.join(TABLE_COLUMNS)}")
    if m_range[0] < 1 or n_range[0] < 1:
        raise UsageError("m and n ranges must be positive")
    if n_range[0] < 3 and NEEDS_N3.intersection(columns):
        raise UsageError("columns roe_R and r_n need n >= 3")
    rows = []
    for n in range(n_range[0], n_range[1] + 1):
        for m in range(m_range[0], m_range[1] + 1):
            row = {"m": m, "n": n}
            for col in columns:
                row[col] = _table_cell(col, m, n, digits)
            rows.append(row)
    return rows


def render_table(rows: list[dict], columns: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return _dump({"schema": SCHEMA, "columns": ["m", "n", *columns], "rows": rows})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["m", "n", *columns], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_table(args) -> str:
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    rows = build_table(args.m_range, args.n_range, columns, args.digits)
    return render_table(rows, columns, args.format)


def cmd_nagata(args) -> str:
    rep = bounds.bound_report(args.m, args.n, args.digits)
    d = args.d if args.d is not None else rep.best
    out = {
        "schema": SCHEMA,
        "m": args.m,
        "n": args.n,
        "d": d,
        "d_source": "given" if args.d is not None else rep.best_source,
        "nagata_holds": bounds.nagata_holds(d, args.m, args.n),
        "xu_threshold": {"approx": "≈" + rep.xu_threshold, "note": "informational"} if rep.xu_threshold else None,
    }
    s = isqrt(args.n)
    if s >= 3 and s * s + s == args.n:
        out["s"] = s
        out["range_check"] = bounds.nagata_range_check(s, args.m)
        if bounds.closed_form_valid(args.m, s):
            out["closed_form_bound"] = bounds.lambda_closed_form(args.m, s)
    if args.format == "json":
        return _dump(out)
    lines = [f"d = {d} ({out['d_source']}): d > {args.m}*sqrt({args.n}) is {out['nagata_holds']}"]
    if "range_check" in out:
        lines.append(f"n = s^2+s with s={s}; in proven range: {out['range_check']}")
    if "closed_form_bound" in out:
        lines.append(f"closed form ceil(m lambda_n) = {out['closed_form_bound']}")
    if rep.xu_threshold:
        lines.append(f"xu threshold (informational): ≈ {rep.xu_threshold}")
    return "\n".join(lines)


def cmd_certificate(args) -> str:
    if args.variant in ("a", "b"):
        report = lattice.easy_bound_certificate(args.n, args.variant)
    else:
        if (args.d is None) != (args.r is None):
            raise UsageError("give both --d and --r, or neither")
        if args.d is None:
            report = lattice.lambda_certificate(args.n)
        else:
            report = lattice.nef_certificate(args.n, args.d, args.r)
    data = report.to_dict()
    if args.m is not None:
        data["m"] = args.m
        data["bound"] = report.bound(args.m)
    if args.format == "json":
        return _dump(data)
    lines = [f"{report.kind} certificate on the {args.n}-point blow-up", f"nef class {report.nef_class.label()}"]
    for check in data["checks"]:
        lines.append(f"  [{'ok' if check['ok'] else 'FAIL'}] {check['identity']}  (value {check['value']})")
    if data["generators"]:
        nonzero = [g for g in data["generators"] if g["weight"]]
        lines.append(f"  decomposition: {len(nonzero)} generators with nonzero weight, all weights >= 0")
    lines.append(report.statement())
    if args.m is not None:
        lines.append(f"d({args.m},{args.n}) >= {data['bound']}")
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, int]:
    lines = []
    failed = 0
    for res in verify.run_suite(args.suite):
        mark = "PASS" if res.ok else "FAIL"
        lines.append(f"{mark}  {res.name}: {res.cases} cases, {res.seconds:.2f} s")
        if not res.ok:
            failed += 1
            lines.append(f"      counterexample: {res.counterexample}")
    lines.append(f"{len(verify.CHECKS) - failed}/{len(verify.CHECKS)} checks passed ({args.suite})")
    return "\n".join(lines), 1 if failed else 0


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fatbounds", description="Lower bounds on the degree d(m,n) of plane curves with n general m-fold points.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json")):
        p.add_argument("--digits", type=int, default=6, help="decimal digits in approximate renderings")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = sub.add_parser("lambda", help="lambda_n and its (d, r) pair")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive)
    common(p)

    p = sub.add_parser("roe-r", help="Roé's constant r(n)")
    p.add_argument("--n", type=_positive, required=True)
    common(p)

    p = sub.add_parser("unload", help="R(m,n) by unloading")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--engine", choices=("naive", "block", "both"), default="block")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("bound", help="all lower bounds for one (m, n)")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    common(p)

    p = sub.add_parser("table", help="grid of bounds as CSV or JSON")
    p.add_argument("--m-range", type=_range, required=True, metavar="A:B")
    p.add_argument("--n-range", type=_range, required=True, metavar="A:B")
    p.add_argument("--columns", required=True, help=f"comma list from {','.join(TABLE_COLUMNS)}")
    common(p, fmt=("csv", "json"))

    p = sub.add_parser("nagata", help="check d > m sqrt(n)")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=_positive, help="degree to test (default: best known bound)")
    common(p)

    p = sub.add_parser("certificate", help="nef certificate dump")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=_positive)
    p.add_argument("--r", type=_positive)
    p.add_argument("--m", type=_positive)
    p.add_argument("--variant", choices=("main", "a", "b"), default="main")
    common(p, fmt=("json", "text"))

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", choices=verify.SUITES, default="fast")
    p.add_argument("--out", metavar="PATH")
    return parser


COMMANDS = {
    "lambda": cmd_lambda,
    "roe-r": cmd_roe_r,
    "unload": cmd_unload,
    "bound": cmd_bound,
    "table": cmd_table,
    "nagata": cmd_nagata,
    "certificate": cmd_certificate,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"fatbounds {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"fatbounds: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
