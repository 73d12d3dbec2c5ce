"""Command-line interface.

Subcommands: count (top-degree count, selectable route), table (all degrees),
verify (all routes plus the brute-force oracle, per-check pass/fail), bench
(wall-clock timings as CSV).  Exit codes are a stable contract: 0 success,
2 identity/verification failure, 3 guard or cap refusal, 4 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .counting import (
    CountTable,
    count_all_routes,
    count_degree_below,
    count_top_degree,
    count_top_degree_cyclotomic,
    count_top_degree_partitions,
    character_matrix,
    full_count_table,
    gauss_sums,
    monomial_matrix,
)
from .errors import GuardError, IdentityCheckError, InputError
from .field import build_field, parse_field_spec
from .oracle import MAX_ASSIGNMENTS, brute_force_table
from .permanent import MAX_BELL, MAX_NAIVE, MAX_RYSER, permanent_naive, permanent_ryser

ROUTES = ("groupring", "cyclotomic", "partition", "all")
BENCH_ROUTES = ("naive", "ryser", "cyclotomic", "partition")


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad usage through the package's exit-code 4
    channel instead of its built-in exit(2)."""

    def error(self, message):
        raise InputError(message)


def _default_threads():
    raw = os.environ.get("PERMCOUNT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"PERMCOUNT_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise InputError("PERMCOUNT_THREADS must be >= 1")
    return n


def build_parser():
    parser = _Parser(prog="permcount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = _Parser(add_help=False)
    common.add_argument("--field", required=True, help='field spec: "p", "p^r", or "p^r:c_r,...,c_0"')
    common.add_argument("--modulus", help="modulus coefficients, high degree first, comma separated")
    common.add_argument("--d", type=int, help="target degree (defaults to q-2)")
    common.add_argument("--route", default="all", help="counting route or 'all'")
    common.add_argument("--threads", type=int, default=None, help="worker count (default: PERMCOUNT_THREADS or 1)")
    common.add_argument("--format", default="text", choices=("text", "json", "csv"), dest="fmt")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--max-naive", type=int, default=MAX_NAIVE)
    common.add_argument("--max-ryser", type=int, default=MAX_RYSER)
    common.add_argument("--max-bell", type=int, default=MAX_BELL)
    common.add_argument("--max-oracle", type=int, default=MAX_ASSIGNMENTS)
    for name, helptext in (
        ("count", "count permutation polynomials of the top degree"),
        ("table", "counts for every degree 1..q-2"),
        ("verify", "cross-check every route against the brute-force oracle"),
        ("bench", "wall-clock timings per route (CSV)"),
    ):
        sub.add_parser(name, parents=[common], help=helptext)
    return parser


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_json(payload):
    """Canonical JSON: parsing and re-dumping is byte-identical."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _payload(ctx, command, results, checks, timings):
    return {
        "q": ctx.q,
        "p": ctx.p,
        "r": ctx.r,
        "command": command,
        "results": sorted(results, key=lambda row: str(row.get("route", ""))),
        "checks": sorted(checks, key=lambda c: c["name"]),
        "timings": sorted(timings, key=lambda t: t["route"]),
    }


def _route_row(report):
    row = {"route": report.route, "d": report.d, "n_value": report.n_value}
    if report.coeff_constant is not None:
        row["coeff_constant"] = report.coeff_constant
        row["coeff_unit"] = report.coeff_unit
        row["coeffs"] = list(report.coeffs)
    if report.per_v is not None:
        row["per_v"] = report.per_v
    if report.bound_lo is not None:
        row["bound_lo"] = str(report.bound_lo)
        row["bound_hi"] = str(report.bound_hi)
    return row


def _report_checks(reports):
    checks = []
    any_eq3 = [r for r in reports.values() if r.identity_eq3_ok is not None]
    if any_eq3:
        checks.append({"name": "eq3", "ok": all(r.identity_eq3_ok for r in any_eq3)})
    any_eq4 = [r for r in reports.values() if r.identity_eq4_ok is not None]
    if any_eq4:
        checks.append({"name": "eq4", "ok": all(r.identity_eq4_ok for r in any_eq4)})
    checks.append(
        {"name": "bound", "ok": all(r.bound_ok for r in reports.values())}
    )
    if len(reports) > 1:
        agree = len({r.n_value for r in reports.values()}) == 1
        checks.append({"name": "route_agreement", "ok": agree})
    return checks


def _build_ctx(args):
    p, r, modulus = parse_field_spec(args.field, args.modulus)
    return build_field(p, r, modulus)


def _threads(args):
    return args.threads if args.threads is not None else _default_threads()


def _run_single_route(ctx, route, threads, args):
    if route == "groupring":
        return count_top_degree(ctx, threads=threads, max_ryser=args.max_ryser)
    if route == "cyclotomic":
        return count_top_degree_cyclotomic(ctx, threads=threads, max_ryser=args.max_ryser)
    if route == "partition":
        return count_top_degree_partitions(
            ctx, threads=threads, max_ryser=args.max_ryser, max_bell=args.max_bell
        )
    raise InputError(f"unknown route {route!r} (choose from {', '.join(ROUTES)})")


def cmd_count(args):
    ctx = _build_ctx(args)
    threads = _threads(args)
    if args.d is not None and not 1 <= args.d <= ctx.q - 2:
        raise InputError(f"--d must lie in [1, {ctx.q - 2}]")
    if args.d is not None and args.d != ctx.q - 2:
        # lower degrees need the whole descending recursion
        t0 = time.perf_counter()
        table = full_count_table(ctx, threads=threads, max_ryser=args.max_ryser)
        millis = (time.perf_counter() - t0) * 1000.0
        results = [
            {
                "route": "table",
                "d": args.d,
                "n_value": table.entries[args.d],
                "n_lidl_mullen": table.lidl_mullen[args.d],
            }
        ]
        checks = [{"name": k, "ok": v} for k, v in table.checks().items()]
        timings = [{"route": "table", "millis": millis}]
        payload = _payload(ctx, "count", results, checks, timings)
    elif args.route == "all":
        reports = count_all_routes(
            ctx, threads=threads, max_ryser=args.max_ryser, max_bell=args.max_bell
        )
        payload = _payload(
            ctx,
            "count",
            [_route_row(r) for r in reports.values()],
            _report_checks(reports),
            [{"route": r.route, "millis": r.millis} for r in reports.values()],
        )
    else:
        report = _run_single_route(ctx, args.route, threads, args)
        payload = _payload(
            ctx,
            "count",
            [_route_row(report)],
            _report_checks({report.route: report}),
            [{"route": report.route, "millis": report.millis}],
        )
    _emit_count_like(payload, args)
    return 0 if all(c["ok"] for c in payload["checks"]) else 2


def _emit_count_like(payload, args):
    if args.fmt == "json":
        _emit(render_json(payload), args.out)
    elif args.fmt == "csv":
        rows = [
            (
                row.get("route", ""),
                row.get("d", ""),
                row.get("n_value", ""),
                row.get("coeff_constant", ""),
                row.get("coeff_unit", ""),
                row.get("per_v", ""),
            )
            for row in payload["results"]
        ]
        _emit(_csv_text(("route", "d", "n_value", "coeff_constant", "coeff_unit", "per_v"), rows), args.out)
    else:
        lines = [f"F_{payload['q']} (p={payload['p']}, r={payload['r']}) {payload['command']}"]
        for row in payload["results"]:
            bits = ", ".join(
                f"{k}={row[k]}" for k in ("d", "n_value", "coeff_constant", "coeff_unit", "per_v")
                if k in row
            )
            lines.append(f"  {row['route']}: {bits}")
        for c in payload["checks"]:
            lines.append(f"  check {c['name']}: {'PASS' if c['ok'] else 'FAIL'}")
        _emit("\n".join(lines) + "\n", args.out)


def _table_rows(table):
    rows = [[d, n, lm] for d, n, lm in table.rows()]
    rows.append(["total", table.total, table.q * table.total])
    return rows


def cmd_table(args):
    ctx = _build_ctx(args)
    t0 = time.perf_counter()
    table = full_count_table(ctx, threads=_threads(args), max_ryser=args.max_ryser)
    millis = (time.perf_counter() - t0) * 1000.0
    checks = [{"name": k, "ok": v} for k, v in table.checks().items()]
    if args.fmt == "csv":
        _emit(_csv_text(("d", "N_fixed0", "N_lidl_mullen"), _table_rows(table)), args.out)
    elif args.fmt == "json":
        results = [
            {"route": "table", "d": d, "n_value": n, "n_lidl_mullen": lm}
            for d, n, lm in table.rows()
        ]
        results.append(
            {"route": "total", "n_value": table.total, "n_lidl_mullen": table.q * table.total}
        )
        payload = _payload(ctx, "table", results, checks, [{"route": "table", "millis": millis}])
        _emit(render_json(payload), args.out)
    else:
        lines = [f"F_{ctx.q} counts by degree (fixed f(0)=0 / unnormalised)"]
        for d, n, lm in table.rows():
            lines.append(f"  d={d}: {n} / {lm}")
        lines.append(f"  total: {table.total} / {table.q * table.total}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args):
    ctx = _build_ctx(args)
    threads = _threads(args)
    timings = []
    results = []
    checks = []

    t0 = time.perf_counter()
    reports = count_all_routes(
        ctx, threads=threads, max_ryser=args.max_ryser, max_bell=args.max_bell
    )
    timings.append({"route": "routes", "millis": (time.perf_counter() - t0) * 1000.0})
    results.extend(_route_row(r) for r in reports.values())
    checks.extend(_report_checks(reports))

    t0 = time.perf_counter()
    table = full_count_table(ctx, threads=threads, max_ryser=args.max_ryser)
    timings.append({"route": "table", "millis": (time.perf_counter() - t0) * 1000.0})
    for name, ok in table.checks().items():
        checks.append({"name": f"table_{name.replace('-', '_')}", "ok": ok})
    results.append({"route": "table", "entries": [[d, n] for d, n, _ in table.rows()]})

    t0 = time.perf_counter()
    oracle = brute_force_table(ctx, cap=args.max_oracle, workers=threads)
    timings.append({"route": "oracle", "millis": (time.perf_counter() - t0) * 1000.0})
    results.append({"route": "oracle", "entries": [[d, n] for d, n, _ in oracle.rows()]})
    checks.append({"name": "oracle_match", "ok": oracle.entries == table.entries})

    gauss = gauss_sums(ctx)
    checks.append({"name": "gauss_lambda0", "ok": gauss.lambda0_ok})
    checks.append({"name": "gauss_modulus", "ok": gauss.modulus_ok})
    results.append(
        {
            "route": "gauss",
            "mod_squares": [float(m) for m in gauss.mod_squares],
            "max_rel_err": gauss.max_rel_err,
        }
    )

    payload = _payload(ctx, "verify", results, checks, timings)
    if args.fmt == "json":
        _emit(render_json(payload), args.out)
    elif args.fmt == "csv":
        rows = [(c["name"], "PASS" if c["ok"] else "FAIL") for c in payload["checks"]]
        _emit(_csv_text(("check", "result"), rows), args.out)
    else:
        lines = [f"F_{ctx.q} (p={ctx.p}, r={ctx.r}) verify"]
        for c in payload["checks"]:
            lines.append(f"  check {c['name']}: {'PASS' if c['ok'] else 'FAIL'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(c["ok"] for c in payload["checks"]) else 2


def _bench_one(ctx, route, threads, args):
    t0 = time.perf_counter()
    if route == "naive":
        permanent_naive(monomial_matrix(ctx), max_n=args.max_naive)
    elif route == "ryser":
        permanent_ryser(monomial_matrix(ctx), threads=threads, max_n=args.max_ryser)
    elif route == "cyclotomic":
        permanent_ryser(character_matrix(ctx), threads=threads, max_n=args.max_ryser)
    elif route == "partition":
        count_top_degree_partitions(
            ctx, threads=threads, max_ryser=args.max_ryser, max_bell=args.max_bell
        )
    else:
        raise InputError(
            f"unknown bench route {route!r} (choose from {', '.join(BENCH_ROUTES)} or 'all')"
        )
    return (time.perf_counter() - t0) * 1000.0


def cmd_bench(args):
    threads = _threads(args)
    routes = BENCH_ROUTES if args.route == "all" else (args.route,)
    rows = []
    for field_text in args.field.split(","):
        p, r, modulus = parse_field_spec(field_text.strip(), args.modulus)
        ctx = build_field(p, r, modulus)
        for route in sorted(routes):
            millis = _bench_one(ctx, route, threads, args)
            rows.append((field_text.strip(), route, ctx.q - 1, f"{millis:.3f}"))
    _emit(_csv_text(("field", "route", "n", "millis"), rows), args.out)
    return 0


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        handler = {
            "count": cmd_count,
            "table": cmd_table,
            "verify": cmd_verify,
            "bench": cmd_bench,
        }[args.command]
        return handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except IdentityCheckError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
