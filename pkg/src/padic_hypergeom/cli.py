"""Command-line front end: eval, verify, table, scan-zeros.

Exit codes: 0 when everything passes, 1 when any record fails, 2 on usage
errors.  Output goes to stdout; when PADIC_HYPERGEOM_OUT_DIR is set the same
bytes are also written to ``<dir>/<command>.<format>``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import verify as vf
from .errors import PadicError
from .fp_core import build_context, f_polynomial, is_prime, primes_between
from .ghyper import GParams, evaluate_g, g_family, g_tilde

OUT_DIR_ENV = "PADIC_HYPERGEOM_OUT_DIR"
CSV_COLUMNS = ["suite_id", "p", "n", "t", "pass", "precision_digits", "lhs", "rhs", "runtime_micros", "label"]


class UsageError(Exception):
    pass


# --- argument parsing ----------------------------------------------------------

def parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise UsageError(f"bad {what} {text!r}; expected N or A..B") from None


def prime_list(text: str) -> list[int]:
    lo, hi = parse_range(text, "prime")
    if lo == hi:
        if not is_prime(lo):
            raise UsageError(f"{lo} is not prime")
        if lo < 5:
            raise UsageError(f"primes must be at least 5, got {lo}")
        return [lo]
    if lo < 5 or hi < lo:
        raise UsageError(f"prime range bounds must satisfy 5 <= A <= B, got {text}")
    return primes_between(lo, hi)


def n_list(text: str) -> list[int]:
    lo, hi = parse_range(text, "n")
    if lo < 1 or hi < lo:
        raise UsageError(f"n range must satisfy 1 <= A <= B, got {text}")
    return list(range(lo, hi + 1))


def parse_row(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad parameter row {text!r}") from None


def check_precision(prec: int | None, ns: list[int]) -> None:
    if prec is not None and prec < max(ns) + 2:
        raise UsageError(f"--precision must be at least n+2 = {max(ns) + 2}")


# --- rendering -------------------------------------------------------------------

def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def compact(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def emit(command: str, fmt: str, text: str) -> None:
    sys.stdout.write(text)
    out_dir = os.environ.get(OUT_DIR_ENV)
    if out_dir:
        path = Path(out_dir) / f"{command}.{fmt}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def value_fields(gv) -> dict:
    v = gv.value
    frac = gv.as_fraction()
    return {
        "valuation": None if v.zero else v.v,
        "digits": [] if v.zero else v.digits(),
        "precision_digits": gv.precision_used,
        "recognized": None if frac is None else str(frac),
    }


# --- eval ----------------------------------------------------------------------

def cmd_eval(args) -> int:
    ps = prime_list(args.p)
    if len(ps) != 1:
        raise UsageError("eval takes a single prime")
    p = ps[0]
    if args.upper or args.lower:
        if args.family:
            raise UsageError("give either --family or --upper/--lower, not both")
        params = GParams(tuple(parse_row(args.upper or "")), tuple(parse_row(args.lower or "")))
        K = args.precision or 3
        if K < 2:
            raise UsageError("--precision must be at least 2")
        gv = evaluate_g(build_context(p, K), params, args.t)
        label = "custom"
    elif args.family == "g3n":
        n = args.n or 1
        check_precision(args.precision, [n])
        if not vf.admissible(p, n):
            raise UsageError(f"p={p} divides 3n(3n-2) for n={n}")
        gv = g_family(build_context(p, args.precision or n + 2), n, args.t)
        label = f"g3n n={n}"
    elif args.family == "gtilde":
        check_precision(args.precision, [1])
        gv = g_tilde(build_context(p, args.precision or 3), args.t)
        label = "gtilde"
    else:
        raise UsageError("eval needs --family or --upper/--lower")
    row = {"function": label, "p": p, "t": args.t % p, **value_fields(gv)}
    if args.format == "json":
        text = render_json(row)
    else:
        text = render_csv(list(row), [[compact(v) if isinstance(v, list) else ("" if v is None else v) for v in row.values()]])
    emit("eval", args.format, text)
    return 0


# --- verify --------------------------------------------------------------------

def _task(suite: str, p: int, n: int | None, K: int, mode: str, timings: bool) -> list[dict]:
    ctx = build_context(p, K)
    if suite == "thm_general1":
        recs = vf.verify_thm_general1(ctx, n, timings)
    elif suite == "cor_sv2":
        recs = vf.verify_cor_sv2(ctx, timings)
    elif suite == "thm_special1":
        recs = vf.verify_thm_special1(ctx, timings)
    elif suite == "cor_range":
        recs = vf.verify_cor_range(ctx, timings)
    elif suite == "thm_kummer":
        recs = vf.verify_thm_kummer(ctx, timings)
    elif suite == "cor_zero1":
        recs = vf.cor_zero1_records(ctx, n, timings)
    elif suite == "prop31":
        recs = vf.verify_prop31(ctx, n, timings)
    elif suite == "prop32":
        recs = vf.verify_prop32(ctx, n, timings)
    elif suite == "sec2_identities":
        recs = vf.verify_sec2_identities(ctx, mode, timings)
    elif suite == "closure":
        recs = vf.verify_closure(build_context(p, K - 2), ctx, n)
    else:  # pragma: no cover - filtered by plan_tasks
        raise UsageError(f"unknown suite {suite}")
    return [r.to_dict() for r in recs]


def plan_tasks(suites, primes, ns, prec, mode, timings) -> list[tuple]:
    tasks = []
    for suite in suites:
        for p in primes:
            if suite in ("cor_sv2", "thm_special1", "cor_range", "thm_kummer"):
                tasks.append((suite, p, None, prec or 3, mode, timings))
            elif suite == "sec2_identities":
                tasks.append((suite, p, None, max(4, prec or 4), mode, timings))
            else:
                for n in ns:
                    if not vf.admissible(p, n):
                        continue
                    if suite in ("thm_general1", "cor_zero1"):
                        K = prec or n + 2
                    else:
                        K = (prec or n + 2) + 2
                    tasks.append((suite, p, n, K, mode, timings))
    return tasks


def run_tasks(tasks, jobs: int) -> list[dict]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_task_star, tasks))
    else:
        chunks = [_task_star(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]

    def key(d):
        return (
            vf.SUITES.index(d["suite_id"]),
            *(((0, 0) if d[f] is None else (1, d[f])) for f in ("p", "n", "t")),
            d["label"],
        )

    return sorted(records, key=key)


def _task_star(args):
    return _task(*args)


def cmd_verify(args) -> int:
    if args.suite == "all":
        suites = list(vf.SUITES)
    else:
        suites = [s.strip() for s in args.suite.split(",")]
        unknown = [s for s in suites if s not in vf.SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s) {unknown}; choose from {', '.join(vf.SUITES)} or all")
    primes = prime_list(args.p)
    ns = n_list(args.n)
    check_precision(args.precision, ns)
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    tasks = plan_tasks(suites, primes, ns, args.precision, args.mode, args.timings)
    records = run_tasks(tasks, args.jobs)
    summary = {
        "total": len(records),
        "passed": sum(r["pass"] for r in records),
        "failed": sum(not r["pass"] for r in records),
    }
    config = {
        "command": "verify",
        "suites": suites,
        "primes": primes,
        "n": ns,
        "precision": args.precision,
        "mode": args.mode,
    }
    if args.format == "json":
        text = render_json({"config": config, "records": records, "summary": summary})
    else:
        rows = [[compact(r[c]) if c in ("lhs", "rhs") else _cell(r[c]) for c in CSV_COLUMNS] for r in records]
        text = render_csv(CSV_COLUMNS, rows)
    emit("verify", args.format, text)
    return 0 if summary["failed"] == 0 else 1


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


# --- table / scan-zeros -----------------------------------------------------------

def cmd_table(args) -> int:
    primes = prime_list(args.p)
    family = args.family or "g3n"
    n = args.n or 1
    check_precision(args.precision, [n])
    rows = []
    for p in primes:
        if family == "g3n":
            if not vf.admissible(p, n):
                continue
            ctx = build_context(p, args.precision or n + 2)
            values = [(t, g_family(ctx, n, t)) for t in range(p)]
        else:
            ctx = build_context(p, args.precision or 3)
            values = [(t, g_tilde(ctx, t)) for t in range(p)]
        for t, gv in values:
            rows.append({"p": p, "n": n if family == "g3n" else None, "t": t, **value_fields(gv)})
    header = ["p", "n", "t", "recognized", "valuation", "digits", "precision_digits"]
    if args.format == "json":
        text = render_json({"config": {"command": "table", "family": family, "primes": primes}, "rows": rows})
    else:
        text = render_csv(header, [[_cell(r[h]) if h != "digits" else compact(r[h]) for h in header] for r in rows])
    emit("table", args.format, text)
    return 0


def cmd_scan_zeros(args) -> int:
    primes = prime_list(args.p)
    ns = n_list(args.n)
    check_precision(args.precision, ns)
    rows = []
    for n in ns:
        for p in primes:
            if not vf.admissible(p, n):
                continue
            ctx = build_context(p, args.precision or n + 2)
            for t in range(1, p):
                gv = g_family(ctx, n, t)
                if gv.value.is_zero_mod(gv.value.absprec):
                    r = f_polynomial(ctx, n, t).r
                    rows.append({"p": p, "n": n, "t": t, "r": r, "witness_ok": r == 1})
    bad = any(not r["witness_ok"] for r in rows)
    if args.format == "json":
        text = render_json({"config": {"command": "scan-zeros", "primes": primes, "n": ns}, "zeros": rows})
    else:
        text = render_csv(["p", "n", "t", "r", "witness_ok"], [[_cell(v) for v in r.values()] for r in rows])
    emit("scan-zeros", args.format, text)
    return 1 if bad else 0


# --- entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-hypergeom",
        description="Evaluate p-adic hypergeometric functions and verify their closed-form values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, n_default):
        sp.add_argument("--p", required=True, help="prime or prime range A..B")
        sp.add_argument("--n", default=n_default, help="n or range A..B")
        sp.add_argument("--precision", type=int, default=None, help="working precision K")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    ev = sub.add_parser("eval", help="evaluate one G-function value")
    common(ev, None)
    ev.add_argument("--family", choices=("g3n", "gtilde"))
    ev.add_argument("--upper", help="comma-separated upper parameters, e.g. 1/6,5/6")
    ev.add_argument("--lower", help="comma-separated lower parameters")
    ev.add_argument("--t", type=int, required=True)

    ve = sub.add_parser("verify", help="run verification suites")
    common(ve, "1..2")
    ve.add_argument("--suite", default="all", help="comma-separated suite ids or 'all'")
    ve.add_argument("--mode", choices=("exact", "complex", "both"), default="both")
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--timings", action="store_true", help="record run times (output no longer byte-stable)")

    ta = sub.add_parser("table", help="tabulate a family over t")
    common(ta, None)
    ta.add_argument("--family", choices=("g3n", "gtilde"), default="g3n")

    sz = sub.add_parser("scan-zeros", help="list zeros of the g3n family on F_p^x")
    common(sz, "1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.command in ("eval", "table"):
        try:
            args.n = int(args.n)
        except ValueError:
            parser.error(f"--n must be an integer for {args.command}")
    handlers = {"eval": cmd_eval, "verify": cmd_verify, "table": cmd_table, "scan-zeros": cmd_scan_zeros}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except PadicError as exc:
        parser.error(f"{type(exc).__name__}: {exc}")
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
