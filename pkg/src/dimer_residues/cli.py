"""Command-line interface: ``dimer-residues {compute,table,verify,bench}``.

Exit status: 0 on success (including expected counterexamples), 1 on a
mathematical mismatch, 2 on usage or configuration errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
import tracemalloc
from typing import Sequence

from .engine import (
    CACHE_ENV_VAR,
    RecordCache,
    b_counting,
    b_discriminant,
    b_symmetric,
    compute_range,
    parse_methods,
    resolve_cache_path,
    to_decimal,
)
from .errors import DimerError, InsufficientData, WidthCapExceeded
from .residues import CHECKS, residue_table, verify, verify_closed_forms
from .symmetric import h_poly
from .tiling import DEFAULT_WIDTH_CAP

log = logging.getLogger("dimer_residues")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

BENCH_SUITES = {
    "counting": lambda n, cap: b_counting(n, cap),
    "symmetric": lambda n, cap: b_symmetric(n),
    "discriminant": lambda n, cap: b_discriminant(n),
}


class UsageError(Exception):
    pass


def _modulus(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if m < 2 or m & (m - 1) or m > 1 << 64:
        raise argparse.ArgumentTypeError(f"modulus must be 2**r with 1 <= r <= 64, got {m}")
    return m


def _exponent(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= r <= 64:
        raise argparse.ArgumentTypeError("r must lie in 1..64")
    return r


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _add_common(p: argparse.ArgumentParser, fmt=True):
    if fmt:
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--cache", help=f"cache file (default: ${CACHE_ENV_VAR} or user data dir)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    p.add_argument("--width-cap", type=_positive, default=DEFAULT_WIDTH_CAP,
                   help="largest board width the DP route may use")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimer-residues",
        description="Exact B_n for the 2n x 2n dimer problem and their residues mod 2^r.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute B_n records")
    p.add_argument("--n", type=_positive, action="append", help="n (repeatable)")
    p.add_argument("--from", dest="n_from", type=_positive)
    p.add_argument("--to", dest="n_to", type=_positive)
    p.add_argument("--method", default="discriminant",
                   help="comma list of dp, symmetric (sym), discriminant (disc), or all")
    p.add_argument("--modulus", type=_modulus, action="append", default=[])
    p.add_argument("--r", type=_exponent, action="append", default=[],
                   help="add residues mod 2^r (repeatable)")
    _add_common(p)

    p = sub.add_parser("table", help="residue table of B_n mod 2^r")
    p.add_argument("--from", dest="n_from", type=_positive, default=1)
    p.add_argument("--to", dest="n_to", type=_positive, required=True)
    p.add_argument("--modulus", type=_modulus, action="append", default=[])
    p.add_argument("--r", type=_exponent, action="append", default=[])
    p.add_argument("--method", default="discriminant")
    _add_common(p)

    p = sub.add_parser("verify", help="check the residue theorems and corollaries")
    p.add_argument("--check", choices=CHECKS + ("closed", "all"), default="all")
    p.add_argument("--r", type=_exponent, default=None,
                   help="exponent for theoremA (default 5)")
    p.add_argument("--min-n", type=_positive, default=1)
    p.add_argument("--max-n", type=_positive, default=128)
    p.add_argument("--method", default="discriminant", help="route that supplies B_n")
    _add_common(p)

    p = sub.add_parser("bench", help="time one route per n (CSV)")
    p.add_argument("--suite", choices=tuple(BENCH_SUITES), required=True)
    p.add_argument("--min-n", type=_positive, default=1)
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--output", "-o")
    p.add_argument("--width-cap", type=_positive, default=DEFAULT_WIDTH_CAP)
    return parser


# -- helpers ----------------------------------------------------------------


def _cache(args) -> RecordCache | None:
    if args.no_cache:
        return None
    return RecordCache(resolve_cache_path(args.cache))


def _moduli(args, default=()) -> list[int]:
    mods = set(args.modulus) | {1 << r for r in args.r}
    return sorted(mods) if mods else list(default)


def _n_values(args) -> list[int]:
    ns = set(args.n or [])
    if args.n_from is not None or args.n_to is not None:
        if args.n_from is None or args.n_to is None:
            raise UsageError("--from and --to must be given together")
        if args.n_from > args.n_to:
            raise UsageError("empty range: --from exceeds --to")
        ns.update(range(args.n_from, args.n_to + 1))
    if not ns:
        raise UsageError("give --n or --from/--to")
    return sorted(ns)


def _methods(text: str):
    try:
        return parse_methods(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _b_values(args, ns, methods) -> dict[int, int]:
    recs = compute_range(ns, methods, _cache(args), width_cap=args.width_cap, jobs=args.jobs)
    return {r.n: r.b for r in recs}


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_lines(objs) -> str:
    return "".join(json.dumps(o, separators=(",", ":")) + "\n" for o in objs)


# -- subcommands ------------------------------------------------------------


def cmd_compute(args) -> tuple[int, str]:
    ns = _n_values(args)
    methods = _methods(args.method)
    recs = compute_range(ns, methods, _cache(args), _moduli(args), args.width_cap, args.jobs)
    if args.format == "json":
        return EXIT_OK, _json_lines(r.to_json() for r in recs)
    mods = sorted({m for r in recs for m in r.residues})
    if args.format == "csv":
        header = ["n", "A_n", "B_n", "methods"] + [str(m) for m in mods]
        rows = [
            [r.n, "" if r.a is None else to_decimal(r.a), to_decimal(r.b),
             ";".join(sorted(r.methods))] + [to_decimal(r.residues[m]) for m in mods]
            for r in recs
        ]
        return EXIT_OK, _csv_text(header, rows)
    lines = []
    for r in recs:
        parts = [f"n={r.n}", f"B_n={to_decimal(r.b)}"]
        if r.a is not None:
            parts.append(f"A_n={to_decimal(r.a)}")
        parts.append("methods=" + ",".join(sorted(r.methods)))
        parts.append("residues=" + " ".join(f"{m}:{v}" for m, v in r.residues.items()))
        lines.append("  ".join(parts))
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_table(args) -> tuple[int, str]:
    if args.n_from > args.n_to:
        raise UsageError("empty range: --from exceeds --to")
    ns = range(args.n_from, args.n_to + 1)
    mods = _moduli(args, default=(64,))
    rows = residue_table(_b_values(args, ns, _methods(args.method)), mods)
    if args.format == "json":
        return EXIT_OK, _json_lines(
            {"n": row["n"], **{str(m): to_decimal(row[m]) for m in mods}} for row in rows
        )
    if args.format == "csv":
        return EXIT_OK, _csv_text(
            ["n"] + [str(m) for m in mods], [[row["n"]] + [row[m] for m in mods] for row in rows]
        )
    width = max(len(str(m)) for m in mods) + 2
    head = "n".rjust(5) + "".join(f"mod {m}".rjust(width + 4) for m in mods)
    body = [
        str(row["n"]).rjust(5) + "".join(str(row[m]).rjust(width + 4) for m in mods)
        for row in rows
    ]
    return EXIT_OK, "\n".join([head] + body) + "\n"


def _closed_report(args):
    ns = range(args.min_n, args.max_n + 1)
    ok, rows = verify_closed_forms(h_poly(n) for n in ns)
    summary = {
        "check": "closed",
        "n_min": args.min_n,
        "n_max": args.max_n,
        "claims": len(rows),
        "mismatches": [r["n"] for r in rows if not r["match"]],
        "expected_mismatches": [],
        "verdict": "pass" if ok else "fail",
    }
    return ok, rows, summary


def cmd_verify(args) -> tuple[int, str]:
    if args.min_n > args.max_n:
        raise UsageError("empty range: --min-n exceeds --max-n")
    if args.check == "all":
        plan = [("theoremA", 5), ("theoremA", 6), ("theoremB", None), ("corA", None)]
        span = args.max_n - args.min_n
        if span >= 32:
            plan.append(("cor1", None))
        if span >= 64:
            plan.append(("cor2", None))
        plan.append(("closed", None))
    elif args.check == "theoremA":
        plan = [("theoremA", args.r if args.r is not None else 5)]
    else:
        plan = [(args.check, None)]

    b_values = None
    if any(check != "closed" for check, _ in plan):
        ns = range(args.min_n, args.max_n + 1)
        b_values = _b_values(args, ns, _methods(args.method))

    summaries, claim_rows, passed = [], [], True
    for check, r in plan:
        if check == "closed":
            if args.check == "all" and args.max_n > 12:
                sub = argparse.Namespace(**{**vars(args), "max_n": max(args.min_n, 12)})
            else:
                sub = args
            ok, _, summary = _closed_report(sub)
        else:
            try:
                rep = verify(check, b_values, r)
            except InsufficientData as exc:
                raise UsageError(str(exc)) from None
            ok, summary = rep.passed, rep.summary()
            claim_rows.extend({"check": check, **c.to_dict()} for c in rep.claims)
        passed = passed and ok
        summaries.append(summary)

    if args.format == "json":
        out = _json_lines(
            [{"schema": 1, "kind": "claim", **row} for row in claim_rows]
            + [{"schema": 1, "kind": "summary", **s} for s in summaries]
        )
    elif args.format == "csv":
        out = _csv_text(
            ["check", "n", "modulus", "predicted", "observed", "verdict"],
            [[c["check"], c["n"], c["modulus"], c["predicted"], c["observed"], c["verdict"]]
             for c in claim_rows],
        )
    else:
        lines = []
        for s in summaries:
            label = s["check"] + (f" r={s['r']}" if "r" in s else "")
            line = (f"{label}: {s['verdict'].upper()} over n={s['n_min']}..{s['n_max']} "
                    f"({s['claims']} claims, mismatches {s['mismatches'] or 'none'})")
            if s["expected_mismatches"]:
                line += f"; expected counterexamples {s['expected_mismatches']}"
            if "minimal_period" in s:
                line += f"; minimal period {s['minimal_period']}"
            lines.append(line)
        out = "\n".join(lines) + "\n"
    return (EXIT_OK if passed else EXIT_MISMATCH), out


def cmd_bench(args) -> tuple[int, str]:
    if args.min_n > args.max_n:
        raise UsageError("empty range: --min-n exceeds --max-n")
    run = BENCH_SUITES[args.suite]
    if args.suite == "counting" and 2 * args.max_n > args.width_cap:
        raise WidthCapExceeded(2 * args.max_n, args.width_cap)
    rows = []
    for n in range(args.min_n, args.max_n + 1):
        tracemalloc.start()
        t0 = time.perf_counter()
        run(n, args.width_cap)
        elapsed = time.perf_counter() - t0
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()
        rows.append([args.suite, n, f"{elapsed:.6f}", peak])
    return EXIT_OK, _csv_text(["suite", "n", "seconds", "peak_bytes"], rows)


COMMANDS = {
    "compute": cmd_compute,
    "table": cmd_table,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        code, text = COMMANDS[args.command](args)
    except (UsageError, WidthCapExceeded, ValueError) as exc:
        print(f"dimer-residues: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dimer-residues: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DimerError as exc:
        print(f"dimer-residues: mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
