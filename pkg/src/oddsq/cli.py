"""Command-line front end: tables, scans, oscillation studies, crossover.

Exit codes: 0 success, 1 usage or I/O error, 2 mathematical mismatch or
predicate violation, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import bhp_bound, inclusion_exclusion, interval_counts, sieve_oracle
from .errors import (
    BudgetExceededError,
    CertificateError,
    DomainError,
    OracleMismatchError,
    RangeError,
)
from .multiplicity import multiplicity_record

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3

# P reported for the first window in a published table; direct computation
# of (1, 9) finds the three primes 3, 5, 7.
PUBLISHED_FIRST_WINDOW_COUNT = 2

P1_NOTE = (
    "note: k=1 computed P = 3 (primes 3, 5, 7 in (1, 9)); a published "
    f"table reports {PUBLISHED_FIRST_WINDOW_COUNT}."
)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _ks_list(text: str) -> list[int]:
    try:
        ks = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid k list: {text!r}")
    if not ks:
        raise argparse.ArgumentTypeError("empty k list")
    return ks


def _resolve_workers(value: int | None) -> int:
    if value is None:
        env = os.environ.get("ODDSQ_WORKERS")
        if env is not None:
            try:
                value = int(env)
            except ValueError:
                raise DomainError(f"ODDSQ_WORKERS must be an integer, got {env!r}")
        else:
            value = os.cpu_count() or 1
    if value < 1:
        raise DomainError(f"workers must be >= 1, got {value}")
    return value


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_bytes(text.encode("utf-8"))


def cmd_verify(args) -> int:
    if args.k_min > args.k_max:
        sys.stderr.write(f"error: empty range {args.k_min}..{args.k_max}\n")
        return EXIT_USAGE
    rows = []
    all_match = True
    for k in range(args.k_min, args.k_max + 1):
        s = interval_counts.summarize(k)
        p_orc = sieve_oracle.p_oracle(k) if args.oracle else None
        match = (p_orc == s.p_identity) if args.oracle else True
        all_match = all_match and match
        rows.append((s, p_orc, match))

    if args.format == "json":
        payload = {
            "command": "verify",
            "k_min": args.k_min,
            "k_max": args.k_max,
            "oracle": bool(args.oracle),
            "all_match": all_match,
            "rows": [
                {
                    "k": s.k,
                    "n_count": s.n_count,
                    "s_total": s.s_total,
                    "e_excess": s.e_excess,
                    "p_identity": s.p_identity,
                    "c_composites": s.c_composites,
                    "p_oracle": p_orc,
                    "match": match,
                }
                for s, p_orc, match in rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = ["k,N,S,E,P_identity,P_oracle,match"]
        for s, p_orc, match in rows:
            orc = "" if p_orc is None else str(p_orc)
            lines.append(
                f"{s.k},{s.n_count},{s.s_total},{s.e_excess},"
                f"{s.p_identity},{orc},{str(match).lower()}"
            )
        text = "\n".join(lines) + "\n"

    _emit(text, args.out)
    return EXIT_OK if all_match else EXIT_MISMATCH


def cmd_table(args) -> int:
    summaries = [interval_counts.summarize(k) for k in args.ks]
    ratios = interval_counts.ratio_report(args.ks)
    header = ["k", "N", "S", "E", "P", "S-N", "E/(S-N)"]
    body = [
        [
            str(s.k),
            str(s.n_count),
            str(s.s_total),
            str(s.e_excess),
            str(s.p_identity),
            str(r.s_minus_n),
            r.ratio if r.ratio is not None else "undefined",
        ]
        for s, r in zip(summaries, ratios)
    ]
    widths = [
        max(len(header[c]), max(len(row[c]) for row in body))
        for c in range(len(header))
    ]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in body:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    if 1 in args.ks:
        print(P1_NOTE)
    return EXIT_OK


def cmd_multiplicity(args) -> int:
    rec = multiplicity_record(args.n)
    ds = ",".join(str(d) for d in rec.divisors)
    cells = ",".join(f"({p.i},{p.j})" for p in rec.positions)
    print(f"r={rec.r}; d=[{ds}]; positions=[{cells}]; {rec.classification.value}")
    return EXIT_OK


def cmd_oscillate(args) -> int:
    rep = inclusion_exclusion.oscillation(
        args.k, args.m_max, node_budget=args.node_budget
    )
    s = interval_counts.summarize(args.k)
    print(f"k={args.k}: N={s.n_count} S={s.s_total} P={s.p_identity}")
    print(f"s1 = {rep.partial_sums[0]:+d}")
    for i, m in enumerate(range(2, 2 + len(rep.l_terms))):
        print(f"m={m}: L={rep.l_terms[i]}, s={rep.partial_sums[i + 1]:+d}")
    if rep.exhausted:
        ok = rep.final == s.p_identity
        verdict = "match" if ok else "MISMATCH"
        print(f"exhausted: final = {rep.final}; P = {s.p_identity}; {verdict}")
        return EXIT_OK if ok else EXIT_MISMATCH
    print(f"not exhausted at m_max={args.m_max}; last partial sum "
          f"{rep.partial_sums[-1]:+d}")
    return EXIT_OK


def cmd_bhp(args) -> int:
    report = bhp_bound.verified_range_report(10_000)
    cross = report.crossover
    print(f"crossover k* = {cross.k_star}")
    print(f"condition holds at k* and fails at k*+1 = {cross.k_star + 1}")
    print(str(report))
    return EXIT_OK


def _write_checkpoint(path: Path, k: int, predicate: str) -> None:
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    line = json.dumps(
        {"highest_verified_k": k, "predicate": predicate, "timestamp": stamp}
    )
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(line + "\n", encoding="utf-8")
    os.replace(tmp, path)


def cmd_scan(args) -> int:
    if args.k_min > args.k_max:
        sys.stderr.write(f"error: empty range {args.k_min}..{args.k_max}\n")
        return EXIT_USAGE
    predicate = interval_counts.Predicate(args.predicate)
    workers = _resolve_workers(args.workers)

    start = args.k_min
    if args.checkpoint is not None and args.checkpoint.exists():
        data = json.loads(args.checkpoint.read_text(encoding="utf-8"))
        if data.get("predicate") != predicate.value:
            sys.stderr.write(
                f"error: checkpoint predicate {data.get('predicate')!r} does "
                f"not match requested {predicate.value!r}\n"
            )
            return EXIT_USAGE
        # Re-verify the checkpointed k itself to guard against partial writes.
        start = max(args.k_min, min(int(data["highest_verified_k"]), args.k_max))
        if start > args.k_min:
            sys.stderr.write(f"resuming at k={start} (re-verifying it)\n")

    chunk_done = None
    if args.checkpoint is not None:
        chunk_done = lambda k: _write_checkpoint(args.checkpoint, k, predicate.value)

    outcome = interval_counts.scan(
        start,
        args.k_max,
        predicate,
        workers=workers,
        oracle=args.oracle,
        chunk_done=chunk_done,
    )

    payload = {
        "command": "scan",
        "k_min": outcome.k_min,
        "k_max": outcome.k_max,
        "predicate": outcome.predicate.value,
        "oracle": bool(args.oracle),
        "violations": outcome.violations,
        "min_p": outcome.min_p,
        "argmin_k": outcome.argmin_k,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    sys.stderr.write(
        f"scanned k in [{outcome.k_min}, {outcome.k_max}] "
        f"predicate={outcome.predicate.value} workers={workers}: "
        f"{len(outcome.violations)} violations, min P = {outcome.min_p} "
        f"at k = {outcome.argmin_k}, elapsed {outcome.elapsed:.1f}s\n"
    )
    if outcome.k_min == 1:
        sys.stderr.write(P1_NOTE + "\n")
    return EXIT_MISMATCH if outcome.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="oddsq",
        description=(
            "Prime counting between consecutive odd squares via divisor "
            "multiplicities: P = N - S + E per window, sieve-checked."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("verify", help="emit per-window counts, optionally sieve-checked")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="recount primes with the segmented sieve")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path, help="write output here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="aligned table of N, S, E, P and the excess ratio")
    p.add_argument("--ks", type=_ks_list, required=True,
                   help="comma-separated window indices")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("multiplicity", help="inspect one odd integer")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("oscillate",
                       help="inclusion-exclusion terms and partial sums for one window")
    p.add_argument("k", type=int)
    p.add_argument("--m-max", type=int, default=64)
    p.add_argument("--node-budget", type=int,
                   default=inclusion_exclusion.DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_oscillate)

    p = sub.add_parser("bhp", help="exact crossover of the length condition")
    p.set_defaults(func=cmd_bhp)

    p = sub.add_parser("scan", help="check a prime-count predicate over a k range")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--predicate", default="PrimeExists",
                   choices=[pred.value for pred in interval_counts.Predicate])
    p.add_argument("--workers", type=int, default=None,
                   help="default: ODDSQ_WORKERS or all cores")
    p.add_argument("--oracle", action="store_true",
                   help="recount every window with the segmented sieve")
    p.add_argument("--checkpoint", type=Path,
                   help="record the verified frontier here; resumes if present")
    p.add_argument("--out", type=Path, help="write the outcome JSON here")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (OracleMismatchError, CertificateError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MISMATCH
    except (DomainError, RangeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
