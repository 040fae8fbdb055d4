"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a failure, 2 on usage,
parse, definedness or budget errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .census import DEFAULT_BUDGET, enumerate_gotzmann
from .errors import BudgetExceeded, LexGrowthError
from .formats import format_monomial, parse_set, read_set_file
from .gotzmann import component_theorem_check, is_gotzmann, slice_growth_check
from .growth import growth_R_oracle, growth_S, growth_S_oracle, lex_growth, lex_segment, ring_growth
from .monomials import RingSpec
from .verify import (
    SweepConfig,
    check_compression,
    check_growth_oracle,
    check_minimality,
    check_quotient_formulas,
    check_slice_theorems,
    check_transfer,
    emit_report,
    counterexample_result,
    report_json,
    report_text,
    sweep_monotonicity,
    sweep_two_lex,
    SweepResult,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from None


def _ring(text: str) -> RingSpec:
    try:
        return RingSpec.parse(text)
    except LexGrowthError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(args: argparse.Namespace, text: str, payload: dict | list, rows: list[dict] | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        print(_csv(rows if rows is not None else [payload]))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_growth(args: argparse.Namespace) -> int:
    ring: RingSpec = args.ring
    if ring.is_polynomial:
        value = growth_S(args.d, ring.n, args.t)
        formula = "binomial-rep"
        oracle = growth_S_oracle(args.d, ring.n, args.t) if args.oracle else None
    else:
        if args.t is None:
            raise _Usage("--t is required for a quotient ring")
        value = ring_growth(ring, args.t, args.d)
        a = ring.x1_cap
        formula = "quotient-regime" if a is not None else "direct-construction"
        oracle = None
        if args.oracle:
            oracle = growth_R_oracle(args.d, ring.n, a, args.t) if a is not None else lex_growth(ring, args.t, args.d)
    payload = {"ring": str(ring), "d": args.d, "t": args.t, "growth": value, "formula": formula}
    if oracle is not None:
        payload["oracle"] = oracle
    text = str(value) if oracle is None else f"{value} (oracle {oracle})"
    _emit(args, text, payload)
    return EXIT_FAIL if oracle is not None and oracle != value else EXIT_OK


def cmd_lexseg(args: argparse.Namespace) -> int:
    L = lex_segment(args.ring, args.t, args.d)
    mons = [format_monomial(m) for m in L.sorted()]
    _emit(
        args,
        "\n".join(mons),
        {"ring": str(args.ring), "t": args.t, "d": args.d, "members": [list(m) for m in L.sorted()]},
        [{"monomial": m} for m in mons] or [{"monomial": ""}],
    )
    return EXIT_OK


def _read_set(args: argparse.Namespace):
    if (args.set is None) == (args.file is None):
        raise _Usage("give exactly one of --set or --file")
    if args.set is not None:
        return parse_set(args.set, args.ring, args.t)
    try:
        return read_set_file(args.file, args.ring, args.t)
    except OSError as exc:
        raise _Usage(f"cannot read {args.file}: {exc.strerror}") from None


def cmd_check(args: argparse.Namespace) -> int:
    M = _read_set(args)
    report = is_gotzmann(M)
    verdict = "GOTZMANN" if report.is_gotzmann else "NOT GOTZMANN"
    payload = report.as_dict()
    lines = [verdict]
    if args.verbose:
        lines.append(f"ring {M.ring}, t={M.degree}, d={len(M)}: shadow {report.actual}, lex target {report.target}")
        for p in report.profiles:
            lines.append(f"axis {p.axis + 1}: slice sizes {list(p.counts)}")
    if args.axis is not None and M.ring.is_polynomial and report.is_gotzmann:
        axis = args.axis - 1
        slices = slice_growth_check(M, axis)
        branches = component_theorem_check(M, axis)
        payload["slice_growth"] = [{"i": r.index, "actual": r.actual, "expected": r.expected} for r in slices]
        payload["components"] = [{"i": r.index, "branch": r.branch, "holds": r.holds} for r in branches]
        if args.verbose:
            lines += [f"  i={r.index}: slice growth {r.actual} (formula {r.expected})" for r in slices]
            lines += [f"  i={r.index}: {r.branch} {'holds' if r.holds else 'FAILS'}" for r in branches]
    row = {k: payload[k] for k in ("ring", "t", "d", "actual", "target", "gotzmann")}
    _emit(args, "\n".join(lines), payload, [row])
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    rec = enumerate_gotzmann(
        args.ring,
        args.t,
        args.d,
        store_witnesses=args.witnesses or args.output is not None,
        budget=args.budget,
        workers=args.workers,
        prune=args.prune,
    )
    timing = not args.no_timing
    summary = rec.summary(timing)
    lines = rec.witness_lines()
    if args.output:
        Path(args.output).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    if args.summary:
        Path(args.summary).write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    text_lines = list(lines) if (args.witnesses and not args.output) else []
    text_lines.append(
        f"{rec.count} Gotzmann subsets of size {rec.size} in degree {rec.degree} of {rec.ring} "
        f"(target {rec.target}, {rec.subsets} subsets, min shadow {rec.min_shadow})"
    )
    payload = dict(summary)
    if args.witnesses:
        payload["witnesses"] = lines
    _emit(args, "\n".join(text_lines), payload, [{k: v for k, v in summary.items() if k != "params"} | summary["params"]])
    return EXIT_FAIL if rec.below_target else EXIT_OK


def _verify_results(args: argparse.Namespace) -> tuple[list[SweepResult], list[str]]:
    claims = ["transfer", "minimality", "slices", "compression", "monotonicity", "two-lex", "counterexample"] if args.claim == "all" else [args.claim]
    results: list[SweepResult] = []
    extra: list[str] = []
    n_lo, n_hi = args.n
    a_lo, a_hi = args.a
    t_lo, t_hi = args.t
    for claim in claims:
        if claim == "transfer":
            for n in range(n_lo, n_hi + 1):
                for a in range(a_lo, a_hi + 1):
                    for t in range(t_lo, t_hi + 1):
                        r = check_transfer(n, a, t, exhaustive=args.exhaustive, samples=args.samples, seed=args.seed)
                        results.append(r)
                        ok = r.tuples_checked - len(r.failures)
                        extra.append(f"n={n} a={a} t={t}: {ok}/{r.tuples_checked} subsets consistent")
        elif claim == "minimality":
            for n in range(n_lo, n_hi + 1):
                rings = [RingSpec(n)] if args.ring is None else [args.ring]
                if args.ring is None:
                    rings += [RingSpec.quotient(n, a) for a in range(a_lo, a_hi + 1)]
                for ring in rings:
                    results.append(check_minimality(ring, t_hi, workers=args.workers, budget=args.budget))
        elif claim == "slices":
            for n in range(n_lo, n_hi + 1):
                results.extend(check_slice_theorems(n, t_hi, workers=args.workers))
        elif claim == "compression":
            for n in range(n_lo, n_hi + 1):
                results.append(check_compression(n, t_hi, samples=args.samples, seed=args.seed))
        elif claim in ("monotonicity", "two-lex"):
            cfg = SweepConfig(n=args.n, a=args.a, t=args.t, d=args.d, slack=args.slack, workers=args.workers)
            results.extend(sweep_monotonicity(cfg) if claim == "monotonicity" else [sweep_two_lex(cfg)])
        elif claim == "counterexample":
            r, v = counterexample_result()
            extra.append("counterexample verdicts: " + ", ".join(str(x).lower() for x in v.verdicts))
            results.append(r)
    return results, extra


def cmd_verify(args: argparse.Namespace) -> int:
    results, extra = _verify_results(args)
    report = emit_report(results, timing=not args.no_timing)
    if args.report:
        Path(args.report).write_text(report_json(report) + "\n", encoding="utf-8")
    text = "\n".join(extra + [report_text(report)])
    rows = [
        {"claim_id": c["claim_id"], "tuples_checked": c["tuples_checked"], "tuples_skipped": c["tuples_skipped"], "failures": len(c["failures"])}
        for c in report["claims"]
    ]
    _emit(args, text, report, rows)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    results = []
    if args.check in ("growth", "all"):
        results.append(check_growth_oracle(args.n_max, args.t_max))
    if args.check in ("quotient", "all"):
        results.append(check_quotient_formulas(args.n_max, args.a_max, args.t_max))
    if args.check in ("compression", "all"):
        results.append(check_compression(max(args.n_max, 1), min(args.t_max, 4), samples=args.samples, seed=args.seed))
    report = emit_report(results, timing=not args.no_timing)
    rows = [{"claim_id": c["claim_id"], "tuples_checked": c["tuples_checked"], "failures": len(c["failures"])} for c in report["claims"]]
    _emit(args, report_text(report), report, rows)
    return EXIT_OK if report["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexgrowth", description="Minimal monomial growth and Gotzmann sets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("growth", parents=[common], help="lex growth of a size-d set")
    p.add_argument("--ring", type=_ring, required=True, help='"n:c1,...,cn" with inf for no cap')
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check against direct construction")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("lexseg", parents=[common], help="print a lexsegment")
    p.add_argument("--ring", type=_ring, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_lexseg)

    p = sub.add_parser("check", parents=[common], help="Gotzmann verdict for one set")
    p.add_argument("--ring", type=_ring, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--set", help='inline set, e.g. "3 1 0; 0 3 1"')
    p.add_argument("--file", help="set file, one monomial per line")
    p.add_argument("--axis", type=int, help="also run the slice checks along this variable (1 = x1)")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="census of Gotzmann subsets")
    p.add_argument("--ring", type=_ring, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--witnesses", action="store_true", help="print every Gotzmann subset")
    p.add_argument("--output", help="write witnesses, one set per line")
    p.add_argument("--summary", help="write the JSON summary here")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--prune", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="zero all timings for byte-stable output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="machine-check a claim")
    p.add_argument(
        "--claim",
        choices=("transfer", "minimality", "slices", "compression", "monotonicity", "two-lex", "counterexample", "all"),
        required=True,
    )
    p.add_argument("--n", type=_range, default=(3, 3), help="N or LO:HI")
    p.add_argument("--a", type=_range, default=(2, 2))
    p.add_argument("--t", type=_range, default=(2, 2))
    p.add_argument("--d", type=_range, default=(1, 60))
    p.add_argument("--ring", type=_ring, help="minimality: check this ring only")
    p.add_argument("--exhaustive", action="store_true", help="transfer: every subset instead of a sample")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--slack", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks of the closed forms")
    p.add_argument("--check", choices=("growth", "quotient", "compression", "all"), default="all")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--a-max", type=int, default=3)
    p.add_argument("--t-max", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LexGrowthError, _Usage) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
