"""Command-line entry point: ``lefschetz-geography`` / ``python -m lefschetz_geography``.

Exit codes: 0 success, 2 malformed input, 3 a check failed or a sweep found
counterexamples.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from .checks import CHECK_IDS, HypothesisError, HypothesisFlags, UnknownCheckError, Verdict, run_all
from .enumeration import (
    DEFAULT_COUNTEREXAMPLE_CAP,
    FILTERS,
    SweepBox,
    solve_g2_system,
    solve_g3_system,
    verify_theorems,
)
from .invariants import FibrationNumerics, InvalidFibration
from .reports import (
    ReportIOError,
    dump_json,
    emit_geography,
    exact,
    geography_points,
    invariants_document,
    write_text,
)

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 2, 3
FLAG_NAMES = ("treat_as_realizable", "simply_connected")


class UsageError(ValueError):
    pass


def parse_sep(text: str) -> dict[int, int]:
    """Parse ``h1:c1,h2:c2`` into a sparse ``{h: count}`` map."""
    counts: dict[int, int] = {}
    for item in filter(None, (p.strip() for p in (text or "").split(","))):
        h, sep, c = item.partition(":")
        if not sep:
            raise UsageError(f"--sep entries must look like h:count, got {item!r}")
        try:
            h_i, c_i = int(h), int(c)
        except ValueError:
            raise UsageError(f"--sep entries must be integers h:count, got {item!r}") from None
        if h_i in counts:
            raise UsageError(f"separating type h={h_i} given twice in --sep")
        counts[h_i] = c_i
    return counts


def _census(args) -> FibrationNumerics:
    return FibrationNumerics.from_counts(args.g, args.n, parse_sep(args.sep))


def _split(text: str | None) -> list[str]:
    return [p.strip() for p in (text or "").split(",") if p.strip()]


def _emit(text: str, out: str | None) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args) -> int:
    _emit(dump_json(invariants_document(_census(args))), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    f = _census(args)
    flags = _split(args.flags)
    unknown = set(flags) - set(FLAG_NAMES)
    if unknown:
        raise UsageError(f"unknown --flags {sorted(unknown)}; valid flags: {', '.join(FLAG_NAMES)}")
    hyp = HypothesisFlags(
        treat_as_realizable="treat_as_realizable" in flags,
        simply_connected="simply_connected" in flags,
        b2plus=args.b2plus,
    )
    results = run_all(f, hyp, _split(args.checks) or None)
    failed = any(r.verdict is Verdict.FAILS for r in results)
    doc = {
        "census": {"g": f.g, "n": f.n, "sep": list(f.sep)},
        "all_applicable_hold": not failed,
        "results": [r.to_dict() for r in results],
    }
    _emit(dump_json(doc), args.out)
    return EXIT_FAILED if failed else EXIT_OK


def _box(args) -> SweepBox:
    try:
        return SweepBox(args.g_min, args.g_max, args.n_max, args.s_max,
                        tuple(_split(args.filters)) or ("basic", "integral_chi_h", "signature_bound_c05"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_sweep(args) -> int:
    box = _box(args)
    report = verify_theorems(box, _split(args.checks) or None, counterexample_cap=args.cap,
                             workers=args.workers)
    _emit(dump_json(report.to_dict()), args.out)
    print(
        f"enumerated {report.tuples_enumerated} censuses, {report.tuples_admissible} admissible, "
        f"{report.total_failures} failures",
        file=sys.stderr,
    )
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_solve(args) -> int:
    if args.genus == 2:
        if args.k_max is None or args.t_max is None:
            raise UsageError("solve --genus 2 needs --k-max and --t-max")
        try:
            family, sols = solve_g2_system(args.k_max, args.t_max)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        columns = ["k", "t", "n", "s", "lambda"]
        rows = [{"k": p.params["k"], "t": p.params["t"], "n": p.n, "s": p.s, "lambda": exact(p.slope)} for p in sols]
    else:
        if args.m_max is None:
            raise UsageError("solve --genus 3 needs --m-max")
        try:
            family, sols = solve_g3_system(args.m_max)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        columns = ["m", "k", "n", "s", "ratio", "lambda"]
        rows = [
            {"m": p.params["m"], "k": p.params["k"], "n": p.n, "s": p.s, "ratio": exact(p.ratio),
             "lambda": exact(p.slope)}
            for p in sols
        ]
    if args.format == "json":
        text = dump_json({"family": family.to_dict(), "solutions": rows})
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_geography(args) -> int:
    _emit(emit_geography(geography_points(_box(args)), args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz-geography",
        description="Exact invariants, bound checks and geography sweeps for hyperelliptic Lefschetz fibrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def census_args(p):
        p.add_argument("--g", type=int, required=True, help="fiber genus (>= 2)")
        p.add_argument("--n", type=int, required=True, help="non-separating vanishing cycles (>= 1)")
        p.add_argument("--sep", default="", help="separating counts as h:count pairs, e.g. 1:3,2:1")
        p.add_argument("--out", help="write to this file instead of stdout")

    def box_args(p):
        p.add_argument("--g-min", type=int, required=True)
        p.add_argument("--g-max", type=int, required=True)
        p.add_argument("--n-max", type=int, required=True)
        p.add_argument("--s-max", type=int, required=True, help="bound on the total separating count")
        p.add_argument("--filters", help=f"comma list from {', '.join(FILTERS)}")

    p = sub.add_parser("invariants", help="print the invariants of one census as JSON")
    census_args(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="run registry checks on one census")
    census_args(p)
    p.add_argument("--checks", help=f"comma list of check ids ({CHECK_IDS[0]}..{CHECK_IDS[-1]})")
    p.add_argument("--flags", help=f"comma list from {', '.join(FLAG_NAMES)}")
    p.add_argument("--b2plus", type=int, help="b2+ for the simply connected minimum-n requirement")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="verify checks exhaustively over a box")
    box_args(p)
    p.add_argument("--checks", help="comma list of check ids (default: all)")
    p.add_argument("--cap", type=int, default=DEFAULT_COUNTEREXAMPLE_CAP, help="counterexamples kept per check")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="report path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("solve", help="tabulate a low-genus Diophantine family")
    p.add_argument("--genus", type=int, choices=(2, 3), required=True)
    p.add_argument("--k-max", type=int)
    p.add_argument("--t-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("geography", help="emit geography points for all admissible censuses")
    box_args(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_geography)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidFibration, UsageError, UnknownCheckError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReportIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
