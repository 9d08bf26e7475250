"""Command line entry point: ``pdmeans {mean,check,verify,search}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from pdmeans import explorer, verify
from pdmeans.linalg_core import read_matrix, write_matrix
from pdmeans.majorization import DEFAULT_TOL, matrix_wlog
from pdmeans.means import MeanKind, mean, power_deformed


def parse_dims(text: str) -> tuple[int, ...]:
    """Accept ``2..6`` (inclusive range) or ``2,3,4``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            dims = tuple(range(int(lo), int(hi) + 1))
        else:
            dims = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}") from None
    if not dims or min(dims) < 1:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}")
    return dims


def _dump(obj, path) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def cmd_mean(args) -> int:
    A = read_matrix(args.A, positive_definite=True)
    B = read_matrix(args.B, positive_definite=True)
    if args.p is None:
        result = mean(args.kind, A, B, args.t)
    else:
        result = power_deformed(args.kind, A, B, args.t, args.p)
    write_matrix(result, args.output)
    return 0


def cmd_check(args) -> int:
    A = read_matrix(args.A, positive_definite=True)
    B = read_matrix(args.B, positive_definite=True)
    verdict = matrix_wlog(A, B, args.tol)
    json.dump(verdict.to_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(
        dims=args.dims, trials=args.trials, seed=args.seed, tol=args.tol, k_max=args.k_max
    )
    reports = verify.run_all(cfg, suites=args.suite)
    for r in reports:
        print(r.summary())
    if args.json:
        _dump([r.to_dict() for r in reports], args.json)
    return 0 if all(r.passed for r in reports) else 1


def cmd_search(args) -> int:
    cfg = explorer.SearchConfig(
        dims=args.dims,
        trials=args.trials,
        seed=args.seed,
        k_max=args.k_max,
        log_cond_max=args.log_cond_max,
        t_strategy=args.t_strategy,
        tol=args.tol,
    )
    report = explorer.search(cfg, workers=args.workers)
    gap_min = report.stratum_min(False)
    covered_min = report.stratum_min(True)
    print(f"trials: {len(report.records)}")
    print(f"global min link slack: {report.min_link_slack:.6e}")
    if gap_min is not None:
        print(f"  gap stratum:     {gap_min:.6e}")
    if covered_min is not None:
        print(f"  covered stratum: {covered_min:.6e}")
    print(f"counterexamples (re-verified): {len(report.counterexamples)}"
          f" ({len(report.covered_counterexamples)} in covered stratum)")
    if args.json:
        _dump(report.to_dict(), args.json)
    if args.csv:
        report.write_csv(args.csv)
    return 2 if report.counterexamples else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdmeans", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mean", help="compute a two-variable mean of two matrix files")
    p.add_argument("--kind", required=True, choices=[k.value for k in MeanKind])
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--p", type=float, default=None, help="power deformation exponent")
    p.add_argument("A")
    p.add_argument("B")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("check", help="majorization checks between matrix files")
    check_sub = p.add_subparsers(dest="relation", required=True)
    w = check_sub.add_parser("wlog", help="is spectrum(A) weakly log-majorized by spectrum(B)")
    w.add_argument("A")
    w.add_argument("B")
    w.add_argument("--tol", type=float, default=DEFAULT_TOL)
    w.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", action="append", choices=list(verify.SUITES),
                   help="suite to run (repeatable; default all)")
    p.add_argument("--dims", type=parse_dims, default=(2, 3, 4, 5, 6))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="counterexample search for the power-mean conjecture")
    p.add_argument("--dims", type=parse_dims, default=(2, 3, 4, 5))
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t-strategy", choices=explorer.T_STRATEGIES, default="gap_uniform")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--log-cond-max", type=float, default=8.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
