"""sigmacolor command line: play, table, replay, grid."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algorithms import make_algorithm
from .core import Interval, Transcript, bounds_report, clique_number, parse_rational, verify_proper
from .harness import CSV_COLUMNS, evaluate, experiment_grid, load_config, rows_to_csv, run_game
from .presenters import parse_recipe, presenter_for
from .recurrences import FAMILIES, limit, table


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _region(text: str) -> Interval:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"region must be 'a,b', got {text!r}")
    lo, hi = (_rational(p.strip()) for p in parts)
    if not lo < hi:
        raise argparse.ArgumentTypeError("region needs a < b")
    return Interval(lo, hi)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _print_report(report, out) -> None:
    for key in ("omega_target", "colors_used", "clique_number", "guaranteed", "proper", "sigma_ok", "region_ok", "rounds"):
        print(f"{key}: {getattr(report, key)}", file=out)
    if report.omega_target:
        print(f"ratio (approx): {report.colors_used / report.omega_target:.6f}", file=out)
    print(f"ok: {report.ok}", file=out)


def cmd_play(args, parser) -> int:
    try:
        recipe = parse_recipe(args.recipe, epsilon=args.epsilon, gamma=args.gamma, n=args.n)
    except ValueError as exc:
        parser.error(f"--recipe: {exc}")
    sigma = args.sigma if args.sigma is not None else recipe.sigma
    if args.algorithm == "block" and sigma < recipe.sigma:
        parser.error(f"--sigma {sigma} is below the recipe's interval length bound {recipe.sigma}")
    try:
        algo = make_algorithm(args.algorithm, sigma, args.b)
    except ValueError as exc:
        parser.error(str(exc))
    presenter = presenter_for(recipe, args.omega)
    transcript = run_game(algo, presenter)
    report = evaluate(transcript, recipe, args.omega)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(transcript.to_json())
            fh.write("\n")
    print(f"recipe: {recipe}")
    print(f"algorithm: {args.algorithm}")
    if presenter.result and "branch" in presenter.result:
        print(f"branch: {presenter.result['branch']}")
    _print_report(report, sys.stdout)
    return 0 if report.ok else 1


def _fmt_size(row, which: str, family: str) -> str:
    if family == "lower52" and row.k:
        return f"4^{row.power_of_four}+eps"
    value = getattr(row, which)
    return f"{value}+eps" if row.k else str(value)


def cmd_table(args, parser) -> int:
    if args.family == "lower52" and args.gamma is None:
        parser.error("lower52 needs --gamma")
    rows = table(args.family, args.iterations, args.gamma)
    print(f"{'k':>3}  {'alpha':>24}  {'alpha~':>14}  {'closed~':>14}  {'sigma':>14}  {'M':>14}  agree")
    for row in rows:
        alpha = str(row.alpha)
        if len(alpha) > 24:
            alpha = alpha[:21] + "..."
        print(
            f"{row.k:>3}  {alpha:>24}  {float(row.alpha):>14.10f}  {row.closed:>14.10f}  "
            f"{_fmt_size(row, 'sigma', args.family):>14}  {_fmt_size(row, 'M', args.family):>14}  {row.agrees}"
        )
    print(f"limit~ {limit(args.family, args.gamma):.10f}")
    return 0 if all(r.agrees for r in rows) else 1


def cmd_replay(args, parser) -> int:
    try:
        with open(args.input) as fh:
            transcript = Transcript.from_json(fh.read())
    except (OSError, ValueError) as exc:
        print(f"error: cannot read transcript: {exc}", file=sys.stderr)
        return 2
    checks = {}
    clash = verify_proper(transcript)
    checks["proper"] = clash is None
    clique = clique_number(transcript.intervals)
    if args.omega is not None:
        checks["clique_ok"] = clique <= args.omega
    rep = bounds_report(transcript, args.sigma, args.region or Interval(0, 1))
    if args.sigma is not None:
        checks["sigma_ok"] = rep.lengths_within(args.sigma)
    if args.region is not None:
        checks["region_ok"] = rep.containment
    print(f"rounds: {len(transcript)}")
    print(f"colors_used: {transcript.distinct_colors()}")
    print(f"clique_number: {clique}")
    if clash is not None:
        print(f"conflict: entries {clash[0]} and {clash[1]}")
    for key, value in checks.items():
        print(f"{key}: {value}")
    ok = all(checks.values())
    print(f"ok: {ok}")
    return 0 if ok else 1


def cmd_grid(args, parser) -> int:
    try:
        config = load_config(args.config)
        rows = experiment_grid(config, workers=args.workers)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = [r for r in rows if not (r["proper"] and r["sigma_ok"] and r["region_ok"] and r["colors_used"] >= r["guaranteed"])]
    bad += [r for r in rows if r["bound_ok"] is False]
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigmacolor", description="Online coloring of sigma-interval graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("play", help="run one game and validate it")
    p.add_argument("--algorithm", required=True, choices=["firstfit", "block"])
    p.add_argument("--recipe", required=True, help='e.g. "lower53(base)"')
    p.add_argument("--omega", required=True, type=_nonneg)
    p.add_argument("--sigma", type=_rational, help="block: length bound (default: the recipe's)")
    p.add_argument("--b", type=int, help="block: small blocks per unit (default: denominator of sigma)")
    p.add_argument("--epsilon", type=_rational, help="slack budget shared by unparameterised steps")
    p.add_argument("--gamma", type=_rational, help="lower52 default gamma")
    p.add_argument("--n", type=_nonneg, help="lower52 default depth")
    p.add_argument("--out", help="write the transcript JSON here")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("table", help="print a recurrence table")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--iterations", required=True, type=_nonneg)
    p.add_argument("--gamma", type=_rational)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("replay", help="re-validate a transcript")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--omega", type=_nonneg)
    p.add_argument("--sigma", type=_rational)
    p.add_argument("--region", type=_region, help="'a,b'")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("grid", help="run an experiment grid to CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_grid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


__all__ = ["main", "build_parser", "CSV_COLUMNS"]
