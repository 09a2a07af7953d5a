"""Command-line interface.

Exit codes: 0 on success, 1 when a checked invariant is violated (a
blue/red quotient above 5/8 in a classic-map scan, a failed divisibility
report, a reconstruction mismatch), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import asymptotics, figures, paths, primes
from . import scanner as scan_mod
from .core import DEFAULT_LIMITS, OrbitLimits, OrbitStatus, blue_red_ratio, orbit
from .figures import RATIO_CUTOFF


def _limits_from(args) -> OrbitLimits:
    return OrbitLimits(max_steps=args.max_steps, max_value=args.max_value)


def _add_limit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-steps", type=int, default=DEFAULT_LIMITS.max_steps,
                        help="step budget per orbit")
    parser.add_argument("--max-value", type=int, default=DEFAULT_LIMITS.max_value,
                        help="abort when a step result would exceed this value")


def _cmd_orbit(args) -> int:
    record = orbit(args.x, args.mult, _limits_from(args))
    ratio = blue_red_ratio(record)
    if args.json:
        payload = {
            "start": record.start,
            "multiplier": record.multiplier,
            "values": list(record.values),
            "colors": record.colors,
            "blue": record.blue_count,
            "red": record.red_count,
            "steps": record.steps,
            "peak": record.peak,
            "min": record.min_element,
            "status": record.status.value,
            "cycle": None if record.cycle is None else list(record.cycle),
            "ratio": None if ratio is None else str(ratio),
        }
        print(json.dumps(payload))
        return 0
    print(" ".join(str(v) for v in record.values))
    print(f"status={record.status.value} steps={record.steps} "
          f"blue={record.blue_count} red={record.red_count} "
          f"peak={record.peak} min={record.min_element} "
          f"ratio={'undefined' if ratio is None else ratio}")
    if record.cycle is not None:
        print("cycle=" + " ".join(str(v) for v in record.cycle))
    return 0


def _cmd_scan(args) -> int:
    summary = scan_mod.scan(args.a, args.b, args.mult, _limits_from(args),
                            threads=args.threads)
    print(f"range=[{summary.a},{summary.b}] mult={summary.multiplier} "
          f"orbits={summary.orbit_count}")
    for status in OrbitStatus:
        print(f"  {status.value}: {summary.status_counts[status]}")
    if summary.max_ratio is None:
        print("  max_ratio: undefined")
    else:
        print(f"  max_ratio: {summary.max_ratio} "
              f"({float(summary.max_ratio):.6f}) at x={summary.ratio_argmax}")
    print(f"  max_peak: {summary.max_peak} at x={summary.peak_argmax}")
    print(f"  max_stopping_time: {summary.max_stopping_time} "
          f"at x={summary.stopping_argmax}")
    print(f"  ratio_undefined={summary.ratio_undefined} "
          f"ratio_ge_one={summary.ratio_ge_one}")
    if args.csv:
        path = figures.histogram_series(summary).to_csv(args.csv)
        print(f"histogram written to {path}")
    if args.mult == 3 and summary.max_ratio is not None and summary.max_ratio > RATIO_CUTOFF:
        print(f"violation: max blue/red quotient {summary.max_ratio} exceeds 5/8",
              file=sys.stderr)
        return 1
    return 0


def _cmd_tree(args) -> int:
    census = paths.edge_counts(args.n)
    quotient = "-" if args.n == 0 else str(paths.edge_quotient(args.n))
    print(f"{census.depth} {census.red_edges} {census.blue_edges} {quotient}")
    if args.enumerate:
        for word in paths.enumerate_words(args.n):
            print(word)
    return 0


def _cmd_seq(args) -> int:
    if args.name == "limit-S":
        try:
            phi_text, o_text = args.arg.split(",")
            phi, o = float(phi_text), int(o_text)
        except ValueError:
            return _usage_error("limit-S expects 'phi,o', e.g. 2,3")
        result = asymptotics.path_sum_limit(phi, o)
        threshold = asymptotics.convergence_threshold(o)
        if result.converges:
            print(f"converges {result.value!r} (threshold log2({o})={threshold.value:.6f})")
        else:
            print(f"diverges (phi={phi} <= threshold log2({o})={threshold.value:.6f})")
        return 0
    try:
        n_max = int(args.arg)
    except ValueError:
        return _usage_error(f"{args.name} expects an integer index")
    if n_max < 1:
        return _usage_error("index must be >= 1")
    if args.name == "an":
        print("n,growth_log,neg_log_n")
        for n in range(1, n_max + 1):
            print(f"{n},{asymptotics.growth_log(n)!r},{-math.log(n)!r}")
    elif args.name == "phi":
        print("n,phi_frac,phi")
        for n in range(1, n_max + 1):
            value = asymptotics.phi_ratio(n).value
            print(f"{n},{value},{float(value)!r}")
    elif args.name == "golden-gap":
        print("n,gap")
        for n in range(1, n_max + 1):
            print(f"{n},{asymptotics.golden_gap(n)!r}")
    return 0


def _cmd_primes(args) -> int:
    n = args.n
    if args.check == "check-t1":
        ok = primes.factorial_divisibility_check(n)
        print(f"n={n} F={asymptotics.fib(n + 2)} all_primes_divide_factorial={ok}")
        return 0 if ok else 1
    if args.check == "check-t2":
        witness = primes.interfib_prime_witnesses(n)
        payload = {
            "n": witness.n,
            "interval": [witness.lower, witness.upper],
            "witnesses": list(witness.primes),
            "holds": witness.holds,
            "cited_exception": witness.cited_exception,
        }
        print(json.dumps(payload))
        return 0 if witness.holds else 1
    if args.check == "check-t3":
        report = primes.new_prime_divisibility(n)
        print(json.dumps(report.to_json_dict()))
        return 0 if report.passed else 1
    if args.check == "reconstruct":
        built = primes.reconstruct_primes(n)
        reference = primes.sieve(built.bound)
        ok = built.primes == reference.primes
        print(f"n_max={n} bound={built.bound} primes={len(built.primes)} "
              f"matches_sieve={ok}")
        print(" ".join(str(p) for p in built.primes))
        return 0 if ok else 1
    if args.check == "gcd-lemma":
        value = primes.gcd_coprime_binomials(n)
        print(f"n={n} gcd={value}")
        return 0 if value == n else 1
    return _usage_error(f"unknown primes check {args.check!r}")


def _cmd_figure(args) -> int:
    params = {}
    if args.name in ("succ", "rb") and args.max is not None:
        params["n_max"] = args.max
    if args.name == "table1" and args.max is not None:
        params["n_max"] = args.max
    if args.name == "quotient":
        if args.max is not None:
            params["b"] = args.max
        params["o"] = args.mult
        params["threads"] = args.threads
    out = args.out or f"{args.name}.csv"
    series = figures.emit_figure(args.name, out=out, **params)
    print(f"wrote {out} ({len(series.rows)} rows)")
    return 0


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatzlab",
        description="Hailstone-orbit workbench: orbits, path combinatorics, "
                    "growth sequences, and Fibonacci-interval prime checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_orbit = sub.add_parser("orbit", help="print one orbit")
    p_orbit.add_argument("x", type=int)
    p_orbit.add_argument("--mult", type=int, default=3)
    p_orbit.add_argument("--json", action="store_true")
    _add_limit_flags(p_orbit)
    p_orbit.set_defaults(func=_cmd_orbit)

    p_scan = sub.add_parser("scan", help="aggregate orbit statistics over a range")
    p_scan.add_argument("a", type=int)
    p_scan.add_argument("b", type=int)
    p_scan.add_argument("--mult", type=int, default=3)
    p_scan.add_argument("--threads", type=int, default=None)
    p_scan.add_argument("--csv", metavar="PATH", default=None,
                        help="write the quotient histogram as CSV")
    _add_limit_flags(p_scan)
    p_scan.set_defaults(func=_cmd_scan)

    p_tree = sub.add_parser("tree", help="edge census of the step tree at a depth")
    p_tree.add_argument("n", type=int)
    p_tree.add_argument("--enumerate", action="store_true",
                        help="also list the admissible words")
    p_tree.set_defaults(func=_cmd_tree)

    p_seq = sub.add_parser("seq", help="print a sequence or a limit")
    p_seq.add_argument("name", choices=["an", "phi", "golden-gap", "limit-S"])
    p_seq.add_argument("arg", help="index bound, or 'phi,o' for limit-S")
    p_seq.set_defaults(func=_cmd_seq)

    p_primes = sub.add_parser("primes", help="prime-theorem checkers")
    p_primes.add_argument("check", choices=["check-t1", "check-t2", "check-t3",
                                            "reconstruct", "gcd-lemma"])
    p_primes.add_argument("n", type=int)
    p_primes.set_defaults(func=_cmd_primes)

    p_figure = sub.add_parser("figure", help="emit a figure data series as CSV")
    p_figure.add_argument("name", choices=list(figures.FIGURE_NAMES))
    p_figure.add_argument("--out", default=None)
    p_figure.add_argument("--max", type=int, default=None,
                          help="depth/index bound (or scan bound for quotient)")
    p_figure.add_argument("--mult", type=int, default=3)
    p_figure.add_argument("--threads", type=int, default=None)
    p_figure.set_defaults(func=_cmd_figure)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
