#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-Python fallback.

Usage:
    python benchmarks/bench_scan.py [--max 150000] [--mult 3] [--threads N]
                                    [--repeat 3]

Runs the same range scan on both backends, verifies the summaries are
identical, and reports the best wall time of each plus the speedup.
"""

import argparse
import statistics
import time

from collatzlab._backend import load_backend
from collatzlab.scanner import default_threads, scan


def time_backend(label, module, args):
    times = []
    summary = None
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        summary = scan(1, args.max, o=args.mult, threads=args.threads, backend=module)
        times.append(time.perf_counter() - t0)
    best = min(times)
    spread = statistics.pstdev(times) if len(times) > 1 else 0.0
    print(f"  {label:<8} best {best:8.3f}s  (spread {spread:.3f}s over {args.repeat} runs)")
    return best, summary


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=150000)
    parser.add_argument("--mult", type=int, default=3)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    threads = args.threads if args.threads is not None else default_threads()
    args.threads = threads

    pure, _ = load_backend("python")
    try:
        compiled, _ = load_backend("c")
    except ImportError:
        compiled = None

    print(f"scan(1, {args.max}, o={args.mult}) with {threads} thread(s)")
    pure_best, pure_summary = time_backend("python", pure, args)
    if compiled is None:
        print("  compiled backend not built; run pip install -e . --no-build-isolation")
        return
    c_best, c_summary = time_backend("compiled", compiled, args)
    if c_summary != pure_summary:
        raise SystemExit("backends disagree; this is a bug")
    print(f"  summaries identical; speedup {pure_best / c_best:.1f}x")


if __name__ == "__main__":
    main()
