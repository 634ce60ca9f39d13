#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads through both backends and prints a speedup table:

    python3 benchmarks/bench_backends.py [--quick]

The workloads mirror where the toolkit actually spends time: subset scans
behind the exact solvers, canonical-form permutation search, and the
exhaustive connected-graph enumeration.
"""

import argparse
import random
import sys
import time

try:
    from romandom import _kernels as compiled
except ImportError:
    compiled = None
from romandom import _kernels_py as pure


def random_rows(rng, n, p=0.4):
    rows = [0] * n
    for j in range(n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def timed(fn, *args, repeat=1):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_subset_scans(backend, instances):
    t0 = time.perf_counter()
    acc = 0
    for rows in instances:
        closed = [rows[v] | (1 << v) for v in range(len(rows))]
        acc += backend.min_weight_cover(closed)
        acc += backend.min_dominating_size(closed)
        acc += backend.max_differential(rows)
    return time.perf_counter() - t0, acc


def bench_canonical(backend, instances):
    t0 = time.perf_counter()
    acc = 0
    for rows in instances:
        acc ^= backend.canonical_signature(rows)
    return time.perf_counter() - t0, acc


def bench_enumeration(backend, n):
    t0 = time.perf_counter()
    out = backend.connected_canonical_signatures(n)
    return time.perf_counter() - t0, len(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller workloads (skips the order-7 enumeration)")
    args = parser.parse_args()

    if compiled is None:
        sys.exit("compiled extension not built; run pip install -e . --no-build-isolation")

    rng = random.Random(2024)
    scan_n = 14 if args.quick else 16
    scans = [random_rows(rng, scan_n) for _ in range(40)]
    canon = [random_rows(rng, 9, rng.choice((0.3, 0.5))) for _ in range(300)]
    enum_n = 6 if args.quick else 7

    rows = []
    for name, fn, payload in (
        (f"subset scans (40 graphs, n={scan_n})", bench_subset_scans, scans),
        ("canonical forms (300 graphs, n=9)", bench_canonical, canon),
        (f"connected enumeration (n={enum_n})", bench_enumeration, enum_n),
    ):
        t_fast, r_fast = fn(compiled, payload)
        t_slow, r_slow = fn(pure, payload)
        assert r_fast == r_slow, f"{name}: backends disagree"
        rows.append((name, t_fast, t_slow, t_slow / t_fast if t_fast else float("inf")))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  compiled   pure       speedup")
    for name, fast, slow, ratio in rows:
        print(f"{name:<{width}}  {fast:8.3f}s  {slow:8.3f}s  {ratio:6.1f}x")


if __name__ == "__main__":
    main()
