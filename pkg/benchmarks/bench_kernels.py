#!/usr/bin/env python3
"""Timing of the hot kernels, JIT against the pure-Python fallback.

Run directly to benchmark the current mode (numba unless LEXSEG_NO_NUMBA=1).
With --compare the script re-invokes itself in both modes and prints a
side-by-side table.  The first call of each kernel is excluded as warmup so
JIT compilation does not pollute the numbers.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time

import numpy as np


def _workloads():
    from lexseg import _kernels, fixture
    from lexseg.corpus import random_monomial_ideal

    e2 = fixture("example2")
    rng = random.Random(20240901)
    corpus = [random_monomial_ideal(rng, 4, 5, 6) for _ in range(25)]

    def w_kpoly():
        return _kernels.kpoly_counts(e2.exponent_matrix).sum()

    def w_count_standard():
        total = 0
        for d in range(13):
            total += _kernels.count_standard(e2.exponent_matrix, d)
        return total

    def w_koszul_fixture():
        lcm = np.array(e2.lcm_exponents, dtype=np.int64)
        betas, _, nbail, _ = _kernels.koszul_scan(e2.exponent_matrix, lcm)
        return int(betas.sum()) + nbail

    def w_koszul_corpus():
        total = 0
        for ideal in corpus:
            lcm = np.array(ideal.lcm_exponents, dtype=np.int64)
            betas, _, nbail, _ = _kernels.koszul_scan(ideal.exponent_matrix, lcm)
            total += int(betas.sum()) + nbail
        return total

    return [
        ("kpoly_counts 2^20 subsets", w_kpoly, 3),
        ("count_standard deg<=12", w_count_standard, 10),
        ("koszul_scan fixture box", w_koszul_fixture, 3),
        ("koszul_scan 25-ideal corpus", w_koszul_corpus, 1),
    ]


def run(repeats_scale=1.0):
    from lexseg import _kernels

    results = {"mode": _kernels.kernel_mode(), "times": {}, "checks": {}}
    for name, fn, repeats in _workloads():
        fn()  # warmup / JIT compile
        reps = max(1, int(repeats * repeats_scale))
        t0 = time.perf_counter()
        check = 0
        for _ in range(reps):
            check = fn()
        dt = (time.perf_counter() - t0) / reps
        results["times"][name] = dt
        results["checks"][name] = int(check)
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--compare", action="store_true",
                        help="run both modes in subprocesses and print a table")
    parser.add_argument("--json", action="store_true",
                        help="print raw results as JSON")
    args = parser.parse_args()

    if args.compare:
        rows = {}
        for disable in ("0", "1"):
            env = dict(os.environ, LEXSEG_NO_NUMBA=disable)
            out = subprocess.run(
                [sys.executable, __file__, "--json"],
                env=env, capture_output=True, text=True, check=True)
            rows[disable] = json.loads(out.stdout)
        fast, slow = rows["0"], rows["1"]
        if fast["checks"] != slow["checks"]:
            print("MODE MISMATCH: kernels disagree between modes", file=sys.stderr)
            return 1
        width = max(len(k) for k in fast["times"])
        print(f"{'workload':<{width}}  {'numba':>10}  {'python':>10}  {'speedup':>8}")
        for name in fast["times"]:
            a, b = fast["times"][name], slow["times"][name]
            print(f"{name:<{width}}  {a:>9.4f}s  {b:>9.4f}s  {b / a:>7.1f}x")
        print("checksums identical in both modes")
        return 0

    results = run()
    if args.json:
        print(json.dumps(results))
        return 0
    print(f"kernel mode: {results['mode']}")
    for name, dt in results["times"].items():
        print(f"{name}: {dt:.4f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
