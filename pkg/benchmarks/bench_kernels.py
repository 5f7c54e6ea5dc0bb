"""Benchmark the compiled matrix kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--sizes 8,16,32,64] [--reps 5]

Times mat_mul and rref over GF(2^4) and GF(3^2) at several matrix sizes
and prints the speedup of the compiled backend.
"""

import argparse
import random
import time

import numpy as np

from minfield import _core_py, core, gf


def _random_array(F, rows, cols, rng):
    return np.array([[rng.randrange(F.q) for _ in range(cols)]
                     for _ in range(rows)], dtype=np.int64)


def _time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(F, n, reps):
    rng = random.Random(1234)
    exp, log = F.exp_table, F.log_table
    a = _random_array(F, n, n, rng)
    b = _random_array(F, n, n, rng)
    out = np.zeros((n, n), dtype=np.int64)
    piv = np.full(n, -1, dtype=np.int64)

    rows = []
    for label, mod in (("compiled", core), ("python", _core_py)):
        if label == "compiled" and core.BACKEND != "cython":
            continue
        t_mul = _time(lambda: mod.mat_mul(a, b, out, F.p, F.k, exp, log),
                      reps)
        t_rref = _time(lambda: mod.rref(a.copy(), F.p, F.k, exp, log,
                                        piv.copy()), reps)
        rows.append((label, t_mul, t_rref))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="8,16,32,64")
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"active backend: {core.BACKEND}")
    for p, k in [(2, 4), (3, 2)]:
        F = gf.field_create(p, k)
        print(f"\nGF({p}^{k}):")
        print(f"  {'n':>4}  {'backend':>8}  {'mat_mul':>10}  {'rref':>10}")
        for n in sizes:
            rows = bench(F, n, args.reps)
            for label, t_mul, t_rref in rows:
                print(f"  {n:>4}  {label:>8}  {t_mul * 1e3:>9.3f}ms "
                      f" {t_rref * 1e3:>9.3f}ms")
            if len(rows) == 2:
                print(f"  {'':>4}  {'speedup':>8}  "
                      f"{rows[1][1] / rows[0][1]:>9.1f}x "
                      f" {rows[1][2] / rows[0][2]:>9.1f}x")


if __name__ == "__main__":
    main()
