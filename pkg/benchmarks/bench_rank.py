#!/usr/bin/env python3
"""Benchmark the GF(p) rank kernels: compiled extension vs numpy fallback.

Usage: python benchmarks/bench_rank.py [--reps 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tncuts.fieldmath import compiled_available, rank_mod_pure
from tncuts.oracle import DEFAULT_PRIME
from tncuts.rng import CounterRng

SIZES = [(16, 16), (32, 32), (64, 64), (128, 128), (256, 256), (64, 512)]


def random_matrix(rng: CounterRng, m: int, n: int) -> np.ndarray:
    return rng.residues(m * n, DEFAULT_PRIME).reshape(m, n)


def bench(func, mats, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        for mat in mats:
            func(mat, DEFAULT_PRIME)
        best = min(best, time.perf_counter() - start)
    return best / len(mats)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=5, help="timing repetitions (best of)")
    parser.add_argument("--batch", type=int, default=8, help="matrices per timing batch")
    args = parser.parse_args()

    if compiled_available():
        from tncuts import _rankcore

        def compiled(mat, p):
            return _rankcore.rank_mod(np.ascontiguousarray(mat.copy()), p)

    else:
        compiled = None
        print("compiled kernel not built; showing the pure path only\n")

    rng = CounterRng(0)
    header = f"{'shape':>10}  {'pure (ms)':>10}"
    if compiled:
        header += f"  {'compiled (ms)':>14}  {'speedup':>8}"
    print(header)
    for m, n in SIZES:
        mats = [random_matrix(rng, m, n) for _ in range(args.batch)]
        t_pure = bench(rank_mod_pure, mats, args.reps)
        line = f"{m}x{n:>5}  {t_pure * 1e3:>10.3f}"
        if compiled:
            for mat in mats:  # same answers before timing
                assert rank_mod_pure(mat, DEFAULT_PRIME) == compiled(mat, DEFAULT_PRIME)
            t_comp = bench(compiled, mats, args.reps)
            line += f"  {t_comp * 1e3:>14.3f}  {t_pure / t_comp:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
