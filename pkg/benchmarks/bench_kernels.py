"""Benchmark the compiled saturation kernel against the pure-Python fallback.

Runs the same fixpoint problems through both kernels, checks they agree, and
prints per-size timings plus the speedup ratio.

Usage::

    python3 benchmarks/bench_kernels.py [--sizes 20,50,100] [--repeats 5]
"""

import argparse
import time

import numpy as np

from cohext import _satpure

try:
    from cohext import _satcore
except ImportError:
    _satcore = None


def make_problem(rng: np.random.Generator, n: int, k: int):
    W = np.asarray(rng.random((n, n)) < 4.0 / n)
    np.fill_diagonal(W, True)
    D = W & np.asarray(rng.random((n, n)) < 0.3)
    np.fill_diagonal(D, False)
    tables = rng.integers(-1, n, size=(k, n)).astype(np.int64)
    return np.ascontiguousarray(W), np.ascontiguousarray(D), tables


def time_kernel(kernel, problems, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for W, D, tables in problems:
            w, d = W.copy(), D.copy()
            kernel.saturate_inplace(w.view(np.uint8), d.view(np.uint8), tables, True, True, True)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="20,50,100,200", help="comma-separated window sizes")
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats (best is kept)")
    parser.add_argument("--problems", type=int, default=10, help="random problems per size")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _satcore is None:
        print("compiled kernel not available; only timing the pure-Python fallback")

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>6} {'compiled (s)':>14} {'pure (s)':>12} {'speedup':>9}")
    for n in (int(x) for x in args.sizes.split(",")):
        problems = [make_problem(rng, n, k=2) for _ in range(args.problems)]
        if _satcore is not None:
            for W, D, tables in problems:
                wc, dc = W.copy(), D.copy()
                wp, dp = W.copy(), D.copy()
                _satcore.saturate_inplace(wc.view(np.uint8), dc.view(np.uint8), tables, True, True, True)
                _satpure.saturate_inplace(wp.view(np.uint8), dp.view(np.uint8), tables, True, True, True)
                assert np.array_equal(wc, wp) and np.array_equal(dc, dp), "kernel disagreement"
        t_pure = time_kernel(_satpure, problems, args.repeats)
        if _satcore is not None:
            t_comp = time_kernel(_satcore, problems, args.repeats)
            print(f"{n:>6} {t_comp:>14.4f} {t_pure:>12.4f} {t_pure / t_comp:>8.1f}x")
        else:
            print(f"{n:>6} {'-':>14} {t_pure:>12.4f} {'-':>9}")


if __name__ == "__main__":
    main()
