"""Benchmark: compiled Gray-code kernel vs NumPy block-enumeration fallback.

The sign-vector enumeration behind exact alpha is the package's hot loop;
this script times both backends on the same centered matrices and reports
the speedup.  Run:

    python benchmarks/bench_kernels.py            # quick sweep
    python benchmarks/bench_kernels.py --full     # up to the default limit
"""

import argparse
import time

import numpy as np

from mixkit import _kernels_py
from mixkit._backend import BACKEND

try:
    from mixkit import _kernels

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def centered(rng, n, m):
    t = rng.random((n, m))
    t /= t.sum()
    g = t - np.outer(t.sum(axis=1), t.sum(axis=0))
    return np.ascontiguousarray(g.T)


def best_of(fn, cols, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value, _ = fn(cols)
        best = min(best, time.perf_counter() - t0)
    return value, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="include the largest sizes (minutes, not seconds)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [10, 14, 16, 18, 20]
    if args.full:
        sizes += [22, 24]
    rng = np.random.default_rng(args.seed)

    print(f"active backend: {BACKEND}")
    if not HAVE_COMPILED:
        print("compiled kernel not built; timing the fallback only")
    header = f"{'m':>3} {'n':>3} {'python (s)':>12}"
    if HAVE_COMPILED:
        header += f" {'cython (s)':>12} {'speedup':>8}"
    print(header)

    for m in sizes:
        n = 16
        cols = centered(rng, n, m)
        repeats = 3 if m <= 18 else 1
        v_py, t_py = best_of(_kernels_py.signed_l1_enum, cols, repeats)
        line = f"{m:>3} {n:>3} {t_py:>12.4f}"
        if HAVE_COMPILED:
            v_cy, t_cy = best_of(_kernels.signed_l1_enum, cols, repeats)
            assert abs(v_py - v_cy) < 1e-12, (v_py, v_cy)
            line += f" {t_cy:>12.4f} {t_py / t_cy:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
