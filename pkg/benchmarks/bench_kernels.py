#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs each hot kernel on representative workloads and reports the best of
``--repeat`` timings per path.  The compiled path is exercised directly;
the fallback is the ``*_numpy`` twin, so a single process covers both
(no need to re-run with GPSF_PURE_NUMPY=1, though that flag switches the
whole package over).
"""

import argparse
import time

import numpy as np

from gpsf import kernels


def best_of(fn, repeat):
    t = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        t = min(t, time.perf_counter() - t0)
    return t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--coeffs", type=int, default=160)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    r = np.sort(rng.uniform(1e-6, 1.0, args.points))
    w = rng.uniform(0.0, 1.0, args.points)
    ph = rng.uniform(-50.0, 50.0, args.points)
    alpha, N, K = 2.0, 2, args.coeffs

    cases = [
        ("rbar_basis", lambda: kernels.rbar_basis(alpha, N, K, r),
         lambda: kernels.rbar_basis_numpy(alpha, N, K, r)),
        ("rbar_basis_with_deriv", lambda: kernels.rbar_basis_with_deriv(alpha, N, K, r),
         lambda: kernels.rbar_basis_with_deriv_numpy(alpha, N, K, r)),
        ("phase_sum", lambda: kernels.phase_sum(w, ph),
         lambda: kernels.phase_sum_numpy(w, ph)),
    ]

    print(f"compiled path active: {kernels.USE_NUMBA}")
    print(f"workload: {args.points} points, {args.coeffs} coefficients")
    header = f"{'kernel':<24}{'active [ms]':>14}{'numpy [ms]':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, active, fallback in cases:
        active()  # warm-up (JIT compile on the compiled path)
        ta = best_of(active, args.repeat)
        tn = best_of(fallback, args.repeat)
        print(f"{name:<24}{ta * 1e3:>14.3f}{tn * 1e3:>14.3f}{tn / ta:>10.2f}x")


if __name__ == "__main__":
    main()
