#!/usr/bin/env python3
"""Time the numba kernels against the pure numpy/python fallback.

Workloads mirror the package's hot paths: evaluating the field components
over a (theta, phi) surface grid (singular-set scans) and stepping one RK4
trajectory (drift and periodicity checks).

Run:  python benchmarks/bench_kernels.py [--grid 512] [--steps 50000]
"""

import argparse
import math
import time
from fractions import Fraction

import numpy as np

from torusfields import CubicParams, MultiPoly, Scalar, X, Y, build_cubic
from torusfields import kernels

M = Fraction(4)


def surface_grid(n):
    thetas = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    phis = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    rr = np.sqrt(4.0 + np.cos(pp))
    return rr * np.cos(tt), rr * np.sin(tt), np.sin(pp)


def time_call(fn, repeats=3):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=512)
    ap.add_argument("--steps", type=int, default=50_000)
    args = ap.parse_args()

    field = build_cubic(CubicParams(MultiPoly.constant(1), X * Y,
                                    Scalar(0), Scalar(0)), M)
    arrays = [kernels.compile_poly(c) for c in field.components()]
    xs, ys, zs = surface_grid(args.grid)
    start = (math.sqrt(5.0), 0.0, 0.0)

    have_numba = False
    try:
        import numba  # noqa: F401

        have_numba = True
    except ImportError:
        pass

    rows = []

    def grid_np():
        for exps, coefs in arrays:
            kernels._eval_grid_np(exps, coefs, xs, ys, zs)

    rows.append(("grid eval  %dx%d x3 polys" % (args.grid, args.grid),
                 "numpy", time_call(grid_np)))

    def rk4_py():
        kernels._rk4_orbit_py(*arrays[0], *arrays[1], *arrays[2], *start,
                              1e-3, args.steps, False, 4.0)

    rows.append(("rk4 orbit  %d steps" % args.steps, "python", time_call(rk4_py)))

    if have_numba:
        xs_c = np.ascontiguousarray(xs)
        ys_c = np.ascontiguousarray(ys)
        zs_c = np.ascontiguousarray(zs)

        def grid_nb():
            for exps, coefs in arrays:
                kernels._eval_grid_nb(exps, coefs, xs_c, ys_c, zs_c)

        def rk4_nb():
            kernels._rk4_orbit_nb(*arrays[0], *arrays[1], *arrays[2], *start,
                                  1e-3, args.steps, False, 4.0)

        grid_nb()   # JIT warmup
        rk4_nb()
        rows.append(("grid eval  %dx%d x3 polys" % (args.grid, args.grid),
                     "numba", time_call(grid_nb)))
        rows.append(("rk4 orbit  %d steps" % args.steps, "numba",
                     time_call(rk4_nb)))
    else:
        print("numba not importable; timing the fallback only")

    print(f"\nactive backend: {kernels.backend()}")
    print(f"{'workload':<34} {'backend':<8} {'best of 3':>12}")
    print("-" * 58)
    for name, backend, seconds in rows:
        print(f"{name:<34} {backend:<8} {seconds * 1e3:>10.2f} ms")

    if have_numba:
        by_work = {}
        for name, backend, seconds in rows:
            by_work.setdefault(name, {})[backend] = seconds
        print()
        for name, timings in by_work.items():
            slow = timings.get("numpy", timings.get("python"))
            fast = timings.get("numba")
            if slow and fast:
                print(f"{name}: numba is {slow / fast:.1f}x faster")


if __name__ == "__main__":
    main()
