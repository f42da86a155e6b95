#!/usr/bin/env python3
"""Benchmark the quadrature backends (numba @njit loop vs numpy convolve).

The causal convolution with the product-integration weight table is the
hot O(n^2) kernel behind every operator.  Run:

    python benchmarks/bench_quadrature.py [--sizes 512,1024,...] [--repeats 7]
"""

import argparse
import time

import numpy as np

from psifrac import FracParams, SampledFunction, TransformedGrid, make_builtin
from psifrac import psi_frac_integral, set_backend
from psifrac._quadrature import fracint_values


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="512,1024,2048,4096,8192")
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",")]

    kernel = make_builtin("identity", (), (0.0, 1.0))
    p = FracParams(0.5, 0.5)

    backends = []
    for name in ("numpy", "numba"):
        try:
            set_backend(name)
            backends.append(name)
        except RuntimeError:
            print(f"[skip] backend {name} unavailable")
    if "numba" in backends:
        # trigger compilation outside the timed region
        set_backend("numba")
        g = np.ones(257)
        fracint_values(g, 0.5, 1.0 / 256)

    print(f"{'n':>6} | " + " | ".join(f"{b + ' conv':>12} | {b + ' op':>12}" for b in backends))
    print("-" * (8 + 30 * len(backends)))
    rows = {}
    for n in sizes:
        grid = TransformedGrid.build(kernel, 0.0, 1.0, n)
        z = grid.tau_nodes
        f = SampledFunction(grid, np.sin(z))
        h = grid.h
        cells = []
        for name in backends:
            set_backend(name)
            t_conv = best_of(lambda: fracint_values(f.values, 0.5, h), args.repeats)
            t_op = best_of(lambda: psi_frac_integral(f, p), args.repeats)
            cells.append((t_conv, t_op))
            rows.setdefault(n, {})[name] = t_conv
        print(
            f"{n:>6} | "
            + " | ".join(f"{tc * 1e3:>10.3f}ms | {to * 1e3:>10.3f}ms" for tc, to in cells)
        )

    if len(backends) == 2:
        print("\nspeedup (numpy conv / numba conv):")
        for n in sizes:
            ratio = rows[n]["numpy"] / rows[n]["numba"]
            print(f"  n={n:>5}: {ratio:5.2f}x")


if __name__ == "__main__":
    main()
