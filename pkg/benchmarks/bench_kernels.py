#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Runs the two hot operations on experiment-sized workloads:
  * basis evaluation on a Lebesgue grid (7201 points),
  * basis integrals over a uniform candidate pool (~4900 discs).

Usage: python benchmarks/bench_kernels.py [--degree D] [--repeat K]
"""

import argparse
import time

import numpy as np

from histopol._kernels import numpy_backend

try:
    from histopol._kernels import _cykernels as compiled
except ImportError:
    compiled = None

from histopol.basis import BasisSpec
from histopol.greedy import uniform_disc_pool
from histopol.lebesgue import default_eval_grid
from histopol.quadrature import radial_rule


def time_call(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=12)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--pool-grid", type=int, default=80)
    args = parser.parse_args()

    d = args.degree
    spec = BasisSpec("chebyshev", d)
    kind = numpy_backend.kind_code(spec.kind.value)

    grid = default_eval_grid()
    xs = np.ascontiguousarray(grid.points[:, 0])
    ys = np.ascontiguousarray(grid.points[:, 1])

    pool = uniform_disc_pool(args.pool_grid, spec)
    centers = np.ascontiguousarray(pool.centers()) if hasattr(pool, "centers") else None
    centers = np.ascontiguousarray(
        [[s.center.x, s.center.y] for s in pool.supports], dtype=np.float64
    )
    radii = np.ascontiguousarray([s.radius for s in pool.supports], dtype=np.float64)
    rho, rho_w = radial_rule(d)
    rho = np.ascontiguousarray(rho)
    rho_w = np.ascontiguousarray(rho_w)

    backends = [("numpy", numpy_backend)]
    if compiled is not None:
        backends.append(("compiled", compiled))
    else:
        print("compiled kernels not available; benchmarking numpy fallback only")

    print(f"degree {d} (N={spec.size}), grid {len(xs)} pts, pool {len(radii)} discs")
    results = {}
    for name, backend in backends:
        t_eval, m_eval = time_call(
            lambda b=backend: b.eval_basis_matrix(kind, d, xs, ys), args.repeat
        )
        t_int, m_int = time_call(
            lambda b=backend: b.disc_basis_integrals(
                kind, d, centers, radii, rho, rho_w, d + 1
            ),
            args.repeat,
        )
        results[name] = (t_eval, t_int, m_eval, m_int)
        print(f"{name:9s} eval_basis_matrix: {t_eval*1e3:8.2f} ms   disc_basis_integrals: {t_int*1e3:8.2f} ms")

    if len(results) == 2:
        np_e, np_i, me, mi = results["numpy"]
        cy_e, cy_i, ce, ci = results["compiled"]
        err_e = np.abs(me - ce).max()
        err_i = np.abs(mi - ci).max() / max(np.abs(mi).max(), 1e-300)
        print(f"speedup: eval {np_e/cy_e:.2f}x, integrals {np_i/cy_i:.2f}x")
        print(f"agreement: eval max abs diff {err_e:.2e}, integrals max rel diff {err_i:.2e}")


if __name__ == "__main__":
    main()
