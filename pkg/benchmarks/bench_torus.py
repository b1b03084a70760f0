#!/usr/bin/env python3
"""Compare the numba and numpy torus kernels on the q-Whittaker integrand.

Prints one JSON line per (variables, nodes) case with the best wall time of
each backend and the difference between their results.
"""
import argparse
import json
import time

import numpy as np

from spinfn._kernels import _torus_mean_jit, torus_mean
from spinfn.contour import ContourSpec, _pair_matrix


def integrand(L, nodes, q=0.3, s=0.2, xs=(0.1, 0.15)):
    u = ContourSpec(1.0, nodes).nodes_array()
    common = np.prod([1 + u * x for x in xs], axis=0) / (1 - s * u) ** (len(xs) + 1)
    base = (1 - s * u) / (u - s)
    g = np.stack([base ** (L - a) * common for a in range(L)])
    return g, _pair_matrix(u, q)


def best_time(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        val = fn()
        times.append(time.perf_counter() - start)
    return min(times), val


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--variables", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--nodes", type=int, nargs="+", default=[32, 64, 96])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _torus_mean_jit is None:
        raise SystemExit("numba is not installed; nothing to compare")
    g, pair = integrand(2, 16)
    start = time.perf_counter()
    torus_mean(g, pair, "numba")
    print(json.dumps({"compile_seconds": round(time.perf_counter() - start, 4)}))

    for L in args.variables:
        for nodes in args.nodes:
            g, pair = integrand(L, nodes)
            t_jit, v_jit = best_time(lambda: torus_mean(g, pair, "numba"), args.repeats)
            t_np, v_np = best_time(lambda: torus_mean(g, pair, "numpy"), args.repeats)
            print(json.dumps({
                "variables": L, "nodes": nodes, "points": nodes ** L,
                "numba_s": round(t_jit, 5), "numpy_s": round(t_np, 5),
                "speedup": round(t_np / t_jit, 2) if t_jit > 0 else None,
                "difference": abs(v_jit - v_np),
            }))


if __name__ == "__main__":
    main()
