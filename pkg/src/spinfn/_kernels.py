"""Tensor-product trapezoid sums over a torus of identical circles.

Both integrands of the contour module have the shape

    prod_a g[a, n_a] * prod_{a<b} pair[n_a, n_b]

summed over all node tuples ``(n_1, ..., n_L)``. ``torus_mean`` returns the
average of that product. The compiled kernel walks the tuples with an
odometer; the numpy kernel loops over the first node in Python and
broadcasts the rest. Set ``SPINFN_DISABLE_NUMBA=1`` to force numpy.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # numba is an optional extra
    njit = None


def numba_enabled() -> bool:
    flag = os.environ.get("SPINFN_DISABLE_NUMBA", "").strip().lower()
    return njit is not None and flag not in ("1", "true", "yes")


def torus_mean_numpy(g: np.ndarray, pair: np.ndarray) -> complex:
    g = np.asarray(g, dtype=np.complex128)
    pair = np.asarray(pair, dtype=np.complex128)
    L, N = g.shape
    if L == 0:
        return 1.0 + 0j
    if L == 1:
        return complex(g[0].mean())
    dims = L - 1

    def along(vec, axis):
        shape = [1] * dims
        shape[axis] = N
        return vec.reshape(shape)

    # product over variables 2..L, independent of the first node
    rest = np.ones((N,) * dims, dtype=np.complex128)
    for a in range(1, L):
        rest = rest * along(g[a], a - 1)
        for b in range(a + 1, L):
            shape = [1] * dims
            shape[a - 1] = N
            shape[b - 1] = N
            rest = rest * pair.reshape(shape)
    total = 0j
    for n0 in range(N):
        term = rest
        for b in range(1, L):
            term = term * along(pair[n0], b - 1)
        total += g[0, n0] * term.sum()
    return complex(total / N ** L)


if njit is not None:
    @njit(cache=True)
    def _torus_mean_jit(g, pair):
        L, N = g.shape
        idx = np.zeros(L, dtype=np.int64)
        # partial[a] = product of the factors involving variables 0..a-1
        partial = np.ones(L + 1, dtype=np.complex128)
        total = 0j
        a = 0
        while True:
            # refill partial products from level a downwards
            for c in range(a, L):
                val = partial[c] * g[c, idx[c]]
                for b in range(c):
                    val *= pair[idx[b], idx[c]]
                partial[c + 1] = val
            total += partial[L]
            a = L - 1
            while a >= 0:
                idx[a] += 1
                if idx[a] < N:
                    break
                idx[a] = 0
                a -= 1
            if a < 0:
                break
        return total / N ** L
else:
    _torus_mean_jit = None


def torus_mean(g: np.ndarray, pair: np.ndarray, backend: str | None = None) -> complex:
    """Average of the product integrand over the ``N**L`` torus nodes.

    ``backend`` is ``"numba"``, ``"numpy"`` or None (numba unless disabled).
    """
    g = np.ascontiguousarray(g, dtype=np.complex128)
    pair = np.ascontiguousarray(pair, dtype=np.complex128)
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        if _torus_mean_jit is None:
            raise RuntimeError("numba is not installed")
        if g.shape[0] == 0:
            return 1.0 + 0j
        return complex(_torus_mean_jit(g, pair))
    if backend == "numpy":
        return torus_mean_numpy(g, pair)
    raise ValueError(f"unknown backend {backend!r}")
