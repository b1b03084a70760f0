"""Fused vertex weights and their analytic continuation.

The fused weight ``w^{(J)}_u(i, j; k, l)`` is computed three independent ways:
by direct summation over J-row stacks, by the J -> J-1 recursion, and by the
closed terminating q-hypergeometric expression. The specialization ``u = s``
and the continuation ``q^J -> -x/s`` give the weights ``W_x`` used by the
spin q-Whittaker lattice.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Optional, Sequence, Tuple

from .scalars import q_hypergeometric_reg, q_pochhammer, x_pochhammer
from .vertex import n_vertex, weight_unfused


def _strings(J: int, ones: int):
    """Binary tuples of length J with ``ones`` ones."""
    for pos in itertools.combinations(range(J), ones):
        yield tuple(1 if m in pos else 0 for m in range(J))


def normalization_Z(q, j: int, J: int):
    """``sum_{|c|=j} q^{sum (m-1) c_m}``, in closed form."""
    return q ** (j * (j - 1) // 2) * q_pochhammer(q, q, J) / (
        q_pochhammer(q, q, j) * q_pochhammer(q, q, J - j))


def _geometric(q, u, J: int):
    return tuple(u * q ** m for m in range(J))


def fused_weight_bruteforce(q, s, u, J: int, i: int, j: int, k: int, l: int):
    if J < 1:
        raise ValueError("J must be >= 1")
    if not (0 <= j <= J and 0 <= l <= J) or i < 0 or k < 0 or i + j != k + l:
        return 0 * u
    spectral = _geometric(q, u, J)
    total = 0
    for a in _strings(J, j):
        qa = q ** sum(m * am for m, am in enumerate(a))
        for b in _strings(J, l):
            total += qa * n_vertex(q, s, spectral, i, a, k, b)
    return total / normalization_Z(q, j, J)


def fused_weight_recursion(q, s, u, J: int, i: int, j: int, k: int, l: int):
    """Peel off the lowest row: ``w^{(J)}_u`` from ``w_u`` and ``w^{(J-1)}_{qu}``."""

    @lru_cache(maxsize=None)
    def rec(J: int, power: int, i: int, j: int, k: int, l: int):
        if i < 0 or k < 0 or j < 0 or l < 0 or j > J or l > J:
            return 0
        if J == 0:
            return 1 if (i == k and j == 0 and l == 0) else 0
        uu = u * q ** power
        qJ = q ** J
        total = 0
        if j < J:
            part = 0
            for n in (0, 1):
                w = weight_unfused(q, s, uu, i, 0, i - n, n)
                if w != 0:
                    part += w * rec(J - 1, power + 1, i - n, j, k, l - n)
            total += (q ** j - qJ) / (1 - qJ) * part
        if j > 0:
            part = 0
            for n in (0, 1):
                w = weight_unfused(q, s, uu, i, 1, i - n + 1, n)
                if w != 0:
                    part += w * rec(J - 1, power + 1, i - n + 1, j - 1, k, l - n)
            total += (1 - q ** j) / (1 - qJ) * part
        return total

    if J < 1:
        raise ValueError("J must be >= 1")
    return rec(J, 0, i, j, k, l) + 0 * u


def fused_weight_formula(q, s, u, J: int, i: int, j: int, k: int, l: int):
    """Closed form with the regularized terminating 4phi3 series."""
    if i + j != k + l or i < 0 or k < 0 or not (0 <= j <= J and 0 <= l <= J):
        return 0 * u
    num = ((-1) ** ((l - i) % 2) * q ** (i * (i + 2 * j - 1) // 2) * s ** (j - k) * u ** i
           * q_pochhammer(u / s, q, l - i) * q_pochhammer(s * s, q, i))
    den = (q_pochhammer(s * u, q, k + l) * q_pochhammer(q ** (J - j + 1), q, j - l)
           * q_pochhammer(q, q, i) * q_pochhammer(s * s, q, k))
    series = q_hypergeometric_reg(
        k,
        (q ** (-i), q ** J * s * u, q * s / u),
        (s * s, q ** (l - i + 1), q ** (J - k - l + 1)),
        q, q)
    return num / den * series


def weight_u_eq_s(q, s, J: int, i: int, j: int, k: int, l: int):
    """Fused weight at ``u = s``; factorized form."""
    if i + j != k + l or i < l or min(i, j, k, l) < 0:
        return 0 * q
    qJ = q ** J
    return ((-s * qJ) ** l * q_pochhammer(q ** (-J), q, l) * q_pochhammer(s * s * qJ, q, i - l)
            * q_pochhammer(q, q, k)
            / (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(s * s, q, k)))


def weight_W(q, s, x, i: int, j: int, k: int, l: int):
    """``W_x(i, j; k, l)``: the u = s weight continued in ``q^J -> -x/s``.

    ``x^l (-s/x; q)_l`` is taken in product form, so x = 0 is allowed.
    """
    if i + j != k + l or i < l or min(i, j, k, l) < 0:
        return 0 * x
    return (x_pochhammer(x, -s, q, l) * q_pochhammer(-s * x, q, i - l) * q_pochhammer(q, q, k)
            / (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(s * s, q, k)))


def weight_W_dual(q, s, x, i: int, j: int, k: int, l: int):
    """Dual continued weight; paths run north-west to south-east."""
    if j + k != i + l or k < l or min(i, j, k, l) < 0:
        return 0 * x
    return (x_pochhammer(x, -s, q, l) * q_pochhammer(-s * x, q, k - l) * q_pochhammer(q, q, k)
            / (q_pochhammer(q, q, l) * q_pochhammer(q, q, k - l) * q_pochhammer(s * s, q, k)))


def dual_fused_relation_check(q, s, x, i: int, j: int, k: int, l: int) -> bool:
    """``W_x(i,j;k,l) = (q;q)_k/(s^2;q)_k * Wbar_x(k,j;i,l) * (s^2;q)_i/(q;q)_i``."""
    lhs = weight_W(q, s, x, i, j, k, l)
    rhs = (q_pochhammer(q, q, k) / q_pochhammer(s * s, q, k) * weight_W_dual(q, s, x, k, j, i, l)
           * q_pochhammer(s * s, q, i) / q_pochhammer(q, q, i))
    return lhs == rhs


def r_matrix_fused(q, s, x, y, i: int, j: int, k: int, l: int):
    """Continued R-matrix ``R_{x,y}(i, j; k, l)``."""
    if i + j != k + l or i < l or min(i, j, k, l) < 0:
        return 0 * x
    # (x/y)^l (-s/x;q)_l = y^-l prod_{t<l} (x + s q^t)
    return (x_pochhammer(x, -s, q, l) / y ** l * q_pochhammer(x / y, q, i - l)
            * q_pochhammer(q, q, i)
            / (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(-s / y, q, i)))


def r_matrix_integer(q, J: int, I: int, i: int, j: int, k: int, l: int):
    """R-matrix between integer spins J and I (before continuation).

    Defined for ``i, k <= I`` and ``j, l <= J``; zero outside that range.
    """
    if i + j != k + l or i < l or min(i, j, k, l) < 0 or max(i, k) > I or max(j, l) > J:
        return 0 * q
    qJI = q ** (J - I)
    return (qJI ** l * q_pochhammer(q ** (-J), q, l) * q_pochhammer(qJI, q, i - l)
            * q_pochhammer(q, q, i)
            / (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(q ** (-I), q, i)))


def fused_ybe_sides(q, s, x, y, i: Sequence[int], j: Sequence[int],
                    W: Optional[Callable] = None, R: Optional[Callable] = None) -> Tuple[object, object]:
    """Both sides of the continued fused Yang-Baxter equation.

    The x-line carries ``W_x`` and the y-line ``W_y``; the intertwiner is
    ``R_{y,x}``, i.e. :func:`r_matrix_fused` with its spectral arguments in
    the order (y, x). ``W(q, s, x, i, j, k, l)`` and
    ``R(q, s, x, y, i, j, k, l)`` may be injected; an injected ``R`` receives
    (x, y) and is used as is. Sums are finite since every index is bounded
    by the total path count.
    """
    Wf = weight_W if W is None else W
    if R is None:
        def Rf(q, s, x, y, a, b, c, d):
            return r_matrix_fused(q, s, y, x, a, b, c, d)
    else:
        Rf = R
    i1, i2, i3 = i
    j1, j2, j3 = j
    bound = i1 + i2 + i3
    if j1 + j2 + j3 != bound:
        return 0, 0
    lhs = 0
    rhs = 0
    for k1 in range(bound + 1):
        for k2 in range(bound + 1):
            k3 = i3 + k1 - j1
            if k3 >= 0:
                r = Rf(q, s, x, y, i2, i1, k2, k1)
                if r != 0:
                    lhs += r * Wf(q, s, y, i3, k1, k3, j1) * Wf(q, s, x, k3, k2, j3, j2)
            k3 = i3 + i2 - k2
            if k3 >= 0:
                r = Rf(q, s, x, y, k2, k1, j2, j1)
                if r != 0:
                    rhs += Wf(q, s, x, i3, i2, k3, k2) * Wf(q, s, y, k3, i1, j3, k1) * r
    return lhs, rhs


def fused_ybe_check(q, s, x, y, i: Sequence[int], j: Sequence[int],
                    W: Optional[Callable] = None, R: Optional[Callable] = None) -> bool:
    lhs, rhs = fused_ybe_sides(q, s, x, y, i, j, W, R)
    return lhs == rhs


def fused_ybe_integer_check(q, s, J1: int, J2: int, i: Sequence[int], j: Sequence[int]) -> bool:
    """Integer-spin fused YBE at u = s: spin J1 on the first line, J2 on the second.

    Needs ``J1 <= J2``; for ``J1 > J2`` the intertwiner has a vanishing
    denominator and the integer form is not defined.
    """
    if J1 > J2:
        raise ValueError("integer fused YBE needs J1 <= J2")
    i1, i2, i3 = i
    j1, j2, j3 = j
    if not (i1 <= J1 and j1 <= J1 and i2 <= J2 and j2 <= J2):
        raise ValueError("horizontal indices exceed the spins")
    lhs = rhs = 0
    for k1 in range(J1 + 1):
        for k2 in range(J2 + 1):
            k3 = i3 + k1 - j1
            if k3 >= 0:
                lhs += (r_matrix_integer(q, J1, J2, i2, i1, k2, k1)
                        * weight_u_eq_s(q, s, J1, i3, k1, k3, j1)
                        * weight_u_eq_s(q, s, J2, k3, k2, j3, j2))
            k3 = i3 + i2 - k2
            if k3 >= 0:
                rhs += (weight_u_eq_s(q, s, J2, i3, i2, k3, k2)
                        * weight_u_eq_s(q, s, J1, k3, i1, j3, k1)
                        * r_matrix_integer(q, J1, J2, k2, k1, j2, j1))
    return lhs == rhs


def concatenation_check(q, s, u, J: int, bottoms: Sequence[int], tops: Sequence[int],
                        j: int, l: int) -> bool:
    """A fused two-column row equals the normalized sum over unfused J x 2 blocks."""
    (i0, i1), (k0, k1) = bottoms, tops
    lhs = 0
    for n in range(J + 1):
        lhs += (fused_weight_formula(q, s, u, J, i0, j, k0, n)
                * fused_weight_formula(q, s, u, J, i1, n, k1, l))
    spectral = _geometric(q, u, J)
    rhs = 0
    for a in _strings(J, j):
        qa = q ** sum(m * am for m, am in enumerate(a))
        for b in _strings(J, l):
            block = 0
            for c in itertools.product((0, 1), repeat=J):
                left = n_vertex(q, s, spectral, i0, a, k0, c)
                if left != 0:
                    block += left * n_vertex(q, s, spectral, i1, c, k1, b)
            rhs += qa * block
    rhs = rhs / normalization_Z(q, j, J)
    return lhs == rhs
