"""Spin q-Whittaker polynomials and their duals.

Two routes: sums of one-variable factors over interlacing chains, and the
fused lattice with ``W_x`` (or ``Wbar_x``) rows acting on conjugate
multiplicity states ``(lam_1 - lam_2, lam_2 - lam_3, ...)``. The second
family obtained from the fused lattice coincides with this one, so only
``F`` and ``F*`` are provided.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterator, Optional, Sequence, Tuple

from .fusion import weight_W, weight_W_dual
from .lattice import RowOperator, propagate
from .partitions import Partition, contains, interlaces, make_partition, part, strip_zeros
from .scalars import q_pochhammer, x_pochhammer
from .vertex import NW_SE, SW_NE, WeightFamily


def _positive(lam: Sequence[int]) -> Partition:
    return strip_zeros(make_partition(lam))


def qw_onevar(q, s, x, mu: Sequence[int], nu: Sequence[int]):
    """One-variable skew polynomial; zero unless ``mu`` interlaces above ``nu``."""
    mu = _positive(mu)
    nu = _positive(nu)
    if not interlaces(mu, nu):
        return 0 * x
    val = x ** 0
    for i in range(1, len(mu) + 1):
        a = part(mu, i) - part(nu, i)
        b = part(nu, i) - part(mu, i + 1)
        c = part(mu, i) - part(mu, i + 1)
        val = val * (x_pochhammer(x, -s, q, a) * q_pochhammer(-s * x, q, b) * q_pochhammer(q, q, c)
                     / (q_pochhammer(q, q, a) * q_pochhammer(q, q, b) * q_pochhammer(s * s, q, c)))
    return val


def qw_onevar_dual(q, s, x, mu: Sequence[int], nu: Sequence[int]):
    """One-variable dual skew polynomial."""
    mu = _positive(mu)
    nu = _positive(nu)
    if not interlaces(mu, nu):
        return 0 * x
    val = x ** 0
    for i in range(1, len(mu) + 1):
        a = part(mu, i) - part(nu, i)
        b = part(nu, i) - part(mu, i + 1)
        c = part(nu, i) - part(nu, i + 1)
        val = val * (x_pochhammer(x, -s, q, a) * q_pochhammer(-s * x, q, b) * q_pochhammer(q, q, c)
                     / (q_pochhammer(q, q, a) * q_pochhammer(q, q, b) * q_pochhammer(s * s, q, c)))
    return val


def normalization_c_tilde_conj(q, s, lam: Sequence[int]):
    """``c~_{lam'}``: product of ``(s^2;q)_d/(q;q)_d`` over ``d = lam_i - lam_{i+1}``."""
    lam = _positive(lam)
    val = q ** 0
    for i in range(1, len(lam) + 1):
        d = part(lam, i) - part(lam, i + 1)
        val = val * q_pochhammer(s * s, q, d) / q_pochhammer(q, q, d)
    return val


def strips_above(nu: Partition, lam: Partition) -> Iterator[Partition]:
    """Partitions ``kappa`` with ``kappa`` interlacing above ``nu`` and ``kappa`` inside ``lam``."""
    n = len(nu) + 1
    ranges = []
    for i in range(1, n + 1):
        lo = part(nu, i)
        hi = part(lam, i)
        if i > 1:
            hi = min(hi, part(nu, i - 1))
        if hi < lo:
            return
        ranges.append(range(lo, hi + 1))
    for kappa in itertools.product(*ranges):
        yield strip_zeros(kappa)


def _branching(q, s, xs: Tuple, lam: Partition, mu: Partition, onevar) -> object:
    m = len(xs)

    @lru_cache(maxsize=None)
    def rest(k: int, nu: Partition):
        # value of the polynomial lam/nu in x_{k+1}, ..., x_m
        if k == m:
            return 1 if nu == lam else 0
        total = 0
        for kappa in strips_above(nu, lam):
            w = onevar(q, s, xs[k], kappa, nu)
            if w != 0:
                sub = rest(k + 1, kappa)
                if sub != 0:
                    total = total + w * sub
        return total

    return rest(0, mu)


def _conj_state(lam: Partition, ncols: int) -> Tuple[int, ...]:
    return tuple(part(lam, i) - part(lam, i + 1) for i in range(1, ncols + 1))


def _from_conj_state(state: Sequence[int]) -> Partition:
    parts = []
    acc = 0
    for d in reversed(state):
        acc += d
        parts.append(acc)
    return strip_zeros(tuple(reversed(parts)))


def _row_coefficient(q, s, x):
    @lru_cache(maxsize=None)
    def coef(j: int):
        return x_pochhammer(x, -s, q, j) / q_pochhammer(q, q, j)
    return coef


def _cached(weight, q, s, x):
    # one row revisits the same few index quadruples many times
    @lru_cache(maxsize=None)
    def evaluate(i: int, j: int, k: int, l: int):
        return weight(q, s, x, i, j, k, l)
    return evaluate


def _keep(max_first: int, max_size: Optional[int]):
    if max_size is None:
        return lambda st: sum(st) <= max_first
    return lambda st: sum(st) <= max_first and sum(i * d for i, d in enumerate(st, 1)) <= max_size


def qw_lattice_vector(q, s, xs: Sequence, mu: Sequence[int], ncols: int, max_first: int,
                      weight=None, max_size: Optional[int] = None) -> Dict[Partition, object]:
    """``{lam: F_{lam/mu}(xs)}`` for ``l(lam) <= ncols``, ``lam_1 <= max_first``, ``|lam| <= max_size``."""
    w = weight_W if weight is None else weight
    rows = []
    for x in xs:
        fam = WeightFamily(_cached(w, q, s, x), SW_NE, None)
        rows.append(RowOperator(fam, _row_coefficient(q, s, x), 0, max_first))
    start = _conj_state(_positive(mu), ncols)
    vec = propagate(rows, start, keep=_keep(max_first, max_size))
    return {_from_conj_state(st): val for st, val in vec.items()}


def qw_dual_lattice_vector(q, s, ys: Sequence, mu: Sequence[int], ncols: int, max_first: int,
                           weight=None, max_size: Optional[int] = None) -> Dict[Partition, object]:
    """``{lam: F*_{lam/mu}(ys)}`` from ``Wbar`` rows, top ``mu'`` down to ``lam'``."""
    w = weight_W_dual if weight is None else weight
    rows = []
    for y in ys:
        fam = WeightFamily(_cached(w, q, s, y), NW_SE, None)
        rows.append(RowOperator(fam, _row_coefficient(q, s, y), 0, max_first))
    start = _conj_state(_positive(mu), ncols)
    vec = propagate(rows, start, keep=_keep(max_first, max_size))
    return {_from_conj_state(st): val for st, val in vec.items()}


def qw_F(q, s, xs: Sequence, lam: Sequence[int], mu: Sequence[int] = (), route: str = "branching"):
    """Skew spin q-Whittaker polynomial ``F_{lam/mu}(x_1..x_m)``."""
    lam = _positive(lam)
    mu = _positive(mu)
    if not contains(lam, mu):
        return 0
    if route == "branching":
        return _branching(q, s, tuple(xs), lam, mu, qw_onevar)
    if route == "lattice":
        ncols = max(len(lam), 1)
        return qw_lattice_vector(q, s, xs, mu, ncols, part(lam, 1)).get(lam, 0)
    raise ValueError(f"unknown route {route!r}")


def qw_F_star(q, s, ys: Sequence, lam: Sequence[int], mu: Sequence[int] = (), route: str = "lattice"):
    """Dual skew polynomial ``F*_{lam/mu}(y_1..y_m)``.

    Routes: ``lattice`` (dual fused lattice), ``normalization``
    (``c~_{lam'}/c~_{mu'}`` times ``F``) and ``branching`` (dual one-variable
    factors).
    """
    lam = _positive(lam)
    mu = _positive(mu)
    if not contains(lam, mu):
        return 0
    if route == "lattice":
        ncols = max(len(lam), 1)
        return qw_dual_lattice_vector(q, s, ys, mu, ncols, part(lam, 1)).get(lam, 0)
    if route == "normalization":
        return (normalization_c_tilde_conj(q, s, lam) / normalization_c_tilde_conj(q, s, mu)
                * qw_F(q, s, ys, lam, mu))
    if route == "branching":
        return _branching(q, s, tuple(ys), lam, mu, qw_onevar_dual)
    raise ValueError(f"unknown route {route!r}")


# --- classical q-Whittaker -------------------------------------------------

def _gt_patterns(lam: Partition, mu: Partition, m: int) -> Iterator[Tuple[Partition, ...]]:
    """All chains mu = k0, k1, ..., km = lam, each a horizontal strip over the last."""
    width = len(lam) + 1
    lam_p = tuple(lam) + (0,) * (width - len(lam))
    mu_p = tuple(mu) + (0,) * (width - len(mu))

    def fits(a, b):
        # b / a horizontal strip: b_1 >= a_1 >= b_2 >= a_2 ...
        return all(b[i] >= a[i] for i in range(width)) and all(
            a[i] >= b[i + 1] for i in range(width - 1))

    boxes = [range(mu_p[i], lam_p[i] + 1) for i in range(width)]
    middles = [p for p in itertools.product(*boxes)
               if all(p[i] >= p[i + 1] for i in range(width - 1))]
    for chain in itertools.product(middles, repeat=max(m - 1, 0)):
        full = (mu_p,) + chain + (lam_p,)
        if m == 0:
            full = (mu_p,)
            if mu_p == lam_p:
                yield full
            continue
        if all(fits(full[t], full[t + 1]) for t in range(m)):
            yield full


def q_whittaker_classical(q, xs: Sequence, lam: Sequence[int], mu: Sequence[int] = ()):
    """Classical skew q-Whittaker polynomial (Macdonald with t = 0)."""
    lam = _positive(lam)
    mu = _positive(mu)
    total = 0
    for chain in _gt_patterns(lam, mu, len(xs)):
        term = 1
        for t, x in enumerate(xs):
            a, b = chain[t], chain[t + 1]
            term = term * x ** (sum(b) - sum(a))
            for i in range(len(b)):
                nxt = b[i + 1] if i + 1 < len(b) else 0
                term = term * q_pochhammer(q, q, b[i] - nxt) / (
                    q_pochhammer(q, q, b[i] - a[i]) * q_pochhammer(q, q, a[i] - nxt))
        total = total + term
    return total


def qw_s0_reduction_check(q, xs: Sequence, lam: Sequence[int], mu: Sequence[int] = ()) -> bool:
    zero = 0 * q
    return qw_F(q, zero, xs, lam, mu) == q_whittaker_classical(q, xs, lam, mu)
