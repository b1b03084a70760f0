"""Spin Hall-Littlewood functions F, G, G* and the stable functions F~, F~*.

Every function is a lattice partition function evaluated by propagating a
vector of multiplicity states row by row. States of the finite lattice
include column 0 (zero parts); states of the stable lattice start at
column 1.

``weight`` arguments accept a replacement for the unfused or dual vertex
weight with the signature ``(q, s, u, i, j, k, l)``; they exist so tests can
check that a perturbed weight is detected.
"""
from __future__ import annotations

import itertools
from typing import Callable, Dict, Optional, Sequence

from .lattice import RowOperator, propagate
from .partitions import Partition, from_multiplicities, length, make_partition, strip_zeros
from .scalars import q_pochhammer
from .vertex import NW_SE, SW_NE, WeightFamily, weight_dual, weight_unfused

WeightFn = Callable[..., object]


def _family(weight: WeightFn, q, s, u, conservation: str) -> WeightFamily:
    return WeightFamily(lambda i, j, k, l: weight(q, s, u, i, j, k, l), conservation, 1)


def _counts(lam: Sequence[int], ncols: int, offset: int) -> tuple:
    """Occupations of columns ``offset .. offset + ncols - 1``."""
    counts = [0] * ncols
    for x in lam:
        if x < offset:
            continue
        if x - offset >= ncols:
            raise ValueError(f"part {x} outside {ncols} columns")
        counts[x - offset] += 1
    return tuple(counts)


def _to_partition(state: Sequence[int], offset: int) -> Partition:
    parts = from_multiplicities((0,) * offset + tuple(state))
    return parts if offset == 0 else strip_zeros(parts)


# --- normalizations --------------------------------------------------------

def normalization_c(q, s, lam: Sequence[int]):
    """``c_lam`` for a partition with zero parts counted."""
    n = len(lam)
    val = q_pochhammer(q, q, n) / q_pochhammer(s * s, q, n)
    for i in set(lam):
        m = sum(1 for x in lam if x == i)
        val = val * q_pochhammer(s * s, q, m) / q_pochhammer(q, q, m)
    return val


def normalization_c_tilde(q, s, lam: Sequence[int]):
    """``c~_lam``: product over positive part values only."""
    val = q ** 0
    for i in set(x for x in lam if x > 0):
        m = sum(1 for x in lam if x == i)
        val = val * q_pochhammer(s * s, q, m) / q_pochhammer(q, q, m)
    return val


# --- finite lattice --------------------------------------------------------

def hl_F_vector(q, s, us: Sequence, mu: Sequence[int], ncols: int,
                weight: Optional[WeightFn] = None) -> Dict[Partition, object]:
    """``{lam: F_{lam/mu}(us)}`` for all ``lam`` with parts below ``ncols``."""
    w = weight_unfused if weight is None else weight
    rows = [RowOperator(_family(w, q, s, u, SW_NE), {1: 1}, 0) for u in us]
    vec = propagate(rows, _counts(mu, ncols, 0))
    return {_to_partition(st, 0): val for st, val in vec.items()}


def hl_F(q, s, us: Sequence, lam: Sequence[int], mu: Sequence[int] = (),
         weight: Optional[WeightFn] = None):
    """``F_{lam/mu}(u_1..u_l)``: l C-rows between bottom ``mu`` and top ``lam``.

    Zero parts count: ``len(lam)`` must equal ``len(mu) + len(us)``.
    """
    lam = make_partition(lam)
    mu = make_partition(mu)
    if len(lam) != len(mu) + len(us):
        raise ValueError("F_{lam/mu} needs len(lam) = len(mu) + number of variables")
    ncols = max(lam + mu, default=0) + 1
    return hl_F_vector(q, s, us, mu, ncols, weight).get(lam, 0)


def hl_G_vector(q, s, vs: Sequence, mu: Sequence[int], ncols: int,
                weight: Optional[WeightFn] = None) -> Dict[Partition, object]:
    """``{lam: G_{lam/mu}(vs)}`` with A-rows (no paths enter or leave)."""
    w = weight_unfused if weight is None else weight
    rows = [RowOperator(_family(w, q, s, v, SW_NE), {0: 1}, 0) for v in vs]
    vec = propagate(rows, _counts(mu, ncols, 0))
    return {_to_partition(st, 0): val for st, val in vec.items()}


def hl_G(q, s, vs: Sequence, lam: Sequence[int], mu: Sequence[int] | None = None,
         weight: Optional[WeightFn] = None):
    """``G_{lam/mu}(v_1..v_n)``; ``mu`` defaults to ``0^len(lam)``."""
    lam = make_partition(lam)
    mu = (0,) * len(lam) if mu is None else make_partition(mu)
    if len(lam) != len(mu):
        raise ValueError("G_{lam/mu} needs len(lam) = len(mu)")
    ncols = max(lam + mu, default=0) + 1
    return hl_G_vector(q, s, vs, mu, ncols, weight).get(lam, 0)


def hl_G_star_vector(q, s, vs: Sequence, nu: Sequence[int], ncols: int,
                     weight: Optional[WeightFn] = None) -> Dict[Partition, object]:
    """``{lam: G*_{lam/nu}(vs)}`` from the dual lattice, top ``nu`` down to bottom ``lam``."""
    w = weight_dual if weight is None else weight
    rows = [RowOperator(_family(w, q, s, v, NW_SE), {0: 1}, 0) for v in vs]
    vec = propagate(rows, _counts(nu, ncols, 0))
    return {_to_partition(st, 0): val for st, val in vec.items()}


def hl_G_star(q, s, vs: Sequence, lam: Sequence[int], mu: Sequence[int] | None = None,
              route: str = "dual-lattice", weight: Optional[WeightFn] = None):
    """``G*_{lam/mu}``: either the dual lattice or ``(c_lam/c_mu) G_{lam/mu}``."""
    lam = make_partition(lam)
    mu = (0,) * len(lam) if mu is None else make_partition(mu)
    if len(lam) != len(mu):
        raise ValueError("G*_{lam/mu} needs len(lam) = len(mu)")
    if route == "normalization":
        return normalization_c(q, s, lam) / normalization_c(q, s, mu) * hl_G(q, s, vs, lam, mu, weight)
    if route != "dual-lattice":
        raise ValueError(f"unknown route {route!r}")
    ncols = max(lam + mu, default=0) + 1
    return hl_G_star_vector(q, s, vs, mu, ncols, weight).get(lam, 0)


# --- stable functions ------------------------------------------------------

def stable_F_vector(q, s, us: Sequence, mu: Sequence[int], ncols: int,
                    weight: Optional[WeightFn] = None) -> Dict[Partition, object]:
    """``{lam: F~_{lam/mu}(us)}`` for ``lam_1 <= ncols``.

    A row carries ``u^j`` for a path entering column 1 from the saturated
    column 0 (``j`` in {0, 1}).
    """
    w = weight_unfused if weight is None else weight
    rows = [RowOperator(_family(w, q, s, u, SW_NE), {0: 1, 1: u}, 0) for u in us]
    vec = propagate(rows, _counts(strip_zeros(mu), ncols, 1))
    return {_to_partition(st, 1): val for st, val in vec.items()}


def stable_F_skew(q, s, us: Sequence, lam: Sequence[int], mu: Sequence[int] = (),
                  weight: Optional[WeightFn] = None):
    lam = strip_zeros(make_partition(lam))
    mu = strip_zeros(make_partition(mu))
    ncols = max(lam + mu, default=0)
    return stable_F_vector(q, s, us, mu, ncols, weight).get(lam, 0)


def stable_F(q, s, us: Sequence, lam: Sequence[int], weight: Optional[WeightFn] = None):
    """``F~_lam(u_1..u_n)`` by the lattice."""
    return stable_F_skew(q, s, us, lam, (), weight)


def stable_F_symmetrization(q, s, us: Sequence, lam: Sequence[int]):
    """``F~_lam`` as a sum over permutations of the variables.

    Coincident variables, or a variable equal to ``s``, make individual terms
    singular and are rejected.
    """
    lam = strip_zeros(make_partition(lam))
    n = len(us)
    if len(lam) > n:
        return 0 * q
    if len(set(us)) != n:
        raise ZeroDivisionError("symmetrization needs pairwise distinct variables")
    if any(u == s for u in us) and lam:
        raise ZeroDivisionError("symmetrization needs every variable different from s")
    lam_full = lam + (0,) * (n - len(lam))
    ell = len(lam)
    total = 0
    for perm in itertools.permutations(range(n)):
        x = [us[p] for p in perm]
        term = 1
        for a in range(n):
            for b in range(a + 1, n):
                term = term * (x[a] - q * x[b]) / (x[a] - x[b])
        for a in range(ell):
            term = term * x[a] / (x[a] - s)
        for a in range(n):
            term = term * ((x[a] - s) / (1 - s * x[a])) ** lam_full[a]
        total = total + term
    return (1 - q) ** n / q_pochhammer(q, q, n - ell) * total


def stable_F_star_vector(q, s, vs: Sequence, nu: Sequence[int], ncols: int,
                         weight: Optional[WeightFn] = None) -> Dict[Partition, object]:
    """``{lam: F~*_{lam/nu}(vs)}`` from the dual lattice (top ``nu``)."""
    w = weight_dual if weight is None else weight
    rows = [RowOperator(_family(w, q, s, v, NW_SE), {0: 1, 1: v}, 0) for v in vs]
    vec = propagate(rows, _counts(strip_zeros(nu), ncols, 1))
    return {_to_partition(st, 1): val for st, val in vec.items()}


def stable_F_star(q, s, vs: Sequence, lam: Sequence[int], mu: Sequence[int] = (),
                  route: str = "dual-lattice", weight: Optional[WeightFn] = None):
    """``F~*_{lam/mu}``: dual lattice, or ``(c~_lam/c~_mu) F~_{lam/mu}``."""
    lam = strip_zeros(make_partition(lam))
    mu = strip_zeros(make_partition(mu))
    if route == "normalization":
        return (normalization_c_tilde(q, s, lam) / normalization_c_tilde(q, s, mu)
                * stable_F_skew(q, s, vs, lam, mu, weight))
    if route != "dual-lattice":
        raise ValueError(f"unknown route {route!r}")
    ncols = max(lam + mu, default=0)
    return stable_F_star_vector(q, s, vs, mu, ncols, weight).get(lam, 0)


def hall_littlewood_one_row(q, u, k: int):
    """Classical HL ``Q_(k)(u) = (1 - q) u^k`` for ``k >= 1`` (t-parameter ``q``)."""
    return (1 - q) * u ** k if k > 0 else q ** 0


def length_of(lam: Sequence[int]) -> int:
    return length(lam)
