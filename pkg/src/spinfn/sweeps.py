"""Exhaustive exact checks of the structural relations at one parameter point.

Each sweep tries every index combination in a stated range and returns an
exact-mode :class:`IdentityReport` whose ``lhs`` counts passing cases and
whose ``rhs`` counts all cases, so ``abs_dev`` is the number of failures.
The first few failing cases are listed under ``extra["failures"]``.
"""
from __future__ import annotations

import itertools
from typing import Callable, List, Optional, Sequence

from .fusion import (dual_fused_relation_check, fused_weight_bruteforce, fused_weight_formula,
                     fused_weight_recursion, fused_ybe_check)
from .identities import IdentityReport, _exact_report
from .partitions import contains, enumerate_partitions
from .spin_hl import stable_F, stable_F_symmetrization
from .spin_qw import q_whittaker_classical, qw_F
from .vertex import gauge_check, ybe_check

MAX_LISTED = 5


class _Tally:
    def __init__(self):
        self.total = 0
        self.failures: List[list] = []

    def record(self, ok: bool, case) -> None:
        self.total += 1
        if not ok:
            self.failures.append(list(case))

    def report(self, name: str, params: dict, seed=None) -> IdentityReport:
        passed = self.total - len(self.failures)
        extra = {"cases": self.total}
        if self.failures:
            extra["failures"] = self.failures[:MAX_LISTED]
        return _exact_report(name, params, passed, self.total, seed, extra)


def ybe_sweep(q, s, u1, u2, max_index: int = 4, weight: Optional[Callable] = None,
              seed=None) -> IdentityReport:
    """Unfused Yang-Baxter equation for all bottom/top occupations ``i, k <= max_index``."""
    tally = _Tally()
    for i in range(max_index + 1):
        for k in range(max_index + 1):
            tally.record(ybe_check(q, s, u1, u2, i, k, weight), (i, k))
    return tally.report("ybe", {"q": q, "s": s, "u": [u1, u2], "max_index": max_index}, seed)


def gauge_sweep(q, s, u, x, max_index: int = 4, seed=None) -> IdentityReport:
    """Unfused gauge relation and its continued (fused) counterpart, indices ``<= max_index``."""
    tally = _Tally()
    for i in range(max_index + 1):
        for k in range(max_index + 1):
            tally.record(gauge_check(q, s, u, i, k), ("unfused", i, k))
    for i, j, k in itertools.product(range(max_index + 1), repeat=3):
        l = i + j - k
        if 0 <= l <= max_index:
            tally.record(dual_fused_relation_check(q, s, x, i, j, k, l), ("fused", i, j, k, l))
    return tally.report("gauge", {"q": q, "s": s, "u": u, "x": x, "max_index": max_index}, seed)


def fusion_routes_sweep(q, s, u, max_spin: int = 3, max_index: int = 3, seed=None) -> IdentityReport:
    """Brute-force fusion, the recursion and the closed formula agree exactly."""
    tally = _Tally()
    for J in range(1, max_spin + 1):
        for i, k in itertools.product(range(max_index + 1), repeat=2):
            for j in range(J + 1):
                l = i + j - k
                if not 0 <= l <= J:
                    continue
                a = fused_weight_bruteforce(q, s, u, J, i, j, k, l)
                b = fused_weight_recursion(q, s, u, J, i, j, k, l)
                c = fused_weight_formula(q, s, u, J, i, j, k, l)
                tally.record(a == b == c, (J, i, j, k, l))
    return tally.report("fusion-routes", {"q": q, "s": s, "u": u, "max_spin": max_spin,
                                          "max_index": max_index}, seed)


def fused_ybe_sweep(q, s, x, y, max_entry: int = 2, W: Optional[Callable] = None,
                    seed=None) -> IdentityReport:
    """Continued fused Yang-Baxter equation for all index triples with entries ``<= max_entry``."""
    tally = _Tally()
    rng = range(max_entry + 1)
    for i in itertools.product(rng, repeat=3):
        for j in itertools.product(rng, repeat=3):
            if sum(i) == sum(j):
                tally.record(fused_ybe_check(q, s, x, y, i, j, W), (*i, *j))
    return tally.report("fused-ybe", {"q": q, "s": s, "x": x, "y": y, "max_entry": max_entry}, seed)


def _box(max_part: int, max_len: int):
    return list(enumerate_partitions(max_part, max_len))


def _skew_pairs(box):
    for lam in box:
        for mu in box:
            if contains(lam, mu):
                yield lam, mu


def route_agreement_sweep(q, s, xs: Sequence, box=(3, 3), seed=None) -> IdentityReport:
    """Branching and lattice values of ``F_{lam/mu}`` agree for every prefix of ``xs``."""
    tally = _Tally()
    parts = _box(*box)
    for m in range(len(xs) + 1):
        for lam, mu in _skew_pairs(parts):
            a = qw_F(q, s, xs[:m], lam, mu, route="branching")
            b = qw_F(q, s, xs[:m], lam, mu, route="lattice")
            tally.record(a == b, (m, list(lam), list(mu)))
    return tally.report("route-agreement", {"q": q, "s": s, "x": list(xs), "box": list(box)}, seed)


def symmetry_stability_sweep(q, s, xs: Sequence, box=(3, 3), seed=None) -> IdentityReport:
    """Invariance under every permutation of ``xs`` and under appending ``x = -s``."""
    tally = _Tally()
    parts = _box(*box)
    xs = list(xs)
    for lam, mu in _skew_pairs(parts):
        base = qw_F(q, s, xs, lam, mu)
        for perm in itertools.permutations(range(len(xs))):
            val = qw_F(q, s, [xs[p] for p in perm], lam, mu)
            tally.record(val == base, ("permutation", list(perm), list(lam), list(mu)))
        for m in range(len(xs)):
            short = qw_F(q, s, xs[:m], lam, mu)
            tally.record(qw_F(q, s, xs[:m] + [-s], lam, mu) == short,
                         ("stability", m, list(lam), list(mu)))
    return tally.report("symmetry-stability", {"q": q, "s": s, "x": xs, "box": list(box)}, seed)


def s0_reduction_sweep(q, xs: Sequence, box=(3, 3), seed=None) -> IdentityReport:
    """At ``s = 0`` the spin polynomials equal the classical q-Whittaker ones."""
    tally = _Tally()
    parts = _box(*box)
    zero = 0 * q
    for m in range(len(xs) + 1):
        for lam, mu in _skew_pairs(parts):
            a = qw_F(q, zero, xs[:m], lam, mu)
            b = q_whittaker_classical(q, xs[:m], lam, mu)
            tally.record(a == b, (m, list(lam), list(mu)))
    return tally.report("s0-reduction", {"q": q, "x": list(xs), "box": list(box)}, seed)


def stable_routes_sweep(q, s, us: Sequence, box=(3, 3), seed=None) -> IdentityReport:
    """Stable spin HL: lattice value equals the symmetrization sum, for every prefix of ``us``."""
    tally = _Tally()
    for n in range(len(us) + 1):
        for lam in _box(*box):
            a = stable_F(q, s, us[:n], lam)
            b = stable_F_symmetrization(q, s, us[:n], lam)
            tally.record(a == b, (n, list(lam)))
    return tally.report("stable-routes", {"q": q, "s": s, "u": list(us), "box": list(box)}, seed)
