"""The sixteen acceptance criteria, one test each.

Every test appends a ``criterion N: PASS|FAIL ...`` line that the terminal
summary prints in order.
"""
import random
import time
from fractions import Fraction

import conftest
from spinfn.contour import ContourSpec, qw_integral
from spinfn.fusion import weight_W
from spinfn.identities import (random_point, verify_dual_cauchy, verify_hl_cauchy_skew,
                               verify_pieri_horizontal, verify_pieri_vertical, verify_q_gauss,
                               verify_qw_cauchy_skew, verify_stable_hl_cauchy)
from spinfn.partitions import enumerate_partitions, pad
from spinfn.spin_qw import qw_F
from spinfn.sweeps import (fused_ybe_sweep, fusion_routes_sweep, gauge_sweep, route_agreement_sweep,
                           s0_reduction_sweep, stable_routes_sweep, symmetry_stability_sweep,
                           ybe_sweep)
from spinfn.vertex import weight_unfused

TOL = 1e-10
BOX22 = list(enumerate_partitions(2, 2))
BOX33 = list(enumerate_partitions(3, 3))


def record(n: int, ok: bool, detail: str) -> None:
    conftest.ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def points(n: int, names, count: int):
    rng = random.Random(f"acceptance:{n}")
    return [random_point(rng, names) for _ in range(count)]


def bump(weight):
    # multiply the (1,1,1,1) entry by 11/10
    def bumped(q, s, u, i, j, k, l):
        w = weight(q, s, u, i, j, k, l)
        return w * Fraction(11, 10) if (i, j, k, l) == (1, 1, 1, 1) else w
    return bumped


def test_criterion_01_unfused_ybe():
    t = time.perf_counter()
    reps = [ybe_sweep(p["q"], p["s"], p["u1"], p["u2"], max_index=4)
            for p in points(1, ["q", "s", "u1", "u2"], 10)]
    dt = time.perf_counter() - t
    fails = sum(r.abs_dev for r in reps)
    record(1, fails == 0 and dt < 5, f"{sum(r.rhs for r in reps)} cases, {fails} failures, {dt:.2f} s")


def test_criterion_02_gauge_relations():
    reps = [gauge_sweep(p["q"], p["s"], p["u"], p["x"], max_index=4)
            for p in points(2, ["q", "s", "u", "x"], 10)]
    fails = sum(r.abs_dev for r in reps)
    record(2, fails == 0, f"{sum(r.rhs for r in reps)} cases, {fails} failures")


def test_criterion_03_fusion_routes():
    t = time.perf_counter()
    reps = [fusion_routes_sweep(p["q"], p["s"], p["u"], max_spin=3, max_index=3)
            for p in points(3, ["q", "s", "u"], 5)]
    dt = time.perf_counter() - t
    fails = sum(r.abs_dev for r in reps)
    record(3, fails == 0 and dt < 60, f"{sum(r.rhs for r in reps)} cases, {fails} failures, {dt:.2f} s")


def test_criterion_04_fused_ybe():
    reps = [fused_ybe_sweep(p["q"], p["s"], p["x"], p["y"], max_entry=2)
            for p in points(4, ["q", "s", "x", "y"], 5)]
    fails = sum(r.abs_dev for r in reps)
    record(4, fails == 0, f"{sum(r.rhs for r in reps)} cases, {fails} failures")


def test_criterion_05_route_agreement():
    reps = [route_agreement_sweep(p["q"], p["s"], [p["x1"], p["x2"], p["x3"]], box=(3, 3))
            for p in points(5, ["q", "s", "x1", "x2", "x3"], 5)]
    fails = sum(r.abs_dev for r in reps)
    record(5, fails == 0, f"{sum(r.rhs for r in reps)} cases, {fails} failures")


def test_criterion_06_symmetry_and_stability():
    reps = [symmetry_stability_sweep(p["q"], p["s"], [p["x1"], p["x2"], p["x3"]], box=(3, 3))
            for p in points(6, ["q", "s", "x1", "x2", "x3"], 3)]
    fails = sum(r.abs_dev for r in reps)
    record(6, fails == 0, f"{sum(r.rhs for r in reps)} cases, {fails} failures")


def test_criterion_07_s0_reduction():
    reps = [s0_reduction_sweep(p["q"], [p["x1"], p["x2"], p["x3"]], box=(3, 3))
            for p in points(7, ["q", "x1", "x2", "x3"], 3)]
    fails = sum(r.abs_dev for r in reps)
    record(7, fails == 0, f"{sum(r.rhs for r in reps)} cases, {fails} failures")


def test_criterion_08_stable_hl_routes():
    reps = []
    for p in points(8, ["q", "s", "u1", "u2", "u3"], 5):
        us = [p["u1"], p["u2"], p["u3"]]
        assert p["s"] not in us
        reps.append(stable_routes_sweep(p["q"], p["s"], us, box=(3, 3)))
    fails = sum(r.abs_dev for r in reps)
    record(8, fails == 0, f"{sum(r.rhs for r in reps)} cases, {fails} failures")


def test_criterion_09_dual_cauchy_exact():
    total = bad = 0
    for p in points(9, ["q", "s", "u1", "u2", "x1", "x2"], 10):
        for m in range(3):
            for n in range(3):
                us = [p["u1"], p["u2"]][:m]
                xs = [p["x1"], p["x2"]][:n]
                for mu in BOX22:
                    for nu in BOX22:
                        for variant in ("standard", "alternative"):
                            r = verify_dual_cauchy(p["q"], p["s"], us, xs, mu, nu, variant)
                            total += 1
                            bad += r.abs_dev != 0
    record(9, bad == 0, f"{total} identities, {bad} with nonzero abs_dev")


def test_criterion_10_vertical_pieri():
    total = bad = 0
    for p in points(10, ["q", "s", "u", "x1", "x2", "x3"], 2):
        for n in range(4):
            xs = [p["x1"], p["x2"], p["x3"]][:n]
            for mu in BOX33:
                r = verify_pieri_vertical(p["q"], p["s"], xs, p["u"], mu)
                total += 1
                bad += not r.passed
    record(10, bad == 0, f"{total} identities, {bad} failures")


def test_criterion_11_q_gauss():
    r = verify_q_gauss(0.3, 0.2, 0.1, 0.1, cutoff=30, tol=TOL, inf_tol=1e-14)
    record(11, r.passed and r.rel_dev <= TOL, f"rel_dev {r.rel_dev:.2e}")


def test_criterion_12_qw_cauchy_with_witness():
    q, s, xs, ys = 0.3, 0.2, [0.1, 0.1], [0.1, 0.1]
    worst = 0.0
    for mu in BOX22:
        for nu in BOX22:
            worst = max(worst, verify_qw_cauchy_skew(q, s, xs, ys, mu, nu, cutoff=30, tol=TOL).rel_dev)
    drops = []
    for mu, nu in [((), ()), ((2, 1), (1,))]:
        lo = verify_qw_cauchy_skew(q, s, xs, ys, mu, nu, cutoff=30, dps=60).rel_dev
        hi = verify_qw_cauchy_skew(q, s, xs, ys, mu, nu, cutoff=60, dps=60).rel_dev
        drops.append(lo / hi if hi else float("inf"))
    ok = worst <= TOL and min(drops) >= 10
    record(12, ok, f"worst rel_dev {worst:.2e} over {len(BOX22) ** 2} pairs, "
                   f"cutoff-doubling drops {', '.join(f'{d:.1e}' for d in drops)}")


# (l, m, n) shapes up to 2 with representative skew partitions
HL_SKEW_CASES = [
    ([0.2], [0.25], (), (0,)),
    ([0.2], [0.25], (), (2,)),
    ([0.2], [0.25, 0.15], (1,), (2, 1)),
    ([0.2], [0.25, 0.15], (2, 0), (2, 1, 0)),
    ([0.2, 0.3], [0.25], (), (1, 1)),
    ([0.2, 0.3], [0.25, 0.15], (0,), (2, 1, 0)),
    ([0.2, 0.3], [0.25, 0.15], (2, 1), (2, 2, 1, 0)),
]


def test_criterion_13_hl_cauchy_family():
    q, s = 0.4, 0.1
    worst = 0.0
    count = 0
    for us, vs, mu, nu in HL_SKEW_CASES:
        worst = max(worst, verify_hl_cauchy_skew(q, s, us, vs, mu, nu, cutoff=40, tol=TOL).rel_dev)
        count += 1
    for m in (1, 2):
        for n in (1, 2):
            us, vs = [0.2, 0.3][:m], [0.25, 0.15][:n]
            for mu, nu in [((), ()), ((1,), (2,)), ((2, 1), (1, 1))]:
                worst = max(worst, verify_stable_hl_cauchy(q, s, us, vs, mu, nu, cutoff=40,
                                                           tol=TOL).rel_dev)
                count += 1
    record(13, worst <= TOL, f"{count} identities, worst rel_dev {worst:.2e}")


def test_criterion_14_horizontal_pieri():
    worst = 0.0
    for nu in BOX22:
        worst = max(worst, verify_pieri_horizontal(0.3, 0.2, [0.1, 0.1], 0.1, nu, cutoff=30).rel_dev)
    record(14, worst <= TOL, f"worst rel_dev {worst:.2e} over {len(BOX22)} partitions")


def test_criterion_15_contour_integral():
    q, s = 0.3, 0.2
    xs = {1: [Fraction(1, 10)], 2: [Fraction(1, 10), Fraction(3, 20)]}
    t = time.perf_counter()
    worst = spread = 0.0
    for lam in [(1,), (2,), (2, 1), (3, 1)]:
        x = xs[len(lam)]
        exact = float(qw_F(Fraction(3, 10), Fraction(1, 5), x, lam))
        vals = [qw_integral(q, s, [float(v) for v in x], lam, ContourSpec(radius=r))
                for r in (0.8, 1.0, 1.2)]
        worst = max(worst, max(abs(v - exact) for v in vals))
        spread = max(spread, max(abs(a - b) for a in vals for b in vals))
    dt = time.perf_counter() - t
    ok = worst <= 1e-8 and spread <= 1e-9 and dt < 120
    record(15, ok, f"max error {worst:.2e}, radius spread {spread:.2e}, {dt:.2f} s")


def test_criterion_16_negative_controls():
    p = points(16, ["q", "s", "u1", "u2", "x1", "x2"], 1)[0]
    ybe = ybe_sweep(p["q"], p["s"], p["u1"], p["u2"], weight=bump(weight_unfused))
    fused = fused_ybe_sweep(p["q"], p["s"], p["x1"], p["x2"], W=bump(weight_W))
    dual = verify_dual_cauchy(p["q"], p["s"], [p["u1"], p["u2"]], [p["x1"], p["x2"]],
                              (1,), (1,), weight=bump(weight_unfused))
    caught = [not ybe.passed, not fused.passed, not dual.passed]
    record(16, all(caught), "perturbation caught by criteria 1, 4, 9: "
                            + ", ".join("yes" if c else "no" for c in caught))
