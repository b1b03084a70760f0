import itertools
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from spinfn._kernels import numba_enabled, torus_mean, torus_mean_numpy
from spinfn.contour import (ContourSpec, hl_G_integral, hl_G_integral_check, node_convergence,
                            qw_integral, qw_integral_check)
from spinfn.errors import PreconditionError
from spinfn.spin_hl import hl_G
from spinfn.spin_qw import qw_F

q, s = 0.3, 0.2


def _brute_mean(g, pair):
    L, N = g.shape
    total = 0j
    for idx in itertools.product(range(N), repeat=L):
        term = 1 + 0j
        for a in range(L):
            term *= g[a, idx[a]]
            for b in range(a + 1, L):
                term *= pair[idx[a], idx[b]]
        total += term
    return total / N ** L


@pytest.mark.parametrize("L", [1, 2, 3])
def test_kernels_match_direct_sum(L):
    rng = np.random.default_rng(L)
    N = 5
    g = rng.normal(size=(L, N)) + 1j * rng.normal(size=(L, N))
    pair = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
    ref = _brute_mean(g, pair)
    assert abs(torus_mean_numpy(g, pair) - ref) < 1e-12
    assert abs(torus_mean(g, pair) - ref) < 1e-12
    if numba_enabled():
        assert abs(torus_mean(g, pair, backend="numba") - ref) < 1e-12


def test_empty_torus_and_bad_backend():
    g = np.zeros((0, 4), dtype=complex)
    pair = np.ones((4, 4), dtype=complex)
    assert torus_mean(g, pair, backend="numpy") == 1
    with pytest.raises(ValueError):
        torus_mean(np.ones((1, 4)), pair, backend="fortran")


def test_disable_flag_selects_numpy():
    code = "from spinfn._kernels import numba_enabled; print(numba_enabled())"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"SPINFN_DISABLE_NUMBA": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "False"


def test_empty_partition_and_one_box():
    assert qw_integral(q, s, [0.1], ()) == 1
    val = qw_integral(q, s, [0.1], (1,))
    assert abs(val - (0.1 + s) / (1 - s * s)) < 1e-12


@pytest.mark.parametrize("lam,xs", [((1,), [0.1]), ((2,), [0.1]), ((2, 1), [0.1, 0.15]),
                                    ((3, 1), [0.1, 0.15])])
def test_integral_matches_exact(lam, xs):
    exact = float(qw_F(Fraction(3, 10), Fraction(1, 5),
                       [Fraction(x).limit_denominator(100) for x in xs], lam))
    for r in (0.8, 1.0, 1.2):
        val = qw_integral(q, s, xs, lam, ContourSpec(radius=r))
        assert abs(val - exact) < 1e-8
        assert abs(val.imag) < 1e-10


def test_radius_independence():
    vals = [qw_integral(q, s, [0.1, 0.15], (2, 1), ContourSpec(radius=r)) for r in (0.8, 1.0, 1.2)]
    assert max(abs(a - b) for a in vals for b in vals) < 1e-9


def test_node_doubling_converges():
    coarse, fine = node_convergence(q, s, [0.1, 0.15], (2, 1), nodes=16)
    assert fine * 1e3 <= coarse or fine < 1e-14


def test_backends_agree():
    if not numba_enabled():
        pytest.skip("numba not installed")
    a = qw_integral(q, s, [0.1, 0.15], (2, 1), backend="numba")
    b = qw_integral(q, s, [0.1, 0.15], (2, 1), backend="numpy")
    assert abs(a - b) < 1e-13


def test_preconditions():
    with pytest.raises(PreconditionError):
        qw_integral(q, s, [0.1], (1, 1))
    with pytest.raises(PreconditionError):
        qw_integral(q, s, [0.1], (5,))
    with pytest.raises(PreconditionError):
        qw_integral(q, s, [0.1], (1,), ContourSpec(radius=0.1))
    with pytest.raises(PreconditionError):
        qw_integral(q, s, [0.1], (1,), ContourSpec(radius=6.0))
    with pytest.raises(PreconditionError):
        qw_integral(q, s, [0.1], (1,), ContourSpec(nodes=8))
    with pytest.raises(PreconditionError):
        qw_integral(1.2, s, [0.1], (1,))
    with pytest.raises(PreconditionError):
        hl_G_integral(q, s, [1.5], (1,))


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (2, 1, 0), (1, 1)])
def test_hl_G_forms_agree(lam):
    vs = [0.1, 0.2]
    exact = float(hl_G(Fraction(3, 10), Fraction(1, 5), [Fraction(1, 10), Fraction(1, 5)], lam))
    full = hl_G_integral(q, s, vs, lam, form="full")
    reduced = hl_G_integral(q, s, vs, lam, form="reduced")
    assert abs(full - exact) < 1e-9 and abs(reduced - exact) < 1e-9
    with pytest.raises(ValueError):
        hl_G_integral(q, s, vs, lam, form="half")


def test_check_reports():
    rep = qw_integral_check(q, s, [0.1], (2,))
    assert rep.passed and rep.name == "qw-integral" and rep.extra["imag"] < 1e-10
    rep = hl_G_integral_check(q, s, [0.1], (1, 0))
    assert rep.passed and rep.params["form"] == "reduced"
