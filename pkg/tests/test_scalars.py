import itertools
import math
from fractions import Fraction

import gmpy2
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import unit_rationals
from spinfn.scalars import (as_rational, format_rational, is_exact, parse_complex, parse_rational,
                            q_binomial, q_hypergeometric_reg, q_pochhammer, q_pochhammer_inf,
                            to_json_scalar, x_pochhammer)

F = Fraction


def test_pochhammer_small_values_by_hand():
    q, a = F(1, 2), F(1, 3)
    assert q_pochhammer(a, q, 0) == 1
    assert q_pochhammer(a, q, 1) == F(2, 3)
    assert q_pochhammer(a, q, 2) == F(2, 3) * F(5, 6)
    # negative index: 1/(1 - a/q)
    assert q_pochhammer(a, q, -1) == 1 / (1 - F(2, 3))


def test_pochhammer_negative_index_with_vanishing_factor():
    with pytest.raises(ZeroDivisionError):
        q_pochhammer(F(1, 2), F(1, 2), -1)


@given(unit_rationals(), unit_rationals(), st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_splits(a, q, m, n):
    assert q_pochhammer(a, q, m + n) == q_pochhammer(a, q, m) * q_pochhammer(a * q ** m, q, n)


@given(unit_rationals(), unit_rationals(), st.integers(1, 6))
def test_negative_index_inverts(a, q, m):
    # (a;q)_{-m} (a q^{-m};q)_m = 1
    assume(all(a != q ** i for i in range(1, m + 1)))
    assert q_pochhammer(a, q, -m) * q_pochhammer(a * q ** (-m), q, m) == 1


@given(unit_rationals(), unit_rationals(), unit_rationals(), st.integers(0, 6))
def test_x_pochhammer_matches_scaled_symbol(x, c, q, m):
    assert x_pochhammer(x, c, q, m) == x ** m * q_pochhammer(c / x, q, m)


def test_x_pochhammer_regular_at_zero():
    q, c = F(1, 3), F(-1, 5)
    assert x_pochhammer(F(0), c, q, 3) == (-c) * (-c * q) * (-c * q * q)


def _binomial_by_inversions(n, k, q):
    # sum over 0/1 words with k ones of q^{inversions}
    total = 0
    for ones in itertools.combinations(range(n), k):
        word = [1 if i in ones else 0 for i in range(n)]
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])
        total += q ** inv
    return total


@pytest.mark.parametrize("n", range(0, 7))
def test_q_binomial_counts_inversions(n):
    q = F(2, 7)
    for k in range(n + 1):
        assert q_binomial(n, k, q) == _binomial_by_inversions(n, k, q)


@given(unit_rationals(), st.integers(1, 8), st.integers(0, 8))
def test_q_pascal(q, n, k):
    assert q_binomial(n, k, q) == q_binomial(n - 1, k - 1, q) + q ** k * q_binomial(n - 1, k, q)


def test_q_pochhammer_inf_against_euler_series():
    # (z;q)_inf = sum_n (-1)^n q^{n(n-1)/2} z^n / (q;q)_n
    q, z = 0.3, 0.4
    series = sum((-1) ** n * q ** (n * (n - 1) // 2) * z ** n / q_pochhammer(q, q, n)
                 for n in range(60))
    assert abs(q_pochhammer_inf(z, q) - series) < 1e-15


def test_q_pochhammer_inf_rejects_unit_circle():
    with pytest.raises(ValueError):
        q_pochhammer_inf(0.1, 1.0)


def test_q_pochhammer_inf_multiprecision():
    with gmpy2.context(gmpy2.get_context(), precision=200):
        q = gmpy2.mpfr(3) / 10
        a = gmpy2.mpfr(1) / 5
        val = q_pochhammer_inf(a, q, 1e-60)
        # (a;q)_inf = (1 - a)(aq;q)_inf
        rest = q_pochhammer_inf(a * q, q, 1e-60)
        assert abs(val - (1 - a) * rest) < 1e-55


def test_terminating_series_by_direct_sum():
    q = F(1, 3)
    n = 3
    a = (F(1, 2), F(2, 5))
    b = (F(1, 7), F(3, 4))
    z = F(5, 11)
    direct = 0
    for k in range(n + 1):
        term = z ** k * q_pochhammer(q ** -n, q, k) / q_pochhammer(q, q, k)
        for ai, bi in zip(a, b):
            term *= q_pochhammer(ai, q, k) / q_pochhammer(bi, q, k) * q_pochhammer(bi, q, n)
        direct += term
    assert q_hypergeometric_reg(n, a, b, q, z) == direct


def test_terminating_series_regular_when_denominator_vanishes():
    q = F(1, 2)
    # b = q^{-1}: the unregularized series would divide by zero
    val = q_hypergeometric_reg(2, (F(1, 3),), (q ** -1,), q, F(1, 5))
    assert isinstance(val, Fraction)


def test_rational_text_round_trip():
    for text in ("3/5", "-7/2", "4", "0"):
        assert format_rational(parse_rational(text)) == text
    assert as_rational("6/8") == F(3, 4)
    assert is_exact(F(1, 2)) and is_exact(3) and not is_exact(0.5)


def test_json_scalars():
    assert to_json_scalar(F(3, 5)) == "3/5"
    assert to_json_scalar(0.25) == {"re": 0.25, "im": 0.0}
    assert parse_complex(to_json_scalar(1 + 2j)) == 1 + 2j
    with pytest.raises(ValueError):
        to_json_scalar(math.nan)
    with pytest.raises(TypeError):
        to_json_scalar("x")
