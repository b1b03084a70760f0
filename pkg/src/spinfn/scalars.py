"""Scalar layer: exact rationals, q-Pochhammer symbols and regularized q-series.

Everything here is written against plain arithmetic operators, so the same
function accepts :class:`fractions.Fraction` (exact), ``float``/``complex``
(double precision) or ``gmpy2.mpfr`` numbers (extended precision).
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Number
from typing import Any, Sequence

Rational = Fraction

MAX_TERMS = 10_000


def as_rational(value: Any) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot build an exact rational from {value!r}")


def is_exact(value: Any) -> bool:
    return isinstance(value, (int, Fraction))


def q_pochhammer(a, q, m: int):
    """Finite q-Pochhammer symbol ``(a; q)_m`` for any integer ``m``.

    For ``m < 0`` this is ``prod_{i=1}^{-m} 1/(1 - a q^{-i})`` and raises
    ``ZeroDivisionError`` when one of those factors vanishes.
    """
    one = a * 0 + 1 if not isinstance(a, int) else 1
    result = one
    if m >= 0:
        qi = q ** 0
        for _ in range(m):
            result = result * (1 - a * qi)
            qi = qi * q
        return result
    denom = one
    qi = q ** 0
    for _ in range(-m):
        qi = qi / q
        denom = denom * (1 - a * qi)
    if denom == 0:
        raise ZeroDivisionError(f"(a;q)_{m} has a vanishing factor")
    return result / denom


def x_pochhammer(x, c, q, m: int):
    """``x^m (c/x; q)_m`` written as ``prod_{t<m} (x - c q^t)``.

    Regular at ``x = 0``; used for every ``x^l (-s/x; q)_l`` combination.
    """
    if m < 0:
        raise ValueError("x_pochhammer needs m >= 0")
    result = x ** 0 if not isinstance(x, int) else 1
    qt = q ** 0
    for _ in range(m):
        result = result * (x - c * qt)
        qt = qt * q
    return result


def q_pochhammer_inf(a, q, tol: float = 1e-15, max_terms: int = MAX_TERMS):
    """Numeric ``(a; q)_inf``.

    Stops once the next factor differs from 1 by less than ``tol`` or after
    ``max_terms`` factors.
    """
    if abs(q) >= 1:
        raise ValueError(f"(a;q)_inf needs |q| < 1, got |q| = {abs(q)}")
    result = 1 - a * 0
    term = a
    for _ in range(max_terms):
        if abs(term) < tol:
            break
        result = result * (1 - term)
        term = term * q
    return result


def q_binomial(n: int, k: int, q):
    """Gaussian binomial ``[n choose k]_q``."""
    if k < 0 or k > n:
        return 0 * q
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k))


def q_hypergeometric_reg(n: int, a: Sequence, b: Sequence, q, z):
    """Regularized terminating series used by the closed-form fused weight.

    ``sum_{k=0}^{n} z^k (q^-n;q)_k/(q;q)_k prod_i (a_i;q)_k (b_i q^k;q)_{n-k}``.
    Taking the ``b_i`` products in this "regularized" form keeps the series
    finite when some ``b_i`` is a non-positive power of ``q``.
    """
    if len(a) != len(b) or not a:
        raise ValueError("a and b must have the same positive length")
    if n < 0:
        raise ValueError("n must be non-negative")
    qn = q ** (-n)
    total = 0 * z
    for k in range(n + 1):
        term = z ** k * q_pochhammer(qn, q, k) / q_pochhammer(q, q, k)
        qk = q ** k
        for ai, bi in zip(a, b):
            term = term * q_pochhammer(ai, q, k) * q_pochhammer(bi * qk, q, n - k)
        total = total + term
    return total


# --- serialization --------------------------------------------------------

def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_complex(value) -> dict:
    z = complex(value)
    return {"re": z.real, "im": z.imag}


def parse_complex(obj: dict) -> complex:
    return complex(obj["re"], obj["im"])


def to_json_scalar(value):
    """JSON form of a scalar: ``"p/q"`` for exact values, ``{"re","im"}`` otherwise."""
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, Number) or hasattr(value, "real"):
        z = complex(value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"non-finite value {value!r}")
        return format_complex(z)
    raise TypeError(f"not a scalar: {value!r}")
