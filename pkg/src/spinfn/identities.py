"""Verification of the summation identities.

Identities whose sums are finite are checked exactly over rationals; those
with infinite products or unbounded strips are checked numerically with a
cutoff and a relative tolerance. Numeric checks run in double precision by
default; passing ``dps`` switches to gmpy2 multiprecision floats carrying
that many decimal digits, which is
what makes the cutoff-doubling witness observable below the double
precision floor.
"""
from __future__ import annotations

import contextlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import gmpy2

from .errors import PreconditionError
from .partitions import (Partition, conjugate, contains, enumerate_partitions, is_vertical_strip,
                         make_partition, pad, part, strip_zeros)
from .scalars import q_pochhammer, q_pochhammer_inf, to_json_scalar, x_pochhammer
from .spin_hl import (hl_F, hl_F_vector, hl_G_star, hl_G_star_vector, stable_F_skew,
                      stable_F_star, stable_F_star_vector, stable_F_vector)
from .spin_qw import qw_dual_lattice_vector, qw_F, qw_F_star, qw_lattice_vector

EXACT = "exact"
NUMERIC = "numeric"
DEFAULT_TOL = 1e-10
DEFAULT_CUTOFF = 30


@dataclass
class IdentityReport:
    name: str
    params: dict
    mode: str
    lhs: object
    rhs: object
    abs_dev: object
    rel_dev: float
    passed: bool
    cutoff: Optional[int] = None
    tol: Optional[float] = None
    seed: Optional[int] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "params": _jsonable(self.params),
            "mode": self.mode,
            "lhs": to_json_scalar(self.lhs),
            "rhs": to_json_scalar(self.rhs),
            "abs_dev": to_json_scalar(self.abs_dev) if self.mode == EXACT else float(self.abs_dev),
            "rel_dev": float(self.rel_dev),
            "cutoff": self.cutoff,
            "seed": self.seed,
            "pass": bool(self.passed),
        }
        if self.tol is not None:
            out["tol"] = self.tol
        if self.extra:
            out["extra"] = _jsonable(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return obj
    return to_json_scalar(obj)


def _exact_report(name, params, lhs, rhs, seed=None, extra=None) -> IdentityReport:
    dev = abs(Fraction(lhs) - Fraction(rhs))
    rel = float(dev / abs(Fraction(rhs))) if rhs != 0 else float(dev)
    return IdentityReport(name, params, EXACT, lhs, rhs, dev, rel, dev == 0, seed=seed,
                          extra=extra or {})


def _numeric_report(name, params, lhs, rhs, cutoff, tol, seed=None, extra=None) -> IdentityReport:
    dev = abs(lhs - rhs)
    scale = abs(rhs) if rhs != 0 else 1
    rel = dev / scale
    return IdentityReport(name, params, NUMERIC, complex(lhs), complex(rhs), float(dev), float(rel),
                          bool(rel <= tol), cutoff=cutoff, tol=tol, seed=seed, extra=extra or {})


def _lift(values, dps: Optional[int]):
    """Convert scalars to mpfr (``dps`` given, inside :func:`_precision`) or to floats."""
    if dps is None:
        return [complex(v) if isinstance(v, complex) else float(v) for v in values]
    return [gmpy2.mpfr(Fraction(v).numerator) / Fraction(v).denominator
            if isinstance(v, (int, Fraction)) else gmpy2.mpfr(v) for v in values]


def _precision(dps: Optional[int]):
    if not dps:
        return contextlib.nullcontext()
    bits = int(dps * 3.33) + 8
    return gmpy2.context(gmpy2.get_context(), precision=bits)


def _inf_tol(dps: Optional[int]) -> float:
    return 1e-16 if dps is None else 10.0 ** (-(dps + 5))


def _unit_disc(name: str, **groups):
    for label, vals in groups.items():
        for v in vals:
            if abs(v) >= 1:
                raise PreconditionError(f"{name}: |{label}| < 1 required (all parameters in the unit disc)")


# --- q-Whittaker Cauchy family ---------------------------------------------

def qw_cauchy_kernel(q, s, xs, ys, tol):
    val = 1
    for x in xs:
        for y in ys:
            val = val * (q_pochhammer_inf(-s * x, q, tol) * q_pochhammer_inf(-s * y, q, tol)
                         / (q_pochhammer_inf(s * s, q, tol) * q_pochhammer_inf(x * y, q, tol)))
    return val


def verify_qw_cauchy_skew(q, s, xs: Sequence, ys: Sequence, mu=(), nu=(),
                          cutoff: int = DEFAULT_CUTOFF, tol: float = DEFAULT_TOL,
                          dps: Optional[int] = None, seed=None) -> IdentityReport:
    """Skew Cauchy identity for F and F*, LHS truncated at ``|lam| <= cutoff``."""
    mu = strip_zeros(make_partition(mu))
    nu = strip_zeros(make_partition(nu))
    params = {"q": q, "s": s, "x": list(xs), "y": list(ys), "mu": list(mu), "nu": list(nu)}
    _unit_disc("qw-cauchy", q=[q], s=[s], x=xs, y=ys)
    for x in xs:
        for y in ys:
            if abs(x * y) >= 1:
                raise PreconditionError("qw-cauchy: |x_i y_j| < 1 required")
    with _precision(dps):
        qq, ss, *rest = _lift([q, s, *xs, *ys], dps)
        X, Y = rest[:len(xs)], rest[len(xs):]
        ncols = min(len(mu) + len(X), len(nu) + len(Y))
        fvec = qw_lattice_vector(qq, ss, X, mu, ncols, cutoff, max_size=cutoff)
        gvec = qw_dual_lattice_vector(qq, ss, Y, nu, ncols, cutoff, max_size=cutoff)
        lhs = sum((v * gvec[lam] for lam, v in fvec.items() if lam in gvec), 0 * qq)
        rhs_sum = 0 * qq
        for kappa in enumerate_partitions(max(part(mu, 1), part(nu, 1)), max(len(mu), len(nu))):
            if contains(mu, kappa) and contains(nu, kappa):
                rhs_sum += qw_F(qq, ss, X, nu, kappa) * qw_F_star(qq, ss, Y, mu, kappa, route="normalization")
        rhs = qw_cauchy_kernel(qq, ss, X, Y, _inf_tol(dps)) * rhs_sum
        name = "qw-cauchy" if not mu and not nu else "qw-cauchy-skew"
        return _numeric_report(name, params, lhs, rhs, cutoff, tol, seed,
                               {"terms": len(fvec), "dps": dps or 16})


def verify_q_gauss(q, s, x, y, cutoff: int = DEFAULT_CUTOFF, tol: float = DEFAULT_TOL,
                   inf_tol: float = 1e-14, seed=None) -> IdentityReport:
    """One-variable case: a terminating-free q-Gauss sum against four infinite products."""
    _unit_disc("q-gauss", q=[q], s=[s], x=[x], y=[y])
    q, s, x, y = _lift([q, s, x, y], None)
    lhs = 0.0
    for i in range(cutoff + 1):
        lhs += (x_pochhammer(x, -s, q, i) * x_pochhammer(y, -s, q, i)
                / (q_pochhammer(s * s, q, i) * q_pochhammer(q, q, i)))
    rhs = (q_pochhammer_inf(-s * x, q, inf_tol) * q_pochhammer_inf(-s * y, q, inf_tol)
           / (q_pochhammer_inf(s * s, q, inf_tol) * q_pochhammer_inf(x * y, q, inf_tol)))
    return _numeric_report("q-gauss", {"q": q, "s": s, "x": x, "y": y}, lhs, rhs, cutoff, tol, seed)


def verify_pieri_horizontal(q, s, xs: Sequence, y, nu=(), cutoff: int = DEFAULT_CUTOFF,
                            tol: float = DEFAULT_TOL, seed=None) -> IdentityReport:
    """Sum over horizontal strips above ``nu`` of ``F_lam(x) F*_{lam/nu}(y)``."""
    nu = strip_zeros(make_partition(nu))
    _unit_disc("pieri-horizontal", q=[q], s=[s], x=xs, y=[y])
    params = {"q": q, "s": s, "x": list(xs), "y": y, "nu": list(nu)}
    qq, ss, yy, *X = _lift([q, s, y, *xs], None)
    m = len(X)
    size_nu = sum(nu)
    fvec = qw_lattice_vector(qq, ss, X, (), max(m, 1), part(nu, 1) + cutoff, max_size=size_nu + cutoff)
    lhs = 0.0
    for lam, f in fvec.items():
        if len(lam) > m or not contains(lam, nu) or sum(lam) - size_nu > cutoff:
            continue
        g = qw_F_star(qq, ss, [yy], lam, nu, route="branching")
        if g != 0:
            lhs += f * g
    bracket = 1.0
    for i in range(1, cutoff + 1):
        bracket += x_pochhammer(yy, -ss, qq, i) / q_pochhammer(qq, qq, i) * fvec.get((i,), 0.0)
    rhs = bracket * fvec.get(nu, 0.0 if nu else 1.0)
    return _numeric_report("pieri-horizontal", params, lhs, rhs, cutoff, tol, seed)


# --- Hall-Littlewood Cauchy family -----------------------------------------

def _hl_condition(name, q, s, us, vs):
    for u in us:
        for v in vs:
            if not abs((u - s) * (v - s)) < abs((1 - s * u) * (1 - s * v)):
                raise PreconditionError(
                    f"{name}: |(u-s)(v-s)| < |(1-su)(1-sv)| required for every pair (u, v)")


def _hl_kernel(q, us, vs):
    val = 1
    for u in us:
        for v in vs:
            val = val * (1 - q * u * v) / (1 - u * v)
    return val


def verify_hl_cauchy_skew(q, s, us: Sequence, vs: Sequence, mu: Sequence[int], nu: Sequence[int],
                          cutoff: int = 40, tol: float = DEFAULT_TOL, seed=None,
                          dps: Optional[int] = None) -> IdentityReport:
    """Skew Cauchy identity for F and G*.

    ``mu`` has ``n`` parts and ``nu`` has ``len(us) + n`` parts, zero parts
    included. The LHS keeps ``lam_1 <= cutoff``.
    """
    mu = make_partition(mu)
    nu = make_partition(nu)
    if len(nu) != len(mu) + len(us):
        raise ValueError("hl-cauchy: len(nu) must equal len(mu) + number of u variables")
    _hl_condition("hl-cauchy", q, s, us, vs)
    params = {"q": q, "s": s, "u": list(us), "v": list(vs), "mu": list(mu), "nu": list(nu)}
    with _precision(dps):
        qq, ss, *rest = _lift([q, s, *us, *vs], dps)
        U, V = rest[:len(us)], rest[len(us):]
        ncols = cutoff + 1
        fvec = hl_F_vector(qq, ss, U, mu, ncols)
        gvec = hl_G_star_vector(qq, ss, V, nu, ncols)
        lhs = sum((v * gvec[lam] for lam, v in fvec.items() if lam in gvec), 0 * qq)
        rhs_sum = 0 * qq
        n = len(mu)
        top = min(max(mu, default=0), max(nu, default=0))
        for k in enumerate_partitions(top, n):
            kappa = pad(k, n)
            if contains(mu, kappa) and contains(nu, kappa):
                rhs_sum += hl_F(qq, ss, U, nu, kappa) * hl_G_star(qq, ss, V, mu, kappa)
        rhs = _hl_kernel(qq, U, V) * rhs_sum
    return _numeric_report("hl-cauchy", params, lhs, rhs, cutoff, tol, seed, {"terms": len(fvec)})


def verify_hl_cauchy(q, s, us: Sequence, vs: Sequence, cutoff: int = 40, tol: float = DEFAULT_TOL,
                     seed=None) -> IdentityReport:
    """Non-skew form: ``sum_lam F_lam G*_lam = F_{0^l} * kernel`` over ``lam`` with ``l`` parts."""
    _hl_condition("hl-cauchy", q, s, us, vs)
    qq, ss, *rest = _lift([q, s, *us, *vs], None)
    U, V = rest[:len(us)], rest[len(us):]
    ell = len(U)
    fvec = hl_F_vector(qq, ss, U, (), cutoff + 1)
    gvec = hl_G_star_vector(qq, ss, V, (0,) * ell, cutoff + 1)
    lhs = sum((f * gvec[lam] for lam, f in fvec.items() if lam in gvec), 0.0)
    rhs = q_pochhammer(qq, qq, ell) * _hl_kernel(qq, U, V)
    for u in U:
        rhs /= (1 - ss * u)
    params = {"q": q, "s": s, "u": list(us), "v": list(vs)}
    return _numeric_report("hl-cauchy", params, lhs, rhs, cutoff, tol, seed, {"terms": len(fvec)})


def verify_stable_hl_cauchy(q, s, us: Sequence, vs: Sequence, mu=(), nu=(), cutoff: int = 40,
                            tol: float = DEFAULT_TOL, seed=None) -> IdentityReport:
    """Skew Cauchy identity for F~ and F~*; LHS keeps ``lam_1 <= cutoff``."""
    mu = strip_zeros(make_partition(mu))
    nu = strip_zeros(make_partition(nu))
    _hl_condition("stable-hl-cauchy", q, s, us, vs)
    params = {"q": q, "s": s, "u": list(us), "v": list(vs), "mu": list(mu), "nu": list(nu)}
    qq, ss, *rest = _lift([q, s, *us, *vs], None)
    U, V = rest[:len(us)], rest[len(us):]
    fvec = stable_F_vector(qq, ss, U, mu, cutoff)
    gvec = stable_F_star_vector(qq, ss, V, nu, cutoff)
    lhs = sum((v * gvec[lam] for lam, v in fvec.items() if lam in gvec), 0.0)
    rhs_sum = 0.0
    for kappa in enumerate_partitions(max(part(mu, 1), part(nu, 1)), max(len(mu), len(nu))):
        if contains(mu, kappa) and contains(nu, kappa):
            rhs_sum += stable_F_skew(qq, ss, U, nu, kappa) * stable_F_star(qq, ss, V, mu, kappa)
    rhs = _hl_kernel(qq, U, V) * rhs_sum
    return _numeric_report("stable-hl-cauchy", params, lhs, rhs, cutoff, tol, seed,
                           {"terms": len(fvec)})


# --- exact identities ------------------------------------------------------

def _dual_kernel(s, us, xs):
    val = 1
    for u in us:
        for x in xs:
            val = val * (1 + u * x) / (1 - s * u)
    return val


def verify_dual_cauchy(q, s, us: Sequence, xs: Sequence, mu=(), nu=(), variant: str = "standard",
                       weight: Optional[Callable] = None, seed=None) -> IdentityReport:
    """Exact skew dual Cauchy identity between stable spin HL and spin q-Whittaker.

    ``variant="standard"`` pairs F~ with F*; ``"alternative"`` pairs F~* with F.
    ``weight`` replaces the unfused (standard) or dual (alternative) vertex
    weight inside the stable HL functions.
    """
    mu = strip_zeros(make_partition(mu))
    nu = strip_zeros(make_partition(nu))
    for u in us:
        if 1 - s * u == 0:
            raise PreconditionError("dual-cauchy: 1 - s u_i must be nonzero")
    m, n = len(us), len(xs)
    # l(lam) <= l(mu) + m from the stable side, lam_1 <= nu_1 + n from the q-Whittaker side;
    # lam also contains mu and nu, so the lattices must be wide enough to hold both
    max_len = max(len(mu) + m, len(nu))
    max_first = max(part(nu, 1) + n, part(mu, 1))
    nu_c = conjugate(nu)
    mu_c = conjugate(mu)
    if variant == "standard":
        hl_vec = stable_F_vector(q, s, us, mu, max_first, weight)
        qw_vec = qw_dual_lattice_vector(q, s, xs, nu_c, max_first, max_len)
    elif variant == "alternative":
        hl_vec = stable_F_star_vector_skew(q, s, us, mu, max_first, weight)
        qw_vec = qw_lattice_vector(q, s, xs, nu_c, max_first, max_len)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    lhs = 0
    for lam, h in hl_vec.items():
        g = qw_vec.get(conjugate(lam))
        if g is not None:
            lhs += h * g
    rhs_sum = 0
    for kappa in enumerate_partitions(max(part(mu, 1), part(nu, 1)), max(len(mu), len(nu))):
        if not (contains(nu, kappa) and contains(mu, kappa)):
            continue
        if variant == "standard":
            a = stable_F_skew(q, s, us, nu, kappa, weight)
            b = qw_F_star(q, s, xs, mu_c, conjugate(kappa))
        else:
            a = stable_F_star(q, s, us, nu, kappa, weight=weight)
            b = qw_F(q, s, xs, mu_c, conjugate(kappa))
        rhs_sum += a * b
    rhs = _dual_kernel(s, us, xs) * rhs_sum
    params = {"q": q, "s": s, "u": list(us), "x": list(xs), "mu": list(mu), "nu": list(nu),
              "variant": variant}
    name = "dual-cauchy" if variant == "standard" else "dual-cauchy-alternative"
    return _exact_report(name, params, lhs, rhs, seed)


def stable_F_star_vector_skew(q, s, vs, mu, ncols, weight=None) -> Dict[Partition, object]:
    return stable_F_star_vector(q, s, vs, mu, ncols, weight)


def verify_pieri_vertical(q, s, xs: Sequence, u, mu=(), seed=None) -> IdentityReport:
    """Exact vertical Pieri rule: a sum over vertical strips above ``mu``."""
    mu = strip_zeros(make_partition(mu))
    n = len(xs)
    if 1 - s * u == 0:
        raise PreconditionError("pieri-vertical: 1 - s u must be nonzero")
    lhs = 0
    mu_c = conjugate(mu)
    for lam in _vertical_strips(mu, n):
        coef = stable_F_star(q, s, [u], conjugate(lam), mu_c)
        if coef != 0:
            lhs += qw_F(q, s, xs, lam) * coef
    ratio = (u - s) / (1 - s * u)
    bracket = 1
    for i in range(1, n + 1):
        bracket += u * (1 - s * s) / (1 - s * u) * ratio ** (i - 1) * qw_F(q, s, xs, (1,) * i)
    rhs = bracket * qw_F(q, s, xs, mu)
    params = {"q": q, "s": s, "x": list(xs), "u": u, "mu": list(mu)}
    return _exact_report("pieri-vertical", params, lhs, rhs, seed)


def verify_pieri(rule: str, q, s, xs: Sequence, scalar, partition=(), cutoff: int = DEFAULT_CUTOFF,
                 tol: float = DEFAULT_TOL, seed=None) -> IdentityReport:
    """Either Pieri rule: ``horizontal`` (``scalar`` is y, ``partition`` is nu) or
    ``vertical`` (``scalar`` is u, ``partition`` is mu)."""
    if rule == "horizontal":
        return verify_pieri_horizontal(q, s, xs, scalar, partition, cutoff, tol, seed)
    if rule == "vertical":
        return verify_pieri_vertical(q, s, xs, scalar, partition, seed)
    raise ValueError(f"unknown Pieri rule {rule!r}")


def _vertical_strips(mu: Partition, max_len: int) -> List[Partition]:
    """Partitions ``lam`` of length ``<= max_len`` with ``lam / mu`` a vertical strip."""
    if len(mu) > max_len:
        return []
    out = []
    base = mu + (0,) * (max_len - len(mu))
    for bits in _binary(max_len):
        lam = tuple(b + e for b, e in zip(base, bits))
        if all(lam[i] >= lam[i + 1] for i in range(max_len - 1)):
            lam = strip_zeros(lam)
            if is_vertical_strip(lam, mu):
                out.append(lam)
    return out


def _binary(n: int):
    for k in range(2 ** n):
        yield tuple((k >> (n - 1 - i)) & 1 for i in range(n))


# --- random parameter points -----------------------------------------------

def random_rational(rng: random.Random, max_den: int = 17, signed: bool = False) -> Fraction:
    """A rational in (0, 1) (or (-1, 1) minus 0 when ``signed``) with denominator <= max_den."""
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    val = Fraction(num, den)
    if signed and rng.random() < 0.5:
        val = -val
    return val


def random_point(rng: random.Random, names: Sequence[str], max_den: int = 17,
                 distinct: bool = True) -> Dict[str, Fraction]:
    """Draw distinct rationals for each name; rejection keeps them pairwise different."""
    while True:
        point = {name: random_rational(rng, max_den) for name in names}
        if not distinct or len(set(point.values())) == len(point):
            return point


IDENTITIES = {
    "qw-cauchy": "skew Cauchy identity for spin q-Whittaker F and F* (numeric)",
    "q-gauss": "one-variable Cauchy identity, the q-Gauss sum (numeric)",
    "dual-cauchy": "skew dual Cauchy identity for stable spin HL and spin q-Whittaker (exact)",
    "hl-cauchy": "skew Cauchy identity for spin HL F and G* (numeric)",
    "stable-hl-cauchy": "skew Cauchy identity for stable spin HL F~ and F~* (numeric)",
    "pieri-horizontal": "horizontal-strip Pieri rule for spin q-Whittaker (numeric)",
    "pieri-vertical": "vertical-strip Pieri rule for spin q-Whittaker (exact)",
}
