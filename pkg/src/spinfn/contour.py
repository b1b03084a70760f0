"""Multiple contour integrals for spin q-Whittaker polynomials and spin HL functions.

Every variable runs over the same circle ``|u| = r`` centred at 0, discretized
by the trapezoid rule with ``N`` nodes. The integrands are analytic in an
annulus around the circle, so the error decays geometrically in ``N``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._kernels import numba_enabled, torus_mean
from .errors import PreconditionError
from .identities import IdentityReport, _numeric_report
from .partitions import conjugate, make_partition, part, strip_zeros
from .scalars import q_pochhammer
from .spin_hl import hl_G

MAX_VARIABLES = 4


@dataclass(frozen=True)
class ContourSpec:
    radius: float = 1.0
    nodes: int = 64

    def validate(self, s) -> None:
        if self.nodes < 16:
            raise PreconditionError("contour: at least 16 nodes per circle required")
        if self.radius <= 0:
            raise PreconditionError("contour: radius must be positive")
        if not abs(s) < self.radius:
            raise PreconditionError("contour: the point s must lie inside the circle (|s| < r)")
        if abs(s) * self.radius >= 1:
            raise PreconditionError("contour: the point 1/s must lie outside the circle (r < 1/|s|)")

    def nodes_array(self) -> np.ndarray:
        theta = 2 * np.pi * np.arange(self.nodes) / self.nodes
        return self.radius * np.exp(1j * theta)


def _pair_matrix(u: np.ndarray, q: complex) -> np.ndarray:
    # (u_a - u_b)/(u_a - q u_b); the diagonal vanishes
    num = u[:, None] - u[None, :]
    den = u[:, None] - q * u[None, :]
    return num / den


def _check_unit(q, s) -> None:
    if abs(q) >= 1 or abs(s) >= 1:
        raise PreconditionError("contour: |q| < 1 and |s| < 1 required")


def qw_integral(q, s, xs: Sequence, lam: Sequence[int], spec: ContourSpec = ContourSpec(),
                backend: str | None = None) -> complex:
    """Spin q-Whittaker polynomial ``F_lam(x_1..x_m)`` from its ``lam_1``-fold integral."""
    lam = strip_zeros(make_partition(lam))
    m = len(xs)
    _check_unit(q, s)
    if len(lam) > m:
        raise PreconditionError("qw-integral: l(lam) <= m (number of x variables) required")
    L = part(lam, 1)
    if L > MAX_VARIABLES:
        raise PreconditionError(f"qw-integral: lam_1 <= {MAX_VARIABLES} required (cost grows as N^lam_1)")
    spec.validate(s)
    if L == 0:
        return 1.0 + 0j
    q, s = complex(q), complex(s)
    xs = [complex(x) for x in xs]
    u = spec.nodes_array()
    base = (1 - s * u) / (u - s)
    common = np.ones_like(u)
    for x in xs:
        common = common * (1 + u * x)
    common = common / (1 - s * u) ** (m + 1)
    conj = conjugate(lam)
    g = np.stack([base ** conj[i] * common for i in range(L)])
    # the measure du/(2 pi i u) is the plain mean over nodes
    return torus_mean(g, _pair_matrix(u, q), backend)


def hl_G_integral(q, s, vs: Sequence, lam: Sequence[int], spec: ContourSpec = ContourSpec(),
                  form: str = "reduced", backend: str | None = None) -> complex:
    """``G_lam(v_1..v_N)`` (zero parts counted) as a contour integral.

    ``form="full"`` integrates one variable per part of ``lam``; ``"reduced"``
    first takes the residues of the trailing zero parts, leaving one variable
    per positive part.
    """
    lam = make_partition(lam)
    n = len(lam)
    k = n - len(strip_zeros(lam))
    _check_unit(q, s)
    spec.validate(s)
    for v in vs:
        if abs(v) * spec.radius >= 1:
            raise PreconditionError("hl-g-integral: the points 1/v_j must lie outside the circle (|v_j| r < 1)")
    if form == "full":
        active, shift = lam, 0
        prefactor = q_pochhammer(complex(s) ** 2, complex(q), n)
    elif form == "reduced":
        active, shift = lam[:n - k], k
        q_, s_ = complex(q), complex(s)
        prefactor = q_pochhammer(s_ * s_, q_, n) / q_pochhammer(s_ * s_, q_, k)
        for v in vs:
            prefactor *= (1 - s_ * q_ ** k * complex(v)) / (1 - s_ * complex(v))
    else:
        raise ValueError(f"unknown form {form!r}")
    if len(active) > MAX_VARIABLES:
        raise PreconditionError(f"hl-g-integral: at most {MAX_VARIABLES} integration variables")
    if not active:
        return complex(prefactor)
    q, s = complex(q), complex(s)
    u = spec.nodes_array()
    inner = s * q ** shift
    common = u / ((1 - s * u) * (u - inner))  # the extra u turns du/(2 pi i) into a mean
    for v in vs:
        common = common * (1 - q * u * complex(v)) / (1 - u * complex(v))
    base = (1 - s * u) / (u - s)
    g = np.stack([base ** p * common for p in active])
    return complex(prefactor) * torus_mean(g, _pair_matrix(u, q), backend)


def _real_if_close(z: complex, tol: float = 1e-10):
    return z.real if abs(z.imag) <= tol else z


def qw_integral_check(q, s, xs: Sequence, lam: Sequence[int], spec: ContourSpec = ContourSpec(),
                      tol: float = 1e-8, seed=None) -> IdentityReport:
    from .spin_qw import qw_F

    exact = qw_F(q, s, xs, lam)
    val = qw_integral(q, s, xs, lam, spec)
    params = {"q": q, "s": s, "x": list(xs), "lambda": list(lam), "radius": spec.radius,
              "nodes": spec.nodes}
    return _numeric_report("qw-integral", params, val, complex(exact), None, tol, seed,
                           {"imag": abs(val.imag), "backend": "numba" if numba_enabled() else "numpy"})


def hl_G_integral_check(q, s, vs: Sequence, lam: Sequence[int], spec: ContourSpec = ContourSpec(),
                        form: str = "reduced", tol: float = 1e-8, seed=None) -> IdentityReport:
    """Numeric integral of ``G_lam`` against the exact lattice value."""
    exact = hl_G(q, s, vs, lam)
    val = hl_G_integral(q, s, vs, lam, spec, form)
    params = {"q": q, "s": s, "v": list(vs), "lambda": list(lam), "radius": spec.radius,
              "nodes": spec.nodes, "form": form}
    return _numeric_report("hl-g-integral", params, val, complex(exact), None, tol, seed,
                           {"imag": abs(val.imag)})


def node_convergence(q, s, xs: Sequence, lam: Sequence[int], radius: float = 1.0,
                     nodes: int = 16) -> tuple:
    """Errors against the exact value at ``nodes`` and ``2 * nodes``."""
    from .spin_qw import qw_F

    exact = complex(qw_F(q, s, xs, lam))
    errs = []
    for n in (nodes, 2 * nodes):
        val = qw_integral(q, s, xs, lam, ContourSpec(radius, n))
        errs.append(abs(val - exact))
    return tuple(errs)


__all__ = ["ContourSpec", "qw_integral", "hl_G_integral", "qw_integral_check",
           "hl_G_integral_check", "node_convergence", "MAX_VARIABLES"]
