"""Unfused higher-spin vertex weights, their duals, the 4x4 R-matrix and YBE checks.

Edge labels follow ``(i, j; k, l)`` = (bottom, left; top, right). Vertical
edges carry any number of paths, horizontal edges carry 0 or 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .scalars import q_pochhammer

SW_NE = "SW-NE"  # i + j = k + l
NW_SE = "NW-SE"  # j + k = i + l

Weight = Callable[[int, int, int, int], object]


def weight_unfused(q, s, u, i: int, j: int, k: int, l: int):
    """Vertex weight ``w_u(i, j; k, l)``."""
    if i < 0 or k < 0 or j not in (0, 1) or l not in (0, 1) or i + j != k + l:
        return 0 * u
    d = 1 - s * u
    if j == 0 and l == 0:
        return (1 - s * q ** i * u) / d
    if j == 0 and l == 1:
        # path turns right: i = g + 1, k = g
        return (1 - s * s * q ** k) * u / d
    if j == 1 and l == 0:
        # path turns up: i = g, k = g + 1
        return (1 - q ** k) / d
    return (u - s * q ** i) / d


def weight_dual(q, s, u, i: int, j: int, k: int, l: int):
    """Dual vertex weight; paths travel from the north-west to the south-east."""
    if i < 0 or k < 0 or j not in (0, 1) or l not in (0, 1) or j + k != i + l:
        return 0 * u
    d = 1 - s * u
    if j == 1 and l == 1:
        return (u - s * q ** i) / d
    if j == 1 and l == 0:
        # i = g + 1, k = g
        return (1 - s * s * q ** k) / d
    if j == 0 and l == 1:
        # i = g, k = g + 1
        return (1 - q ** k) * u / d
    return (1 - s * q ** i * u) / d


@dataclass(frozen=True)
class WeightFamily:
    """A vertex weight with its conservation law and horizontal capacity.

    ``capacity=None`` means unbounded horizontal occupation (fused families
    after continuation).
    """

    evaluator: Weight
    conservation: str = SW_NE
    capacity: Optional[int] = 1
    label: str = field(default="", compare=False)

    def __call__(self, i: int, j: int, k: int, l: int):
        return self.evaluator(i, j, k, l)

    def outgoing(self, i: int, j: int, k: int) -> int:
        """Right edge forced by conservation."""
        if self.conservation == SW_NE:
            return i + j - k
        return j + k - i


def unfused_family(q, s, u) -> WeightFamily:
    return WeightFamily(lambda i, j, k, l: weight_unfused(q, s, u, i, j, k, l), SW_NE, 1, "w")


def dual_family(q, s, u) -> WeightFamily:
    return WeightFamily(lambda i, j, k, l: weight_dual(q, s, u, i, j, k, l), NW_SE, 1, "wbar")


def r_matrix(q, u):
    """The 4x4 R-matrix as nested lists, basis ``|a>|b>`` indexed by ``2a+b``."""
    z = 0 * u
    return [
        [1 - q * u, z, z, z],
        [z, q * (1 - u), 1 - q, z],
        [z, (1 - q) * u, 1 - u, z],
        [z, z, z, 1 - q * u],
    ]


def n_vertex(q, s, spectral: Sequence, i: int, js: Sequence[int], k: int, ls: Sequence[int],
             weight: Optional[Callable] = None):
    """Vertical stack of vertices, bottom vertex first.

    ``weight(q, s, u, i, j, k, l)`` defaults to :func:`weight_unfused`.
    Internal vertical edges are fixed by conservation.
    """
    if not (len(spectral) == len(js) == len(ls)):
        raise ValueError("spectral, js and ls must have equal length")
    w = weight_unfused if weight is None else weight
    if i + sum(js) != k + sum(ls):
        return 0 * (spectral[0] if spectral else q)
    result = 1
    below = i
    for u, j, l in zip(spectral, js, ls):
        above = below + j - l
        if above < 0:
            return 0 * u
        result = result * w(q, s, u, below, j, above, l)
        if result == 0:
            return result
        below = above
    return result


# --- 4x4 matrix helpers ----------------------------------------------------

def _matmul(a, b):
    return [[sum(a[r][t] * b[t][c] for t in range(4)) for c in range(4)] for r in range(4)]


_P = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def two_vertex_operator(q, s, u1, u2, i: int, k: int, weight: Optional[Callable] = None):
    """Matrix of the 2-vertex operator: entry ``[(j1,j2), (l1,l2)]``."""
    m = [[0] * 4 for _ in range(4)]
    for j1 in (0, 1):
        for j2 in (0, 1):
            for l1 in (0, 1):
                for l2 in (0, 1):
                    m[2 * j1 + j2][2 * l1 + l2] = n_vertex(
                        q, s, (u1, u2), i, (j1, j2), k, (l1, l2), weight)
    return m


def ybe_check(q, s, u1, u2, i: int, k: int, weight: Optional[Callable] = None) -> bool:
    """Exact comparison of both sides of the unfused Yang-Baxter equation."""
    pr = _matmul(_P, r_matrix(q, u2 / u1))
    lhs = _matmul(pr, two_vertex_operator(q, s, u1, u2, i, k, weight))
    rhs = _matmul(two_vertex_operator(q, s, u2, u1, i, k, weight), pr)
    return lhs == rhs


def gauge_check(q, s, u, i: int, k: int) -> bool:
    """``w(i,j;k,l) = (q;q)_k/(s^2;q)_k * wbar(k,j;i,l) * (s^2;q)_i/(q;q)_i`` for all j, l."""
    for j in (0, 1):
        for l in (0, 1):
            lhs = weight_unfused(q, s, u, i, j, k, l)
            rhs = (q_pochhammer(q, q, k) / q_pochhammer(s * s, q, k)
                   * weight_dual(q, s, u, k, j, i, l)
                   * q_pochhammer(s * s, q, i) / q_pochhammer(q, q, i))
            if lhs != rhs:
                return False
    return True


def two_vertex_relation_check(q, s, u, i: int, k: int) -> bool:
    """Sum rule on 2-vertices with spectral parameters ``{u, qu}`` used in the fusion argument."""
    lhs = 0
    rhs = 0
    for a1 in (0, 1):
        for a2 in (0, 1):
            lhs += q ** a2 * n_vertex(q, s, (u, q * u), i, (a1, a2), k, (0, 1))
            rhs += q ** (a2 + 1) * n_vertex(q, s, (u, q * u), i, (a1, a2), k, (1, 0))
    return lhs == rhs
