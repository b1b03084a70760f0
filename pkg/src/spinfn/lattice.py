"""Single-row transfer engine and multi-row propagation over multiplicity states.

A state is a tuple of column occupations. Rows of a SW-NE family are
propagated bottom to top (paths move up and right), rows of a NW-SE family
top to bottom (paths move down and right). Either way the horizontal edge
is carried left to right and every internal edge is fixed by the choice of
the outgoing vertical occupation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .vertex import SW_NE, WeightFamily

State = Tuple[int, ...]
Coefficient = Union[Mapping[int, object], Callable[[int], object]]


def row_value(fam: WeightFamily, bottom: Sequence[int], top: Sequence[int], left: int, right: int):
    """Weight of one row with all vertical edges given; 0 if inconsistent."""
    n = max(len(bottom), len(top))
    bottom = tuple(bottom) + (0,) * (n - len(bottom))
    top = tuple(top) + (0,) * (n - len(top))
    h = left
    result = 1
    for i, k in zip(bottom, top):
        out = fam.outgoing(i, h, k)
        if out < 0 or (fam.capacity is not None and out > fam.capacity):
            return 0
        result = result * fam(i, h, k, out)
        if result == 0:
            return 0
        h = out
    if h != right:
        return 0
    return result


def row_transitions(fam: WeightFamily, state: State, left: int, right: int) -> Dict[State, object]:
    """All states reachable through one row, with their weights.

    For SW-NE families ``state`` is the bottom and the keys are tops; for
    NW-SE families ``state`` is the top and the keys are bottoms. The number
    of columns is preserved; the horizontal edge leaving the last column must
    equal ``right``.
    """
    sw_ne = fam.conservation == SW_NE
    cap = fam.capacity
    partial: Dict[Tuple[State, int], object] = {((), left): 1}
    ncols = len(state)
    for c, occ in enumerate(state):
        last = c == ncols - 1
        nxt: Dict[Tuple[State, int], object] = {}
        for (prefix, h), val in partial.items():
            # occ + h paths arrive; choose how many leave vertically
            avail = occ + h
            lo = 0
            if cap is not None:
                lo = max(0, avail - cap)
            if last:
                lo = hi = avail - right
                if lo < 0:
                    continue
            else:
                hi = avail
            for other in range(lo, hi + 1):
                out = avail - other
                if sw_ne:
                    w = fam(occ, h, other, out)
                else:
                    w = fam(other, h, occ, out)
                if w == 0:
                    continue
                key = (prefix + (other,), out)
                prev = nxt.get(key)
                nxt[key] = val * w if prev is None else prev + val * w
        partial = nxt
        if not partial:
            return {}
    if ncols == 0:
        return {(): 1} if left == right else {}
    return {prefix: val for (prefix, _h), val in partial.items()}


@dataclass(frozen=True)
class RowOperator:
    """One lattice row: a weight family, a weighted left boundary and a fixed right edge.

    ``left`` maps a left-edge occupation to its coefficient. A callable needs
    ``max_left`` to bound the occupations tried.
    """

    family: WeightFamily
    left: Coefficient
    right: int = 0
    max_left: Optional[int] = None

    def left_items(self) -> Iterable[Tuple[int, object]]:
        if callable(self.left):
            if self.max_left is None:
                raise ValueError("callable left coefficient needs max_left")
            for j in range(self.max_left + 1):
                yield j, self.left(j)
        else:
            yield from self.left.items()

    def apply(self, state: State) -> Dict[State, object]:
        out: Dict[State, object] = {}
        for j, coef in self.left_items():
            if coef == 0:
                continue
            for st, w in row_transitions(self.family, state, j, self.right).items():
                prev = out.get(st)
                out[st] = coef * w if prev is None else prev + coef * w
        return out


def propagate(rows: Sequence[RowOperator], start: State,
              keep: Optional[Callable[[State], bool]] = None) -> Dict[State, object]:
    """Apply rows in order starting from ``start``; returns the end-state vector.

    ``keep`` prunes intermediate states (e.g. states that can no longer reach
    a target).
    """
    vec: Dict[State, object] = {tuple(start): 1}
    for row in rows:
        nxt: Dict[State, object] = {}
        for st, val in vec.items():
            for st2, w in row.apply(st).items():
                if keep is not None and not keep(st2):
                    continue
                prev = nxt.get(st2)
                nxt[st2] = val * w if prev is None else prev + val * w
        vec = {k: v for k, v in nxt.items() if v != 0}
        if not vec:
            break
    return vec


def amplitude(rows: Sequence[RowOperator], start: State, end: State,
              keep: Optional[Callable[[State], bool]] = None):
    """Matrix element between two states (0 if unreachable)."""
    return propagate(rows, start, keep).get(tuple(end), 0)
