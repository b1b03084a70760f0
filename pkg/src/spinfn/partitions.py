"""Partitions, conjugates, multiplicity vectors and interlacing."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

Partition = Tuple[int, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate and freeze a weakly decreasing sequence of non-negative ints.

    Zero parts are kept: ``(2, 1, 0)`` and ``(2, 1)`` are different objects
    for the spin Hall-Littlewood functions, which see the zero parts.
    """
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing: {p}")
    return p


def strip_zeros(lam: Sequence[int]) -> Partition:
    return tuple(x for x in lam if x > 0)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    """Number of positive parts."""
    return sum(1 for x in lam if x > 0)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = strip_zeros(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def part(lam: Sequence[int], i: int) -> int:
    """``lam_i`` with 1-based index, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


@dataclass(frozen=True)
class MultiplicityVector:
    """``counts[i]`` is the number of parts equal to ``i`` (index 0 counts zero parts).

    ``saturated`` marks the last column as holding an unbounded stack; it is
    only informative for truncated lattice states and is False for states
    coming from an honest partition.
    """

    counts: Tuple[int, ...]
    saturated: bool = False

    def to_partition(self) -> Partition:
        out = []
        for i in range(len(self.counts) - 1, -1, -1):
            out.extend([i] * self.counts[i])
        return tuple(out)


def multiplicities(lam: Sequence[int], ncols: int | None = None) -> Tuple[int, ...]:
    """Multiplicity tuple ``(m_0, m_1, ..., m_{ncols-1})``."""
    top = max(lam, default=0)
    if ncols is None:
        ncols = top + 1
    if top >= ncols:
        raise ValueError(f"partition {tuple(lam)} does not fit in {ncols} columns")
    counts = [0] * ncols
    for x in lam:
        counts[x] += 1
    return tuple(counts)


def from_multiplicities(counts: Sequence[int]) -> Partition:
    return MultiplicityVector(tuple(counts)).to_partition()


def interlaces(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu`` interlaces below ``lam``: ``lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...``."""
    lam = strip_zeros(lam)
    mu = strip_zeros(mu)
    if len(mu) > len(lam) or len(lam) > len(mu) + 1:
        return False
    for i in range(1, len(lam) + 1):
        if not part(lam, i) >= part(mu, i) >= part(lam, i + 1):
            return False
    return True


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    lam = strip_zeros(lam)
    mu = strip_zeros(mu)
    return len(mu) <= len(lam) and all(part(lam, i) >= part(mu, i) for i in range(1, len(mu) + 1))


def is_vertical_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam / mu`` has at most one box per row."""
    if not contains(lam, mu):
        return False
    n = max(length(lam), length(mu))
    return all(0 <= part(lam, i) - part(mu, i) <= 1 for i in range(1, n + 1))


def _bounded(total: int, max_part: int, max_len: int) -> Iterator[Partition]:
    # lexicographically decreasing partitions of total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _bounded(total - first, first, max_len - 1):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` (no zero parts) in reverse lexicographic order."""
    if n < 0:
        return iter(())
    return _bounded(n, n if max_part is None else max_part, n if max_len is None else max_len)


def enumerate_partitions(max_part: int, max_len: int, max_size: int | None = None) -> Iterator[Partition]:
    """Partitions inside the ``max_len x max_part`` box, by size then reverse lex."""
    cap = max_part * max_len if max_size is None else min(max_size, max_part * max_len)
    for n in range(cap + 1):
        yield from _bounded(n, max_part, max_len)


def pad(lam: Sequence[int], n: int) -> Partition:
    """Pad with zero parts to exactly ``n`` parts."""
    lam = tuple(lam)
    if len(strip_zeros(lam)) > n:
        raise ValueError(f"{lam} has more than {n} positive parts")
    lam = strip_zeros(lam)
    return lam + (0,) * (n - len(lam))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()", "empty"):
        return ()
    return make_partition(int(t) for t in text.replace(" ", "").split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)
