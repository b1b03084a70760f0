import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfn.partitions import (MultiplicityVector, conjugate, contains, enumerate_partitions,
                               format_partition, from_multiplicities, interlaces,
                               is_vertical_strip, length, make_partition, multiplicities, pad,
                               parse_partition, part, partitions_of, size, strip_zeros)

partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))

# number of partitions of n, n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_make_partition_validates():
    assert make_partition([3, 1, 0]) == (3, 1, 0)
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


def test_basic_statistics():
    lam = (4, 2, 2, 0)
    assert size(lam) == 8
    assert length(lam) == 3
    assert part(lam, 1) == 4 and part(lam, 9) == 0
    assert strip_zeros(lam) == (4, 2, 2)
    assert conjugate(lam) == (3, 3, 1, 1)


@given(partitions)
def test_conjugation_is_an_involution(lam):
    lam = strip_zeros(lam)
    assert conjugate(conjugate(lam)) == lam
    assert size(conjugate(lam)) == size(lam)
    assert part(conjugate(lam), 1) == length(lam)


@given(partitions)
def test_multiplicities_round_trip(lam):
    assert from_multiplicities(multiplicities(lam)) == lam
    assert MultiplicityVector(multiplicities(lam)).to_partition() == lam


def test_multiplicities_reject_overflow():
    with pytest.raises(ValueError):
        multiplicities((3,), 3)


@pytest.mark.parametrize("n", range(len(PARTITION_COUNTS)))
def test_partition_counts(n):
    parts = list(partitions_of(n))
    assert len(parts) == PARTITION_COUNTS[n]
    assert len(set(parts)) == len(parts)
    assert all(sum(p) == n for p in parts)


def test_box_enumeration_order_and_size():
    box = list(enumerate_partitions(2, 2))
    assert box == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    # the (a,b) box holds binomial(a+b, a) partitions
    assert len(list(enumerate_partitions(3, 3))) == 20


@given(partitions, partitions)
def test_interlacing_is_a_horizontal_strip(lam, mu):
    lam, mu = strip_zeros(lam), strip_zeros(mu)
    if interlaces(lam, mu):
        assert contains(lam, mu)
        # each column of lam / mu holds at most one box
        assert is_vertical_strip(conjugate(lam), conjugate(mu))


def test_interlacing_examples():
    assert interlaces((3, 1), (2,))
    assert interlaces((2, 2), (2, 1))
    assert interlaces((3, 1), (1, 1))
    assert not interlaces((3, 1), (2, 2))
    assert not interlaces((1, 1, 1), (1,))


def test_pad_and_text():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        pad((1, 1, 1), 2)
    for text in ("", "0", "()", "empty"):
        assert parse_partition(text) == ()
    assert parse_partition("3, 1,0") == (3, 1, 0)
    assert format_partition((3, 1, 0)) == "3,1,0"
