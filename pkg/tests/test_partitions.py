from collections import Counter

import pytest
from hypothesis import given, strategies as st

from segrelat.partitions import (check_partition, conjugate, multinomial,
                                 multiplicities, partitions_of, revlex_key,
                                 z_value)


def euler_partition_counts(nmax):
    """Independent oracle: partition numbers from the Euler product
    prod_k 1/(1 - x^k), truncated at degree nmax."""
    coeffs = [1] + [0] * nmax
    for k in range(1, nmax + 1):
        # multiply by 1/(1 - x^k) = geometric accumulation
        for i in range(k, nmax + 1):
            coeffs[i] += coeffs[i - k]
    return coeffs


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    bins = draw(st.lists(st.integers(min_value=1, max_value=max(n, 1)),
                         min_size=0, max_size=n))
    parts = []
    total = 0
    for b in bins:
        if total + b > n:
            continue
        parts.append(b)
        total += b
    return tuple(sorted(parts, reverse=True))


def test_partitions_of_zero():
    assert partitions_of(0) == [()]


def test_partitions_of_counts_match_euler_product():
    counts = euler_partition_counts(10)
    for n in range(11):
        assert len(partitions_of(n)) == counts[n]


def test_spec_counts():
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(6)) == 11


def test_no_duplicates_and_all_valid():
    for n in range(9):
        seen = partitions_of(n)
        assert len(set(seen)) == len(seen)
        for lam in seen:
            assert check_partition(lam) == lam
            assert sum(lam) == n


def test_reverse_lexicographic_order():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for n in range(9):
        keys = [revlex_key(lam) for lam in partitions_of(n)]
        assert keys == sorted(keys)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((3, 0))


@given(partition_strategy())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@given(partition_strategy())
def test_conjugate_length_is_largest_part(lam):
    conj = conjugate(lam)
    assert len(conj) == (lam[0] if lam else 0)
    assert sum(conj) == sum(lam)


def test_z_value():
    # z for cycle type (2,1,1): 2 * 1^2 * 2! = 4
    assert z_value((2, 1, 1)) == 4
    assert z_value((3,)) == 3
    assert z_value(()) == 1
    # sum over cycle types of n!/z_lam = number of permutations partitioned by type
    from math import factorial
    for n in range(1, 7):
        assert sum(factorial(n) // z_value(lam) for lam in partitions_of(n)) == factorial(n)


def test_multiplicities():
    assert multiplicities((3, 2, 2, 1)) == Counter({2: 2, 3: 1, 1: 1})


def test_multinomial():
    assert multinomial((2, 1)) == 3
    assert multinomial((1, 1, 1)) == 6
    assert multinomial((4,)) == 1
