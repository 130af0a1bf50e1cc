from functools import lru_cache
from itertools import combinations
from math import factorial

import pytest

from segrelat.partitions import conjugate, partitions_of
from segrelat.tableaux import (kostka, syt_count, syt_count_with_descents,
                               syt_descent_tally)


# --- independent oracles ----------------------------------------------------

@lru_cache(maxsize=None)
def kostka_by_strips(mu, nu):
    """Kostka numbers by peeling the largest content letter off as a
    horizontal strip; entirely separate from the row-fill search."""
    if not nu:
        return 1 if not mu else 0
    last = nu[-1]
    rest = nu[:-1]
    total = 0
    for lam in _strip_predecessors(mu, last):
        total += kostka_by_strips(lam, rest)
    return total


def _strip_predecessors(mu, size):
    """All partitions lam with mu/lam a horizontal strip of the given size."""
    out = []

    def rec(i, remaining, acc):
        if i == len(mu):
            if remaining == 0:
                lam = tuple(p for p in acc if p)
                out.append(lam)
            return
        upper = mu[i]
        lower = mu[i + 1] if i + 1 < len(mu) else 0
        # lam_i between lower (strip rows fit) and upper, at most one cell
        # per column means lam_i >= mu_{i+1}
        for lam_i in range(lower, upper + 1):
            removed = upper - lam_i
            if removed > remaining:
                continue
            if acc and lam_i > acc[-1]:
                continue
            rec(i + 1, remaining - removed, acc + [lam_i])

    rec(0, size, [])
    return out


def hook_length_count(lam):
    """f^lam by the hook length formula."""
    if not lam:
        return 1
    conj = conjugate(lam)
    n = sum(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // prod


# --- kostka -----------------------------------------------------------------

def test_kostka_spec_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    for n in range(7):
        for lam in partitions_of(n):
            assert kostka(lam, lam) == 1


def test_kostka_weight_mismatch():
    with pytest.raises(ValueError):
        kostka((2, 1), (2, 2))


def test_kostka_matches_strip_oracle():
    for n in range(7):
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                assert kostka(mu, nu) == kostka_by_strips(mu, nu), (mu, nu)


def test_kostka_dominance_vanishing():
    # K_{mu,nu} = 0 unless mu dominates nu; spot check the classic case
    assert kostka((2, 2), (3, 1)) == 0
    assert kostka((3, 1), (2, 2)) == 1


# --- standard tableaux ------------------------------------------------------

def test_syt_count_matches_hook_lengths():
    for n in range(8):
        for lam in partitions_of(n):
            assert syt_count(lam) == hook_length_count(lam), lam


def test_syt_sum_of_squares():
    for n in range(1, 8):
        assert sum(syt_count(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_single_row_and_column():
    for n in range(2, 7):
        assert syt_count_with_descents((n,), ()) == 1
        assert syt_count_with_descents((n,), (1,)) == 0
        assert syt_count_with_descents((1,) * n, range(1, n)) == 1


def test_two_one_shape():
    assert syt_count_with_descents((2, 1), (1,)) == 1
    assert syt_count_with_descents((2, 1), (2,)) == 1
    assert syt_count_with_descents((2, 1), (1, 2)) == 0


def test_exact_counts_partition_f_lambda():
    for n in range(1, 8):
        base = tuple(range(1, n))
        for lam in partitions_of(n):
            total = 0
            for r in range(n):
                for J in combinations(base, r):
                    total += syt_count_with_descents(lam, J, "exact")
            assert total == syt_count(lam), lam


def test_subset_mode_is_cumulative():
    for lam in partitions_of(5):
        n = 5
        base = tuple(range(1, n))
        for r in range(n):
            for J in combinations(base, r):
                direct = syt_count_with_descents(lam, J, "subset")
                summed = sum(syt_count_with_descents(lam, U, "exact")
                             for k in range(len(J) + 1)
                             for U in combinations(J, k))
                assert direct == summed


def test_descent_tally_keys_are_valid():
    tally = syt_descent_tally((3, 2))
    for D in tally:
        assert all(1 <= i <= 4 for i in D)
    assert sum(tally.values()) == syt_count((3, 2)) == 5


def test_bad_rank_set_rejected():
    with pytest.raises(ValueError):
        syt_count_with_descents((2, 1), (5,))
    with pytest.raises(ValueError):
        syt_count_with_descents((2, 1), (1,), mode="weird")
