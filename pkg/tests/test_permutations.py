from itertools import combinations, permutations, product
from math import factorial

import pytest

from segrelat.budgets import EnumerationBudgetError
from segrelat.permutations import (RankSet, count_tuples_common_ascent,
                                   perm_stats)
from segrelat.qpoly import QPoly, q_factorial


# --- independent oracle: a literal scan of S_n^t ----------------------------

def naive_tuple_scan(n, t, common_target=None, weighted=False):
    """Iterate every tuple in S_n^t, intersect ascent sets directly.
    common_target=None counts tuples with empty common ascent set; otherwise
    counts tuples whose common ascent set equals the given frozenset."""
    perms = list(permutations(range(1, n + 1)))
    stats = {w: perm_stats(w) for w in perms}
    want = frozenset() if common_target is None else frozenset(common_target)
    acc = QPoly() if weighted else 0
    for tup in product(perms, repeat=t):
        common = stats[tup[0]].asc
        for w in tup[1:]:
            common = common & stats[w].asc
        if common == want:
            if weighted:
                acc = acc + QPoly.monomial(sum(stats[w].inversions for w in tup))
            else:
                acc += 1
    return acc


def test_perm_stats_identity():
    s = perm_stats((1, 2, 3, 4))
    assert s.asc == {1, 2, 3} and s.des == frozenset() and s.inversions == 0


def test_perm_stats_3142():
    s = perm_stats((3, 1, 4, 2))
    assert s.asc == {2}
    assert s.des == {1, 3}
    assert s.inversions == 3


def test_perm_stats_reversal():
    s = perm_stats((4, 3, 2, 1))
    assert s.des == {1, 2, 3} and s.inversions == 6


def test_perm_stats_rejects_non_permutation():
    with pytest.raises(ValueError):
        perm_stats((1, 1, 2))


def test_inversion_generating_polynomial_is_q_factorial():
    for n in range(1, 7):
        total = QPoly()
        for w in permutations(range(1, n + 1)):
            total = total + QPoly.monomial(perm_stats(w).inversions)
        assert total == q_factorial(n)


def test_count_none_common_small_values():
    assert count_tuples_common_ascent(2, 2) == 3
    assert count_tuples_common_ascent(3, 3) == 163
    assert count_tuples_common_ascent(3, 2) == 19


def test_count_weighted_spec_example():
    assert count_tuples_common_ascent(2, 2, weighted=True) == QPoly((0, 2, 1))


def test_count_matches_naive_scan():
    for (n, t) in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        assert count_tuples_common_ascent(n, t) == naive_tuple_scan(n, t)
        assert (count_tuples_common_ascent(n, t, weighted=True)
                == naive_tuple_scan(n, t, weighted=True))


def test_exact_complement_matches_naive_scan():
    for (n, t) in [(3, 2), (4, 2)]:
        base = tuple(range(1, n))
        for r in range(n):
            for J in combinations(base, r):
                target = RankSet.of(n, J)
                want = target.complement().elements
                got = count_tuples_common_ascent(n, t, mode="exact-complement",
                                                 target=target)
                assert got == naive_tuple_scan(n, t, common_target=want), (n, t, J)
                gotq = count_tuples_common_ascent(n, t, mode="exact-complement",
                                                  target=target, weighted=True)
                assert gotq == naive_tuple_scan(n, t, common_target=want,
                                                weighted=True), (n, t, J)


def test_single_permutation_case():
    # only the reversal has empty ascent set
    for n in range(1, 6):
        assert count_tuples_common_ascent(n, 1) == 1


def test_exact_complement_totals():
    for (n, t) in [(3, 2), (4, 2), (3, 3)]:
        base = tuple(range(1, n))
        total = 0
        for r in range(n):
            for J in combinations(base, r):
                total += count_tuples_common_ascent(n, t, mode="exact-complement",
                                                    target=RankSet.of(n, J))
        assert total == factorial(n) ** t


def test_budget_guard():
    with pytest.raises(EnumerationBudgetError):
        count_tuples_common_ascent(5, 6)
    with pytest.raises(EnumerationBudgetError):
        count_tuples_common_ascent(3, 2, budget=10)
    # explicit budget can also widen
    assert count_tuples_common_ascent(3, 2, budget=10**9) == 19


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SEGRELAT_BUDGET", "10")
    with pytest.raises(EnumerationBudgetError):
        count_tuples_common_ascent(3, 2)
    monkeypatch.setenv("SEGRELAT_BUDGET", "1000000")
    assert count_tuples_common_ascent(3, 2) == 19


def test_exact_complement_needs_target():
    with pytest.raises(ValueError):
        count_tuples_common_ascent(3, 2, mode="exact-complement")
    with pytest.raises(ValueError):
        count_tuples_common_ascent(3, 2, mode="nonsense")


def test_rankset_basics():
    J = RankSet.of(4, (3, 1))
    assert J.elements == (1, 3)
    assert J.complement().elements == (2,)
    assert J.mask() == 0b101
    assert list(J) == [1, 3]
    assert 3 in J and 2 not in J
    with pytest.raises(ValueError):
        RankSet.of(4, (4,))
    with pytest.raises(ValueError):
        RankSet.of(4, (0,))
