"""Counting semistandard and standard Young tableaux.

Kostka numbers come from a row-by-row backtracking fill with column-strict
pruning; standard tableaux are tallied by descent set in one recursive sweep
so both the "equal" and the "contained in" descent counts read off a cached
table.
"""

from collections import Counter
from functools import cache

from .partitions import check_partition


@cache
def kostka(mu, nu) -> int:
    """Number of semistandard Young tableaux of shape mu and content nu."""
    mu = check_partition(mu)
    nu = check_partition(nu)
    if sum(mu) != sum(nu):
        raise ValueError(f"shape {mu} and content {nu} have different weights")
    if not mu:
        return 1
    nvals = len(nu)
    remaining = list(nu)

    def fill_row(row_idx: int, prev_row: tuple) -> int:
        if row_idx == len(mu):
            return 1
        width = mu[row_idx]
        total = 0
        row: list[int] = []

        def extend(col: int, min_val: int) -> None:
            nonlocal total
            if col == width:
                total += fill_row(row_idx + 1, tuple(row))
                return
            floor = min_val
            if row_idx > 0:
                # column strictness against the row above
                floor = max(floor, prev_row[col] + 1)
            for v in range(floor, nvals + 1):
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
                row.append(v)
                extend(col + 1, v)
                row.pop()
                remaining[v - 1] += 1

        extend(0, 1)
        return total

    return fill_row(0, ())


@cache
def syt_descent_tally(lam) -> dict[frozenset, int]:
    """Standard Young tableaux of shape lam tallied by descent set.

    Entry i is a descent when i+1 sits in a strictly lower row.
    """
    lam = check_partition(lam)
    n = sum(lam)
    tally: Counter = Counter()
    rows = len(lam)
    rowlen = [0] * rows
    descents: list[int] = []

    def place(entry: int, prev_row: int) -> None:
        if entry > n:
            tally[frozenset(descents)] += 1
            return
        for r in range(rows):
            if rowlen[r] == lam[r]:
                continue
            if r > 0 and rowlen[r - 1] <= rowlen[r]:
                continue
            rowlen[r] += 1
            if entry > 1 and r > prev_row:
                descents.append(entry - 1)
                place(entry + 1, r)
                descents.pop()
            else:
                place(entry + 1, r)
            rowlen[r] -= 1

    place(1, -1)
    return dict(tally)


def syt_count(lam) -> int:
    """f^lam, the number of standard Young tableaux of shape lam."""
    lam = check_partition(lam)
    if not lam:
        return 1
    return kostka(lam, (1,) * sum(lam))


def syt_count_with_descents(lam, ranks, mode: str = "exact") -> int:
    """Count SYT of shape lam whose descent set equals ranks (mode "exact")
    or is contained in ranks (mode "subset")."""
    lam = check_partition(lam)
    n = sum(lam)
    J = frozenset(int(j) for j in ranks)
    for j in J:
        if not 1 <= j <= n - 1:
            raise ValueError(f"rank set {sorted(J)} not inside [1, {n - 1}]")
    tally = syt_descent_tally(lam)
    if mode == "exact":
        return tally.get(J, 0)
    if mode == "subset":
        return sum(c for D, c in tally.items() if D <= J)
    raise ValueError(f"unknown mode {mode!r}")
