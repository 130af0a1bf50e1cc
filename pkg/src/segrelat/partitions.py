"""Integer partitions and the small arithmetic helpers built on them.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the unique partition of 0.  The canonical ordering used for keys
and serialization throughout the package is reverse-lexicographic:
``(n)`` first, ``(1, ..., 1)`` last.
"""

from collections import Counter
from functools import cache
from math import factorial

Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    """Validate an iterable of parts and return it as a partition tuple."""
    p = tuple(int(x) for x in parts)
    for x in p:
        if x <= 0:
            raise ValueError(f"partition parts must be positive, got {p}")
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing, got {p}")
    return p


@cache
def _bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    acc = []
    for first in range(min(n, largest), 0, -1):
        for rest in _bounded(n - first, first):
            acc.append((first,) + rest)
    return tuple(acc)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, exactly once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_bounded(n, n)) if n else [()]


def revlex_key(lam: Partition):
    """Sort key realizing the canonical reverse-lexicographic order."""
    return tuple(-x for x in lam)


def conjugate(lam) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def multiplicities(lam) -> Counter:
    """Counter mapping part size i to its multiplicity m_i."""
    return Counter(check_partition(lam))


def z_value(lam) -> int:
    """Centralizer order of a permutation with cycle type lam: prod i^m_i m_i!."""
    z = 1
    for i, m in multiplicities(lam).items():
        z *= i**m * factorial(m)
    return z


def multinomial(lam) -> int:
    """|lam|! / prod(part!), the size of the orbit of set partitions with block
    sizes lam ordered, i.e. the dimension of the Young permutation module."""
    lam = check_partition(lam)
    num = factorial(sum(lam))
    for part in lam:
        num //= factorial(part)
    return num
