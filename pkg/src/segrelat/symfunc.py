"""Exact symmetric function arithmetic in one alphabet.

Everything is stored in the complete homogeneous basis: h-monomials multiply
by concatenating their indexing partitions, so no structure constants are
needed.  The Schur expansion is a view through the Kostka matrix, and the
inverse direction comes from the Jacobi-Trudi determinant, keeping all
transition coefficients integral.
"""

from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial

from .partitions import (Partition, check_partition, multiplicities,
                         partitions_of, revlex_key)
from .tableaux import kostka


class SymFunc:
    """Homogeneous symmetric function of fixed degree, as an exact rational
    combination of h-monomials.  Values are immutable once built."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms=None):
        self.degree = int(degree)
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            lam = check_partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"h-key {lam} is not a partition of {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        self._terms = {k: v for k, v in clean.items() if v}

    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def coefficient(self, lam) -> Fraction:
        return self._terms.get(check_partition(lam), Fraction(0))

    def items(self):
        """Terms in the canonical key order."""
        return sorted(self._terms.items(), key=lambda kv: revlex_key(kv[0]))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return (isinstance(other, SymFunc) and self.degree == other.degree
                and self._terms == other._terms)

    def __neg__(self):
        return SymFunc(self.degree, {k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SymFunc(self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def _scaled(self, c) -> "SymFunc":
        c = Fraction(c)
        return SymFunc(self.degree, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            out: dict[Partition, Fraction] = {}
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    key = tuple(sorted(a + b, reverse=True))
                    out[key] = out.get(key, Fraction(0)) + ca * cb
            return SymFunc(self.degree + other.degree, out)
        return self._scaled(other)

    def __rmul__(self, other):
        return self._scaled(other)

    def to_schur(self) -> dict[Partition, Fraction]:
        return h_to_schur(self)

    def to_records(self) -> list[dict]:
        """Serialization as a list of {partition, coeff-as-string} records."""
        return [{"partition": list(lam), "coeff": str(c)} for lam, c in self.items()]

    def __repr__(self):
        if not self._terms:
            return f"SymFunc(deg {self.degree}, 0)"
        parts = [f"{c}*h{list(lam)}" for lam, c in self.items()]
        return "SymFunc(" + " + ".join(parts) + ")"


def h_monomial(lam) -> SymFunc:
    """The basis element h_lam with coefficient 1."""
    lam = check_partition(lam)
    return SymFunc(sum(lam), {lam: 1})


def unit() -> SymFunc:
    return SymFunc(0, {(): 1})


def zero(n: int) -> SymFunc:
    return SymFunc(n)


def c_coefficient(lam) -> int:
    """Coefficient of h_lam in the h-expansion of e_n for lam a partition of n:
    (-1)^(n - l) * l! / prod m_i!  where l is the number of parts."""
    lam = check_partition(lam)
    n, ell = sum(lam), len(lam)
    denom = 1
    for m in multiplicities(lam).values():
        denom *= factorial(m)
    return (-1) ** (n - ell) * factorial(ell) // denom


def e_to_h(n: int) -> SymFunc:
    """Expansion of the elementary symmetric function e_n in h-monomials."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SymFunc(n, {lam: c_coefficient(lam) for lam in partitions_of(n)})


def e_lambda_to_h(lam) -> SymFunc:
    """h-expansion of the elementary monomial e_lam = prod e_part."""
    lam = check_partition(lam)
    f = unit()
    for part in lam:
        f = f * e_to_h(part)
    return f


@cache
def schur_h_terms(lam) -> tuple[tuple[Partition, int], ...]:
    """Signed h-expansion of the Schur function s_lam, read off the
    Jacobi-Trudi determinant det(h_{lam_i - i + j}) expanded over
    permutations, with h_0 = 1 and h_m = 0 for m < 0."""
    lam = check_partition(lam)
    if not lam:
        return (((), 1),)
    ell = len(lam)
    acc: dict[Partition, int] = {}
    for sigma in permutations(range(ell)):
        parts = []
        degenerate = False
        for i in range(ell):
            m = lam[i] - (i + 1) + (sigma[i] + 1)
            if m < 0:
                degenerate = True
                break
            if m > 0:
                parts.append(m)
        if degenerate:
            continue
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if sigma[i] > sigma[j]:
                    sign = -sign
        key = tuple(sorted(parts, reverse=True))
        acc[key] = acc.get(key, 0) + sign
    return tuple(sorted(((k, v) for k, v in acc.items() if v),
                        key=lambda kv: revlex_key(kv[0])))


def schur_to_h(lam) -> SymFunc:
    lam = check_partition(lam)
    return SymFunc(sum(lam), dict(schur_h_terms(lam)))


def h_to_schur(f: SymFunc) -> dict[Partition, Fraction]:
    """Schur coefficients of an h-expansion, through the Kostka matrix."""
    out: dict[Partition, Fraction] = {}
    for mu in partitions_of(f.degree):
        c = Fraction(0)
        for lam, coeff in f.terms().items():
            k = kostka(mu, lam)
            if k:
                c += coeff * k
        if c:
            out[mu] = c
    return out


def inner_product(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product, via Schur orthonormality."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    fs = h_to_schur(f)
    gs = h_to_schur(g)
    return sum((c * gs[mu] for mu, c in fs.items() if mu in gs), Fraction(0))
