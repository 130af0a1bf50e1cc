"""Invariants of the t-fold Segre powers of the subset lattice B_n and the
subspace lattice B_n(q).

Most quantities here can be produced by several independent routes
(recurrence, closed formula, diagonal image, tableau counts, brute-force
scans over permutation tuples).  Each route sticks to its own machinery so
that the cross-checks in the test suite mean something.
"""

from fractions import Fraction
from functools import cache
from itertools import combinations
from math import comb, factorial

from .multisym import (MultiSymFunc, S_BASIS, Z_BASIS, dimension, ms_unit,
                       ms_zero, multiply, phi_t, z_monomial, z_power)
from .partitions import check_partition, multiplicities, partitions_of, z_value
from .permutations import RankSet, count_tuples_common_ascent
from .qpoly import QPoly, QRatNF, q_binomial, q_multinomial
from .symfunc import c_coefficient, e_to_h, schur_to_h
from .tableaux import kostka, syt_count, syt_count_with_descents

BETA_ROUTES = ("recurrence", "phi", "closed", "genfun")
W_ROUTES = ("recurrence", "brute", "dimension", "genfun")
RANK_ROUTES = ("syt", "recurrence", "inclusion-exclusion")
WQ_ROUTES = ("recurrence", "brute")


def _rankset(n: int, J) -> RankSet:
    if isinstance(J, RankSet):
        if J.n != n:
            raise ValueError(f"rank set has ambient rank {J.n}, expected {n}")
        return J
    return RankSet.of(n, () if J is None else J)


def _subsets(elems):
    for r in range(len(elems) + 1):
        yield from combinations(elems, r)


# ---------------------------------------------------------------------------
# top homology characteristic

@cache
def _beta_recurrence(n: int, t: int) -> MultiSymFunc:
    if n == 0:
        return ms_unit(t)
    acc = ms_zero(t, (n,) * t)
    for i in range(n):
        term = multiply(_beta_recurrence(i, t), z_power(n - i, t))
        acc = acc + term if (n - 1 - i) % 2 == 0 else acc - term
    return acc


def _beta_series(order: int, t: int) -> list[MultiSymFunc]:
    """Coefficients of the reciprocal of sum_i (-u)^i Z_i, up to u^order."""
    coeffs = [ms_unit(t)]
    for m in range(1, order + 1):
        acc = ms_zero(t, (m,) * t)
        for i in range(1, m + 1):
            term = multiply(z_power(i, t), coeffs[m - i])
            acc = acc + term if i % 2 == 1 else acc - term
        coeffs.append(acc)
    return coeffs


def beta_t(n: int, t: int, route: str = "recurrence") -> MultiSymFunc:
    """Product characteristic of the top homology of the t-fold Segre power
    of B_n, in the Z basis."""
    if n < 0 or t < 1:
        raise ValueError("need n >= 0 and t >= 1")
    if route == "recurrence":
        return _beta_recurrence(n, t)
    if route == "phi":
        return phi_t(e_to_h(n), t)
    if route == "closed":
        terms = {(lam,) * t: c_coefficient(lam) for lam in partitions_of(n)}
        return MultiSymFunc(t, (n,) * t, Z_BASIS, terms)
    if route == "genfun":
        return _beta_series(n, t)[n]
    raise ValueError(f"unknown route {route!r}; expected one of {BETA_ROUTES}")


def beta_multiplicity(n: int, t: int, mus) -> int:
    """Multiplicity of the irreducible indexed by the t-tuple mus in the top
    homology of the t-fold Segre power of B_n."""
    mus = tuple(check_partition(mu) for mu in mus)
    if len(mus) != t:
        raise ValueError(f"expected {t} partitions, got {len(mus)}")
    for mu in mus:
        if sum(mu) != n:
            raise ValueError(f"{mu} is not a partition of {n}")
    total = 0
    for lam in partitions_of(n):
        prod_k = 1
        for mu in mus:
            prod_k *= kostka(mu, lam)
            if prod_k == 0:
                break
        if prod_k:
            total += c_coefficient(lam) * prod_k
    return total


# ---------------------------------------------------------------------------
# the tuple counts w_n^(t)

@cache
def _w_recurrence(n: int, t: int) -> int:
    if n == 0:
        return 1
    return sum((-1) ** (n - 1 - i) * comb(n, i) ** t * _w_recurrence(i, t)
               for i in range(n))


def _w_dimension(n: int, t: int) -> int:
    """Dimension identity: sum over cycle types of the signed centralizer
    weight times the t-th power of sum_mu f^mu K_{mu,lam}."""
    total = Fraction(0)
    for lam in partitions_of(n):
        weight = factorial(len(lam))
        for i, m in multiplicities(lam).items():
            weight *= i**m
        coeff = Fraction((-1) ** (n - len(lam)) * weight, z_value(lam))
        inner = sum(syt_count(mu) * kostka(mu, lam) for mu in partitions_of(n))
        total += coeff * inner**t
    if total.denominator != 1:
        raise ArithmeticError(f"dimension identity gave non-integer {total}")
    return int(total)


def _w_genfun(n: int, t: int) -> int:
    """Reciprocal of sum_i (-z)^i / i!^t, with the i!^t weights cleared."""
    a = [Fraction((-1) ** i, factorial(i) ** t) for i in range(n + 1)]
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(a[i] * b[m - i] for i in range(1, m + 1)))
    val = b[n] * factorial(n) ** t
    if val.denominator != 1:
        raise ArithmeticError(f"series inversion gave non-integer {val}")
    return int(val)


def w_t(n: int, t: int, route: str = "recurrence", budget=None) -> int:
    """Number of t-tuples of permutations in S_n with no common ascent."""
    if n < 0 or t < 1:
        raise ValueError("need n >= 0 and t >= 1")
    if route == "recurrence":
        return _w_recurrence(n, t)
    if route == "brute":
        if n == 0:
            return 1
        return count_tuples_common_ascent(n, t, mode="none-common", budget=budget)
    if route == "dimension":
        return _w_dimension(n, t)
    if route == "genfun":
        return _w_genfun(n, t)
    raise ValueError(f"unknown route {route!r}; expected one of {W_ROUTES}")


# ---------------------------------------------------------------------------
# rank selection on the Boolean side

@cache
def _phi_schur(lam, t: int) -> MultiSymFunc:
    return phi_t(schur_to_h(lam), t)


def _alpha_chain_monomial(n: int, t: int, elems: tuple[int, ...]) -> MultiSymFunc:
    """Chain characteristic for a rank selection: the Z-monomial of the
    composition cut out by the selected ranks."""
    bounds = (0,) + elems + (n,)
    comp = tuple(b - a for a, b in zip(bounds, bounds[1:]))
    lam = tuple(sorted(comp, reverse=True))
    return z_monomial((lam,) * t)


@cache
def _rank_beta_recurrence(n: int, t: int, elems: tuple[int, ...]) -> MultiSymFunc:
    if not elems:
        return z_monomial(((n,),) * t) if n else ms_unit(t)
    jr = elems[-1]
    rest = elems[:-1]
    return (multiply(_rank_beta_recurrence(jr, t, rest), z_power(n - jr, t))
            - _rank_beta_recurrence(n, t, rest))


def rank_alpha_beta(n: int, t: int, J, route: str = "syt"):
    """Pair (alpha, beta): the chain and homology characteristics of the
    rank-selected t-fold Segre power of B_n at the rank set J."""
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    J = _rankset(n, J)
    if route == "syt":
        alpha = ms_zero(t, (n,) * t)
        beta = ms_zero(t, (n,) * t)
        for lam in partitions_of(n):
            ge = syt_count_with_descents(lam, J, "subset")
            if not ge:
                continue
            img = _phi_schur(lam, t)
            alpha = alpha + ge * img
            eq = syt_count_with_descents(lam, J, "exact")
            if eq:
                beta = beta + eq * img
        return alpha, beta
    if route == "recurrence":
        beta = _rank_beta_recurrence(n, t, J.elements)
        alpha = ms_zero(t, (n,) * t)
        for U in _subsets(J.elements):
            alpha = alpha + _rank_beta_recurrence(n, t, U)
        return alpha, beta
    if route == "inclusion-exclusion":
        alpha = _alpha_chain_monomial(n, t, J.elements)
        beta = ms_zero(t, (n,) * t)
        for U in _subsets(J.elements):
            term = _alpha_chain_monomial(n, t, U)
            beta = beta + term if (len(J) - len(U)) % 2 == 0 else beta - term
        return alpha, beta
    raise ValueError(f"unknown route {route!r}; expected one of {RANK_ROUTES}")


# ---------------------------------------------------------------------------
# q-side invariants

@cache
def _W_recurrence(n: int, t: int) -> QPoly:
    if n == 0:
        return QPoly.one()
    acc = QPoly()
    for i in range(n):
        term = q_binomial(n, i) ** t * _W_recurrence(i, t)
        acc = acc + term if (n - 1 - i) % 2 == 0 else acc - term
    return acc


def W_t_q(n: int, t: int, route: str = "recurrence", budget=None) -> QPoly:
    """Inversion-weighted count of no-common-ascent t-tuples; the unsigned
    Mobius number of the t-fold Segre power of B_n(q) as a polynomial in q."""
    if n < 0 or t < 1:
        raise ValueError("need n >= 0 and t >= 1")
    if route == "recurrence":
        return _W_recurrence(n, t)
    if route == "brute":
        if n == 0:
            return QPoly.one()
        return count_tuples_common_ascent(n, t, mode="none-common",
                                          weighted=True, budget=budget)
    raise ValueError(f"unknown route {route!r}; expected one of {WQ_ROUTES}")


@cache
def _rank_W_recurrence(n: int, t: int, elems: tuple[int, ...]) -> QPoly:
    if not elems:
        return QPoly.one()
    jr = elems[-1]
    rest = elems[:-1]
    return (q_binomial(n, jr) ** t * _rank_W_recurrence(jr, t, rest)
            - _rank_W_recurrence(n, t, rest))


def rank_W_t_q(n: int, t: int, J, route: str = "recurrence", budget=None) -> QPoly:
    """Rank-selected Betti polynomial of the t-fold Segre power of B_n(q)."""
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    J = _rankset(n, J)
    if route == "recurrence":
        return _rank_W_recurrence(n, t, J.elements)
    if route == "brute":
        return count_tuples_common_ascent(n, t, mode="exact-complement",
                                          target=J, weighted=True, budget=budget)
    raise ValueError(f"unknown route {route!r}; expected one of {WQ_ROUTES}")


# ---------------------------------------------------------------------------
# Whitney characteristics and principal specialization

def whitney_char(n: int, t: int, r: int) -> MultiSymFunc:
    """Characteristic of the rank-r Whitney homology of the t-fold Segre
    power of B_n: the degree-r top characteristic times the trivial factor
    in degree n-r."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return multiply(beta_t(r, t), z_power(n - r, t))


def principal_specialization(F: MultiSymFunc) -> QRatNF:
    """Stable principal specialization x_i -> q^(i-1) in every alphabet,
    normalized over the denominator ((1-q)...(1-q^n))^t.

    Each Z-key contributes the product over alphabets of the Gaussian
    multinomial of its partition, so the numerator stays an integer
    polynomial with no division.
    """
    if F.basis != Z_BASIS:
        raise ValueError("principal specialization is defined on the Z basis")
    n = F.degrees[0]
    if any(d != n for d in F.degrees):
        raise ValueError("uniform degree vector required for the (n, t) denominator")
    acc: dict[int, Fraction] = {}
    for key, coeff in F.terms().items():
        poly = QPoly.one()
        for lam in key:
            poly = poly * q_multinomial(n, lam)
        for k, c in enumerate(poly.coeffs):
            if c:
                acc[k] = acc.get(k, Fraction(0)) + coeff * c
    width = max(acc) + 1 if acc else 0
    coeffs = []
    for k in range(width):
        c = acc.get(k, Fraction(0))
        if c.denominator != 1:
            raise ValueError(f"non-integer numerator coefficient {c} at q^{k}")
        coeffs.append(int(c))
    return QRatNF(QPoly(coeffs), n, F.t)
