"""Cross-route verification battery.

Each check re-derives a family of identities through independent code paths
and returns a list of human-readable failure strings (empty when the family
holds).  The CLI `verify` subcommand runs these and fails loudly on the
first mismatch; the acceptance tests run the criterion groups one by one.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial

from .budgets import EnumerationBudgetError
from .invariants import (beta_multiplicity, beta_t, principal_specialization,
                         rank_W_t_q, rank_alpha_beta, w_t, W_t_q, whitney_char)
from .multisym import (S_BASIS, dimension, ms_unit, multiply, phi_t,
                       z_diagonal, z_power)
from .partitions import conjugate, partitions_of
from .permutations import count_tuples_common_ascent, perm_stats
from .posets import (boolean_lattice, chain_census, fixture, mobius,
                     rank_select, read_poset, repeated_label_fixture,
                     segre_power, subspace_lattice, verify_el, word_ascents,
                     word_descents, write_poset)
from .qpoly import QPoly, QRatNF, q_binomial, q_factorial
from .symfunc import (e_lambda_to_h, e_to_h, h_monomial, h_to_schur,
                      inner_product, schur_to_h, unit)
from .tableaux import kostka, syt_count

# w_n^(t) for 0 <= n <= 5, t <= 6; None marks cells left open in the source
# table (they are still computable by the recurrence).
W_TABLE = {
    1: (1, 1, 1, 1, 1, 1),
    2: (1, 1, 3, 19, 211, 3651),
    3: (1, 1, 7, 163, 8983, 966751),
    4: (1, 1, 15, 1135, 271375, None),
    5: (1, 1, 31, 7291, 7225951, None),
    6: (1, 1, 63, 45199, 182199871, None),
}


def _subsets(n):
    for r in range(n):
        yield from combinations(range(1, n), r + 0)


def _all_subsets(n):
    base = tuple(range(1, n))
    for r in range(len(base) + 1):
        yield from combinations(base, r)


# ---------------------------------------------------------------------------
# criterion groups

def criterion_w_table() -> list[str]:
    """Recurrence route matches the reference table; brute force agrees within
    budget; the dimension identity agrees for n <= 4, t <= 3."""
    bad = []
    for t, row in W_TABLE.items():
        for n, expected in enumerate(row):
            got = w_t(n, t, route="recurrence")
            if expected is not None and got != expected:
                bad.append(f"w({n},{t}) recurrence gave {got}, expected {expected}")
            try:
                brute = w_t(n, t, route="brute")
            except EnumerationBudgetError:
                pass
            else:
                if brute != got:
                    bad.append(f"w({n},{t}) brute gave {brute}, recurrence {got}")
            if n <= 4 and t <= 3:
                dim = w_t(n, t, route="dimension")
                if dim != got:
                    bad.append(f"w({n},{t}) dimension gave {dim}, recurrence {got}")
    return bad


def criterion_beta_fixtures() -> list[str]:
    """S-basis expansions of the degree-2 and degree-3 two-alphabet top
    characteristics, coefficient for coefficient."""
    bad = []
    expected2 = {
        ((2,), (1, 1)): 1,
        ((1, 1), (2,)): 1,
        ((1, 1), (1, 1)): 1,
    }
    got2 = {k: v for k, v in beta_t(2, 2).to_basis(S_BASIS).terms().items()}
    if got2 != {k: Fraction(v) for k, v in expected2.items()}:
        bad.append(f"beta(2,2) S-expansion {got2} != {expected2}")
    expected3 = {
        ((3,), (1, 1, 1)): 1,
        ((1, 1, 1), (3,)): 1,
        ((1, 1, 1), (1, 1, 1)): 1,
        ((2, 1), (2, 1)): 2,
        ((2, 1), (1, 1, 1)): 2,
        ((1, 1, 1), (2, 1)): 2,
    }
    got3 = {k: v for k, v in beta_t(3, 2).to_basis(S_BASIS).terms().items()}
    if got3 != {k: Fraction(v) for k, v in expected3.items()}:
        bad.append(f"beta(3,2) S-expansion {got3} != {expected3}")
    for key, val in expected3.items():
        m = beta_multiplicity(3, 2, key)
        if m != val:
            bad.append(f"multiplicity{key} gave {m}, expected {val}")
    return bad


def criterion_phi_negatives() -> list[str]:
    """The two known negative multiplicities in diagonal Schur images."""
    bad = []
    f = phi_t(schur_to_h((3, 2, 2)), 2).to_basis(S_BASIS)
    c = f.coefficient(((4, 3), (6, 1)))
    if c != -1:
        bad.append(f"phi_2(s_322) at ((4,3),(6,1)) gave {c}, expected -1")
    g = phi_t(schur_to_h((2, 2, 2, 1)), 2).to_basis(S_BASIS)
    c = g.coefficient(((3, 3, 1), (5, 1, 1)))
    if c != -2:
        bad.append(f"phi_2(s_2221) at ((3,3,1),(5,1,1)) gave {c}, expected -2")
    return bad


def criterion_positivity(nmax: int = 5) -> list[str]:
    """All S-basis coefficients of the top and rank-selected homology
    characteristics, of diagonal h- and e-images, and of two-row diagonal
    Schur images are nonnegative."""
    bad = []
    for t in (2, 3):
        for n in range(1, nmax + 1):
            top = beta_t(n, t).to_basis(S_BASIS)
            if any(c < 0 for _, c in top.items()):
                bad.append(f"beta({n},{t}) has a negative S coefficient")
            for J in _all_subsets(n):
                b = rank_alpha_beta(n, t, J, route="recurrence")[1].to_basis(S_BASIS)
                if any(c < 0 for _, c in b.items()):
                    bad.append(f"rank beta({n},{t},{J}) has a negative S coefficient")
            for lam in partitions_of(n):
                h_img = z_diagonal(lam, t).to_basis(S_BASIS)
                if any(c < 0 for _, c in h_img.items()):
                    bad.append(f"phi_{t}(h_{lam}) has a negative S coefficient")
                e_img = phi_t(e_lambda_to_h(lam), t).to_basis(S_BASIS)
                if any(c < 0 for _, c in e_img.items()):
                    bad.append(f"phi_{t}(e_{lam}) has a negative S coefficient")
        for total in range(2, 7):
            for b in range(1, total // 2 + 1):
                lam = (total - b, b)
                img = phi_t(schur_to_h(lam), t).to_basis(S_BASIS)
                if any(c < 0 for _, c in img.items()):
                    bad.append(f"phi_{t}(s_{lam}) has a negative S coefficient")
    return bad


def criterion_rank_selection(nmax: int = 5) -> list[str]:
    """Tableau, recurrence and inclusion-exclusion routes agree for both the
    chain and homology characteristics, and the subset sums invert."""
    bad = []
    t = 2
    for n in range(1, nmax + 1):
        for J in _all_subsets(n):
            a1, b1 = rank_alpha_beta(n, t, J, route="syt")
            a2, b2 = rank_alpha_beta(n, t, J, route="recurrence")
            a3, b3 = rank_alpha_beta(n, t, J, route="inclusion-exclusion")
            if not (a1 == a2 == a3):
                bad.append(f"alpha({n},{t},{J}) routes disagree")
            if not (b1 == b2 == b3):
                bad.append(f"beta({n},{t},{J}) routes disagree")
            acc = None
            for r in range(len(J) + 1):
                for U in combinations(J, r):
                    bb = rank_alpha_beta(n, t, U, route="inclusion-exclusion")[1]
                    acc = bb if acc is None else acc + bb
            if acc != a1:
                bad.append(f"sum of beta over subsets of {J} != alpha({n},{t},{J})")
        # exact-descent partition of all chains
        total = None
        for J in _all_subsets(n):
            bb = rank_alpha_beta(n, t, J, route="recurrence")[1]
            total = bb if total is None else total + bb
        if total != z_diagonal((1,) * n, t):
            bad.append(f"sum of rank beta over all J at n={n} is not the full chain module")
        # consecutive ranks give the hook image, and their dimension formula
        for k in range(1, n):
            J = tuple(range(1, k + 1))
            b = rank_alpha_beta(n, t, J, route="recurrence")[1]
            if b != phi_t(schur_to_h((n - k,) + (1,) * k), t):
                bad.append(f"rank beta({n},{t},[1..{k}]) is not the hook image")
            dim = dimension(b)
            alt = sum((-1) ** (k - i) * w_t(i, t) * comb(n, i) ** t for i in range(k + 1))
            if dim != alt or alt < 0:
                bad.append(f"consecutive-rank dimension mismatch at n={n}, k={k}")
    return bad


def criterion_q_agreement(nmax: int = 4) -> list[str]:
    """q-side route agreement and the q=1 shadow."""
    bad = []
    for t in (1, 2, 3):
        for n in range(nmax + 1):
            rec = W_t_q(n, t, route="recurrence")
            try:
                brute = W_t_q(n, t, route="brute")
            except EnumerationBudgetError:
                brute = None
            if brute is not None and brute != rec:
                bad.append(f"W({n},{t}) brute != recurrence")
            if rec(1) != w_t(n, t):
                bad.append(f"W({n},{t})(1) != w({n},{t})")
            if any(c < 0 for c in rec.coeffs):
                bad.append(f"W({n},{t}) has negative coefficients")
    for n in range(1, nmax + 1):
        if W_t_q(n, 1) != QPoly.monomial(n * (n - 1) // 2):
            bad.append(f"W({n},1) is not q^C({n},2)")
        for J in _all_subsets(n):
            rec = rank_W_t_q(n, 2, J, route="recurrence")
            brute = rank_W_t_q(n, 2, J, route="brute")
            if rec != brute:
                bad.append(f"rank W({n},2,{J}) brute != recurrence")
            if rec(1) != dimension(rank_alpha_beta(n, 2, J, route="recurrence")[1]):
                bad.append(f"rank W({n},2,{J})(1) != rank beta dimension")
    return bad


def criterion_poset_concordance() -> list[str]:
    """Everything the explicit posets must agree on: Mobius numbers, chain
    censuses, EL verification, and the repeated-label fixture."""
    bad = []
    for (n, t) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
        P = segre_power(boolean_lattice(n), t)
        mu = mobius(P)
        if mu != (-1) ** n * w_t(n, t):
            bad.append(f"mu(B_{n}^({t})) = {mu} != (-1)^{n} w({n},{t})")
    P = segre_power(subspace_lattice(3, 2), 2)
    mu = mobius(P)
    if mu != -int(W_t_q(3, 2)(2)):
        bad.append(f"mu(B_3(2)^(2)) = {mu} != -W_3^(2)(2)")
    for (n, q) in [(3, 2), (3, 3), (4, 2)]:
        census = chain_census(subspace_lattice(n, q))
        for w in permutations(range(1, n + 1)):
            word = tuple((x,) for x in w)
            if census.word_counts.get(word, 0) != q ** perm_stats(w).inversions:
                bad.append(f"census of B_{n}({q}) at word {w} is not q^inv")
    el_cases = [
        boolean_lattice(2), boolean_lattice(3), boolean_lattice(4),
        segre_power(boolean_lattice(2), 2), segre_power(boolean_lattice(3), 2),
        segre_power(boolean_lattice(3), 3), segre_power(boolean_lattice(4), 2),
        subspace_lattice(2, 2), subspace_lattice(3, 2), subspace_lattice(2, 3),
        segre_power(subspace_lattice(2, 2), 2),
        segre_power(subspace_lattice(3, 2), 2),
        repeated_label_fixture(), fixture("repeated-labels-square"),
    ]
    for P in el_cases:
        rep = verify_el(P)
        if not rep.passed:
            bad.append(f"EL verification failed for {P.name}: {rep.detail}")
    FX = fixture("repeated-labels-square")
    if mobius(FX) != -2:
        bad.append(f"fixture square has mu {mobius(FX)}, expected -2")
    if chain_census(FX).decreasing != 2:
        bad.append("fixture square does not have exactly 2 decreasing chains")
    return bad


def criterion_ps_bridge(nmax: int = 4) -> list[str]:
    """Principal specialization of the rank-selected characteristics equals
    the q-side Betti polynomials over the standard denominator, including the
    full poset and Whitney cases."""
    bad = []
    for t in (1, 2, 3):
        for n in range(1, nmax + 1):
            full = principal_specialization(beta_t(n, t))
            if full != QRatNF(W_t_q(n, t), n, t):
                bad.append(f"ps beta({n},{t}) != W({n},{t}) over the denominator")
            for J in _all_subsets(n):
                ps = principal_specialization(rank_alpha_beta(n, t, J, route="recurrence")[1])
                if ps.numerator != rank_W_t_q(n, t, J):
                    bad.append(f"ps rank beta({n},{t},{J}) numerator mismatch")
    t = 2
    for n in range(1, nmax + 1):
        for r in range(n + 1):
            lhs = principal_specialization(whitney_char(n, t, r))
            rhs = QRatNF(q_binomial(n, r) ** t * W_t_q(r, t), n, t)
            if lhs != rhs:
                bad.append(f"ps Whitney({n},{t},{r}) mismatch")
    return bad


def criterion_genfun(order: int = 6) -> list[str]:
    """Series inversions reproduce the scalar counts and the characteristics
    through the requested order."""
    bad = []
    for t in (2, 3):
        for n in range(order + 1):
            if w_t(n, t, route="genfun") != w_t(n, t):
                bad.append(f"scalar series inversion disagrees at w({n},{t})")
            if beta_t(n, t, route="genfun") != beta_t(n, t):
                bad.append(f"tensor series inversion disagrees at beta({n},{t})")
    return bad


# ---------------------------------------------------------------------------
# module-level invariants beyond the acceptance criteria

def check_perm_invariants() -> list[str]:
    bad = []
    for n in range(1, 7):
        total = QPoly()
        for w in permutations(range(1, n + 1)):
            total = total + QPoly.monomial(perm_stats(w).inversions)
        if total != q_factorial(n):
            bad.append(f"inversion generating polynomial of S_{n} is off")
    for n in range(1, 6):
        if count_tuples_common_ascent(n, 1) != 1:
            bad.append(f"single-permutation no-common-ascent count at n={n} is not 1")
    for (n, t) in [(3, 2), (4, 2), (3, 3)]:
        total = 0
        for J in _all_subsets(n):
            total += count_tuples_common_ascent(n, t, mode="exact-complement", target=J)
        if total != factorial(n) ** t:
            bad.append(f"exact-complement counts at (n,t)=({n},{t}) do not add to n!^t")
    return bad


def check_symfunc_invariants() -> list[str]:
    bad = []
    # e_n against its alternating recurrence
    es = [unit()]
    for n in range(1, 9):
        acc = None
        for i in range(n):
            term = es[i] * h_monomial((n - i,))
            term = term if (n - 1 - i) % 2 == 0 else -1 * term
            acc = term if acc is None else acc + term
        es.append(acc)
        if acc != e_to_h(n):
            bad.append(f"e_to_h({n}) disagrees with the alternating recurrence")
    # round trips through the Kostka matrix
    for n in range(8):
        for lam in partitions_of(n):
            back = h_to_schur(schur_to_h(lam))
            if back != {lam: Fraction(1)}:
                bad.append(f"Schur round trip failed at {lam}")
    # hook alternating sums
    for n in range(1, 7):
        for k in range(n):
            acc = None
            for i in range(k + 1):
                term = e_to_h(i) * h_monomial((n - i,)) if n > i else e_to_h(i)
                term = term if (k - i) % 2 == 0 else -1 * term
                acc = term if acc is None else acc + term
            if acc != schur_to_h((n - k,) + (1,) * k):
                bad.append(f"hook identity failed at n={n}, k={k}")
    # Kostka difference pairing
    for total in range(2, 7):
        for b in range(1, total // 2 + 1):
            a = total - b
            diff = h_monomial((a, b)) - h_monomial(tuple(sorted((a + 1, b - 1), reverse=True)) if b > 1 else (a + 1,))
            for mu in partitions_of(total):
                expected = 1 if mu == (a, b) else 0
                if inner_product(schur_to_h(mu), diff) != expected:
                    bad.append(f"Kostka difference pairing failed at mu={mu}, (a,b)=({a},{b})")
    return bad


def check_multisym_invariants() -> list[str]:
    bad = []
    # distinct h-monomials stay distinct under the diagonal map
    for n in range(6):
        for t in (2, 3):
            images = {tuple(sorted(phi_t(h_monomial(lam), t).terms()))
                      for lam in partitions_of(n)}
            if len(images) != len(partitions_of(n)):
                bad.append(f"diagonal map collapsed h-monomials at degree {n}, t={t}")
    # homomorphism property on mixed products
    for lam, mu in [((2,), (1, 1)), ((3, 1), (2,)), ((2, 2), (2, 1))]:
        f = schur_to_h(lam)
        g = e_to_h(sum(mu)) * h_monomial(mu)
        for t in (2, 3):
            if phi_t(f * g, t) != multiply(phi_t(f, t), phi_t(g, t)):
                bad.append(f"diagonal map is not multiplicative on {lam}, {mu}")
    # Jacobi-Trudi determinants upstairs
    for t in (2, 3):
        for n in range(1, 7):
            for lam in partitions_of(n):
                det = _det_entries(lam, lambda m: z_power(m, t) if m >= 0 else None, t)
                if det != phi_t(schur_to_h(lam), t):
                    bad.append(f"Z-determinant disagrees with phi(s_{lam}) at t={t}")
    t = 2
    for n in range(1, 6):
        for lam in partitions_of(n):
            det = _det_entries(lam, lambda m: beta_t(m, t) if m >= 0 else None, t)
            if det != phi_t(schur_to_h(conjugate(lam)), t):
                bad.append(f"beta-determinant disagrees with phi(s_{conjugate(lam)})")
    # trivial and sign multiplicities in the top characteristic
    for t in (2, 3):
        for n in range(1, 6):
            triv = beta_multiplicity(n, t, ((n,),) * t)
            sign = beta_multiplicity(n, t, ((1,) * n,) * t)
            if triv != (1 if n == 1 else 0):
                bad.append(f"trivial multiplicity at n={n}, t={t} is {triv}")
            if sign != 1:
                bad.append(f"sign multiplicity at n={n}, t={t} is {sign}")
    return bad


def _det_entries(lam, entry, t):
    """Expand det(M) for M_ij = entry(lam_i - i + j) over permutations, in the
    multi-alphabet ring; entry(m) is None for m < 0."""
    ell = len(lam)
    acc = None
    for sigma in permutations(range(ell)):
        factors = []
        ok = True
        for i in range(ell):
            m = lam[i] - (i + 1) + (sigma[i] + 1)
            if m < 0:
                ok = False
                break
            factors.append(entry(m))
        if not ok:
            continue
        prod_val = ms_unit(t)
        for f in factors:
            prod_val = multiply(prod_val, f)
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if sigma[i] > sigma[j]:
                    sign = -sign
        term = sign * prod_val
        acc = term if acc is None else acc + term
    return acc


def check_poset_extras() -> list[str]:
    bad = []
    # uniform-interval recurrences, Boolean and q-side
    B4 = boolean_lattice(4)
    for J in [(1,), (3,), (1, 3), (2, 3), (1, 2, 3)]:
        jr = max(J)
        rest = tuple(j for j in J if j != jr)
        lhs = (_btilde(B4, J) + _btilde(B4, rest))
        rhs = comb(4, jr) * _btilde(boolean_lattice(jr), rest)
        if lhs != rhs:
            bad.append(f"uniform recurrence failed on B_4 at J={J}")
    S32 = subspace_lattice(3, 2)
    for J in [(1,), (2,), (1, 2)]:
        jr = max(J)
        rest = tuple(j for j in J if j != jr)
        lhs = _btilde(S32, J) + _btilde(S32, rest)
        rhs = int(q_binomial(3, jr)(2)) * _btilde(subspace_lattice(jr, 2), rest)
        if lhs != rhs:
            bad.append(f"uniform recurrence failed on B_3(2) at J={J}")
    # full-poset refinement of the Mobius recurrence
    mu = mobius(B4)
    acc = -sum(comb(4, i) * mobius(boolean_lattice(i)) for i in range(4))
    if mu != acc:
        bad.append("rank-refined Mobius recurrence failed on B_4")
    # Segre layer sizes and the census factorization
    B32 = segre_power(boolean_lattice(3), 2)
    for r in range(4):
        if len(B32.elements_at_rank(r)) != len(boolean_lattice(3).elements_at_rank(r)) ** 2:
            bad.append(f"layer {r} of the Segre square of B_3 has the wrong size")
    for P in [segre_power(boolean_lattice(4), 2), segre_power(subspace_lattice(3, 2), 2)]:
        n = P.rank
        for _, word in P.maximal_chains():
            half = len(word[0]) // 2
            comp1 = tuple(l[:half] for l in word)
            comp2 = tuple(l[half:] for l in word)
            common = word_ascents(comp1) & word_ascents(comp2)
            if word_descents(word) != set(range(1, n)) - common:
                bad.append(f"descent factorization failed on {P.name}")
                break
    # exchange format round trip
    for P in [repeated_label_fixture(), boolean_lattice(3)]:
        txt = write_poset(P)
        again = write_poset(read_poset(txt))
        if txt != again:
            bad.append(f"poset file round trip is not byte-identical for {P.name}")
    return bad


def _btilde(P, J) -> int:
    return (-1) ** (len(J) - 1) * mobius(rank_select(P, J))


# ---------------------------------------------------------------------------
# suites

def _small_checks():
    return [
        ("w-table", lambda: criterion_w_table()),
        ("beta-fixtures", criterion_beta_fixtures),
        ("phi-negatives", criterion_phi_negatives),
        ("positivity(n<=4)", lambda: criterion_positivity(4)),
        ("rank-selection(n<=4)", lambda: criterion_rank_selection(4)),
        ("q-agreement(n<=3)", lambda: criterion_q_agreement(3)),
        ("ps-bridge(n<=3)", lambda: criterion_ps_bridge(3)),
        ("genfun(order 5)", lambda: criterion_genfun(5)),
        ("poset-fixture", _fixture_only),
    ]


def _fixture_only() -> list[str]:
    bad = []
    FX = fixture("repeated-labels-square")
    if not verify_el(FX).passed:
        bad.append("EL verification failed on the repeated-label square")
    if mobius(FX) != -2 or chain_census(FX).decreasing != 2:
        bad.append("repeated-label square invariants are off")
    return bad


def _full_checks():
    return [
        ("w-table", criterion_w_table),
        ("beta-fixtures", criterion_beta_fixtures),
        ("phi-negatives", criterion_phi_negatives),
        ("positivity", criterion_positivity),
        ("rank-selection", criterion_rank_selection),
        ("q-agreement", criterion_q_agreement),
        ("poset-concordance", criterion_poset_concordance),
        ("ps-bridge", criterion_ps_bridge),
        ("genfun", criterion_genfun),
        ("perm-invariants", check_perm_invariants),
        ("symfunc-invariants", check_symfunc_invariants),
        ("multisym-invariants", check_multisym_invariants),
        ("poset-extras", check_poset_extras),
    ]


def suite_checks(suite: str):
    if suite == "small":
        return _small_checks()
    if suite == "full":
        return _full_checks()
    raise ValueError(f"unknown suite {suite!r}; expected 'small' or 'full'")


def run_suite(suite: str, echo=print) -> list[dict]:
    """Run a suite, echoing one line per check; stops at the first failing
    check (a failed identity is a bug certificate, not a partial result)."""
    results = []
    for name, fn in suite_checks(suite):
        problems = fn()
        ok = not problems
        results.append({"name": name, "ok": ok, "problems": problems})
        if ok:
            echo(f"ok {name}")
        else:
            echo(f"FAIL {name}: {problems[0]}")
            for p in problems[1:]:
                echo(f"     {p}")
            break
    return results
