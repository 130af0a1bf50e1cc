"""Bounded graded posets with explicit covers and edge labels.

This module is the ground-truth side of the library: lattices are built
element by element, maximal chains are walked explicitly, and Mobius numbers
come from the defining recursion, so the closed formulas elsewhere have
something honest to be checked against.

Labels are integer tuples compared componentwise; a width-1 tuple behaves
like a plain integer label.  A chain step is a descent when its label is not
strictly below the next one, which matters once labels are only partially
ordered.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

from .budgets import EnumerationBudgetError, chain_budget, element_budget

Label = tuple[int, ...]


def label_less(a: Label, b: Label) -> bool:
    """Strict componentwise comparison in the product of total orders."""
    if len(a) != len(b):
        raise ValueError(f"labels {a} and {b} have different widths")
    return a != b and all(x <= y for x, y in zip(a, b))


def word_ascents(word) -> set[int]:
    return {i for i in range(1, len(word)) if label_less(word[i - 1], word[i])}


def word_descents(word) -> set[int]:
    """Positions where the label does not strictly increase."""
    return {i for i in range(1, len(word)) if not label_less(word[i - 1], word[i])}


def word_lex_less(u, w) -> bool:
    """u strictly precedes w wordwise: at the first differing position the
    label of u is strictly below that of w.  With incomparable labels at that
    position neither word precedes the other."""
    for a, b in zip(u, w):
        if a == b:
            continue
        return label_less(a, b)
    return False


class LabeledPoset:
    """Finite bounded graded poset given by its cover relations, each cover
    optionally carrying an integer tuple label.  Instances are immutable
    after construction and safe to share."""

    def __init__(self, ranks, covers, name: str = ""):
        self.name = name
        self.rank_of = dict(ranks)
        if not self.rank_of:
            raise ValueError("poset needs at least one element")
        self.elements = list(self.rank_of)
        up: dict = {x: [] for x in self.rank_of}
        down: dict = {x: [] for x in self.rank_of}
        clean = []
        for lo, hi, label in covers:
            if lo not in self.rank_of or hi not in self.rank_of:
                raise ValueError(f"cover ({lo!r}, {hi!r}) uses unknown elements")
            if self.rank_of[hi] != self.rank_of[lo] + 1:
                raise ValueError(f"cover ({lo!r}, {hi!r}) does not raise rank by one")
            if label is not None:
                label = tuple(int(x) for x in label)
            clean.append((lo, hi, label))
            up[lo].append((hi, label))
            down[hi].append((lo, label))
        self.covers = clean
        self.up = up
        self.down = down
        levels = sorted(set(self.rank_of.values()))
        if levels[0] != 0 or levels != list(range(levels[-1] + 1)):
            raise ValueError("ranks must run 0..top without gaps")
        self.rank = levels[-1]
        bottoms = [x for x, r in self.rank_of.items() if r == 0]
        tops = [x for x, r in self.rank_of.items() if r == self.rank]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("poset must have a unique bottom and a unique top")
        self.bottom = bottoms[0]
        self.top = tops[0]
        for x, r in self.rank_of.items():
            if r < self.rank and not up[x]:
                raise ValueError(f"element {x!r} below the top has no upper cover")
            if r > 0 and not down[x]:
                raise ValueError(f"element {x!r} above the bottom has no lower cover")
        self._downsets: dict = {}

    def size(self) -> int:
        return len(self.elements)

    def elements_at_rank(self, r: int) -> list:
        return [x for x in self.elements if self.rank_of[x] == r]

    def labeled(self) -> bool:
        return all(lab is not None for _, _, lab in self.covers)

    def downset(self, y) -> frozenset:
        """All elements below or equal to y."""
        cached = self._downsets.get(y)
        if cached is None:
            seen = {y}
            stack = [y]
            while stack:
                z = stack.pop()
                for w, _ in self.down[z]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            cached = self._downsets[y] = frozenset(seen)
        return cached

    def leq(self, x, y) -> bool:
        return x in self.downset(y)

    def maximal_chains(self, x=None, y=None, budget=None):
        """Yield (elements, label word) for every maximal chain of [x, y];
        defaults to the whole poset.  Aborts past the chain budget."""
        x = self.bottom if x is None else x
        y = self.top if y is None else y
        if x == y:
            yield (x,), ()
            return
        allowed = self.downset(y)
        if x not in allowed:
            return
        limit = chain_budget(budget)
        count = 0
        path = [x]
        word: list = []

        def walk(z):
            nonlocal count
            if z == y:
                count += 1
                if count > limit:
                    raise EnumerationBudgetError(
                        f"interval holds more than {limit} maximal chains")
                yield tuple(path), tuple(word)
                return
            for w, lab in self.up[z]:
                if w in allowed:
                    path.append(w)
                    word.append(lab)
                    yield from walk(w)
                    path.pop()
                    word.pop()

        yield from walk(x)

    def __repr__(self):
        label = self.name or "poset"
        return f"LabeledPoset({label}: {self.size()} elements, rank {self.rank})"


# ---------------------------------------------------------------------------
# invariants read straight off the poset

def mobius(P: LabeledPoset, x=None, y=None) -> int:
    """Mobius number mu(x, y) by the defining recursion, memoized over the
    closed interval [x, y]."""
    x = P.bottom if x is None else x
    y = P.top if y is None else y
    if x == y:
        return 1
    if not P.leq(x, y):
        raise ValueError(f"{x!r} is not below {y!r}")
    interval = [z for z in P.downset(y) if P.leq(x, z)]
    interval.sort(key=lambda z: P.rank_of[z])
    mu = {x: 1}
    for z in interval:
        if z == x:
            continue
        below = P.downset(z)
        mu[z] = -sum(mu[w] for w in interval if w != z and w in below)
    return mu[y]


@dataclass
class ChainCensus:
    """Maximal chains of a labeled poset bucketed by their label word."""

    length: int
    word_counts: dict

    @property
    def total(self) -> int:
        return sum(self.word_counts.values())

    def descent_counts(self) -> dict[frozenset, int]:
        tally: Counter = Counter()
        for word, c in self.word_counts.items():
            tally[frozenset(word_descents(word))] += c
        return dict(tally)

    @property
    def decreasing(self) -> int:
        """Chains with no ascent anywhere in their label word."""
        return sum(c for word, c in self.word_counts.items() if not word_ascents(word))

    def count_for(self, word) -> int:
        return self.word_counts.get(tuple(tuple(l) for l in word), 0)


def chain_census(P: LabeledPoset, budget=None) -> ChainCensus:
    if not P.labeled():
        raise ValueError("chain census needs a fully labeled poset")
    counts: Counter = Counter()
    for _, word in P.maximal_chains(budget=budget):
        counts[word] += 1
    return ChainCensus(P.rank, dict(counts))


@dataclass
class ELReport:
    passed: bool
    witness: tuple | None = None
    detail: str = ""


def verify_el(P: LabeledPoset, budget=None) -> ELReport:
    """Check the edge-lexicographic condition on every closed interval.

    Each interval must contain exactly one maximal chain with strictly
    increasing labels, and that chain's word must lexicographically precede
    the word of every other maximal chain.  "Strictly first" is checked
    pairwise because tuple labels are only partially ordered.
    """
    if not P.labeled():
        raise ValueError("EL verification needs a fully labeled poset")
    for y in P.elements:
        below = P.downset(y)
        for x in below:
            if x == y:
                continue
            words = [w for _, w in P.maximal_chains(x, y, budget=budget)]
            increasing = [w for w in words if not word_descents(w)]
            if len(increasing) != 1:
                return ELReport(False, (x, y),
                                f"{len(increasing)} increasing chains in [{x!r}, {y!r}]")
            first = increasing[0]
            for w in words:
                if w != first and not word_lex_less(first, w):
                    return ELReport(
                        False, (x, y),
                        f"increasing chain {first} does not precede {w} in [{x!r}, {y!r}]")
    return ELReport(True)


def rank_select(P: LabeledPoset, ranks) -> LabeledPoset:
    """Induced bounded subposet on the chosen nontrivial ranks.  The result
    is unlabeled (covers of the subposet are not covers of P); selecting all
    ranks returns P itself, labels included."""
    chosen = sorted({int(r) for r in ranks})
    for r in chosen:
        if not 1 <= r <= P.rank - 1:
            raise ValueError(f"rank {r} outside [1, {P.rank - 1}]")
    if chosen == list(range(1, P.rank)):
        return P
    levels = [0] + chosen + [P.rank]
    new_ranks = {}
    for newr, r in enumerate(levels):
        for x in P.elements_at_rank(r):
            new_ranks[x] = newr
    covers = []
    for ra, rb in zip(levels, levels[1:]):
        for b in P.elements_at_rank(rb):
            below = P.downset(b)
            for a in P.elements_at_rank(ra):
                if a in below:
                    covers.append((a, b, None))
    name = f"{P.name or 'poset'}|J={chosen}"
    return LabeledPoset(new_ranks, covers, name=name)


# ---------------------------------------------------------------------------
# builders

def segre_power(P: LabeledPoset, t: int, budget=None) -> LabeledPoset:
    """t-fold Segre power: equal-rank t-tuples with componentwise covers and
    concatenated labels.  The first power is P itself."""
    if t < 1:
        raise ValueError("need t >= 1")
    if t == 1:
        return P
    limit = element_budget(budget)
    by_rank = {r: P.elements_at_rank(r) for r in range(P.rank + 1)}
    total = sum(len(v) ** t for v in by_rank.values())
    if total > limit:
        raise EnumerationBudgetError(
            f"Segre power would hold {total} elements, over the budget {limit}")
    ranks = {}
    for r, els in by_rank.items():
        for combo in product(els, repeat=t):
            ranks[combo] = r
    covers = []
    for r in range(P.rank):
        for combo in product(by_rank[r], repeat=t):
            for steps in product(*(P.up[c] for c in combo)):
                target = tuple(s[0] for s in steps)
                labels = [s[1] for s in steps]
                if any(lab is None for lab in labels):
                    label = None
                else:
                    label = tuple(v for lab in labels for v in lab)
                covers.append((combo, target, label))
    return LabeledPoset(ranks, covers, name=f"{P.name or 'poset'}^({t})")


def boolean_lattice(n: int) -> LabeledPoset:
    """Subset lattice of [n] with the new-element edge labeling."""
    if not 0 <= n <= 6:
        raise ValueError("boolean_lattice supports 0 <= n <= 6")
    ranks = {m: bin(m).count("1") for m in range(1 << n)}
    covers = []
    for m in range(1 << n):
        for a in range(1, n + 1):
            bit = 1 << (a - 1)
            if not m & bit:
                covers.append((m, m | bit, (a,)))
    return LabeledPoset(ranks, covers, name=f"B{n}")


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _span(basis, q: int, n: int) -> frozenset:
    vecs = set()
    k = len(basis)
    for coeffs in product(range(q), repeat=k):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(n):
                    v[i] = (v[i] + c * b[i]) % q
        vecs.add(tuple(v))
    return frozenset(vecs)


def subspace_lattice(n: int, q: int, budget=None) -> LabeledPoset:
    """Lattice of subspaces of F_q^n, enumerated through row-echelon bases.

    An edge X below Y is labeled by the unique new index in f(Y) \\ f(X),
    where f(S) collects the rightmost nonzero coordinate (1-based) over the
    nonzero vectors of S.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    limit = element_budget(budget)
    if q**n > limit:
        raise EnumerationBudgetError(
            f"{q}^{n} = {q ** n} vectors exceeds the element budget {limit}")

    by_dim: list[list[frozenset]] = []
    total = 0
    for k in range(n + 1):
        layer = []
        for pivots in combinations(range(n), k):
            free_cells = [(i, j) for i in range(k)
                          for j in range(pivots[i] + 1, n) if j not in pivots]
            for assignment in product(range(q), repeat=len(free_cells)):
                rows = [[0] * n for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, j), v in zip(free_cells, assignment):
                    rows[i][j] = v
                layer.append(_span([tuple(r) for r in rows], q, n))
                total += 1
                if total > limit:
                    raise EnumerationBudgetError(
                        f"more than {limit} subspaces; over the element budget")
        by_dim.append(layer)

    def ident(span: frozenset):
        return tuple(sorted(span))

    def pivot_set(span: frozenset) -> frozenset:
        out = set()
        for v in span:
            for i in range(n - 1, -1, -1):
                if v[i]:
                    out.add(i + 1)
                    break
        return frozenset(out)

    ranks = {}
    pivots_of = {}
    for k, layer in enumerate(by_dim):
        for span in layer:
            ranks[ident(span)] = k
            pivots_of[ident(span)] = pivot_set(span)
    covers = []
    for k in range(n):
        for lower in by_dim[k]:
            lid = ident(lower)
            for upper in by_dim[k + 1]:
                if lower <= upper:
                    uid = ident(upper)
                    new = pivots_of[uid] - pivots_of[lid]
                    if len(new) != 1:
                        raise AssertionError(
                            f"cover gained pivots {sorted(new)}; expected exactly one")
                    covers.append((lid, uid, (next(iter(new)),)))
    return LabeledPoset(ranks, covers, name=f"B{n}(q={q})")


def repeated_label_fixture() -> LabeledPoset:
    """Rank-3 poset whose EL-labeling repeats a label along one maximal chain
    (the right-most chain reads 2, 1, 2).

    Its Segre square is the standing regression case for lexicographic
    comparison of partially ordered tuple labels: the square has Mobius
    number -2 carried by exactly two decreasing chains.
    """
    ranks = {"bot": 0, "a": 1, "b": 1, "c": 2, "d": 2, "top": 3}
    covers = [
        ("bot", "a", (1,)),
        ("bot", "b", (2,)),
        ("a", "c", (2,)),
        ("a", "d", (3,)),
        ("b", "d", (1,)),
        ("c", "top", (3,)),
        ("d", "top", (2,)),
    ]
    return LabeledPoset(ranks, covers, name="repeated-labels")


FIXTURE_NAMES = ("repeated-labels", "repeated-labels-square")


def fixture(name: str) -> LabeledPoset:
    if name == "repeated-labels":
        return repeated_label_fixture()
    if name == "repeated-labels-square":
        return segre_power(repeated_label_fixture(), 2)
    raise ValueError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")


# ---------------------------------------------------------------------------
# text exchange format

def write_poset(P: LabeledPoset) -> str:
    """Serialize to the "poset v1" text format.  String element ids are kept
    verbatim (so a read/write round trip is byte-identical); other ids are
    renamed n0, n1, ... in element order."""
    if all(isinstance(e, str) and e and " " not in e for e in P.elements):
        ids = {e: e for e in P.elements}
    else:
        ids = {e: f"n{i}" for i, e in enumerate(P.elements)}
    lines = ["poset v1"]
    for e in P.elements:
        lines.append(f"e {ids[e]} {P.rank_of[e]}")
    for lo, hi, lab in P.covers:
        if lab is None:
            lines.append(f"c {ids[lo]} {ids[hi]}")
        else:
            lines.append(f"c {ids[lo]} {ids[hi]} {','.join(str(v) for v in lab)}")
    return "\n".join(lines) + "\n"


def read_poset(text: str) -> LabeledPoset:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "poset v1":
        raise ValueError("not a 'poset v1' file")
    ranks = {}
    covers = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "e" and len(parts) == 3:
            ranks[parts[1]] = int(parts[2])
        elif parts[0] == "c" and len(parts) in (3, 4):
            lab = None
            if len(parts) == 4:
                lab = tuple(int(v) for v in parts[3].split(","))
            covers.append((parts[1], parts[2], lab))
        else:
            raise ValueError(f"bad line in poset file: {ln!r}")
    return LabeledPoset(ranks, covers)
