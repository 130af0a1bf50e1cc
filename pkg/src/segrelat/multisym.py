"""Tensor-product symmetric functions over t alphabets.

The storage basis Z indexes a term by a t-tuple of partitions read as
prod_j h_{lam^j}(X^j): multiplication concatenates parts per alphabet and the
diagonal map phi_t lands here with no work.  The S basis (one Schur function
per alphabet) is a computed view used for multiplicities, positivity and
dimension counts; the two are linked by the per-alphabet Kostka matrix and
its Jacobi-Trudi inverse, applied tensor-wise.
"""

from fractions import Fraction
from itertools import product

from .partitions import Partition, check_partition, partitions_of, revlex_key
from .symfunc import SymFunc, schur_h_terms
from .tableaux import kostka, syt_count

Z_BASIS = "Z"
S_BASIS = "S"

Key = tuple[Partition, ...]


class MultiSymFunc:
    """Exact rational combination of t-tuples of partitions, tagged with the
    basis the tuples are read in.  Mixed degree vectors are allowed."""

    __slots__ = ("t", "degrees", "basis", "_terms", "_views")

    def __init__(self, t: int, degrees, basis: str, terms=None):
        if t < 1:
            raise ValueError("need at least one alphabet")
        if basis not in (Z_BASIS, S_BASIS):
            raise ValueError(f"unknown basis {basis!r}")
        degrees = tuple(int(d) for d in degrees)
        if len(degrees) != t or any(d < 0 for d in degrees):
            raise ValueError(f"bad degree vector {degrees} for t={t}")
        self.t = t
        self.degrees = degrees
        self.basis = basis
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            key = tuple(check_partition(mu) for mu in key)
            if len(key) != t:
                raise ValueError(f"key {key} does not have {t} components")
            for j, mu in enumerate(key):
                if sum(mu) != degrees[j]:
                    raise ValueError(
                        f"component {mu} of key {key} is not a partition of {degrees[j]}")
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._views: dict[str, MultiSymFunc] = {basis: self}

    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def coefficient(self, key) -> Fraction:
        key = tuple(check_partition(mu) for mu in key)
        return self._terms.get(key, Fraction(0))

    def items(self):
        """Terms sorted lexicographically on the per-alphabet canonical order."""
        return sorted(self._terms.items(),
                      key=lambda kv: tuple(revlex_key(mu) for mu in kv[0]))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, MultiSymFunc):
            return NotImplemented
        if self.t != other.t or self.degrees != other.degrees:
            return False
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.to_basis(Z_BASIS)._terms == other.to_basis(Z_BASIS)._terms

    def _compatible(self, other):
        if (self.t, self.degrees, self.basis) != (other.t, other.degrees, other.basis):
            raise ValueError("operands live in different graded components or bases")

    def __add__(self, other):
        if not isinstance(other, MultiSymFunc):
            return NotImplemented
        self._compatible(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return MultiSymFunc(self.t, self.degrees, self.basis, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MultiSymFunc(self.t, self.degrees, self.basis,
                            {k: -v for k, v in self._terms.items()})

    def _scaled(self, c) -> "MultiSymFunc":
        c = Fraction(c)
        return MultiSymFunc(self.t, self.degrees, self.basis,
                            {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiSymFunc):
            return multiply(self, other)
        return self._scaled(other)

    def __rmul__(self, other):
        return self._scaled(other)

    def to_basis(self, basis: str) -> "MultiSymFunc":
        if basis in self._views:
            return self._views[basis]
        if basis == S_BASIS:
            converted = self._convert(_kostka_column)
        elif basis == Z_BASIS:
            converted = self._convert(lambda mu: schur_h_terms(mu))
        else:
            raise ValueError(f"unknown basis {basis!r}")
        view = MultiSymFunc(self.t, self.degrees, basis, converted)
        self._views[basis] = view
        view._views[self.basis] = self
        return view

    def _convert(self, expand) -> dict[Key, Fraction]:
        out: dict[Key, Fraction] = {}
        for key, coeff in self._terms.items():
            vectors = [expand(mu) for mu in key]
            for combo in product(*vectors):
                tgt = tuple(m for m, _ in combo)
                mult = coeff
                for _, c in combo:
                    mult *= c
                out[tgt] = out.get(tgt, Fraction(0)) + mult
        return {k: v for k, v in out.items() if v}

    def to_payload(self) -> dict:
        """JSON-ready form with coefficient strings kept exact."""
        return {
            "t": self.t,
            "basis": self.basis,
            "degrees": list(self.degrees),
            "terms": [{"mus": [list(mu) for mu in key], "coeff": str(c)}
                      for key, c in self.items()],
        }

    def __repr__(self):
        if not self._terms:
            return f"MultiSymFunc({self.basis}, deg {self.degrees}, 0)"
        bits = [f"{c}*{self.basis}{[list(mu) for mu in key]}" for key, c in self.items()]
        return "MultiSymFunc(" + " + ".join(bits) + ")"


def _kostka_column(lam: Partition):
    n = sum(lam)
    return tuple((mu, kostka(mu, lam)) for mu in partitions_of(n) if kostka(mu, lam))


def ms_unit(t: int) -> MultiSymFunc:
    return MultiSymFunc(t, (0,) * t, Z_BASIS, {((),) * t: 1})


def ms_zero(t: int, degrees) -> MultiSymFunc:
    return MultiSymFunc(t, degrees, Z_BASIS)


def z_monomial(lams) -> MultiSymFunc:
    """Single Z-basis term prod_j h_{lams[j]}(X^j)."""
    key = tuple(check_partition(mu) for mu in lams)
    return MultiSymFunc(len(key), tuple(sum(mu) for mu in key), Z_BASIS, {key: 1})


def s_monomial(mus) -> MultiSymFunc:
    """Single S-basis term prod_j s_{mus[j]}(X^j)."""
    key = tuple(check_partition(mu) for mu in mus)
    return MultiSymFunc(len(key), tuple(sum(mu) for mu in key), S_BASIS, {key: 1})


def z_diagonal(lam, t: int) -> MultiSymFunc:
    """Z_lam: the same partition in every alphabet."""
    lam = check_partition(lam)
    return z_monomial((lam,) * t)


def z_power(i: int, t: int) -> MultiSymFunc:
    """The generator Z_i = prod_j h_i(X^j); Z_0 is the unit."""
    if i < 0:
        raise ValueError("negative degree")
    if i == 0:
        return ms_unit(t)
    return z_diagonal((i,), t)


def phi_t(f: SymFunc, t: int) -> MultiSymFunc:
    """Diagonal algebra map: each h-monomial key of f goes to the same key
    repeated in every alphabet, with the same coefficient."""
    if t < 1:
        raise ValueError("need at least one alphabet")
    terms = {(lam,) * t: c for lam, c in f.terms().items()}
    return MultiSymFunc(t, (f.degree,) * t, Z_BASIS, terms)


def multiply(F: MultiSymFunc, G: MultiSymFunc) -> MultiSymFunc:
    """Product in the Z basis: per-alphabet concatenation of parts.  This is
    the characteristic-side image of the induction product."""
    if F.t != G.t:
        raise ValueError(f"alphabet counts differ: {F.t} vs {G.t}")
    a = F.to_basis(Z_BASIS)
    b = G.to_basis(Z_BASIS)
    out: dict[Key, Fraction] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            key = tuple(tuple(sorted(x + y, reverse=True)) for x, y in zip(ka, kb))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    degrees = tuple(da + db for da, db in zip(a.degrees, b.degrees))
    return MultiSymFunc(F.t, degrees, Z_BASIS, out)


def inner_product(F: MultiSymFunc, G: MultiSymFunc) -> Fraction:
    """Tensor inner product: Schur tuples are orthonormal."""
    if F.t != G.t or F.degrees != G.degrees:
        raise ValueError("inner product needs matching alphabet counts and degrees")
    fs = F.to_basis(S_BASIS)
    gs = G.to_basis(S_BASIS)
    total = Fraction(0)
    for key, c in fs._terms.items():
        d = gs._terms.get(key)
        if d:
            total += c * d
    return total


def dimension(F: MultiSymFunc):
    """Dimension functional: sum over S-basis terms of coeff * prod f^{mu_j}.
    Integral for characteristics of genuine modules; may be a Fraction for
    virtual rational combinations."""
    s = F.to_basis(S_BASIS)
    total = Fraction(0)
    for key, coeff in s._terms.items():
        d = 1
        for mu in key:
            d *= syt_count(mu)
        total += coeff * d
    return int(total) if total.denominator == 1 else total
