"""Dense integer polynomials in q, and the rational normal form whose
denominator is a power of (1-q)(1-q^2)...(1-q^n).

All arithmetic stays in arbitrary-precision integers: Gaussian binomials come
from the q-Pascal recurrence, never from rational division, and equality of
normal forms is decided by cross-multiplying numerators.
"""

from functools import cache


class QPoly:
    """Polynomial in q with integer coefficients, stored densely without
    trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"QPoly coefficients must be ints, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        """c * q^k."""
        if k < 0:
            raise ValueError("negative powers of q are not representable")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == QPoly((other,))
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, QPoly) else QPoly((-other,)))

    def __rsub__(self, other):
        return QPoly((other,)) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = QPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Evaluate at x by Horner's rule; exact for int and Fraction inputs."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shifted(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "QPoly(0)"
        bits = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                bits.append(str(c))
            elif k == 1:
                bits.append(f"{c}*q" if c != 1 else "q")
            else:
                bits.append(f"{c}*q^{k}" if c != 1 else f"q^{k}")
        return "QPoly(" + " + ".join(bits) + ")"


@cache
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient via the q-Pascal recurrence."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return QPoly.one()
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k)


def q_multinomial(n: int, lam) -> QPoly:
    """Gaussian multinomial for a partition of at most n, as a product of
    q-binomials of the successive partial sums."""
    if sum(lam) > n:
        raise ValueError(f"parts {lam} overflow n={n}")
    acc = QPoly.one()
    rem = n
    for part in lam:
        acc = acc * q_binomial(rem, part)
        rem -= part
    return acc


def q_int(i: int) -> QPoly:
    """1 + q + ... + q^(i-1)."""
    return QPoly((1,) * i)


def q_factorial(n: int) -> QPoly:
    acc = QPoly.one()
    for i in range(1, n + 1):
        acc = acc * q_int(i)
    return acc


@cache
def q_pochhammer(n: int) -> QPoly:
    """(1-q)(1-q^2)...(1-q^n)."""
    acc = QPoly.one()
    for i in range(1, n + 1):
        acc = acc * (QPoly.one() - QPoly.monomial(i))
    return acc


class QRatNF:
    """Normal form numerator / ((1-q)...(1-q^n))^t.

    Values with denominators (n1, t) and (n2, t) compare equal exactly when
    the cross-multiplied numerators agree as integer polynomials; no division
    is ever performed.
    """

    __slots__ = ("numerator", "n", "t")

    def __init__(self, numerator: QPoly, n: int, t: int):
        if not isinstance(numerator, QPoly):
            numerator = QPoly(numerator)
        if n < 0 or t < 1:
            raise ValueError(f"bad denominator descriptor ({n}, {t})")
        self.numerator = numerator
        self.n = n
        self.t = t

    def __eq__(self, other):
        if not isinstance(other, QRatNF):
            return NotImplemented
        if self.t != other.t:
            return False
        if self.n == other.n:
            return self.numerator == other.numerator
        return (self.numerator * q_pochhammer(other.n) ** self.t
                == other.numerator * q_pochhammer(self.n) ** other.t)

    def __hash__(self):
        raise TypeError("QRatNF is unhashable (equality is up to denominator scaling)")

    def payload(self) -> dict:
        return {
            "numerator": self.numerator.coeff_strings(),
            "n": self.n,
            "t": self.t,
        }

    def __repr__(self):
        return f"QRatNF({self.numerator!r} / poch({self.n})^{self.t})"
