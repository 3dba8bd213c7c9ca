"""Exact arithmetic kernel.

Rationals, sparse Laurent polynomials in y, homogeneous polynomial
integrands, finitely supported character sums, and exact Lagrange
interpolation.  Every value is immutable after construction and every
operation is a pure function, so values are safe to share freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

# Arbitrary-precision rational, always in lowest terms with positive
# denominator; Fraction guarantees both.
Rat = Fraction

RAT_ZERO = Fraction(0)
RAT_ONE = Fraction(1)


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and strings like "3/4". Floats are refused."""
    if isinstance(x, float):
        raise TypeError("floats are not exact, pass int, str or Fraction")
    return Fraction(x)


class LaurentPoly:
    """Sparse Laurent polynomial sum c_k * y**k with Fraction coefficients.

    Zero coefficients are never stored, so structural equality is
    mathematical equality.  Terms iterate in increasing exponent order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict[int, Fraction] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for k, c in items:
                c = as_rat(c)
                k = int(k)
                acc[k] = acc.get(k, RAT_ZERO) + c
        self.terms = {k: c for k, c in sorted(acc.items()) if c != 0}

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: as_rat(c)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, RAT_ZERO) + c
        return LaurentPoly(acc)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                acc[k] = acc.get(k, RAT_ZERO) + c1 * c2
        return LaurentPoly(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            # only monomials invert inside the Laurent ring
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((k, c),) = self.terms.items()
            return LaurentPoly({-k: 1 / c}) ** (-n)
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def coeff(self, k: int) -> Fraction:
        return self.terms.get(k, RAT_ZERO)

    def subs(self, v) -> Fraction:
        """Evaluate at y = v exactly; v = 0 is allowed only without poles."""
        v = as_rat(v)
        if v == 0:
            if any(k < 0 for k in self.terms):
                raise ZeroDivisionError("pole at y = 0")
            return self.terms.get(0, RAT_ZERO)
        return sum((c * v**k for k, c in self.terms.items()), RAT_ZERO)

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms.items():
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*y")
            else:
                parts.append(f"{c}*y^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"


L_ZERO = LaurentPoly()
L_ONE = LaurentPoly.const(1)
ONE_PLUS_Y = LaurentPoly({0: 1, 1: 1})
NEG_ONE_MINUS_Y = LaurentPoly({0: -1, 1: -1})


def substitute_inverse(p: LaurentPoly) -> LaurentPoly:
    """y -> 1/y, i.e. exponent negation on every term. An involution."""
    return LaurentPoly({-k: c for k, c in p.terms.items()})


def substitute_negative(p: LaurentPoly) -> LaurentPoly:
    """y -> -y. An involution; bridges the t and y variables elsewhere."""
    return LaurentPoly({k: c if k % 2 == 0 else -c for k, c in p.terms.items()})


def neg_y_power(k: int) -> LaurentPoly:
    """(-y)**k for any integer k, as a single monomial."""
    return LaurentPoly({k: -1 if k % 2 else 1})


class HomogPoly:
    """Homogeneous polynomial function on Z^n with Fraction coefficients.

    monomials is a sorted tuple of (exponent vector, coefficient) pairs,
    all of the same total degree.  The zero polynomial is the empty list
    and has degree 0 by convention.
    """

    __slots__ = ("n", "degree", "monomials")

    def __init__(self, n: int, monomials: Iterable = ()):
        acc: dict[tuple, Fraction] = {}
        for exps, c in monomials:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} is not length {n}")
            if any(e < 0 for e in exps):
                raise ValueError("monomial exponents must be nonnegative")
            c = as_rat(c)
            acc[exps] = acc.get(exps, RAT_ZERO) + c
        clean = {e: c for e, c in acc.items() if c != 0}
        degrees = {sum(e) for e in clean}
        if len(degrees) > 1:
            raise ValueError(f"not homogeneous, degrees {sorted(degrees)}")
        self.n = n
        self.degree = degrees.pop() if degrees else 0
        self.monomials = tuple(sorted(clean.items()))

    @staticmethod
    def one(n: int) -> "HomogPoly":
        return HomogPoly(n, [((0,) * n, 1)])

    def __bool__(self):
        return bool(self.monomials)

    def __eq__(self, other):
        return (
            isinstance(other, HomogPoly)
            and self.n == other.n
            and self.monomials == other.monomials
        )

    def __hash__(self):
        return hash((self.n, self.monomials))

    def __repr__(self):
        return f"HomogPoly(n={self.n}, degree={self.degree}, {list(self.monomials)!r})"


def phi_eval(phi: HomogPoly, m) -> Fraction:
    """Exact value of phi at the integer vector m.

    Satisfies phi(-m) = (-1)**deg * phi(m) by homogeneity.
    """
    if len(m) != phi.n:
        raise ValueError(f"point has length {len(m)}, expected {phi.n}")
    total = RAT_ZERO
    for exps, c in phi.monomials:
        v = c
        for mi, e in zip(m, exps):
            if e:
                v *= Fraction(mi) ** e
        total += v
    return total


class CharacterSum:
    """Finitely supported map from lattice points m to LaurentPoly.

    Represents an element of Q[M][y^{+-1}]; keys iterate in lexicographic
    order and zero values are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        acc: dict[tuple, LaurentPoly] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for m, p in items:
                m = tuple(int(x) for x in m)
                if len(m) != n:
                    raise ValueError(f"key {m} is not length {n}")
                acc[m] = acc.get(m, L_ZERO) + p
        self.n = n
        self.terms = {m: p for m, p in sorted(acc.items()) if p}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, CharacterSum)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        if not isinstance(other, CharacterSum) or other.n != self.n:
            return NotImplemented
        acc = dict(self.terms)
        for m, p in other.terms.items():
            acc[m] = acc.get(m, L_ZERO) + p
        return CharacterSum(self.n, acc)

    def scale(self, p: LaurentPoly) -> "CharacterSum":
        return CharacterSum(self.n, {m: q * p for m, q in self.terms.items()})

    def map_values(self, fn) -> "CharacterSum":
        return CharacterSum(self.n, {m: fn(p) for m, p in self.terms.items()})

    def __repr__(self):
        return f"CharacterSum(n={self.n}, {len(self.terms)} terms)"


class ZPoly:
    """Polynomial in z whose coefficients are LaurentPoly in y.

    coeffs[k] is the coefficient of z**k; the leading coefficient is
    nonzero unless the polynomial is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z) -> LaurentPoly:
        z = as_rat(z)
        acc = L_ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"ZPoly({[str(c) for c in self.coeffs]!r})"


def lagrange_interpolate(samples, degree_bound: int) -> ZPoly:
    """Exact interpolation through (node, LaurentPoly value) samples.

    Requires pairwise distinct nodes and exactly degree_bound + 1 samples.
    Interpolation is coefficientwise in y: the returned ZPoly reproduces
    every sample value exactly.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("empty sample list")
    if len(samples) != degree_bound + 1:
        raise ValueError(
            f"need {degree_bound + 1} samples for degree bound {degree_bound}, got {len(samples)}"
        )
    nodes = [as_rat(x) for x, _ in samples]
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate interpolation nodes")
    k = len(samples)
    coeffs = [L_ZERO] * k
    for i, (_, value) in enumerate(samples):
        if not isinstance(value, LaurentPoly):
            value = LaurentPoly.const(value)
        # basis numerator prod_{j != i} (z - x_j), ascending z coefficients
        basis = [RAT_ONE]
        denom = RAT_ONE
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            nxt = [RAT_ZERO] * (len(basis) + 1)
            for d, b in enumerate(basis):
                nxt[d] += b * (-xj)
                nxt[d + 1] += b
            basis = nxt
            denom *= nodes[i] - xj
        for d, b in enumerate(basis):
            if b:
                coeffs[d] = coeffs[d] + value * (b / denom)
    return ZPoly(coeffs)
