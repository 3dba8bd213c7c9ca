"""Poset polynomials on the face lattice.

The f/g recursion on Eulerian posets, g-polynomials of polar faces read
off reversed intervals [Q, Q'], the induced weight functions (t -> -y),
and the h-polynomial of the fully reversed lattice.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LaurentPoly, as_rat
from .polytope import FaceLattice, eulerian_check
from .weights import WeightFunction


class NonEulerianPoset(ValueError):
    pass


class PolyT:
    """Sparse polynomial in the abstract variable t over Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for k, c in items:
                k = int(k)
                if k < 0:
                    raise ValueError("t-polynomials have nonnegative exponents")
                c = as_rat(c)
                acc[k] = acc.get(k, Fraction(0)) + c
        self.terms = {k: c for k, c in sorted(acc.items()) if c != 0}

    @staticmethod
    def const(c):
        return PolyT({0: c})

    @property
    def degree(self):
        return max(self.terms) if self.terms else 0

    def coeff(self, k):
        return self.terms.get(k, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PolyT) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other):
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return PolyT(acc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyT({k: c * other for k, c in self.terms.items()})
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                acc[k1 + k2] = acc.get(k1 + k2, Fraction(0)) + c1 * c2
        return PolyT(acc)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = PolyT.const(1)
        for _ in range(n):
            out = out * self
        return out

    def at_neg_y(self) -> LaurentPoly:
        """Substitute t = -y, the only bridge between t and y."""
        return LaurentPoly({k: c if k % 2 == 0 else -c for k, c in self.terms.items()})

    def reversed_coeffs(self, degree: int) -> "PolyT":
        """t**degree * p(1/t), for palindromicity checks."""
        return PolyT({degree - k: c for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms.items():
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyT({self.terms!r})"


T_ONE = PolyT({0: 1})
T_MINUS_1 = PolyT({0: -1, 1: 1})


class ReversedInterval:
    """The interval [Q, Q'] of a face lattice with the order reversed.

    Minimum is Q', maximum is Q, and rank(E) = dim(Q') - dim(E).  This is
    the face poset of the polar face of Q inside the polar of Q', whose
    dimension is dim(Q') - 1 - dim(Q).  Q may be the empty face; that case
    only arises for the h-polynomial and inside the recursion.
    """

    def __init__(self, lattice: FaceLattice, q_id: int, qp_id: int):
        if not lattice.leq(q_id, qp_id):
            raise ValueError("lower face is not contained in upper face")
        if not lattice.ensure_eulerian():
            raise NonEulerianPoset("face lattice is not Eulerian")
        self.lattice = lattice
        self.q_id = q_id
        self.qp_id = qp_id
        self.elements = lattice.interval(q_id, qp_id)
        self._qp_dim = lattice.faces[qp_id].dim

    def leq(self, a: int, b: int) -> bool:
        return self.lattice.leq(b, a)

    def rank(self, e: int) -> int:
        return self._qp_dim - self.lattice.faces[e].dim

    @property
    def top_rank(self) -> int:
        return self.rank(self.q_id)

    def __len__(self):
        return len(self.elements)


def _g_cached(lattice: FaceLattice, q_id: int, qp_id: int) -> PolyT:
    key = (q_id, qp_id)
    if key not in lattice._g_memo:
        lattice._g_memo[key] = stanley_fg(ReversedInterval(lattice, q_id, qp_id))[1]
    return lattice._g_memo[key]


def stanley_fg(poset: ReversedInterval):
    """The f and g polynomials of an Eulerian poset.

    A single element gives f = g = 1.  Otherwise, with r + 1 the rank of
    the maximum, f(t) = sum over x strictly below the maximum of
    g([min, x]) * (t-1)**(r - rank(x)), and g truncates the difference
    sequence of f's coefficients at degree floor(r/2).
    """
    if len(poset) == 1:
        return T_ONE, T_ONE
    r = poset.top_rank - 1
    f = PolyT()
    for x in poset.elements:
        if x == poset.q_id:
            continue
        # [min, x] in the reversed order is the reversed interval [x, Q']
        gx = _g_cached(poset.lattice, x, poset.qp_id)
        f = f + gx * T_MINUS_1 ** (r - poset.rank(x))
    g_terms = {}
    prev = Fraction(0)
    for i in range(r // 2 + 1):
        ki = f.coeff(i)
        g_terms[i] = ki - prev
        prev = ki
    return f, PolyT(g_terms)


def polar_g(lattice: FaceLattice, q_id: int, qp_id: int) -> PolyT:
    """g of the reversed interval [Q, Q'], i.e. of the polar face of Q.

    Both faces must be nonempty and nested; results are memoized on the
    lattice, keyed by the pair of face ids.
    """
    if lattice.faces[q_id].dim < 0 or lattice.faces[qp_id].dim < 0:
        raise ValueError("polar g is defined for nonempty faces")
    if not lattice.leq(q_id, qp_id):
        raise ValueError("faces are not nested")
    return _g_cached(lattice, q_id, qp_id)


def g_weight_function(lattice: FaceLattice, qp_id: int) -> WeightFunction:
    """Weights g(reversed [Q, Q']) at t = -y on faces Q below Q', else 0."""
    if lattice.faces[qp_id].dim < 0:
        raise ValueError("weights are indexed by nonempty faces")
    values = {}
    for q in lattice.nonempty_ids:
        if lattice.leq(q, qp_id):
            values[q] = polar_g(lattice, q, qp_id).at_neg_y()
    return WeightFunction(lattice, values)


def h_polynomial(lattice: FaceLattice) -> PolyT:
    """f-polynomial of the fully reversed lattice [empty, P].

    This is the h-polynomial of the polar polytope's boundary; it must
    agree with the ell = 0 weighted count at y = -t computed downstream.
    """
    f, _ = stanley_fg(ReversedInterval(lattice, lattice.empty_id, lattice.top_id))
    return f
