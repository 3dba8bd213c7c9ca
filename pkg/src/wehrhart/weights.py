"""Weight functions on the nonempty faces of a fixed lattice.

A free module over Laurent polynomials in y, with the delta basis, the
duality involution D, and seeded random generation for property tests.

D(f)_Q(y) = sum over nonempty faces E above Q of
            (1+y)^(dim E - dim Q) * (-y)^(-dim E) * f_E(1/y).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import (
    LaurentPoly,
    ONE_PLUS_Y,
    neg_y_power,
    substitute_inverse,
)
from .polytope import FaceLattice


class LatticeMismatch(ValueError):
    """Weight functions on different lattices cannot be combined."""


class WeightFunction:
    """Map from nonempty face ids to LaurentPoly; absent means zero."""

    __slots__ = ("lattice", "values")

    def __init__(self, lattice: FaceLattice, values=None):
        vals = {}
        for fid, p in (values or {}).items():
            fid = int(fid)
            if fid < 0 or fid >= len(lattice.faces):
                raise ValueError(f"no face with id {fid}")
            if lattice.faces[fid].dim < 0:
                raise ValueError("weights live on nonempty faces")
            if p:
                vals[fid] = p
        self.lattice = lattice
        self.values = dict(sorted(vals.items()))

    def __getitem__(self, fid: int) -> LaurentPoly:
        return self.values.get(fid, LaurentPoly())

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, WeightFunction)
            and self.lattice is other.lattice
            and self.values == other.values
        )

    def __repr__(self):
        inner = ", ".join(f"{fid}: {p}" for fid, p in self.values.items())
        return f"WeightFunction({{{inner}}})"


def delta_weight(lattice: FaceLattice, qp_id: int) -> WeightFunction:
    """Value 1 at the given nonempty face, zero elsewhere."""
    if lattice.faces[qp_id].dim < 0:
        raise ValueError("delta weight needs a nonempty face")
    return WeightFunction(lattice, {qp_id: LaurentPoly.const(1)})


def all_ones(lattice: FaceLattice) -> WeightFunction:
    """Weight 1 on every nonempty face."""
    one = LaurentPoly.const(1)
    return WeightFunction(lattice, {fid: one for fid in lattice.nonempty_ids})


def scale(p: LaurentPoly, f: WeightFunction) -> WeightFunction:
    return WeightFunction(f.lattice, {fid: p * q for fid, q in f.values.items()})


def add(f: WeightFunction, g: WeightFunction) -> WeightFunction:
    if f.lattice is not g.lattice:
        raise LatticeMismatch("weight functions live on different lattices")
    acc = dict(f.values)
    for fid, p in g.values.items():
        acc[fid] = acc.get(fid, LaurentPoly()) + p
    return WeightFunction(f.lattice, acc)


def dualize(f: WeightFunction) -> WeightFunction:
    """The duality involution, summed over nonempty faces above each Q."""
    L = f.lattice
    out = {}
    for q in L.nonempty_ids:
        dim_q = L.faces[q].dim
        acc = LaurentPoly()
        for e, fe in f.values.items():
            if not L.leq(q, e):
                continue
            dim_e = L.faces[e].dim
            term = substitute_inverse(fe) * ONE_PLUS_Y ** (dim_e - dim_q)
            acc = acc + term * neg_y_power(-dim_e)
        if acc:
            out[q] = acc
    return WeightFunction(L, out)


def random_laurent(rng: random.Random) -> LaurentPoly:
    """Coefficients uniform in {-3..3} on exponents -2..2."""
    return LaurentPoly({k: Fraction(rng.randint(-3, 3)) for k in range(-2, 3)})


def random_weight_function(lattice: FaceLattice, rng: random.Random) -> WeightFunction:
    """Each nonempty face gets a random_laurent with probability 1/2."""
    vals = {}
    for fid in lattice.nonempty_ids:
        if rng.random() < 0.5:
            p = random_laurent(rng)
            if p:
                vals[fid] = p
    return WeightFunction(lattice, vals)


def random_weight_functions(lattice: FaceLattice, seed: int, count: int):
    """Reproducible list of random weight functions from one seeded stream."""
    rng = random.Random(seed)
    return [random_weight_function(lattice, rng) for _ in range(count)]
