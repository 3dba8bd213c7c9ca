"""Weighted lattice-point counting and the identity verifiers.

Character sums at positive, zero, and negative dilations, weighted count
values E/Etilde, exact interpolation to the polynomial in z (with
mandatory overdetermination), and pass/fail verifiers for reciprocity,
reciprocity-for-duality, character-sum duality, and purity.

Values at negative dilations are always read off the interpolated
polynomial, never from a second formula, so the verifiers genuinely
cross-validate two computation routes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    CharacterSum,
    HomogPoly,
    LaurentPoly,
    NEG_ONE_MINUS_Y,
    ONE_PLUS_Y,
    ZPoly,
    lagrange_interpolate,
    neg_y_power,
    phi_eval,
    substitute_inverse,
)
from .polytope import FaceLattice, points_by_face
from .stanley import g_weight_function
from .weights import WeightFunction, dualize

VARIANT_E = "E"
VARIANT_ETILDE = "Etilde"
_VARIANTS = (VARIANT_E, VARIANT_ETILDE)


def _check_variant(variant):
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")


def _check_lattice(lattice, f):
    if f.lattice is not lattice:
        raise ValueError("weight function belongs to a different lattice")


def hodge_character_sum(lattice: FaceLattice, f: WeightFunction, ell: int) -> CharacterSum:
    """The equivariant character sum of the weighted divisor at dilation ell.

    ell > 0:  sum_Q f_Q(y) (1+y)^dim Q  sum over Relint(ell Q) of chi^(-m)
    ell < 0:  sum_Q f_Q(y) (-1-y)^dim Q sum over |ell| Q closed of chi^(+m)
    ell = 0:  (sum_Q f_Q(y) (-1-y)^dim Q) * chi^0
    """
    _check_lattice(lattice, f)
    n = lattice.polytope.n
    if ell == 0:
        total = LaurentPoly()
        for q, fq in f.values.items():
            total = total + fq * NEG_ONE_MINUS_Y ** lattice.faces[q].dim
        return CharacterSum(n, {(0,) * n: total})
    terms = {}
    if ell > 0:
        relint = points_by_face(lattice, ell)
        for q, fq in f.values.items():
            coeff = fq * ONE_PLUS_Y ** lattice.faces[q].dim
            for m in relint[q]:
                key = tuple(-x for x in m)
                terms[key] = terms.get(key, LaurentPoly()) + coeff
    else:
        relint = points_by_face(lattice, -ell)
        for q, fq in f.values.items():
            coeff = fq * NEG_ONE_MINUS_Y ** lattice.faces[q].dim
            for e in lattice.subfaces(q):
                for m in relint[e]:
                    terms[m] = terms.get(m, LaurentPoly()) + coeff
    return CharacterSum(n, terms)


def negate_characters(s: CharacterSum) -> CharacterSum:
    """The involution m -> -m on character keys."""
    return CharacterSum(s.n, {tuple(-x for x in m): p for m, p in s.terms.items()})


def apply_phi(s: CharacterSum, phi: HomogPoly, variant: str) -> LaurentPoly:
    """Push a character sum to a Laurent polynomial through the integrand.

    Etilde sends chi^m to phi(-m); E sends chi^m to phi(-(1+y)m), which by
    homogeneity is (1+y)^deg phi * phi(-m).
    """
    _check_variant(variant)
    if s.n != phi.n:
        raise ValueError("character sum and integrand dimensions differ")
    acc = LaurentPoly()
    for m, p in s.terms.items():
        v = phi_eval(phi, tuple(-x for x in m))
        if v:
            acc = acc + p * v
    if variant == VARIANT_E:
        acc = acc * ONE_PLUS_Y**phi.degree
    return acc


def _phi_face_sums(lattice, phi, ell):
    """sum of phi over Relint(ell Q) for every nonempty Q, memoized."""
    key = (phi, ell)
    if key not in lattice._phi_sums:
        relint = points_by_face(lattice, ell)
        lattice._phi_sums[key] = {
            q: sum((phi_eval(phi, m) for m in pts), start=0)
            for q, pts in relint.items()
        }
    return lattice._phi_sums[key]


def _phi_closed_sum(lattice, phi, q, ell):
    """sum of phi over the closed face ell*Q: union of subface interiors."""
    sums = _phi_face_sums(lattice, phi, ell)
    return sum(sums[e] for e in lattice.subfaces(q))


def weighted_ehrhart_value(
    lattice: FaceLattice,
    f: WeightFunction,
    phi: HomogPoly,
    ell: int,
    variant: str,
) -> LaurentPoly:
    """The weighted count at a positive dilation.

    Equal to apply_phi(hodge_character_sum(lattice, f, ell), phi, variant);
    computed from per-face integrand sums, which are memoized.
    """
    _check_variant(variant)
    _check_lattice(lattice, f)
    if ell < 1:
        raise ValueError("dilation must be a positive integer")
    if phi.n != lattice.polytope.n:
        raise ValueError("integrand dimension differs from the polytope's")
    sums = _phi_face_sums(lattice, phi, ell)
    acc = LaurentPoly()
    for q, fq in f.values.items():
        s = sums[q]
        if s:
            acc = acc + fq * ONE_PLUS_Y ** lattice.faces[q].dim * s
    if variant == VARIANT_E:
        acc = acc * ONE_PLUS_Y**phi.degree
    return acc


def constant_term(lattice, f, phi, variant) -> LaurentPoly:
    """Closed form for the value at dilation 0.

    sum_Q f_Q(y) (-1-y)^(dim Q + deg phi) * phi(0) for E; the Etilde form
    drops the deg phi exponent shift.  Nonzero only for deg phi = 0.
    """
    _check_variant(variant)
    _check_lattice(lattice, f)
    phi0 = phi_eval(phi, (0,) * phi.n)
    if not phi0:
        return LaurentPoly()
    shift = phi.degree if variant == VARIANT_E else 0
    acc = LaurentPoly()
    for q, fq in f.values.items():
        acc = acc + fq * NEG_ONE_MINUS_Y ** (lattice.faces[q].dim + shift)
    return acc * phi0


class PolynomialityError(ArithmeticError):
    """Interpolated values failed an overdetermination or constant-term check.

    Polynomiality in the dilation is a theorem, so this always signals an
    implementation bug and is surfaced loudly rather than reported.
    """


def ehrhart_polynomial(
    lattice: FaceLattice,
    f: WeightFunction,
    phi: HomogPoly,
    variant: str,
) -> ZPoly:
    """Interpolate the weighted count to its polynomial in the dilation z.

    Nodes are 1 .. n + deg phi + 1 with degree bound n + deg phi; two
    extra samples and the closed-form constant term are then checked
    exactly, and any mismatch raises PolynomialityError.
    """
    _check_variant(variant)
    n = lattice.polytope.n
    bound = n + phi.degree
    samples = [
        (ell, weighted_ehrhart_value(lattice, f, phi, ell, variant))
        for ell in range(1, bound + 2)
    ]
    zp = lagrange_interpolate(samples, bound)
    for ell in (bound + 2, bound + 3):
        direct = weighted_ehrhart_value(lattice, f, phi, ell, variant)
        if zp(ell) != direct:
            raise PolynomialityError(
                f"overdetermination failed at dilation {ell}: "
                f"interpolated {zp(ell)}, direct {direct}"
            )
    expected0 = constant_term(lattice, f, phi, variant)
    if zp(0) != expected0:
        raise PolynomialityError(
            f"constant term mismatch: interpolated {zp(0)}, closed form {expected0}"
        )
    return zp


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check, with both sides kept for reporting."""

    name: str
    params: dict
    passed: bool
    lhs: object
    rhs: object

    def render(self):
        return {
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "passed": self.passed,
            "lhs": render_value(self.lhs),
            "rhs": render_value(self.rhs),
        }


def render_value(v) -> str:
    if isinstance(v, CharacterSum):
        inner = "; ".join(f"chi^{list(m)}: {p}" for m, p in v.terms.items())
        return f"{{{inner}}}" if inner else "{}"
    return str(v)


@dataclass
class EhrhartReport:
    """Checks for one (polytope, weight, integrand) combination."""

    polytope: str
    weight: str
    phi: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: CheckResult):
        self.checks.append(check)

    def render(self):
        return {
            "polytope": self.polytope,
            "weight": self.weight,
            "phi": self.phi,
            "passed": self.passed,
            "checks": [c.render() for c in self.checks],
        }


def verify_reciprocity(
    lattice, f, phi, ell: int, variant: str = VARIANT_E, zpoly: ZPoly | None = None
) -> CheckResult:
    """Value at -ell from the polynomial vs the closed-face enumeration.

    E variant:  E(-ell, y) = sum_Q f_Q (-1-y)^(dim Q + deg phi) * sum over
    ell*Q closed of phi(m); Etilde replaces the exponent shift with a
    global (-1)^deg phi.
    """
    if ell < 1:
        raise ValueError("dilation must be a positive integer")
    if zpoly is None:
        zpoly = ehrhart_polynomial(lattice, f, phi, variant)
    lhs = zpoly(-ell)
    rhs = LaurentPoly()
    for q, fq in f.values.items():
        s = _phi_closed_sum(lattice, phi, q, ell)
        if not s:
            continue
        dim_q = lattice.faces[q].dim
        if variant == VARIANT_E:
            rhs = rhs + fq * NEG_ONE_MINUS_Y ** (dim_q + phi.degree) * s
        else:
            rhs = rhs + fq * NEG_ONE_MINUS_Y**dim_q * ((-1) ** phi.degree * s)
    return CheckResult(
        name="reciprocity",
        params={"ell": ell, "variant": variant},
        passed=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
    )


def verify_duality_reciprocity(
    lattice, f, phi, ell: int, variant: str = VARIANT_E, zpoly: ZPoly | None = None
) -> CheckResult:
    """Value at -ell vs the dualized weights at +ell with y inverted.

    E variant carries the factor (-y)^deg phi; Etilde carries (-1)^deg phi.
    """
    if ell < 1:
        raise ValueError("dilation must be a positive integer")
    if zpoly is None:
        zpoly = ehrhart_polynomial(lattice, f, phi, variant)
    lhs = zpoly(-ell)
    dual_value = weighted_ehrhart_value(lattice, dualize(f), phi, ell, variant)
    rhs = substitute_inverse(dual_value)
    if variant == VARIANT_E:
        rhs = rhs * neg_y_power(phi.degree)
    else:
        rhs = rhs * ((-1) ** phi.degree)
    return CheckResult(
        name="duality_reciprocity",
        params={"ell": ell, "variant": variant},
        passed=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
    )


def verify_hodge_duality(lattice, f, ell: int) -> CheckResult:
    """Character sum of the dual weights vs the inverted, negated sum at -ell."""
    if ell < 1:
        raise ValueError("dilation must be a positive integer")
    lhs = hodge_character_sum(lattice, dualize(f), ell)
    rhs = negate_characters(
        hodge_character_sum(lattice, f, -ell).map_values(substitute_inverse)
    )
    return CheckResult(
        name="hodge_duality",
        params={"ell": ell},
        passed=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
    )


def verify_purity(lattice, qprime_id: int, phi, ell: int, zpoly: ZPoly | None = None) -> CheckResult:
    """With the g-weights of a face: E(-ell, y) = (-y)^(n'+deg phi) E(ell, 1/y)."""
    if ell < 1:
        raise ValueError("dilation must be a positive integer")
    if lattice.faces[qprime_id].dim < 0:
        raise ValueError("purity needs a nonempty face")
    f = g_weight_function(lattice, qprime_id)
    if zpoly is None:
        zpoly = ehrhart_polynomial(lattice, f, phi, VARIANT_E)
    lhs = zpoly(-ell)
    value = weighted_ehrhart_value(lattice, f, phi, ell, VARIANT_E)
    nprime = lattice.faces[qprime_id].dim
    rhs = substitute_inverse(value) * neg_y_power(nprime + phi.degree)
    return CheckResult(
        name="purity",
        params={"ell": ell, "face": qprime_id},
        passed=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
    )
