"""Weighted counting and verifier tests.

Expected values were derived by hand before implementation: segment and
square interpolation systems, the three segment character sums, and the
character-sum duality case for the delta weight on the segment's edge
(both sides expand to -(1+y)y^-1 * (chi^0 + chi^(-1))).
"""

from fractions import Fraction

import pytest

import wehrhart.ehrhart as eh
from wehrhart.algebra import (
    CharacterSum,
    HomogPoly,
    LaurentPoly,
    ZPoly,
    neg_y_power,
    substitute_inverse,
    substitute_negative,
)
from wehrhart.corpus import build
from wehrhart.ehrhart import (
    PolynomialityError,
    apply_phi,
    constant_term,
    ehrhart_polynomial,
    hodge_character_sum,
    negate_characters,
    verify_duality_reciprocity,
    verify_hodge_duality,
    verify_purity,
    verify_reciprocity,
    weighted_ehrhart_value,
)
from wehrhart.stanley import g_weight_function, h_polynomial
from wehrhart.weights import all_ones, delta_weight, random_weight_functions


def L(d):
    return LaurentPoly(d)


def phi_one(n):
    return HomogPoly.one(n)


def phi_coord(n, i=0):
    exps = tuple(1 if j == i else 0 for j in range(n))
    return HomogPoly(n, [(exps, 1)])


class TestHodgeCharacterSum:
    def test_segment_positive(self):
        lat = build("segment")
        s = hodge_character_sum(lat, all_ones(lat), 1)
        assert s == CharacterSum(1, {(0,): L({0: 1}), (-1,): L({0: 1})})

    def test_segment_zero(self):
        lat = build("segment")
        s = hodge_character_sum(lat, all_ones(lat), 0)
        assert s == CharacterSum(1, {(0,): L({0: 1, 1: -1})})

    def test_segment_negative(self):
        lat = build("segment")
        s = hodge_character_sum(lat, all_ones(lat), -1)
        assert s == CharacterSum(1, {(0,): L({1: -1}), (1,): L({1: -1})})

    def test_lattice_mismatch(self):
        with pytest.raises(ValueError):
            hodge_character_sum(build("segment"), all_ones(build("square")), 1)


class TestNegateCharacters:
    def test_origin_fixed(self):
        s = CharacterSum(2, {(0, 0): L({0: 3})})
        assert negate_characters(s) == s

    def test_key_negation(self):
        s = CharacterSum(2, {(1, 2): L({0: 1})})
        assert negate_characters(s) == CharacterSum(2, {(-1, -2): L({0: 1})})

    def test_involution(self):
        s = CharacterSum(2, {(1, 2): L({1: 1}), (0, -3): L({-1: 2})})
        assert negate_characters(negate_characters(s)) == s


class TestApplyPhi:
    def test_degree_zero_variants_agree(self):
        s = CharacterSum(1, {(0,): L({0: 1}), (-2,): L({1: 3})})
        one = phi_one(1)
        assert apply_phi(s, one, "E") == apply_phi(s, one, "Etilde") == L({0: 1, 1: 3})

    def test_segment_linear(self):
        s = CharacterSum(1, {(0,): L({0: 1}), (-1,): L({0: 1})})
        phi = phi_coord(1)
        assert apply_phi(s, phi, "Etilde") == L({0: 1})
        assert apply_phi(s, phi, "E") == L({0: 1, 1: 1})

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            apply_phi(CharacterSum(1, {}), phi_one(2), "E")

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            apply_phi(CharacterSum(1, {}), phi_one(1), "X")


class TestWeightedValue:
    def test_segment_l2(self):
        lat = build("segment")
        v = weighted_ehrhart_value(lat, all_ones(lat), phi_one(1), 2, "Etilde")
        assert v == L({0: 3, 1: 1})

    def test_square_l3_y0(self):
        lat = build("square")
        v = weighted_ehrhart_value(lat, all_ones(lat), phi_one(2), 3, "Etilde")
        assert v.subs(0) == 16

    def test_segment_linear_l2(self):
        lat = build("segment")
        v = weighted_ehrhart_value(lat, all_ones(lat), phi_coord(1), 2, "Etilde")
        assert v == L({0: 3, 1: 1})

    def test_matches_character_route(self):
        # the direct face-sum formula must agree with apply_phi of the sum
        for name in ("segment", "square", "pyramid"):
            lat = build(name)
            n = lat.polytope.n
            weights = [all_ones(lat)] + random_weight_functions(lat, seed=31, count=2)
            phis = [phi_one(n), phi_coord(n), HomogPoly(n, [((2,) + (0,) * (n - 1), 1)])]
            for f in weights:
                for phi in phis:
                    for ell in (1, 2, 3):
                        direct = weighted_ehrhart_value(lat, f, phi, ell, "E")
                        via_sum = apply_phi(hodge_character_sum(lat, f, ell), phi, "E")
                        assert direct == via_sum

    def test_rejects_nonpositive(self):
        lat = build("segment")
        with pytest.raises(ValueError):
            weighted_ehrhart_value(lat, all_ones(lat), phi_one(1), 0, "E")


class TestEhrhartPolynomial:
    def test_segment_all_ones(self):
        lat = build("segment")
        zp = ehrhart_polynomial(lat, all_ones(lat), phi_one(1), "Etilde")
        assert zp == ZPoly([L({0: 1, 1: -1}), L({0: 1, 1: 1})])

    def test_square_all_ones(self):
        lat = build("square")
        zp = ehrhart_polynomial(lat, all_ones(lat), phi_one(2), "Etilde")
        assert zp == ZPoly(
            [L({0: 1, 1: -2, 2: 1}), L({0: 2, 2: -2}), L({0: 1, 1: 2, 2: 1})]
        )
        assert zp(4).subs(0) == 25

    def test_segment_linear_integrand(self):
        lat = build("segment")
        zp = ehrhart_polynomial(lat, all_ones(lat), phi_coord(1), "Etilde")
        half = Fraction(1, 2)
        assert zp == ZPoly(
            [L({}), L({0: half, 1: -half}), L({0: half, 1: half})]
        )

    def test_constant_term_closed_form(self):
        lat = build("square")
        f = all_ones(lat)
        zp = ehrhart_polynomial(lat, f, phi_one(2), "Etilde")
        assert zp(0) == constant_term(lat, f, phi_one(2), "Etilde")
        # 4 vertices + 4 edges (-1-y) + (-1-y)^2 = 1 - 2y + y^2
        assert zp(0) == L({0: 1, 1: -2, 2: 1})

    def test_positive_degree_vanishes_at_zero(self):
        lat = build("square")
        zp = ehrhart_polynomial(lat, all_ones(lat), phi_coord(2), "E")
        assert not zp(0)

    def test_overdetermination_guard_fires_on_non_polynomial(self, monkeypatch):
        lat = build("segment")
        real = eh.weighted_ehrhart_value

        def warped(lattice, f, phi, ell, variant):
            if ell >= 4:
                return real(lattice, f, phi, ell, variant) + L({0: 1})
            return real(lattice, f, phi, ell, variant)

        monkeypatch.setattr(eh, "weighted_ehrhart_value", warped)
        with pytest.raises(PolynomialityError):
            eh.ehrhart_polynomial(lat, all_ones(lat), phi_one(1), "Etilde")


class TestVerifyReciprocity:
    def test_segment_linear_frozen_form(self):
        # Etilde(-l, y) = -l + (1+y) l(l+1)/2, checked for l = 1..3
        lat = build("segment")
        f = all_ones(lat)
        phi = phi_coord(1)
        zp = ehrhart_polynomial(lat, f, phi, "Etilde")
        for ell in (1, 2, 3):
            expected = L({0: -ell}) + L({0: 1, 1: 1}) * Fraction(ell * (ell + 1), 2)
            assert zp(-ell) == expected
            check = verify_reciprocity(lat, f, phi, ell, "Etilde", zpoly=zp)
            assert check.passed

    def test_delta_top_is_classical(self):
        # |Relint(l P)| vs (-1)^n |l P| at y = 0
        lat = build("square")
        f = delta_weight(lat, lat.top_id)
        zp = ehrhart_polynomial(lat, f, phi_one(2), "Etilde")
        for ell in (1, 2, 3):
            check = verify_reciprocity(lat, f, phi_one(2), ell, "Etilde", zpoly=zp)
            assert check.passed
            assert zp(-ell).subs(0) == (ell + 1) ** 2  # (-1)^2 |lP|
            assert zp(ell).subs(0) == (ell - 1) ** 2

    def test_random_weights_pass(self):
        for name in ("square", "pyramid"):
            lat = build(name)
            n = lat.polytope.n
            for f in random_weight_functions(lat, seed=41, count=3):
                for variant in ("E", "Etilde"):
                    zp = ehrhart_polynomial(lat, f, phi_coord(n), variant)
                    for ell in (1, 2):
                        assert verify_reciprocity(
                            lat, f, phi_coord(n), ell, variant, zpoly=zp
                        ).passed


class TestVerifyDualityReciprocity:
    def test_pyramid_random(self):
        lat = build("pyramid")
        phi = HomogPoly(3, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)])
        for f in random_weight_functions(lat, seed=43, count=2):
            zp = ehrhart_polynomial(lat, f, phi, "E")
            for ell in (1, 2):
                assert verify_duality_reciprocity(lat, f, phi, ell, "E", zpoly=zp).passed

    def test_agrees_with_reciprocity(self):
        lat = build("square")
        f = random_weight_functions(lat, seed=47, count=1)[0]
        phi = phi_coord(2)
        for variant in ("E", "Etilde"):
            zp = ehrhart_polynomial(lat, f, phi, variant)
            for ell in (1, 2, 3):
                a = verify_reciprocity(lat, f, phi, ell, variant, zpoly=zp)
                b = verify_duality_reciprocity(lat, f, phi, ell, variant, zpoly=zp)
                assert a.passed and b.passed
                assert a.lhs == b.lhs

    def test_delta_weights_pass(self):
        lat = build("segment")
        for fid in lat.nonempty_ids:
            f = delta_weight(lat, fid)
            assert verify_duality_reciprocity(lat, f, phi_one(1), 1, "E").passed


class TestVerifyHodgeDuality:
    def test_segment_delta_edge_frozen(self):
        lat = build("segment")
        f = delta_weight(lat, lat.top_id)
        check = verify_hodge_duality(lat, f, 1)
        assert check.passed
        minus = L({-1: -1, 0: -1})  # -(1+y)/y
        assert check.lhs == CharacterSum(1, {(0,): minus, (-1,): minus})

    def test_square_all_ones(self):
        lat = build("square")
        for ell in (1, 2):
            assert verify_hodge_duality(lat, all_ones(lat), ell).passed

    def test_pyramid_g_weights_eigen_form(self):
        lat = build("pyramid")
        f = g_weight_function(lat, lat.top_id)
        check = verify_hodge_duality(lat, f, 1)
        assert check.passed
        expected = hodge_character_sum(lat, f, 1).scale(neg_y_power(-3))
        assert check.lhs == expected

    def test_random_weights(self):
        lat = build("square")
        for f in random_weight_functions(lat, seed=53, count=3):
            for ell in (1, 2):
                assert verify_hodge_duality(lat, f, ell).passed


class TestVerifyPurity:
    def test_pyramid_top(self):
        lat = build("pyramid")
        for ell in (1, 2, 3):
            assert verify_purity(lat, lat.top_id, phi_one(3), ell).passed

    def test_cube_facet_quadratic(self):
        lat = build("cube")
        facet = next(f.id for f in lat.faces if f.dim == 2)
        phi = HomogPoly(3, [((2, 0, 0), 1)])
        zp = None
        for ell in (1, 2):
            check = verify_purity(lat, facet, phi, ell, zpoly=zp)
            assert check.passed

    def test_empty_face_rejected(self):
        lat = build("cube")
        with pytest.raises(ValueError):
            verify_purity(lat, lat.empty_id, phi_one(3), 1)


class TestHLink:
    def test_h_equals_zero_dilation_count(self):
        # combinatorial h vs the weighted count at dilation 0 under y -> -y
        for name in ("segment", "square", "cube", "pyramid", "simplex3"):
            lat = build(name)
            n = lat.polytope.n
            f = g_weight_function(lat, lat.top_id)
            value = apply_phi(hodge_character_sum(lat, f, 0), phi_one(n), "Etilde")
            h = h_polynomial(lat)
            assert substitute_negative(value) == L(dict(h.terms)), name
