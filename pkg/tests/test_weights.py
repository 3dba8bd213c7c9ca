"""Weight module tests.

The segment dualize example was expanded by hand from the involution's
defining sum and frozen; the eigen-relation cases use the g-weight
construction as their independent second route.
"""

import random

import pytest

from wehrhart.algebra import LaurentPoly, neg_y_power, substitute_inverse
from wehrhart.corpus import CORPUS, build
from wehrhart.stanley import g_weight_function
from wehrhart.weights import (
    LatticeMismatch,
    WeightFunction,
    add,
    all_ones,
    delta_weight,
    dualize,
    random_weight_functions,
    scale,
)


def L(d):
    return LaurentPoly(d)


class TestConstruction:
    def test_zero_values_dropped(self):
        lat = build("segment")
        f = WeightFunction(lat, {lat.top_id: L({})})
        assert not f

    def test_empty_face_rejected(self):
        lat = build("segment")
        with pytest.raises(ValueError):
            WeightFunction(lat, {lat.empty_id: L({0: 1})})

    def test_unknown_face_rejected(self):
        lat = build("segment")
        with pytest.raises(ValueError):
            WeightFunction(lat, {99: L({0: 1})})

    def test_missing_is_zero(self):
        lat = build("segment")
        f = delta_weight(lat, lat.top_id)
        v0 = lat.vertex_face_id(0)
        assert f[v0] == L({})


class TestDeltaAndModuleOps:
    def test_delta_on_top(self):
        lat = build("segment")
        f = delta_weight(lat, lat.top_id)
        assert f.values == {lat.top_id: L({0: 1})}

    def test_delta_on_vertex(self):
        lat = build("segment")
        v0 = lat.vertex_face_id(lat.polytope.vertices.index((0,)))
        f = delta_weight(lat, v0)
        assert f.values == {v0: L({0: 1})}

    def test_delta_rejects_empty(self):
        lat = build("segment")
        with pytest.raises(ValueError):
            delta_weight(lat, lat.empty_id)

    def test_delta_basis_spans(self):
        lat = build("square")
        f = random_weight_functions(lat, seed=5, count=1)[0]
        rebuilt = WeightFunction(lat, {})
        for fid, p in f.values.items():
            rebuilt = add(rebuilt, scale(p, delta_weight(lat, fid)))
        assert rebuilt == f

    def test_scale_zero(self):
        lat = build("square")
        f = all_ones(lat)
        assert not scale(L({}), f)

    def test_add_inverse(self):
        lat = build("square")
        f = random_weight_functions(lat, seed=9, count=1)[0]
        assert not add(f, scale(L({0: -1}), f))

    def test_scale_y_on_delta(self):
        lat = build("square")
        f = scale(L({1: 1}), delta_weight(lat, lat.top_id))
        assert f[lat.top_id] == L({1: 1})

    def test_lattice_mismatch(self):
        with pytest.raises(LatticeMismatch):
            add(all_ones(build("square")), all_ones(build("segment")))


class TestDualize:
    def test_segment_delta_edge_frozen(self):
        lat = build("segment")
        f = delta_weight(lat, lat.top_id)
        d = dualize(f)
        v0 = lat.vertex_face_id(lat.polytope.vertices.index((0,)))
        v1 = lat.vertex_face_id(lat.polytope.vertices.index((1,)))
        # hand expansion: edge -> -y^-1, both vertices -> -(1+y)y^-1
        assert d[lat.top_id] == L({-1: -1})
        assert d[v0] == L({-1: -1, 0: -1})
        assert d[v1] == L({-1: -1, 0: -1})
        assert set(d.values) == {lat.top_id, v0, v1}

    def test_delta_general_formula(self):
        lat = build("pyramid")
        some_edge = next(f.id for f in lat.faces if f.dim == 1)
        d = dualize(delta_weight(lat, some_edge))
        dim_qp = lat.faces[some_edge].dim
        one_plus_y = L({0: 1, 1: 1})
        for q in lat.nonempty_ids:
            expected = L({})
            if lat.leq(q, some_edge):
                expected = one_plus_y ** (dim_qp - lat.faces[q].dim) * neg_y_power(
                    -dim_qp
                )
            assert d[q] == expected

    def test_involution_on_seeded_weights(self):
        for name in ("segment", "square", "pyramid"):
            lat = build(name)
            for f in random_weight_functions(lat, seed=11, count=10):
                assert dualize(dualize(f)) == f

    def test_module_property(self):
        lat = build("square")
        rng = random.Random(13)
        from wehrhart.weights import random_laurent, random_weight_function

        for _ in range(10):
            p = random_laurent(rng)
            f = random_weight_function(lat, rng)
            assert dualize(scale(p, f)) == scale(substitute_inverse(p), dualize(f))

    def test_g_eigen_relation(self):
        # dual of the g-weights of Q' is (-y)^(-dim Q') times itself
        for name in ("segment", "square", "pyramid", "cube"):
            lat = build(name)
            for qp in lat.nonempty_ids:
                f = g_weight_function(lat, qp)
                expected = scale(neg_y_power(-lat.faces[qp].dim), f)
                assert dualize(f) == expected, (name, qp)


class TestRandomWeights:
    def test_reproducible(self):
        lat = build("square")
        a = random_weight_functions(lat, seed=21, count=5)
        b = random_weight_functions(lat, seed=21, count=5)
        assert a == b

    def test_seed_changes_stream(self):
        lat = build("square")
        a = random_weight_functions(lat, seed=21, count=5)
        b = random_weight_functions(lat, seed=22, count=5)
        assert a != b

    def test_coefficient_and_exponent_ranges(self):
        lat = build("cube")
        for f in random_weight_functions(lat, seed=3, count=20):
            for p in f.values.values():
                assert all(-2 <= k <= 2 for k in p.terms)
                assert all(-3 <= c <= 3 for c in p.terms.values())
