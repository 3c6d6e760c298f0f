"""Sign vectors, the glued complex, and the two identification rules."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realtoric import (
    ALL_SIGN_HOMS,
    GluingRule,
    IndexOutOfRange,
    NeighborhoodType,
    PolygonFanMismatch,
    SignHom,
    ToricDivisor,
    blow_up,
    build_real_complex,
    build_real_complex_from_polytope,
    complex_to_dot,
    complex_to_json,
    evaluate,
    find_ample,
    hirzebruch_fan,
    polygon_from_divisor,
    projective_plane_fan,
    random_fan,
    torus_point,
    translate_divisor,
    tubular_neighborhood,
)
from realtoric.moment import character, sign_profile

P2 = projective_plane_fan()


def connected(c):
    if c.num_vertices == 0:
        return True
    adjacency = {i: set() for i in range(c.num_vertices)}
    for tail, head in c.edges:
        adjacency[tail].add(head)
        adjacency[head].add(tail)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == c.num_vertices


class TestSignHom:
    def test_validation(self):
        with pytest.raises(ValueError):
            SignHom(0, 1)

    def test_string_form(self):
        assert [str(e) for e in ALL_SIGN_HOMS] == ["++", "+-", "-+", "--"]

    def test_evaluate_depends_on_parity_only(self):
        eps = SignHom(-1, 1)
        assert evaluate(eps, (2, 0)) == 1
        assert evaluate(eps, (3, 0)) == -1
        assert evaluate(eps, (-3, 4)) == -1
        assert evaluate(eps, (1, 1)) == -1

    def test_evaluate_on_axis_character(self):
        # value on (a, 1) alternates with a for the all-minus vector
        eps = SignHom(-1, -1)
        for a in range(6):
            assert evaluate(eps, (a, 1)) == (-1) ** (a + 1)

    def test_torus_point_signs(self):
        for eps in ALL_SIGN_HOMS:
            assert sign_profile(torus_point(eps)) == eps

    def test_torus_point_characters(self):
        for eps in ALL_SIGN_HOMS:
            t = torus_point(eps)
            for u in [(1, 0), (0, 1), (3, -2), (-1, -1), (2, 2)]:
                value = character(t, u)
                assert value == evaluate(eps, u)


@given(
    s1=st.sampled_from([1, -1]),
    s2=st.sampled_from([1, -1]),
    u=st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
    w=st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
)
@settings(max_examples=80, deadline=None)
def test_evaluate_is_a_homomorphism(s1, s2, u, w):
    eps = SignHom(s1, s2)
    total = (u[0] + w[0], u[1] + w[1])
    assert evaluate(eps, total) == evaluate(eps, u) * evaluate(eps, w)


class TestCombinatorialComplex:
    def test_cell_counts(self):
        for fan in [P2, hirzebruch_fan(0), random_fan(3, 5)]:
            c = build_real_complex(fan)
            assert c.num_vertices == fan.d
            assert len(c.edges) == 2 * fan.d
            assert len(c.faces) == 4

    def test_boundary_composition_vanishes(self):
        for seed in range(6):
            c = build_real_complex(random_fan(seed, 4))
            d1 = c.boundary_matrix_1()
            d2 = c.boundary_matrix_2()
            rows = len(d1)
            cols = len(d2[0])
            prod = [
                [sum(d1[i][k] * d2[k][j] for k in range(len(d2))) for j in range(cols)]
                for i in range(rows)
            ]
            assert all(x == 0 for row in prod for x in row)

    def test_each_edge_lies_on_two_faces(self):
        c = build_real_complex(hirzebruch_fan(3))
        uses = [0] * len(c.edges)
        for word in c.faces:
            for signed in word:
                uses[abs(signed) - 1] += 1
        assert uses == [2] * len(c.edges)

    def test_connected(self):
        for seed in range(5):
            assert connected(build_real_complex(random_fan(seed, 3)))

    def test_edge_endpoints(self):
        c = build_real_complex(P2)
        assert c.edges == ((2, 0), (2, 0), (0, 1), (0, 1), (1, 2), (1, 2))

    def test_face_words_traverse_every_ray_once(self):
        fan = random_fan(11, 4)
        c = build_real_complex(fan)
        for word in c.faces:
            assert len(word) == fan.d
            rays_hit = sorted((abs(s) - 1) // 2 for s in word)
            assert rays_hit == list(range(fan.d))


class TestPolytopeBuilders:
    def test_parallel_rule_matches_combinatorial_builder(self):
        for seed in range(6):
            fan = random_fan(seed, 3)
            reference = build_real_complex(fan)
            div = find_ample(fan)
            for candidate in [
                div,
                ToricDivisor(tuple(2 * b for b in div.coeffs)),
                translate_divisor(fan, div, (1, 1)),
                translate_divisor(fan, div, (-2, 3)),
            ]:
                poly = polygon_from_divisor(fan, candidate)
                built = build_real_complex_from_polytope(
                    fan, poly, GluingRule.PARALLEL_SUBGROUP
                )
                assert built == reference

    def test_affine_rule_underglues_the_triangle(self):
        poly = polygon_from_divisor(P2, ToricDivisor((1, 1, 1)))
        c = build_real_complex_from_polytope(P2, poly, GluingRule.AFFINE_SPAN)
        assert (c.num_vertices, len(c.edges), len(c.faces)) == (6, 12, 4)

    def test_affine_rule_depends_on_polygon_position(self):
        fan = hirzebruch_fan(0)
        unit = polygon_from_divisor(fan, ToricDivisor((0, 0, 1, 1)))
        symmetric = polygon_from_divisor(fan, ToricDivisor((1, 1, 1, 1)))
        a_unit = build_real_complex_from_polytope(fan, unit, GluingRule.AFFINE_SPAN)
        a_sym = build_real_complex_from_polytope(
            fan, symmetric, GluingRule.AFFINE_SPAN
        )
        assert a_unit != a_sym
        assert (a_unit.num_vertices, len(a_unit.edges)) == (7, 12)
        assert (a_sym.num_vertices, len(a_sym.edges)) == (8, 16)

    def test_affine_rule_not_translation_invariant(self):
        fan = hirzebruch_fan(0)
        div = ToricDivisor((1, 1, 1, 1))
        moved = translate_divisor(fan, div, (1, 1))
        a = build_real_complex_from_polytope(
            fan, polygon_from_divisor(fan, div), GluingRule.AFFINE_SPAN
        )
        b = build_real_complex_from_polytope(
            fan, polygon_from_divisor(fan, moved), GluingRule.AFFINE_SPAN
        )
        assert a != b

    def test_affine_rule_invariant_under_even_translation(self):
        fan = hirzebruch_fan(0)
        div = ToricDivisor((1, 1, 1, 1))
        moved = translate_divisor(fan, div, (2, -4))
        a = build_real_complex_from_polytope(
            fan, polygon_from_divisor(fan, div), GluingRule.AFFINE_SPAN
        )
        b = build_real_complex_from_polytope(
            fan, polygon_from_divisor(fan, moved), GluingRule.AFFINE_SPAN
        )
        assert a == b

    def test_fan_mismatch_rejected(self):
        poly = polygon_from_divisor(P2, ToricDivisor((1, 1, 1)))
        with pytest.raises(PolygonFanMismatch):
            build_real_complex_from_polytope(
                hirzebruch_fan(0), poly, GluingRule.PARALLEL_SUBGROUP
            )


class TestTubularNeighborhood:
    def test_odd_parameter_gives_twisted_strips(self):
        fan = hirzebruch_fan(1)
        kinds = [tubular_neighborhood(fan, i) for i in range(4)]
        assert kinds == [
            NeighborhoodType.CYLINDER,
            NeighborhoodType.MOEBIUS_BAND,
            NeighborhoodType.CYLINDER,
            NeighborhoodType.MOEBIUS_BAND,
        ]

    def test_plane_is_fully_twisted(self):
        assert all(
            tubular_neighborhood(P2, i) is NeighborhoodType.MOEBIUS_BAND
            for i in range(3)
        )

    def test_even_parameter_gives_cylinders(self):
        fan = hirzebruch_fan(2)
        assert all(
            tubular_neighborhood(fan, i) is NeighborhoodType.CYLINDER
            for i in range(4)
        )

    def test_index_checked(self):
        with pytest.raises(IndexOutOfRange):
            tubular_neighborhood(P2, 3)


class TestExport:
    def test_json_shape(self):
        c = build_real_complex(P2)
        obj = complex_to_json(c)
        assert obj["vertices"] == 3
        assert obj["edges"] == [[2, 0], [2, 0], [0, 1], [0, 1], [1, 2], [1, 2]]
        assert len(obj["faces"]) == 4
        assert all(
            isinstance(s, int) and s != 0 and abs(s) <= 6
            for word in obj["faces"]
            for s in word
        )

    def test_dot_output(self):
        text = complex_to_dot(build_real_complex(blow_up(P2, 1)))
        assert text.startswith("digraph")
        assert '"(0,+)"' in text and '"(3,-)"' in text
        assert text.count("->") == 8
