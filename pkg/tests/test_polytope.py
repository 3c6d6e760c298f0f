"""Divisors, ampleness, polygons, and Pick's theorem as a cross-check."""

from math import gcd

import pytest

from realtoric import (
    LengthMismatch,
    NotAmple,
    ToricDivisor,
    blow_up,
    divisor_from_json,
    divisor_to_json,
    find_ample,
    hirzebruch_fan,
    intersection_numbers,
    is_ample,
    lattice_points,
    polygon_from_divisor,
    polygon_to_json,
    projective_plane_fan,
    random_fan,
    translate_divisor,
)
from realtoric.errors import InvalidInput

P2 = projective_plane_fan()


def shoelace_double_area(vertices):
    total = 0
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total


def boundary_point_count(vertices):
    n = len(vertices)
    total = 0
    for i in range(n):
        dx = vertices[(i + 1) % n][0] - vertices[i][0]
        dy = vertices[(i + 1) % n][1] - vertices[i][1]
        total += gcd(abs(dx), abs(dy))
    return total


class TestIntersectionNumbers:
    def test_plane_unit_divisor(self):
        assert intersection_numbers(P2, ToricDivisor((1, 1, 1))) == (3, 3, 3)

    def test_four_ray_fan(self):
        fan = hirzebruch_fan(2)
        assert intersection_numbers(fan, ToricDivisor((3, 1, 3, 1))) == (2, 4, 2, 8)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            intersection_numbers(P2, ToricDivisor((1, 1)))

    def test_not_ample_when_a_degree_vanishes(self):
        fan = hirzebruch_fan(2)
        assert not is_ample(fan, ToricDivisor((1, 1, 1, 1)))

    def test_ample_examples(self):
        assert is_ample(P2, ToricDivisor((1, 1, 1)))
        assert not is_ample(P2, ToricDivisor((0, 0, 0)))


class TestFindAmple:
    def test_plane(self):
        assert find_ample(P2).coeffs == (1, 1, 1)

    @pytest.mark.parametrize("a", range(5))
    def test_four_ray_fans(self, a):
        fan = hirzebruch_fan(a)
        div = find_ample(fan)
        assert is_ample(fan, div)

    def test_blown_up_plane_coefficients(self):
        fan = blow_up(P2, 0)
        div = find_ample(fan)
        assert div.coeffs == (2, 3, 2, 2)
        assert intersection_numbers(fan, div) == (5, 1, 5, 6)

    def test_random_fans(self):
        for seed in range(15):
            fan = random_fan(seed, seed % 6)
            assert is_ample(fan, find_ample(fan))


class TestPolygon:
    def test_plane_triangle(self):
        poly = polygon_from_divisor(P2, ToricDivisor((1, 1, 1)))
        assert poly.vertices == ((-1, -1), (2, -1), (-1, 2))
        assert len(lattice_points(poly)) == 10

    def test_square(self):
        fan = hirzebruch_fan(0)
        poly = polygon_from_divisor(fan, ToricDivisor((1, 1, 1, 1)))
        assert set(poly.vertices) == {(1, 1), (-1, 1), (-1, -1), (1, -1)}
        assert len(lattice_points(poly)) == 9

    def test_trapezoid_point_count(self):
        fan = hirzebruch_fan(2)
        poly = polygon_from_divisor(fan, find_ample(fan))
        assert len(lattice_points(poly)) == 21

    def test_rejects_non_ample(self):
        with pytest.raises(NotAmple):
            polygon_from_divisor(P2, ToricDivisor((0, 0, 0)))
        with pytest.raises(NotAmple):
            polygon_from_divisor(hirzebruch_fan(2), ToricDivisor((1, 1, 1, 1)))

    def test_vertices_satisfy_all_inequalities(self):
        for seed in range(8):
            fan = random_fan(seed, 3)
            div = find_ample(fan)
            poly = polygon_from_divisor(fan, div)
            for x, y in poly.vertices:
                for v, b in zip(fan.rays, div.coeffs):
                    assert x * v[0] + y * v[1] >= -b

    def test_counterclockwise_vertices(self):
        for seed in range(8):
            fan = random_fan(seed, 2)
            poly = polygon_from_divisor(fan, find_ample(fan))
            assert shoelace_double_area(poly.vertices) > 0

    def test_lattice_points_sorted_and_inside(self):
        poly = polygon_from_divisor(P2, ToricDivisor((2, 2, 2)))
        pts = lattice_points(poly)
        assert pts == sorted(pts)
        assert set(poly.vertices) <= set(pts)


class TestPick:
    def assert_pick(self, fan, div):
        poly = polygon_from_divisor(fan, div)
        double_area = shoelace_double_area(poly.vertices)
        boundary = boundary_point_count(poly.vertices)
        total = len(lattice_points(poly))
        # Pick: area = interior + boundary/2 - 1
        assert double_area == 2 * total - boundary - 2

    def test_canonical_fans(self):
        self.assert_pick(P2, ToricDivisor((1, 1, 1)))
        self.assert_pick(P2, ToricDivisor((3, 1, 2)))
        for a in range(5):
            fan = hirzebruch_fan(a)
            self.assert_pick(fan, find_ample(fan))

    def test_random_fans_with_translations(self):
        for seed in range(10):
            fan = random_fan(seed, 2)
            div = find_ample(fan)
            self.assert_pick(fan, div)
            self.assert_pick(fan, translate_divisor(fan, div, (1, -2)))


class TestTranslation:
    def test_polygon_shifts_opposite_to_character(self):
        div = ToricDivisor((1, 1, 1))
        before = polygon_from_divisor(P2, div)
        u = (2, -1)
        after = polygon_from_divisor(P2, translate_divisor(P2, div, u))
        assert after.vertices == tuple(
            (x - u[0], y - u[1]) for x, y in before.vertices
        )

    def test_intersection_numbers_unchanged(self):
        for seed in range(8):
            fan = random_fan(seed, 3)
            div = find_ample(fan)
            moved = translate_divisor(fan, div, (seed - 3, 2 * seed - 5))
            assert intersection_numbers(fan, moved) == intersection_numbers(fan, div)


class TestJson:
    def test_divisor_round_trip(self):
        div = ToricDivisor((3, 1, 3, 1))
        assert divisor_from_json(divisor_to_json(div)) == div

    def test_divisor_rejects_bad_shapes(self):
        with pytest.raises(InvalidInput):
            divisor_from_json({"coeffs": [1, "2"]})
        with pytest.raises(InvalidInput):
            divisor_from_json([1, 2])

    def test_polygon_json_fields(self):
        poly = polygon_from_divisor(P2, ToricDivisor((1, 1, 1)))
        obj = polygon_to_json(poly)
        assert obj == {
            "vertices": [[-1, -1], [2, -1], [-1, 2]],
            "offsets": [1, 1, 1],
        }
