"""Divisors on a fan and the lattice polygons cut out by ample ones.

A divisor is a coefficient per ray, ``b[i]`` on ray ``v[i]``. Its degree
against the ray divisors is ``b[i-1] + b[i+1] + a[i] * b[i]`` where ``a``
is the self-intersection sequence; ample means every such degree is
positive. An ample divisor cuts out the polygon

    P = { u : <u, v[i]> >= -b[i] for all i },

whose vertex between rays ``i`` and ``i+1`` is the exact integer solution
of the two incident equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInput, LengthMismatch, NotAmple
from .fan import Fan, Vec, blow_up, minimal_model, self_intersections

__all__ = [
    "ToricDivisor",
    "LatticePolygon",
    "intersection_numbers",
    "is_ample",
    "find_ample",
    "polygon_from_divisor",
    "lattice_points",
    "translate_divisor",
    "divisor_to_json",
    "divisor_from_json",
    "polygon_to_json",
]


@dataclass(frozen=True)
class ToricDivisor:
    """Integer coefficients, one per ray, in the fan's canonical ray order."""

    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class LatticePolygon:
    """Polygon of an ample divisor: defining offsets plus integer vertices.

    ``vertices[i]`` lies on the boundary lines of rays ``i`` and ``i+1``,
    so consecutive vertices run counterclockwise and ``offsets`` has the
    same length.
    """

    fan: Fan
    offsets: tuple[int, ...]
    vertices: tuple[Vec, ...]


def _check_length(fan: Fan, div: ToricDivisor) -> None:
    if len(div.coeffs) != fan.d:
        raise LengthMismatch(
            f"divisor has {len(div.coeffs)} coefficients for {fan.d} rays"
        )


def intersection_numbers(fan: Fan, div: ToricDivisor) -> tuple[int, ...]:
    """Degree of the divisor against each ray divisor, exactly."""
    _check_length(fan, div)
    b = div.coeffs
    a = self_intersections(fan)
    d = fan.d
    return tuple(b[i - 1] + b[(i + 1) % d] + a[i] * b[i] for i in range(d))


def is_ample(fan: Fan, div: ToricDivisor) -> bool:
    """True when every intersection number is strictly positive."""
    return all(x > 0 for x in intersection_numbers(fan, div))


def find_ample(fan: Fan) -> ToricDivisor:
    """Construct some ample divisor on any valid fan.

    Strategy: contract to a minimal model, put an explicitly ample divisor
    there, then undo the contractions; each undo doubles the existing
    coefficients and gives the new ray ``2 * (b_left + b_right) - 1``
    (neighbor coefficients taken before the doubling), which keeps every
    intersection number positive.
    """
    base, steps = minimal_model(fan)
    coeffs: dict[Vec, int] = {}
    if base.d == 3:
        for v in base.rays:
            coeffs[v] = 1
    else:
        a = self_intersections(base)
        bound = max(abs(x) for x in a)
        for v, ai in zip(base.rays, a):
            coeffs[v] = 1 if ai != 0 else bound + 1

    current = base
    for step in reversed(steps):
        d = current.d
        position = None
        for j in range(d):
            if current.rays[j] == step.left and current.rays[(j + 1) % d] == step.right:
                position = j
                break
        if position is None:
            raise RuntimeError("contraction record does not match the fan")
        inserted = 2 * (coeffs[step.left] + coeffs[step.right]) - 1
        coeffs = {v: 2 * c for v, c in coeffs.items()}
        coeffs[step.ray] = inserted
        current = blow_up(current, position)
        if step.ray not in set(current.rays):
            raise RuntimeError("undoing a contraction inserted the wrong ray")

    if current != fan:
        raise RuntimeError("undoing the contractions did not restore the fan")
    div = ToricDivisor(tuple(coeffs[v] for v in fan.rays))
    if not is_ample(fan, div):
        raise RuntimeError("constructed divisor failed the ampleness check")
    return div


def polygon_from_divisor(fan: Fan, div: ToricDivisor) -> LatticePolygon:
    """Exact polygon of an ample divisor. Raises NotAmple otherwise."""
    if not is_ample(fan, div):
        raise NotAmple(f"divisor {list(div.coeffs)} is not ample on this fan")
    b = div.coeffs
    rays = fan.rays
    d = fan.d
    vertices = []
    for i in range(d):
        vi, vj = rays[i], rays[(i + 1) % d]
        bi, bj = b[i], b[(i + 1) % d]
        # Cramer on <u, vi> = -bi, <u, vj> = -bj; det(vi, vj) = 1.
        x = -bi * vj[1] + bj * vi[1]
        y = -bj * vi[0] + bi * vj[0]
        vertices.append((x, y))
    for w in vertices:
        if any(w[0] * v[0] + w[1] * v[1] < -b[k] for k, v in enumerate(rays)):
            raise RuntimeError("polygon vertex violates a defining inequality")
    return LatticePolygon(fan=fan, offsets=tuple(b), vertices=tuple(vertices))


def lattice_points(polygon: LatticePolygon) -> list[Vec]:
    """Integer points of the polygon in lexicographic (x, then y) order."""
    xs = [w[0] for w in polygon.vertices]
    ys = [w[1] for w in polygon.vertices]
    rays = polygon.fan.rays
    b = polygon.offsets
    points = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(x * v[0] + y * v[1] >= -b[k] for k, v in enumerate(rays)):
                points.append((x, y))
    return points


def translate_divisor(fan: Fan, div: ToricDivisor, u: Vec) -> ToricDivisor:
    """Shift coefficients by the character ``u``: ``b[i] += <u, v[i]>``.

    This translates the polygon by ``-u`` and leaves every intersection
    number unchanged.
    """
    _check_length(fan, div)
    return ToricDivisor(
        tuple(
            b + u[0] * v[0] + u[1] * v[1]
            for b, v in zip(div.coeffs, fan.rays)
        )
    )


def divisor_to_json(div: ToricDivisor) -> dict:
    return {"coeffs": list(div.coeffs)}


def divisor_from_json(obj: object) -> ToricDivisor:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise InvalidInput('expected an object with a "coeffs" key')
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list) or any(
        isinstance(c, bool) or not isinstance(c, int) for c in coeffs
    ):
        raise InvalidInput('"coeffs" must be a list of integers')
    return ToricDivisor(tuple(coeffs))


def polygon_to_json(polygon: LatticePolygon) -> dict:
    return {
        "vertices": [list(w) for w in polygon.vertices],
        "offsets": list(polygon.offsets),
    }
