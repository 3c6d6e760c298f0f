"""Floating-point checks tying the real points to the moment polygon.

Monomials, sign profiles, and the weighted-average moment map

    mu(x) = sum_u |x^u| * u / sum_u |x^u|,   u over lattice points of P,

evaluated stably by shifting log-weights before exponentiating. Sample
points on the four sign components come from the package's seeded
generator, so every run is reproducible. The numerics here back up the
exact combinatorics; nothing downstream consumes these floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CharacterOverflow, DegenerateWeights
from .fan import Fan, Vec
from .gluing import ALL_SIGN_HOMS, SignHom, evaluate
from .rng import SplitMix64
from .polytope import (
    LatticePolygon,
    ToricDivisor,
    find_ample,
    lattice_points,
    polygon_from_divisor,
)

__all__ = [
    "TorusPoint",
    "character",
    "sign_profile",
    "moment_map",
    "sample_T_epsilon",
    "MomentCheckReport",
    "run_moment_checks",
]

TorusPoint = tuple[float, float]


def character(x: TorusPoint, u: Vec) -> float:
    """Evaluate the monomial ``x1**u1 * x2**u2`` by repeated squaring.

    Both coordinates must be nonzero. Raises CharacterOverflow when the
    result is not a finite nonzero float.
    """
    if x[0] == 0.0 or x[1] == 0.0:
        raise ValueError("torus points have nonzero coordinates")
    out = _ipow(x[0], u[0]) * _ipow(x[1], u[1])
    if not math.isfinite(out) or out == 0.0:
        raise CharacterOverflow(f"monomial {u} at {x} left the float range")
    return out


def _ipow(base: float, e: int) -> float:
    if e < 0:
        base = 1.0 / base
        e = -e
    out = 1.0
    while e:
        if e & 1:
            out *= base
        e >>= 1
        if e:
            base *= base
    return out


def sign_profile(x: TorusPoint) -> SignHom:
    """The sign component containing ``x``."""
    if x[0] == 0.0 or x[1] == 0.0:
        raise ValueError("torus points have nonzero coordinates")
    return SignHom(1 if x[0] > 0 else -1, 1 if x[1] > 0 else -1)


def moment_map(x: TorusPoint, points: Sequence[Vec]) -> tuple[float, float]:
    """Weighted average of ``points`` with weights ``|x^u|``.

    Weights are computed as ``exp(<u, log|x|> - max)`` so the largest is
    exactly 1 and nothing overflows. Depends on the coordinates only
    through their absolute values, bit for bit.
    """
    if not points:
        raise DegenerateWeights("no lattice points to average")
    if x[0] == 0.0 or x[1] == 0.0:
        raise ValueError("torus points have nonzero coordinates")
    lx = math.log(abs(x[0]))
    ly = math.log(abs(x[1]))
    logs = [u[0] * lx + u[1] * ly for u in points]
    top = max(logs)
    weights = [math.exp(v - top) for v in logs]
    total = math.fsum(weights)
    if total == 0.0 or not math.isfinite(total):
        raise DegenerateWeights("weights degenerated to zero or infinity")
    mx = math.fsum(w * u[0] for w, u in zip(weights, points))
    my = math.fsum(w * u[1] for w, u in zip(weights, points))
    return (mx / total, my / total)


def sample_T_epsilon(
    eps: SignHom, seed: int, n: int, radius: float = 3.0
) -> list[TorusPoint]:
    """``n`` reproducible points on the sign component of ``eps``.

    Coordinates are ``s * exp(r)`` with ``r`` uniform on
    ``[-radius, radius]``, drawn first for the x and then for the y
    coordinate of each point.
    """
    rng = SplitMix64(seed)
    out = []
    for _ in range(n):
        r1 = -radius + 2.0 * radius * rng.uniform()
        r2 = -radius + 2.0 * radius * rng.uniform()
        out.append((eps.s1 * math.exp(r1), eps.s2 * math.exp(r2)))
    return out


@dataclass(frozen=True)
class MomentCheckReport:
    """Aggregated results of the numeric suite for one fan and divisor."""

    fan: Fan
    divisor: ToricDivisor
    samples: int
    max_inequality_violation: float
    translation_exact: bool
    min_mu_separation: float
    signs_exact: bool


def _max_violation(polygon: LatticePolygon, mu: tuple[float, float]) -> float:
    worst = 0.0
    for v, b in zip(polygon.fan.rays, polygon.offsets):
        slack = mu[0] * v[0] + mu[1] * v[1] + b
        if -slack > worst:
            worst = -slack
    return worst


def run_moment_checks(
    fan: Fan,
    divisor: ToricDivisor | None = None,
    seed: int = 0,
    samples: int = 256,
    radius: float = 3.0,
) -> MomentCheckReport:
    """Numeric suite: signs, containment, sign-flip invariance, injectivity.

    For each of the four sign components, ``samples`` seeded points are
    checked for (a) exact agreement of ``sign(x^u)`` with the component's
    sign vector on every polygon lattice point, (b) the moment image lying
    inside the polygon up to float slack, and (c) bit-exact equality of
    the moment image across all four sign flips of the same magnitudes.
    Separately, a fixed 32 x 32 log-coordinate grid on the positive
    component measures the smallest separation of moment images for grid
    points more than ``1e-6`` apart in log coordinates.
    """
    if divisor is None:
        divisor = find_ample(fan)
    polygon = polygon_from_divisor(fan, divisor)
    points = lattice_points(polygon)

    signs_exact = True
    worst_violation = 0.0
    translation_exact = True
    for k, eps in enumerate(ALL_SIGN_HOMS):
        for x in sample_T_epsilon(eps, seed + k, samples, radius):
            for u in points:
                if math.copysign(1.0, character(x, u)) != evaluate(eps, u):
                    signs_exact = False
            mu = moment_map(x, points)
            violation = _max_violation(polygon, mu)
            if violation > worst_violation:
                worst_violation = violation
            magnitudes = (abs(x[0]), abs(x[1]))
            if moment_map(magnitudes, points) != mu:
                translation_exact = False

    grid = np.linspace(-radius, radius, 32)
    logs = np.array([(a, b) for a in grid for b in grid])
    mus = np.array(
        [moment_map((math.exp(a), math.exp(b)), points) for a, b in logs]
    )
    log_gaps = np.sqrt(((logs[:, None, :] - logs[None, :, :]) ** 2).sum(-1))
    mu_gaps = np.sqrt(((mus[:, None, :] - mus[None, :, :]) ** 2).sum(-1))
    separated = log_gaps > 1e-6
    min_sep = float(mu_gaps[separated].min()) if separated.any() else math.inf

    return MomentCheckReport(
        fan=fan,
        divisor=divisor,
        samples=samples,
        max_inequality_violation=worst_violation,
        translation_exact=translation_exact,
        min_mu_separation=min_sep,
        signs_exact=signs_exact,
    )
