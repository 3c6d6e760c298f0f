"""Integral homology of the glued complex, and surface classification.

Everything is exact: ranks and torsion come from Smith normal forms of
the integer boundary matrices, the Euler characteristic is checked two
independent ways, and closed-surface recognition goes through the
standard homology profiles

    orientable genus g:      Z, Z^(2g), Z
    nonorientable genus k:   Z, Z^(k-1) + Z/2, 0
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidComplex, NotAClosedSurfaceProfile
from .fan import Fan, Hirzebruch, fan_to_json, recognize, self_intersections
from .gluing import CellComplex, build_real_complex
from .intmat import mat_mul, smith_normal_form

__all__ = [
    "HomologyProfile",
    "SurfaceType",
    "VerificationReport",
    "homology",
    "euler_from_cells",
    "euler_formula",
    "classify_surface",
    "predict_theorem",
    "orientable_fast",
    "verify",
    "report_to_json",
]


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers plus the torsion invariant factors of degree 1."""

    b0: int
    b1: int
    b2: int
    torsion: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return self.b0 - self.b1 + self.b2


def homology(c: CellComplex) -> HomologyProfile:
    """Exact integral homology of a 2-dimensional cell complex.

    Validates that the boundary matrices compose to zero; raises
    InvalidComplex otherwise.
    """
    d1 = c.boundary_matrix_1()
    d2 = c.boundary_matrix_2()
    nv = c.num_vertices
    ne = len(c.edges)
    nf = len(c.faces)
    if ne and nf:
        product = mat_mul(d1, d2)
        if any(x != 0 for row in product for x in row):
            raise InvalidComplex("boundary of a boundary is not zero")
    s1 = smith_normal_form(d1)
    s2 = smith_normal_form(d2)
    b0 = nv - s1.rank
    b1 = ne - s1.rank - s2.rank
    b2 = nf - s2.rank
    if b0 < 0 or b1 < 0 or b2 < 0:
        raise InvalidComplex("boundary ranks exceed the chain group ranks")
    torsion = tuple(x for x in s2.diag if x > 1)
    return HomologyProfile(b0=b0, b1=b1, b2=b2, torsion=torsion)


def euler_from_cells(c: CellComplex) -> int:
    """Alternating cell count ``V - E + F``."""
    return c.num_vertices - len(c.edges) + len(c.faces)


def euler_formula(fan: Fan) -> int:
    """Closed form from the cone counts alone.

    The glued complex has ``4`` faces for the single zero cone, ``2d``
    edges for the ``d`` rays, and ``d`` vertices for the ``d`` top cones,
    so the characteristic is ``4 - 2d + d = 4 - d``.
    """
    d = fan.d
    return 4 * 1 - 2 * d + d


@dataclass(frozen=True)
class SurfaceType:
    """A closed connected surface: orientable of genus ``g >= 0``, or a
    connect sum of ``genus >= 1`` projective planes."""

    orientable: bool
    genus: int

    def __post_init__(self):
        if self.orientable and self.genus < 0:
            raise ValueError("orientable genus must be >= 0")
        if not self.orientable and self.genus < 1:
            raise ValueError("nonorientable genus must be >= 1")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    def __str__(self) -> str:
        if self.orientable:
            if self.genus == 0:
                return "sphere S²"
            if self.genus == 1:
                return "torus S¹×S¹"
            return f"orientable surface of genus {self.genus}"
        if self.genus == 1:
            return "RP²"
        if self.genus == 2:
            return "Klein bottle"
        return f"connect sum of {self.genus} copies of RP²"


def classify_surface(profile: HomologyProfile) -> SurfaceType:
    """Match a homology profile to the closed surface realizing it.

    Raises NotAClosedSurfaceProfile when no closed connected surface has
    the given groups.
    """
    if profile.b0 != 1:
        raise NotAClosedSurfaceProfile(
            f"b0 = {profile.b0}, want a connected space with b0 = 1"
        )
    chi = profile.euler_characteristic
    if profile.b2 == 1 and not profile.torsion:
        if profile.b1 % 2 == 0:
            return SurfaceType(orientable=True, genus=profile.b1 // 2)
    if profile.b2 == 0 and profile.torsion == (2,):
        return SurfaceType(orientable=False, genus=2 - chi)
    raise NotAClosedSurfaceProfile(
        f"betti ({profile.b0}, {profile.b1}, {profile.b2}) with torsion "
        f"{list(profile.torsion)} is not a closed surface profile"
    )


def predict_theorem(fan: Fan) -> SurfaceType:
    """Predicted type straight from the fan, no chains involved.

    A 4-ray fan with even parameter gives the torus; every other valid
    fan gives the connect sum of ``d - 2`` projective planes.
    """
    kind = recognize(fan)
    if isinstance(kind, Hirzebruch) and kind.a % 2 == 0:
        return SurfaceType(orientable=True, genus=1)
    return SurfaceType(orientable=False, genus=fan.d - 2)


def orientable_fast(fan: Fan) -> bool:
    """Orientability without homology: no ray has odd self-intersection."""
    return all(a % 2 == 0 for a in self_intersections(fan))


@dataclass(frozen=True)
class VerificationReport:
    """Everything computed for one fan, plus the cross-check verdict."""

    fan: Fan
    predicted: SurfaceType
    computed: SurfaceType
    profile: HomologyProfile
    chi_cells: int
    chi_formula: int
    orientable_fast: bool
    orientable_homology: bool
    all_consistent: bool


def verify(fan: Fan) -> VerificationReport:
    """Run the whole pipeline on one fan and compare every view.

    Consistency means: the homology classification equals the predicted
    type, the two Euler counts agree, and the parity shortcut for
    orientability agrees with ``b2 == 1``.
    """
    complex_ = build_real_complex(fan)
    profile = homology(complex_)
    computed = classify_surface(profile)
    predicted = predict_theorem(fan)
    chi_cells = euler_from_cells(complex_)
    chi_formula = euler_formula(fan)
    fast = orientable_fast(fan)
    by_homology = profile.b2 == 1
    consistent = (
        computed == predicted
        and chi_cells == chi_formula
        and fast == by_homology
    )
    return VerificationReport(
        fan=fan,
        predicted=predicted,
        computed=computed,
        profile=profile,
        chi_cells=chi_cells,
        chi_formula=chi_formula,
        orientable_fast=fast,
        orientable_homology=by_homology,
        all_consistent=consistent,
    )


def report_to_json(report: VerificationReport) -> dict:
    """Flat JSON-ready mapping with a stable key order."""
    return {
        "fan": fan_to_json(report.fan)["rays"],
        "d": report.fan.d,
        "predicted": str(report.predicted),
        "computed": str(report.computed),
        "chi_cells": report.chi_cells,
        "chi_formula": report.chi_formula,
        "orientable_fast": report.orientable_fast,
        "betti": [report.profile.b0, report.profile.b1, report.profile.b2],
        "torsion": list(report.profile.torsion),
        "all_consistent": report.all_consistent,
    }
