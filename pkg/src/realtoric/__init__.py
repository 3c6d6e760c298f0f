"""Topology of the real point set of a smooth complete toric surface.

Exact pipeline: validate a fan, glue four polygon copies into a cell
complex, take integral homology, classify the closed surface, and check
the answer against the parity prediction read off the fan. A small
floating-point module ties the combinatorics back to moment-map numerics.
"""

from .corpus import corpus_fans, corpus_tasks
from .errors import (
    CharacterOverflow,
    DegenerateWeights,
    DuplicateRay,
    IndexOutOfRange,
    InvalidComplex,
    InvalidInput,
    LengthMismatch,
    NonPrimitiveRay,
    NotAClosedSurfaceProfile,
    NotAmple,
    NotComplete,
    NotExceptional,
    NotSmooth,
    NotUnimodular,
    PolygonFanMismatch,
    TooFewRays,
    ToricError,
)
from .fan import (
    BlowDownStep,
    Fan,
    Hirzebruch,
    Other,
    Projective2,
    apply_map,
    blow_down,
    blow_up,
    cyclically_equal,
    fan_from_json,
    fan_to_json,
    fans_isomorphic,
    hirzebruch_fan,
    minimal_model,
    normalize_fan,
    projective_plane_fan,
    random_fan,
    recognize,
    reconstruct_fan,
    self_intersections,
)
from .gluing import (
    ALL_SIGN_HOMS,
    CellComplex,
    GluingRule,
    NeighborhoodType,
    SignHom,
    build_real_complex,
    build_real_complex_from_polytope,
    complex_to_dot,
    complex_to_json,
    evaluate,
    torus_point,
    tubular_neighborhood,
)
from .homology import (
    HomologyProfile,
    SurfaceType,
    VerificationReport,
    classify_surface,
    euler_formula,
    euler_from_cells,
    homology,
    orientable_fast,
    predict_theorem,
    report_to_json,
    verify,
)
from .intmat import SmithForm, invariant_factors, mat_det, mat_mul, smith_normal_form
from .moment import (
    MomentCheckReport,
    character,
    moment_map,
    run_moment_checks,
    sample_T_epsilon,
    sign_profile,
)
from .polytope import (
    LatticePolygon,
    ToricDivisor,
    divisor_from_json,
    divisor_to_json,
    find_ample,
    intersection_numbers,
    is_ample,
    lattice_points,
    polygon_from_divisor,
    polygon_to_json,
    translate_divisor,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "ALL_SIGN_HOMS",
    "BlowDownStep",
    "CellComplex",
    "CharacterOverflow",
    "DegenerateWeights",
    "DuplicateRay",
    "Fan",
    "GluingRule",
    "Hirzebruch",
    "HomologyProfile",
    "IndexOutOfRange",
    "InvalidComplex",
    "InvalidInput",
    "LatticePolygon",
    "LengthMismatch",
    "MomentCheckReport",
    "NeighborhoodType",
    "NonPrimitiveRay",
    "NotAClosedSurfaceProfile",
    "NotAmple",
    "NotComplete",
    "NotExceptional",
    "NotSmooth",
    "NotUnimodular",
    "Other",
    "PolygonFanMismatch",
    "Projective2",
    "SignHom",
    "SmithForm",
    "SplitMix64",
    "SurfaceType",
    "TooFewRays",
    "ToricDivisor",
    "ToricError",
    "VerificationReport",
    "apply_map",
    "blow_down",
    "blow_up",
    "build_real_complex",
    "build_real_complex_from_polytope",
    "character",
    "classify_surface",
    "complex_to_dot",
    "complex_to_json",
    "corpus_fans",
    "corpus_tasks",
    "cyclically_equal",
    "divisor_from_json",
    "divisor_to_json",
    "euler_formula",
    "euler_from_cells",
    "evaluate",
    "fan_from_json",
    "fan_to_json",
    "fans_isomorphic",
    "find_ample",
    "hirzebruch_fan",
    "homology",
    "intersection_numbers",
    "invariant_factors",
    "is_ample",
    "lattice_points",
    "mat_det",
    "mat_mul",
    "minimal_model",
    "moment_map",
    "normalize_fan",
    "orientable_fast",
    "polygon_from_divisor",
    "polygon_to_json",
    "predict_theorem",
    "projective_plane_fan",
    "random_fan",
    "recognize",
    "reconstruct_fan",
    "report_to_json",
    "run_moment_checks",
    "sample_T_epsilon",
    "self_intersections",
    "sign_profile",
    "smith_normal_form",
    "torus_point",
    "translate_divisor",
    "tubular_neighborhood",
    "verify",
]
