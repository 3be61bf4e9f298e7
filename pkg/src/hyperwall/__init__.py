"""Exact-arithmetic ample cone and wall computations for hyperkahler
fourfolds of K3^[2] type.

The library works over the rank-23 Beauville-Bogomolov lattice with plain
integer/rational arithmetic throughout: wall membership, ampleness verdicts
and nef thresholds are exact sign questions and are treated as such.
"""

from .cohomology import (
    MiddleClass,
    PlaneSolution,
    c2_pair,
    fujiki_check,
    lagrangian_eliminant,
    lagrangian_solver,
    line_class_of_plane,
    middle_pair,
    q_dual,
    quad_product,
    square_class,
)
from .cones import (
    AmpleStatus,
    AmpleVerdict,
    PreconditionError,
    RayType,
    WallKind,
    classify_square_div,
    classify_wall,
    detect_isotropic_boundary,
    is_ample,
    nef_threshold,
    validate_polarization,
)
from .enumeration import (
    DEFAULT_TARGETS,
    WallClass,
    WallQuery,
    brute_force_walls,
    enumerate_walls,
    level_bound,
    slice_solutions,
)
from .lattice import (
    AMBIENT_RANK,
    BASIS_LABELS,
    K3_2_LATTICE,
    AmbientLattice,
    CurveClass,
    PicardLattice,
    admissible_square_div,
    basis_vector,
    bb_pair,
    divisibility,
    dual_class,
    make_k3_2_lattice,
    signature_of,
    vector_from_labels,
)

__all__ = [
    "AMBIENT_RANK",
    "AmbientLattice",
    "AmpleStatus",
    "AmpleVerdict",
    "BASIS_LABELS",
    "CurveClass",
    "DEFAULT_TARGETS",
    "K3_2_LATTICE",
    "MiddleClass",
    "PicardLattice",
    "PlaneSolution",
    "PreconditionError",
    "RayType",
    "WallClass",
    "WallKind",
    "WallQuery",
    "admissible_square_div",
    "basis_vector",
    "bb_pair",
    "brute_force_walls",
    "c2_pair",
    "classify_square_div",
    "classify_wall",
    "detect_isotropic_boundary",
    "divisibility",
    "dual_class",
    "enumerate_walls",
    "fujiki_check",
    "is_ample",
    "lagrangian_eliminant",
    "lagrangian_solver",
    "level_bound",
    "line_class_of_plane",
    "make_k3_2_lattice",
    "middle_pair",
    "nef_threshold",
    "q_dual",
    "quad_product",
    "signature_of",
    "slice_solutions",
    "square_class",
    "validate_polarization",
    "vector_from_labels",
]

__version__ = "0.1.0"
