"""Ampleness verdicts, nef thresholds and extremal-ray classification.

The verdict semantics are asymmetric on purpose: a class that pairs
strictly positively with every wall is provably ample, while a negative
verdict asserts non-nefness only conjecturally (the wall witnesses a curve
class whose effectivity is the conjectural half of the criterion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .enumeration import (
    DEFAULT_TARGETS,
    WallClass,
    WallQuery,
    _SliceContext,
    _target_groups,
    enumerate_walls,
)
from .lattice import (
    AMBIENT_RANK,
    PicardLattice,
    _as_vector,
    admissible_square_div,
    bb_pair,
    divisibility,
)


class PreconditionError(ValueError):
    """An operation precondition failed (for example: g is not ample)."""


class AmpleStatus(str, Enum):
    AMPLE = "ample"
    NEF_BOUNDARY = "nef_boundary"
    NOT_NEF = "not_nef"
    NOT_POSITIVE = "not_positive"


#: Statuses whose verdict follows from the proven implication (numerically
#: positive classes are ample); the remaining ones rest on the conjectural
#: description of the curve cone.
PROVEN_STATUSES = frozenset({AmpleStatus.AMPLE, AmpleStatus.NOT_POSITIVE})


@dataclass(frozen=True)
class AmpleVerdict:
    status: AmpleStatus
    witnesses: tuple[WallClass, ...]
    isotropic_flag: bool

    @property
    def certainty(self) -> str:
        return "proven" if self.status in PROVEN_STATUSES else "conjectural"


class WallKind(str, Enum):
    DIVISORIAL_HALF = "divisorial_half"
    DIVISORIAL_TWO = "divisorial_two"
    LAGRANGIAN_PLANE = "lagrangian_plane"
    NON_NODAL = "non_nodal"
    INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class RayType:
    kind: WallKind
    dual_square: Fraction
    #: possible values of D.C on the contracted curve; the lattice data
    #: genuinely underdetermines the choice for divisorial_half.
    dc_values: tuple[int, ...]


def classify_square_div(square: int, div: int) -> RayType:
    """Extremal-ray type of a (square, divisibility) pair."""
    if square >= 0:
        raise ValueError("wall classes have negative square")
    if div < 1:
        raise ValueError("divisibility must be positive")
    dual = Fraction(square, div * div)
    key = (square, div)
    if key == (-2, 2):
        return RayType(WallKind.DIVISORIAL_HALF, dual, (-1, -2))
    if key == (-2, 1):
        return RayType(WallKind.DIVISORIAL_TWO, dual, (-2,))
    if key == (-10, 2):
        return RayType(WallKind.LAGRANGIAN_PLANE, dual, ())
    if div in (1, 2) and not admissible_square_div(square, div):
        return RayType(WallKind.INADMISSIBLE, dual, ())
    return RayType(WallKind.NON_NODAL, dual, ())


def classify_wall(rho) -> RayType:
    """Classify an ambient wall vector by its square and divisibility."""
    v = _as_vector(rho, AMBIENT_RANK)
    square = bb_pair(v, v)
    if square >= 0:
        raise ValueError("wall classes have negative square")
    return classify_square_div(square, divisibility(v))


def detect_isotropic_boundary(picard: PicardLattice, m) -> bool:
    """Whether m is primitive and isotropic (a potential fibration boundary).

    Report-only flag; no fibration is constructed.
    """
    coords = tuple(m)
    return picard.square(coords) == 0 and math.gcd(*coords) == 1


def validate_polarization(picard: PicardLattice, g, targets=DEFAULT_TARGETS) -> None:
    """Reject a polarization that fails its own ampleness test.

    g must have positive square and may not be orthogonal to any wall
    class; the orthogonal walls are exactly the level-zero slice of each
    target, which is a finite negative definite problem.
    """
    if not picard.is_hyperbolic():
        raise ValueError("Picard lattice must have signature (1, rank-1)")
    coords = tuple(g)
    if picard.square(coords) <= 0:
        raise PreconditionError("g is not ample: (g, g) <= 0")
    ctx = _SliceContext(picard, coords)
    for square, divs in _target_groups(targets).items():
        for x in ctx.solutions(0, square):
            div = picard.ambient.divisibility(picard.to_ambient(x))
            if div in divs:
                raise PreconditionError(
                    f"g is not ample: it is orthogonal to the wall {x} "
                    f"(square {square}, divisibility {div})"
                )


def _isotropic_level_cap(square: int, p: int, v: int) -> int:
    # Walls with (rho, m) <= -1 against an isotropic m satisfy
    # (rho, g) <= (|square| * (m, g)^2 - (g, g)) / (2 (m, g)).
    num = -square * p * p - v
    if num <= 0:
        return 0
    return num // (2 * p)


def is_ample(picard: PicardLattice, g, m, targets=DEFAULT_TARGETS) -> AmpleVerdict:
    """Numerical ampleness verdict for the divisor class m.

    Classes of nonnegative square need no wall check: a class with positive
    square and positive pairing with g pairs positively with every such
    class by the hyperbolic signature.  For isotropic m the strict wall
    violations are still finite (their level is capped against g), so the
    verdict is exact; the orthogonal witnesses reported in that case are
    the finitely many found below the same cap.
    """
    gcoords = tuple(g)
    validate_polarization(picard, gcoords, targets)
    coords = tuple(m)
    mm = picard.square(coords)
    mg = picard.pair(coords, gcoords)
    if mm < 0 or mg <= 0:
        return AmpleVerdict(AmpleStatus.NOT_POSITIVE, (), False)
    if mm == 0:
        gg = picard.square(gcoords)
        witnesses = []
        for square, divs in sorted(_target_groups(targets).items()):
            cap = _isotropic_level_cap(square, mg, gg)
            if cap < 1:
                continue
            sub = WallQuery(
                picard,
                gcoords,
                m=None,
                targets=tuple((square, d) for d in sorted(divs)),
                level_cap=cap,
            )
            for wall in enumerate_walls(sub):
                if picard.pair(wall.rho_picard, coords) <= 0:
                    witnesses.append(wall)
        witnesses.sort(key=lambda wall: wall.rho_picard)
    else:
        query = WallQuery(picard, gcoords, m=coords, targets=tuple(targets))
        witnesses = enumerate_walls(query)
    if any(picard.pair(w.rho_picard, coords) < 0 for w in witnesses):
        return AmpleVerdict(AmpleStatus.NOT_NEF, tuple(witnesses), False)
    if witnesses:
        return AmpleVerdict(AmpleStatus.NEF_BOUNDARY, tuple(witnesses), mm == 0)
    if mm == 0:
        return AmpleVerdict(AmpleStatus.NEF_BOUNDARY, (), True)
    return AmpleVerdict(AmpleStatus.AMPLE, (), False)


def nef_threshold(
    picard: PicardLattice, g, m, targets=DEFAULT_TARGETS
) -> tuple[Fraction, tuple[WallClass, ...]]:
    """Exact nef threshold along the segment t*m + (1-t)*g, with its walls.

    Returns the supremum tau of t for which the segment class is ample,
    together with the wall(s) whose hyperplane is hit at tau.  tau = 1 when
    no wall separates m from g; walls orthogonal to m itself then witness
    the boundary crossing exactly at t = 1.
    """
    gcoords = tuple(g)
    validate_polarization(picard, gcoords, targets)
    coords = tuple(m)
    if picard.square(coords) <= 0:
        raise PreconditionError("nef_threshold requires (m, m) > 0")
    if picard.pair(coords, gcoords) <= 0:
        raise PreconditionError("nef_threshold requires (m, g) > 0")
    query = WallQuery(picard, gcoords, m=coords, targets=tuple(targets))
    walls = enumerate_walls(query)
    if not walls:
        return Fraction(1), ()
    crossings = []
    for wall in walls:
        pg = picard.pair(wall.rho_picard, gcoords)
        pm = picard.pair(wall.rho_picard, coords)
        crossings.append((Fraction(pg, pg - pm), wall))
    tau = min(t for t, _ in crossings)
    achieving = tuple(w for t, w in crossings if t == tau)
    return tau, achieving
