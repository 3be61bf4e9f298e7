"""Complete, duplicate-free enumeration of wall classes.

A wall class is a Picard vector rho with prescribed negative square and
ambient divisibility, oriented so that (rho, g) > 0.  Finiteness comes from
splitting rho along the polarization g: on the orthogonal complement of g
the form is negative definite, so each slice (rho, g) = k is a finite
ellipsoid problem, and a Cauchy-Schwarz estimate against a second positive
class m caps the admissible levels k.  Without m the set may be infinite,
so callers must then supply an explicit level cap.

All arithmetic in the enumerator is exact; the brute-force oracle uses
vectorized int64 scans guarded against overflow.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .lattice import PicardLattice
from .rational_linalg import (
    integer_interval,
    ldl_positive,
    linear_form_basis,
    solve_exact,
)

DEFAULT_TARGETS: tuple[tuple[int, int], ...] = ((-2, 1), (-2, 2), (-10, 2))

# Grid chunks above this size are split to keep the oracle's memory flat.
_MAX_GRID_CHUNK = 4_000_000


@dataclass(frozen=True)
class WallClass:
    """One oriented wall: coordinates in both systems plus its invariants."""

    rho_picard: tuple[int, ...]
    rho_ambient: tuple[int, ...]
    square: int
    div: int


@dataclass(frozen=True)
class WallQuery:
    picard: PicardLattice
    g: tuple[int, ...]
    m: tuple[int, ...] | None = None
    targets: tuple[tuple[int, int], ...] = DEFAULT_TARGETS
    level_cap: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(self.g))
        if self.m is not None:
            object.__setattr__(self, "m", tuple(self.m))
        object.__setattr__(
            self, "targets", tuple((int(s), int(d)) for s, d in self.targets)
        )


def _validate_query(q: WallQuery) -> None:
    pic = q.picard
    if not pic.is_hyperbolic():
        raise ValueError("Picard lattice must have signature (1, rank-1)")
    if pic.square(q.g) <= 0:
        raise ValueError("g must lie in the positive cone: (g, g) > 0 required")
    if q.m is not None:
        if pic.square(q.m) <= 0:
            raise ValueError("m must lie in the positive cone: (m, m) > 0 required")
        if pic.pair(q.m, q.g) <= 0:
            raise ValueError("m must lie in the same component of the positive cone as g")
    if not q.targets:
        raise ValueError("at least one (square, div) target is required")
    for square, div in q.targets:
        if square >= 0:
            raise ValueError("wall targets must have negative square")
        if div not in (1, 2):
            raise ValueError("wall divisibility targets must be 1 or 2")
    if q.level_cap is not None and q.level_cap < 0:
        raise ValueError("level_cap must be nonnegative")


def _target_groups(targets) -> dict[int, frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for square, div in targets:
        groups.setdefault(square, set()).add(div)
    return {s: frozenset(d) for s, d in groups.items()}


def _thread_count() -> int:
    raw = os.environ.get("HYPERWALL_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError("HYPERWALL_THREADS must be a positive integer") from exc
    if n < 1:
        raise ValueError("HYPERWALL_THREADS must be a positive integer")
    return n


def level_bound(picard: PicardLattice, g, m, square: int) -> int:
    """Largest level k = (rho, g) a wall with (rho, m) <= 0 can reach.

    Derived from Cauchy-Schwarz on the negative definite complement of g:
    k^2 * (m, m) <= -square * ((g, m)^2 - (m, m)(g, g)).
    """
    v = picard.square(g)
    w = picard.square(m)
    p = picard.pair(g, m)
    num = -square * (p * p - w * v)
    if num <= 0:
        return 0
    return isqrt(num // w)


def _exact_quadratic_roots(center: Fraction, value: Fraction) -> list[int]:
    """Integers t with (t - center)^2 == value, exactly."""
    if value < 0:
        return []
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return []
    root = Fraction(rn, rd)
    out = []
    for cand in (center + root, center - root):
        if cand.denominator == 1:
            out.append(int(cand))
    return out[:1] if root == 0 else out


class _SliceContext:
    """Shared slice data for a fixed (picard, g).

    An integral change of basis splits Z^r as Z*u + kernel with
    (x, g) = d on u and 0 on the kernel; the negated kernel Gram is
    positive definite and its LDL data drives the ellipsoid walks.
    """

    def __init__(self, picard: PicardLattice, g):
        self.picard = picard
        w = picard.gram_times(g)
        self.d, self.u, self.kernel = linear_form_basis(w)
        nk = len(self.kernel)
        neg_gram = [
            [-picard.pair(self.kernel[i], self.kernel[j]) for j in range(nk)]
            for i in range(nk)
        ]
        try:
            self.dvec, self.coef = ldl_positive(neg_gram) if nk else ([], [])
        except ValueError as exc:
            raise ValueError(
                "the form restricted to the complement of g is not negative "
                "definite; Picard data is malformed"
            ) from exc
        base = [picard.pair(self.u, b) for b in self.kernel]
        self.p_base = (
            [Fraction(x) for x in solve_exact(neg_gram, base)] if nk else []
        )
        self.q_base = Fraction(picard.square(self.u)) + sum(
            (b * p for b, p in zip(base, self.p_base)), Fraction(0)
        )

    def solutions(self, k: int, square: int) -> list[tuple[int, ...]]:
        """All Picard vectors x with (x, g) = k and (x, x) = square."""
        if k % self.d:
            return []
        scale = k // self.d
        radius = scale * scale * self.q_base - square
        if radius < 0:
            return []
        shift = [scale * p for p in self.p_base]
        rank = self.picard.rank
        nk = len(self.kernel)
        found: list[tuple[int, ...]] = []
        t = [0] * nk

        def emit() -> None:
            found.append(
                tuple(
                    scale * self.u[a]
                    + sum(self.kernel[j][a] * t[j] for j in range(nk))
                    for a in range(rank)
                )
            )

        def descend(i: int, remaining: Fraction) -> None:
            sigma = sum(
                (self.coef[i][j] * (t[j] - shift[j]) for j in range(i + 1, nk)),
                Fraction(0),
            )
            center = shift[i] - sigma
            if i == 0:
                # innermost level: the budget must be consumed exactly, so
                # solve for t instead of walking the interval
                for ti in _exact_quadratic_roots(center, remaining / self.dvec[0]):
                    t[0] = ti
                    emit()
                return
            for ti in integer_interval(center, remaining / self.dvec[i]):
                t[i] = ti
                descend(i - 1, remaining - self.dvec[i] * (ti - center) ** 2)

        if nk == 0:
            if radius == 0:
                found.append(tuple(scale * self.u[a] for a in range(rank)))
        else:
            descend(nk - 1, Fraction(radius))
        found.sort()
        return found


def slice_solutions(picard: PicardLattice, g, k: int, square: int) -> list[tuple[int, ...]]:
    """Lattice vectors on the affine slice (x, g) = k with the given square."""
    if k < 1:
        raise ValueError("slice level k must be at least 1")
    return _SliceContext(picard, tuple(g)).solutions(k, square)


def enumerate_walls(query: WallQuery) -> list[WallClass]:
    """Exactly the oriented wall classes matching the query, sorted.

    Output is complete, duplicate-free and sorted lexicographically by
    Picard coordinates.  When m is absent a level_cap is required, and the
    result is then complete up to (rho, g) <= level_cap.
    """
    _validate_query(query)
    picard = query.picard
    ctx = _SliceContext(picard, query.g)
    groups = _target_groups(query.targets)
    walls: list[WallClass] = []
    for square in sorted(groups):
        divs = groups[square]
        if query.m is not None:
            kmax = level_bound(picard, query.g, query.m, square)
            if query.level_cap is not None:
                kmax = min(kmax, query.level_cap)
        elif query.level_cap is not None:
            kmax = query.level_cap
        else:
            raise ValueError(
                "the wall set is only finite against a second positive class: "
                "supply m or an explicit level_cap"
            )

        def scan(k: int, square=square, divs=divs) -> list[WallClass]:
            out = []
            for x in ctx.solutions(k, square):
                if query.m is not None and picard.pair(x, query.m) > 0:
                    continue
                ambient = picard.to_ambient(x)
                div = picard.ambient.divisibility(ambient)
                if div in divs:
                    out.append(WallClass(x, ambient, square, div))
            return out

        levels = range(1, kmax + 1)
        threads = _thread_count()
        if threads > 1 and kmax > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                chunks = list(pool.map(scan, levels))
        else:
            chunks = [scan(k) for k in levels]
        for chunk in chunks:
            walls.extend(chunk)
    walls.sort(key=lambda wall: wall.rho_picard)
    return walls


def _python_scan(picard, g, m, cap, box, squares) -> list[tuple[int, ...]]:
    rank = picard.rank
    out = []
    for x in itertools.product(range(-box, box + 1), repeat=rank):
        s = picard.square(x)
        if s not in squares:
            continue
        lg = picard.pair(x, g)
        if lg < 1 or (cap is not None and lg > cap):
            continue
        if m is not None and picard.pair(x, m) > 0:
            continue
        out.append(x)
    return out


def _numpy_scan(gram, g, m, cap, box, squares) -> list[tuple[int, ...]]:
    rank = len(gram)
    side = 2 * box + 1
    trail = rank
    while trail > 1 and side**trail > _MAX_GRID_CHUNK:
        trail -= 1
    lead = rank - trail
    gmat = np.array(gram, dtype=np.int64)
    rng = np.arange(-box, box + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * trail), indexing="ij")
    tgrid = np.stack(grids, axis=-1).reshape(-1, trail)
    q_tt = np.einsum("ij,mi,mj->m", gmat[lead:, lead:], tgrid, tgrid)
    wg = gmat @ np.array(g, dtype=np.int64)
    lg_t = tgrid @ wg[lead:]
    if m is not None:
        wm = gmat @ np.array(m, dtype=np.int64)
        lm_t = tgrid @ wm[lead:]
    sq_arr = np.array(sorted(squares), dtype=np.int64)
    out: list[tuple[int, ...]] = []
    for head in itertools.product(range(-box, box + 1), repeat=lead):
        if lead:
            xl = np.array(head, dtype=np.int64)
            base_q = int(xl @ gmat[:lead, :lead] @ xl)
            lin = tgrid @ (2 * (gmat[lead:, :lead] @ xl))
            vals = q_tt + lin + base_q
            lg = lg_t + int(xl @ wg[:lead])
        else:
            vals = q_tt
            lg = lg_t
        mask = np.isin(vals, sq_arr) & (lg >= 1)
        if cap is not None:
            mask &= lg <= cap
        if m is not None:
            lm = lm_t + (int(xl @ wm[:lead]) if lead else 0)
            mask &= lm <= 0
        for idx in np.nonzero(mask)[0]:
            out.append(head + tuple(int(c) for c in tgrid[idx]))
    return out


def brute_force_walls(query: WallQuery, box: int) -> list[WallClass]:
    """Testing oracle: the same wall filter by exhaustive coordinate scan.

    Scans Picard coordinates in [-box, box]^rank and applies exactly the
    predicates of enumerate_walls.  Large grids go through a vectorized
    int64 path; an overflow guard falls back to pure Python.
    """
    _validate_query(query)
    if box <= 0:
        return []
    picard = query.picard
    groups = _target_groups(query.targets)
    squares = frozenset(groups)
    cap = query.level_cap
    bound = box * box * sum(abs(e) for row in picard.gram for e in row)
    bound = max(bound, box * sum(abs(x) for x in picard.gram_times(query.g)))
    if query.m is not None:
        bound = max(bound, box * sum(abs(x) for x in picard.gram_times(query.m)))
    side = 2 * box + 1
    if side**picard.rank <= 200_000 or bound >= 2**62:
        candidates = _python_scan(picard, query.g, query.m, cap, box, squares)
    else:
        candidates = _numpy_scan(picard.gram, query.g, query.m, cap, box, squares)
    walls = []
    for x in candidates:
        ambient = picard.to_ambient(x)
        div = picard.ambient.divisibility(ambient)
        square = picard.square(x)
        if div in groups[square]:
            walls.append(WallClass(tuple(x), ambient, square, div))
    walls.sort(key=lambda wall: wall.rho_picard)
    return walls
