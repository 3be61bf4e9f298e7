"""The K3^[2] Beauville-Bogomolov lattice and exact arithmetic over it.

The ambient lattice is U + U + U + (-E8) + (-E8) + <-2> in a frozen basis
order; divisor classes are integer vectors of length 23 in that basis.
Divisibility is always taken against the full ambient lattice, which is why
Picard data must be supplied as embedded ambient vectors and never as an
abstract Gram matrix alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rational_linalg import (
    check_symmetric,
    determinant,
    inertia,
    rank_of,
    solve_exact,
)

AMBIENT_RANK = 23

BASIS_LABELS: tuple[str, ...] = (
    "e1", "f1", "e2", "f2", "e3", "f3",
    "E8a_1", "E8a_2", "E8a_3", "E8a_4", "E8a_5", "E8a_6", "E8a_7", "E8a_8",
    "E8b_1", "E8b_2", "E8b_3", "E8b_4", "E8b_5", "E8b_6", "E8b_7", "E8b_8",
    "delta",
)

# Bonds of the E8 Dynkin diagram in Bourbaki node numbering.
_E8_EDGES = ((1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def _as_vector(v, length: int) -> tuple[int, ...]:
    if isinstance(v, (str, bytes)) or not isinstance(v, Sequence):
        raise ValueError(f"expected an integer vector of length {length}")
    out = tuple(v)
    if len(out) != length:
        raise ValueError(f"expected an integer vector of length {length}, got length {len(out)}")
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError("vector entries must be plain integers")
    return out


def _negated_e8_cartan() -> list[list[int]]:
    block = [[0] * 8 for _ in range(8)]
    for i in range(8):
        block[i][i] = -2
    for a, b in _E8_EDGES:
        block[a - 1][b - 1] = 1
        block[b - 1][a - 1] = 1
    return block


@dataclass(frozen=True)
class AmbientLattice:
    """An integral lattice given by its Gram matrix in a fixed basis."""

    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        check_symmetric(self.gram)
        if len(self.basis_labels) != len(self.gram):
            raise ValueError("one basis label per Gram row is required")
        nonzero = tuple(
            tuple((j, x) for j, x in enumerate(row) if x) for row in self.gram
        )
        object.__setattr__(self, "_nonzero_rows", nonzero)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, a, b) -> int:
        """The bilinear form a^T . gram . b, exactly."""
        va = _as_vector(a, self.rank)
        vb = _as_vector(b, self.rank)
        total = 0
        for i, xi in enumerate(va):
            if xi:
                total += xi * sum(val * vb[j] for j, val in self._nonzero_rows[i])
        return total

    def gram_times(self, v) -> tuple[int, ...]:
        """Pairings of v with every basis vector."""
        vv = _as_vector(v, self.rank)
        return tuple(
            sum(val * vv[j] for j, val in row) for row in self._nonzero_rows
        )

    def divisibility(self, v) -> int:
        """Positive generator of the ideal (v, Lambda) of pairings."""
        pairings = self.gram_times(v)
        d = 0
        for x in pairings:
            d = math.gcd(d, x)
        if d == 0:
            raise ValueError("divisibility of the zero vector is undefined")
        return d

    def signature(self) -> tuple[int, int, int]:
        return inertia(self.gram)

    def determinant(self) -> int:
        det = determinant(self.gram)
        return int(det)


def make_k3_2_lattice() -> AmbientLattice:
    """The rank-23 lattice U^3 + (-E8)^2 + <-2> with its frozen basis order."""
    gram = [[0] * AMBIENT_RANK for _ in range(AMBIENT_RANK)]
    for k in range(3):
        i = 2 * k
        gram[i][i + 1] = 1
        gram[i + 1][i] = 1
    e8 = _negated_e8_cartan()
    for offset in (6, 14):
        for i in range(8):
            for j in range(8):
                gram[offset + i][offset + j] = e8[i][j]
    gram[22][22] = -2
    return AmbientLattice(
        gram=tuple(tuple(row) for row in gram),
        basis_labels=BASIS_LABELS,
    )


K3_2_LATTICE = make_k3_2_lattice()


def bb_pair(a, b) -> int:
    """Beauville-Bogomolov pairing of two ambient vectors."""
    return K3_2_LATTICE.pair(a, b)


def divisibility(v) -> int:
    return K3_2_LATTICE.divisibility(v)


def basis_vector(label: str) -> tuple[int, ...]:
    idx = BASIS_LABELS.index(label)
    return tuple(1 if i == idx else 0 for i in range(AMBIENT_RANK))


def vector_from_labels(coeffs: dict[str, int]) -> tuple[int, ...]:
    """Integer combination of named basis vectors, e.g. {"e1": 1, "f1": 1}."""
    out = [0] * AMBIENT_RANK
    for label, c in coeffs.items():
        out[BASIS_LABELS.index(label)] += c
    return tuple(out)


def admissible_square_div(square: int, div: int) -> bool:
    """Whether a primitive vector with this square and divisibility exists.

    The form is even, so odd squares never occur.  A divisibility-2 vector
    is 2v + a*delta with a odd, whose square 4(v,v) - 2a^2 is -2 mod 8;
    conversely every square in that class is realized inside U + <-2>.
    """
    if div not in (1, 2):
        raise ValueError("divisibility must be 1 or 2")
    if square % 2:
        return False
    if div == 1:
        return True
    return square % 8 == 6


@dataclass(frozen=True)
class CurveClass:
    """A dual class rho / div with half-integral square."""

    numerator: tuple[int, ...]
    denominator: int
    square: Fraction


def dual_class(rho) -> CurveClass:
    """The curve class dual to a wall vector.

    The denominator is the divisibility clamped to {1, 2}: the discriminant
    group has order 2, so primitive vectors never exceed divisibility 2.
    """
    v = _as_vector(rho, AMBIENT_RANK)
    div = divisibility(v)
    den = min(div, 2)
    return CurveClass(v, den, Fraction(bb_pair(v, v), den * den))


def signature_of(gram) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) by exact rational diagonalization."""
    check_symmetric(gram)
    return inertia(gram)


class PicardLattice:
    """A sublattice of divisor classes embedded in the ambient lattice.

    Vectors handed to the methods are in Picard coordinates with respect to
    the stored basis; the basis itself is a tuple of ambient vectors.
    """

    def __init__(self, basis: Iterable[Sequence[int]], ambient: AmbientLattice = K3_2_LATTICE):
        self.ambient = ambient
        self.basis = tuple(_as_vector(b, ambient.rank) for b in basis)
        if not self.basis:
            raise ValueError("Picard basis must be nonempty")
        if rank_of(self.basis) != len(self.basis):
            raise ValueError("Picard basis vectors are linearly dependent")
        self.gram = tuple(
            tuple(ambient.pair(x, y) for y in self.basis) for x in self.basis
        )

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pair(self, x, y) -> int:
        vx = _as_vector(x, self.rank)
        vy = _as_vector(y, self.rank)
        return sum(
            vx[i] * sum(self.gram[i][j] * vy[j] for j in range(self.rank) if vy[j])
            for i in range(self.rank)
            if vx[i]
        )

    def square(self, x) -> int:
        return self.pair(x, x)

    def gram_times(self, x) -> tuple[int, ...]:
        vx = _as_vector(x, self.rank)
        return tuple(
            sum(row[j] * vx[j] for j in range(self.rank)) for row in self.gram
        )

    def to_ambient(self, x) -> tuple[int, ...]:
        vx = _as_vector(x, self.rank)
        out = [0] * self.ambient.rank
        for c, b in zip(vx, self.basis):
            if c:
                for i, bi in enumerate(b):
                    if bi:
                        out[i] += c * bi
        return tuple(out)

    def from_ambient(self, v) -> tuple[Fraction, ...] | None:
        """Rational Picard coordinates of an ambient vector, or None."""
        vv = _as_vector(v, self.ambient.rank)
        cols = [[self.basis[j][i] for j in range(self.rank)] for i in range(self.ambient.rank)]
        sol = solve_exact(cols, list(vv))
        return tuple(sol) if sol is not None else None

    def signature(self) -> tuple[int, int, int]:
        return inertia(self.gram)

    def is_hyperbolic(self) -> bool:
        return self.signature() == (1, self.rank - 1, 0)
