"""Exact rational linear algebra primitives.

Everything operates on plain Python ints and ``fractions.Fraction``; no
floating point is used anywhere.  Wall membership and cone tests reduce to
exact sign and equality questions, so even a single rounded intermediate
value could silently drop or invent a wall.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence


def as_fraction_matrix(mat) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in mat]


def check_symmetric(mat) -> None:
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ValueError("matrix is not symmetric")


def determinant(mat) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    a = as_fraction_matrix(mat)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def rank_of(rows) -> int:
    """Rank over the rationals of a list of row vectors."""
    work = [[Fraction(x) for x in row] for row in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col] * inv
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def solve_exact(a_rows, b) -> list[Fraction] | None:
    """Solve A x = b for A with full column rank; None if inconsistent.

    A is given as m rows of length n with m >= n.  Raises ValueError when
    the columns are linearly dependent (no unique solution).
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix does not have full column rank")
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col] / pv
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, m):
        if aug[r][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for r, c in pivots:
        sol[c] = aug[r][n] / aug[r][c]
    return sol


def inertia(mat) -> tuple[int, int, int]:
    """Sylvester inertia (positive, negative, zero) of a symmetric matrix.

    Uses exact rational congruence diagonalization; zero diagonal entries
    are repaired by the standard row+column addition, which is valid in
    characteristic zero.
    """
    check_symmetric(mat)
    a = as_fraction_matrix(mat)
    n = len(a)
    pos = neg = zero = 0
    i = 0
    while i < n:
        piv = next((j for j in range(i, n) if a[j][j] != 0), None)
        if piv is None:
            off = next(
                ((j, k) for j in range(i, n) for k in range(j + 1, n) if a[j][k] != 0),
                None,
            )
            if off is None:
                zero += n - i
                break
            j, k = off
            for t in range(i, n):
                a[j][t] += a[k][t]
            for t in range(i, n):
                a[t][j] += a[t][k]
            piv = j
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            for t in range(n):
                a[t][i], a[t][piv] = a[t][piv], a[t][i]
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            aij = a[i][j]
            if aij:
                for k in range(j, n):
                    a[j][k] -= aij * a[i][k] / d
                    if k != j:
                        a[k][j] = a[j][k]
        i += 1
    return pos, neg, zero


def linear_form_basis(w: Sequence[int]) -> tuple[int, list[int], list[list[int]]]:
    """Unimodular basis adapted to the integer linear form w.

    Returns (d, u, kernel) with d = gcd(w) > 0, w . u = d, and kernel an
    integral basis of {x : w . x = 0}.  The change of basis is built from
    elementary column operations, so the kernel basis together with u spans
    the full integer lattice.
    """
    n = len(w)
    v = [int(x) for x in w]
    if not any(v):
        raise ValueError("zero linear form")
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    while True:
        nz = [j for j in range(n) if v[j]]
        if len(nz) == 1:
            break
        jmin = min(nz, key=lambda j: abs(v[j]))
        for j in nz:
            if j == jmin:
                continue
            q = v[j] // v[jmin]
            if q:
                v[j] -= q * v[jmin]
                cols[j] = [cj - q * ci for cj, ci in zip(cols[j], cols[jmin])]
    j0 = next(j for j in range(n) if v[j])
    if v[j0] < 0:
        v[j0] = -v[j0]
        cols[j0] = [-c for c in cols[j0]]
    kernel = [cols[j] for j in range(n) if j != j0]
    return v[j0], cols[j0], kernel


def ldl_positive(mat) -> tuple[list[Fraction], list[list[Fraction]]]:
    """LDL data of a positive definite symmetric rational matrix.

    Returns (d, coef) such that x^T N x = sum_i d[i] * (x_i + sum_{j>i}
    coef[i][j] * x_j)^2 with every d[i] > 0.  Raises ValueError when the
    matrix is not positive definite.
    """
    check_symmetric(mat)
    a = as_fraction_matrix(mat)
    n = len(a)
    d: list[Fraction] = []
    coef = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = a[i][i]
        if di <= 0:
            raise ValueError("matrix is not positive definite")
        d.append(di)
        for j in range(i + 1, n):
            coef[i][j] = a[i][j] / di
        for j in range(i + 1, n):
            aij = a[i][j]
            if aij:
                for k in range(j, n):
                    a[j][k] -= aij * a[i][k] / di
                    if k != j:
                        a[k][j] = a[j][k]
    return d, coef


def integer_interval(center: Fraction, radius_sq: Fraction) -> range:
    """All integers t with (t - center)^2 <= radius_sq, as a range.

    Solved entirely in integers: with center = p/q the condition reads
    (t*q - p)^2 <= radius_sq * q^2, and the integer square root of the
    floor of the right side gives exact endpoints.
    """
    if radius_sq < 0:
        return range(0)
    p, q = center.numerator, center.denominator
    bound = radius_sq * q * q
    s = isqrt(bound.numerator // bound.denominator)
    lo = -((s - p) // q)
    hi = (p + s) // q
    return range(lo, hi + 1)
