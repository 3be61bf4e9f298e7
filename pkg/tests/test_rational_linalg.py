import random
from fractions import Fraction

import pytest

from hyperwall.rational_linalg import (
    determinant,
    inertia,
    integer_interval,
    ldl_positive,
    linear_form_basis,
    rank_of,
    solve_exact,
)
from lattice_fixtures import cofactor_det


def random_matrix(rng, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def random_symmetric(rng, n, lo=-6, hi=6):
    m = random_matrix(rng, n, lo, hi)
    return [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]


class TestDeterminant:
    def test_matches_cofactor_expansion(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 5)
            m = random_matrix(rng, n)
            assert determinant(m) == cofactor_det(m)

    def test_singular(self):
        assert determinant([[1, 2], [2, 4]]) == 0

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            determinant([[1, 2, 3], [4, 5, 6]])


class TestInertia:
    def test_diagonal(self):
        assert inertia([[3, 0, 0], [0, -1, 0], [0, 0, 0]]) == (1, 1, 1)

    def test_zero_matrix(self):
        assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)

    def test_hyperbolic_plane_zero_diagonal(self):
        assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)

    def test_sylvester_invariance(self):
        # inertia is a congruence invariant: A and U^T A U agree for any
        # invertible U
        rng = random.Random(23)
        done = 0
        while done < 30:
            n = rng.randint(1, 5)
            a = random_symmetric(rng, n)
            u = random_matrix(rng, n, -3, 3)
            if determinant(u) == 0:
                continue
            uau = [
                [
                    sum(u[k][i] * a[k][l] * u[l][j] for k in range(n) for l in range(n))
                    for j in range(n)
                ]
                for i in range(n)
            ]
            assert inertia(uau) == inertia(a)
            done += 1

    def test_counts_sum_to_dimension(self):
        rng = random.Random(5)
        for _ in range(30):
            n = rng.randint(1, 6)
            p, m, z = inertia(random_symmetric(rng, n))
            assert p + m + z == n

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            inertia([[0, 1], [2, 0]])


class TestRankSolve:
    def test_rank(self):
        assert rank_of([[1, 0], [0, 1]]) == 2
        assert rank_of([[1, 2], [2, 4]]) == 1
        assert rank_of([[0, 0]]) == 0

    def test_solve_recovers_solution(self):
        rng = random.Random(7)
        done = 0
        while done < 30:
            n = rng.randint(1, 4)
            m = n + rng.randint(0, 2)
            a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
            if rank_of(a) < n:
                continue
            x = [rng.randint(-7, 7) for _ in range(n)]
            b = [sum(a[i][j] * x[j] for j in range(n)) for i in range(m)]
            assert solve_exact(a, b) == [Fraction(v) for v in x]
            done += 1

    def test_solve_detects_inconsistency(self):
        a = [[1, 0], [0, 1], [1, 1]]
        assert solve_exact(a, [1, 1, 5]) is None

    def test_solve_rejects_column_deficiency(self):
        with pytest.raises(ValueError):
            solve_exact([[1, 2], [2, 4]], [1, 2])


class TestLinearFormBasis:
    def test_properties(self):
        rng = random.Random(3)
        import math

        for _ in range(60):
            n = rng.randint(1, 6)
            w = [rng.randint(-9, 9) for _ in range(n)]
            if not any(w):
                w[0] = 1
            d, u, kernel = linear_form_basis(w)
            g = 0
            for x in w:
                g = math.gcd(g, x)
            assert d == g
            assert sum(wi * ui for wi, ui in zip(w, u)) == d
            for vec in kernel:
                assert sum(wi * vi for wi, vi in zip(w, vec)) == 0
            cols = [u] + kernel
            mat = [[cols[j][i] for j in range(n)] for i in range(n)]
            assert determinant(mat) in (1, -1)

    def test_zero_form_rejected(self):
        with pytest.raises(ValueError):
            linear_form_basis([0, 0])


class TestLdl:
    def test_reconstructs_form(self):
        rng = random.Random(17)
        done = 0
        while done < 25:
            n = rng.randint(1, 5)
            b = random_matrix(rng, n, -4, 4)
            if determinant(b) == 0:
                continue
            # B^T B is positive definite for invertible B
            m = [
                [sum(b[k][i] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
            d, coef = ldl_positive(m)
            assert all(di > 0 for di in d)
            for _ in range(5):
                x = [rng.randint(-4, 4) for _ in range(n)]
                direct = sum(
                    x[i] * m[i][j] * x[j] for i in range(n) for j in range(n)
                )
                viaforms = sum(
                    d[i] * (x[i] + sum(coef[i][j] * x[j] for j in range(i + 1, n))) ** 2
                    for i in range(n)
                )
                assert viaforms == direct
            done += 1

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError):
            ldl_positive([[1, 0], [0, -1]])
        with pytest.raises(ValueError):
            ldl_positive([[0, 1], [1, 0]])


class TestIntegerInterval:
    def test_matches_direct_scan(self):
        rng = random.Random(29)
        for _ in range(300):
            center = Fraction(rng.randint(-40, 40), rng.randint(1, 7))
            radius_sq = Fraction(rng.randint(-5, 900), rng.randint(1, 5))
            got = list(integer_interval(center, radius_sq))
            expected = [
                t for t in range(-120, 121) if (t - center) ** 2 <= radius_sq
            ]
            assert got == expected

    def test_negative_radius_is_empty(self):
        assert list(integer_interval(Fraction(1, 2), Fraction(-1))) == []
