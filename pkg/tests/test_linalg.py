import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pmdscodes import Matrix, determinant, field_new, is_invertible, rank, ring_new, solve
from pmdscodes.linalg import SingularMatrixError, block_diag, inverse, matvec

from oracles import leibniz_det


def rand_matrix(alg, k, rng, cols=None):
    return Matrix(alg, [[rng.randrange(alg.size) for _ in range(cols or k)] for _ in range(k)])


def test_identity_and_zero(gf16):
    for k in range(1, 6):
        I = Matrix.identity(gf16, k)
        assert determinant(I) == 1
        assert is_invertible(I)
        assert rank(I) == k
        Z = Matrix.zeros(gf16, k, k)
        assert determinant(Z) == 0
        assert not is_invertible(Z)
        assert rank(Z) == 0


def test_two_by_two_vandermonde(gf16):
    for i0 in range(15):
        for i1 in range(15):
            M = Matrix(gf16, [[1, 1], [gf16.alpha_pow(i0), gf16.alpha_pow(i1)]])
            assert determinant(M) == gf16.alpha_pow(i0) ^ gf16.alpha_pow(i1)


def test_repeated_column_gives_zero(gf16):
    rng = random.Random(3)
    M = rand_matrix(gf16, 4, rng)
    rows = [list(r) for r in M.rows]
    for r in rows:
        r[2] = r[0]
    assert determinant(Matrix(gf16, rows)) == 0


def test_non_square_rejected(gf16):
    with pytest.raises(ValueError):
        determinant(Matrix.zeros(gf16, 2, 3))
    with pytest.raises(ValueError):
        is_invertible(Matrix.zeros(gf16, 2, 3))


@pytest.mark.parametrize("alg", [field_new(4), field_new(5), field_new(8), ring_new(7), ring_new(17)],
                         ids=lambda a: a.name)
def test_determinant_matches_leibniz(alg):
    rng = random.Random(11)
    for k in range(1, 6):
        for _ in range(10):
            M = rand_matrix(alg, k, rng)
            assert determinant(M) == leibniz_det(M.rows, alg.mul)


def test_block_diagonal_multiplicative(gf16):
    rng = random.Random(5)
    for _ in range(20):
        A, B = rand_matrix(gf16, 2, rng), rand_matrix(gf16, 3, rng)
        assert determinant(block_diag(gf16, A, B)) == gf16.mul(determinant(A), determinant(B))


@given(st.integers(0, 2**32), st.integers(1, 15), st.integers(0, 3))
def test_row_scaling(seed, c, row):
    F = field_new(4)
    M = rand_matrix(F, 4, random.Random(seed))
    assert determinant(M.scale_row(row, c)) == F.mul(c, determinant(M))


def test_solve_identity_and_zero(gf16):
    I = Matrix.identity(gf16, 4)
    assert solve(I, [3, 1, 4, 1]) == [3, 1, 4, 1]
    rng = random.Random(2)
    while True:
        A = rand_matrix(gf16, 4, rng)
        if is_invertible(A):
            break
    assert solve(A, [0, 0, 0, 0]) == [0, 0, 0, 0]


@pytest.mark.parametrize("alg", [field_new(4), ring_new(7), ring_new(17)], ids=lambda a: a.name)
def test_solve_multiply_back(alg):
    rng = random.Random(7)
    done = 0
    while done < 30:
        A = rand_matrix(alg, 4, rng)
        if not is_invertible(A):
            with pytest.raises(SingularMatrixError):
                solve(A, [1, 0, 0, 0])
            continue
        b = [rng.randrange(alg.size) for _ in range(4)]
        assert matvec(A, solve(A, b)) == b
        assert (inverse(A) @ A) == Matrix.identity(alg, 4)
        done += 1


def test_tall_full_column_rank_solve(gf16):
    rng = random.Random(9)
    A = rand_matrix(gf16, 5, rng, cols=3)
    assert rank(A) == 3
    x = [7, 0, 9]
    assert solve(A, matvec(A, x)) == x


def test_ring_invertible_iff_unit_determinant():
    R = ring_new(7)
    rng = random.Random(4)
    for _ in range(300):
        M = rand_matrix(R, 3, rng)
        assert is_invertible(M) == R.is_unit(determinant(M))


def test_vandermonde_rank(gf16):
    for m in range(1, 5):
        H0 = Matrix(gf16, [[gf16.alpha_pow(k * i) for i in range(5)] for k in range(m)])
        assert rank(H0) == m


def _bijective_2x2_all(R):
    """Exhaustive: x -> A x is a bijection of R^2, for every 2x2 A over R."""
    q = R.size
    mul = np.array([[R.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    x0, x1 = np.divmod(np.arange(q * q), q)
    out = {}
    for a00 in range(q):
        for a01 in range(q):
            top = mul[a00][x0] ^ mul[a01][x1]
            # rows: (a10, a11) pairs
            bottom = (mul[:, x0][:, None, :] ^ mul[:, x1][None, :, :]).reshape(q * q, q * q)
            images = top[None, :] * q + bottom
            images.sort(axis=1)
            bij = (np.diff(images, axis=1) != 0).all(axis=1)
            for k, ok in enumerate(bij):
                out[(a00, a01, k // q, k % q)] = bool(ok)
    return out


def test_ring_invertibility_matches_exhaustive_solvability_p5():
    R = ring_new(5)
    truth = _bijective_2x2_all(R)
    assert len(truth) == 16**4
    for (a, b, c, d), ok in truth.items():
        assert is_invertible(Matrix(R, [[a, b], [c, d]])) == ok


def test_ring_invertibility_matches_solvability_p7_sampled():
    R = ring_new(7)
    rng = random.Random(0)
    vecs = [(x, y) for x in range(64) for y in range(64)]
    for _ in range(60):
        A = rand_matrix(R, 2, rng)
        images = {tuple(matvec(A, v)) for v in vecs}
        assert is_invertible(A) == (len(images) == len(vecs))
