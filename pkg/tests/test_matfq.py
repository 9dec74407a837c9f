import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdcodes.errors import DimensionMismatch, IndexOutOfRange
from lcdcodes.galois import field_of_order, make_field
from lcdcodes.matfq import (
    MatrixFq,
    det,
    det_by_permutations,
    diag_add,
    gram_euclidean,
    gram_hermitian,
    kernel,
    matmul,
    principal_delete,
    rank,
    row_basis,
    rref,
)

from oracles import span

F5 = make_field(5)


def M(F, rows):
    return MatrixFq(F, rows)


def rand_matrix(F, r, c, rnd):
    return M(F, [[rnd.randrange(F.q) for _ in range(c)] for _ in range(r)])


def test_rref_examples():
    R, r, piv = rref(MatrixFq.identity(F5, 3))
    assert R == MatrixFq.identity(F5, 3) and r == 3
    R, r, piv = rref(M(F5, [[1, 2], [2, 4]]))
    assert r == 1 and piv == [0]
    assert R == M(F5, [[1, 2], [0, 0]])
    R, r, piv = rref(MatrixFq.zeros(F5, 2, 3))
    assert r == 0 and R.is_zero()


def test_det_examples():
    assert det(MatrixFq.identity(F5, 3)) == 1
    assert det(M(F5, [[1, 2], [3, 4]])) == 3
    assert det(M(F5, [[1, 1], [1, 1]])) == 0
    assert det(MatrixFq.zeros(F5, 0, 0)) == 1


def test_kernel_examples():
    assert kernel(MatrixFq.identity(F5, 3)).rows == 0
    K = kernel(M(F5, [[0]]))
    assert K == M(F5, [[1]])
    K = kernel(M(F5, [[1, 2], [2, 4]]))
    assert K.rows == 1
    assert span(F5, K.tolist()) == span(F5, [(2, 4)])
    assert matmul(K, M(F5, [[1, 2], [2, 4]])).is_zero()


def test_gram_examples():
    assert gram_euclidean(MatrixFq.identity(F5, 3)) == MatrixFq.identity(F5, 3)
    assert gram_euclidean(M(F5, [[1, 2]])) == M(F5, [[0]])
    assert gram_euclidean(M(F5, [[1, 0, 2, 0], [0, 1, 0, 2]])).is_zero()
    F9 = make_field(3, 2, (1, 0, 1))
    opx = F9.from_coeffs((1, 1))
    assert gram_hermitian(M(F9, [[1, opx]]), 3) == M(F9, [[0]])
    F4 = make_field(2, 2, (1, 1, 1))
    assert gram_hermitian(M(F4, [[1, 1]]), 2) == M(F4, [[0]])
    assert gram_hermitian(MatrixFq.identity(F9, 2), 3) == MatrixFq.identity(F9, 2)


def test_principal_delete_examples():
    A = M(F5, [[1, 2, 3], [4, 0, 1], [2, 2, 2]])
    assert principal_delete(A, []) == A
    assert principal_delete(A, [0, 1, 2]).shape == (0, 0)
    assert det(principal_delete(A, [0, 1, 2])) == 1
    assert principal_delete(A, [1]) == M(F5, [[1, 3], [2, 2]])
    with pytest.raises(IndexOutOfRange, match="4"):
        principal_delete(A, [3])


def test_diag_add_examples():
    A = M(F5, [[1, 2], [3, 4]])
    assert diag_add(A, [0, 0]) == A
    assert diag_add(MatrixFq.zeros(F5, 2, 2), [1, 1]) == MatrixFq.identity(F5, 2)
    assert diag_add(M(F5, [[0]]), [3]) == M(F5, [[3]])
    with pytest.raises(DimensionMismatch):
        diag_add(A, [1])


def test_matmul_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        matmul(M(F5, [[1, 2]]), M(F5, [[1, 2]]))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_det_matches_permutation_expansion(q):
    F = field_of_order(q)
    rnd = random.Random(q)
    for _ in range(60):
        l = rnd.randint(1, 4)
        A = rand_matrix(F, l, l, rnd)
        assert det(A) == det_by_permutations(A)


@pytest.mark.parametrize("q", [2, 4, 5, 9, 16])
def test_kernel_and_rank_invariants(q):
    F = field_of_order(q)
    rnd = random.Random(100 + q)
    for _ in range(40):
        r, c = rnd.randint(1, 5), rnd.randint(1, 6)
        A = rand_matrix(F, r, c, rnd)
        K = kernel(A)
        assert K.rows == r - rank(A)
        if K.rows:
            assert matmul(K, A).is_zero()
        assert rank(A) <= min(r, c)
        assert rank(gram_euclidean(A)) <= rank(A)
        if F.m % 2 == 0:
            assert rank(gram_hermitian(A)) <= rank(A)


def test_row_basis_same_span():
    F = field_of_order(4)
    rnd = random.Random(3)
    for _ in range(20):
        A = rand_matrix(F, 3, 4, rnd)
        B = row_basis(A)
        assert B.rows == rank(A)
        assert span(F, B.tolist()) == span(F, A.tolist())


def _qualifying(F, k, rnd):
    """Random symmetric M whose principal minors of order > k - t - 1 vanish up to size t."""
    G = rand_matrix(F, k, k + rnd.randint(0, 3), rnd)
    Mx = gram_euclidean(G)
    t = -1
    while t + 1 < k and all(det(principal_delete(Mx, I)) == 0 for I in combinations(range(k), t + 1)):
        t += 1
    return Mx, t


@pytest.mark.parametrize("q", [4, 5, 7])
def test_diagonal_perturbation_factorization(q):
    F = field_of_order(q)
    rnd = random.Random(7 * q)
    checked = 0
    for _ in range(300):
        k = rnd.randint(1, 4)
        Mx, t = _qualifying(F, k, rnd)
        if t < 0:
            continue
        for J in combinations(range(k), rnd.randint(1, t + 1)):
            u = [rnd.randrange(1, q) if j in J else 0 for j in range(k)]
            lhs = det(diag_add(Mx, u))
            rhs = det(principal_delete(Mx, J))
            for j in J:
                rhs = rhs * F(u[j])
            assert lhs == rhs
            checked += 1
    assert checked > 0


@settings(max_examples=150, deadline=None)
@given(
    q=st.sampled_from([2, 3, 4, 5, 7, 8, 9]),
    rows=st.integers(1, 4),
    data=st.data(),
)
def test_det_multiplicative(q, rows, data):
    F = field_of_order(q)
    ent = st.lists(st.lists(st.integers(0, q - 1), min_size=rows, max_size=rows), min_size=rows, max_size=rows)
    A, B = M(F, data.draw(ent)), M(F, data.draw(ent))
    assert det(A @ B) == det(A) * det(B)
    assert det(A.T) == det(A)
    assert (det(A) != 0) == (rank(A) == rows)
