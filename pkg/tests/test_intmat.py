import random

from hypothesis import given, settings, strategies as st

from selmerbound import intmat


def test_xgcd():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (1, 1), (0, 0)]:
        g, s, t = intmat.xgcd(a, b)
        assert g == s * a + t * b
        assert g >= 0


def test_hnf_known():
    H, U = intmat.hnf([[2, 0], [1, 1]])
    assert H == [[1, 1], [0, 2]]
    assert intmat.matmul(U, [[2, 0], [1, 1]]) == H


def test_hnf_transform_is_unimodular():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randrange(1, 5)
        m = rng.randrange(1, 5)
        mat = [[rng.randrange(-9, 10) for _ in range(m)] for _ in range(n)]
        H, U = intmat.hnf(mat)
        assert intmat.matmul(U, mat) == H
        if n == len(U):
            assert abs(intmat.det(U)) == 1


def test_snf_known():
    assert intmat.snf([[2, 0], [0, 3]]) == [1, 6]
    assert intmat.snf([[0]]) == [0]


def test_snf_divisible_pivot_regression():
    # a pivot of 1 dividing its whole row and column once produced an
    # endless swap cycle; shape distilled from a class group pivot matrix
    n = 8
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in (0, 1, 3, 5):
        mat[i][6] = 1
    mat[6][6] = 2
    U, D, V = intmat.snf_with_transform(mat)
    assert intmat.matmul(intmat.matmul(U, mat), V) == D
    diag = [D[i][i] for i in range(n)]
    assert sorted(d for d in diag if d > 1) == [2]


def test_snf_tiny_regression():
    U, D, V = intmat.snf_with_transform([[1, 1], [0, 2]])
    assert intmat.matmul(intmat.matmul(U, [[1, 1], [0, 2]]), V) == D
    assert [D[0][0], D[1][1]] == [1, 2]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_snf_transform_identity(n, m, seed):
    rng = random.Random(seed)
    mat = [[rng.randrange(-6, 7) for _ in range(m)] for _ in range(n)]
    U, D, V = intmat.snf_with_transform(mat)
    assert intmat.matmul(intmat.matmul(U, mat), V) == D
    assert abs(intmat.det(U)) == 1
    assert abs(intmat.det(V)) == 1
    diag = [D[i][i] for i in range(min(n, m))]
    for i in range(len(diag) - 1):
        if diag[i]:
            assert diag[i + 1] % diag[i] == 0
        else:
            assert diag[i + 1] == 0
    for i in range(n):
        for j in range(m):
            if i != j:
                assert D[i][j] == 0


def test_det_bareiss():
    assert intmat.det([[1, 2], [3, 4]]) == -2
    assert intmat.det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randrange(1, 5)
        mat = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
        # expansion by minors as an independent check
        def minor_det(m):
            k = len(m)
            if k == 1:
                return m[0][0]
            tot = 0
            for j in range(k):
                sub = [row[:j] + row[j + 1:] for row in m[1:]]
                tot += (-1) ** j * m[0][j] * minor_det(sub)
            return tot
        assert intmat.det(mat) == minor_det(mat)


def test_left_kernel():
    mat = [[1, 2], [2, 4], [0, 1]]
    ker = intmat.left_kernel(mat)
    assert len(ker) == 1
    for row in ker:
        assert intmat.vec_mat(row, mat) == [0, 0]


def test_solve_right_and_inverse():
    A = [[2, 1], [1, 1]]
    X, d = intmat.solve_right(A, [[1, 0], [0, 1]])
    N, dn = intmat.inverse_q(A)
    assert intmat.matmul(A, N) == [[dn, 0], [0, dn]]


def test_lll_gram_reduces():
    # gram of a skewed planar lattice; reduced basis has smaller diagonal
    B = [[1, 0], [100, 1]]
    G = [[sum(B[i][k] * B[j][k] for k in range(2)) for j in range(2)]
         for i in range(2)]
    U = intmat.lll_gram(G)
    assert abs(intmat.det(U)) == 1
    BU = intmat.matmul(U, B)
    norms = [sum(x * x for x in row) for row in BU]
    assert max(norms) <= 2
