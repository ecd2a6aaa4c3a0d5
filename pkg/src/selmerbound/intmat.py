"""Exact integer matrix algorithms: HNF, SNF, kernels, determinants, LLL.

Conventions
-----------
Matrices are lists of row lists of Python ints.  The Hermite normal form
used everywhere is the *row* HNF: H = U * A with U unimodular, H in row
echelon form with positive pivots and entries above each pivot reduced
into [0, pivot).  Zero rows sink to the bottom.  This single convention
is shared by ideal arithmetic and relation processing.
"""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    bt = list(zip(*b))
    return [[sum(ar[i] * bc[i] for i in range(k)) for bc in bt] for ar in a]


def mat_vec(a, v):
    return [sum(r[i] * v[i] for i in range(len(v))) for r in a]


def vec_mat(v, a):
    n = len(a)
    assert len(v) == n
    m = len(a[0])
    return [sum(v[i] * a[i][j] for i in range(n)) for j in range(m)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def hnf(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF with transform: returns (H, U) with U*mat = H, U unimodular."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    H = [list(map(int, row)) for row in mat]
    U = identity(m)
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if H[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, m):
            if H[i][c]:
                g, s, t = xgcd(H[r][c], H[i][c])
                u1 = H[i][c] // g
                v1 = H[r][c] // g
                Hr, Hi = H[r], H[i]
                Ur, Ui = U[r], U[i]
                H[r] = [s * x + t * y for x, y in zip(Hr, Hi)]
                H[i] = [v1 * y - u1 * x for x, y in zip(Hr, Hi)]
                U[r] = [s * x + t * y for x, y in zip(Ur, Ui)]
                U[i] = [v1 * y - u1 * x for x, y in zip(Ur, Ui)]
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return H, U


def hnf_rows(mat) -> list[list[int]]:
    """Nonzero rows of the row HNF (the canonical lattice basis)."""
    H, _ = hnf(mat)
    return [row for row in H if any(row)]


def left_kernel(mat) -> list[list[int]]:
    """Basis of {x : x * mat = 0} (a saturated lattice)."""
    H, U = hnf(mat)
    return [U[i] for i in range(len(H)) if not any(H[i])]


def snf_with_transform(mat):
    """(U, D, V) with U*mat*V = D diagonal, d_i | d_{i+1}, U, V unimodular."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    A = [list(map(int, row)) for row in mat]
    U = identity(m)
    V = identity(n)

    def row_op(i, j, g, s, t, u1, v1):
        Ai, Aj = A[i], A[j]
        Ui, Uj = U[i], U[j]
        A[i] = [s * x + t * y for x, y in zip(Ai, Aj)]
        A[j] = [v1 * y - u1 * x for x, y in zip(Ai, Aj)]
        U[i] = [s * x + t * y for x, y in zip(Ui, Uj)]
        U[j] = [v1 * y - u1 * x for x, y in zip(Ui, Uj)]

    def col_op(i, j, g, s, t, u1, v1):
        for row in A:
            x, y = row[i], row[j]
            row[i] = s * x + t * y
            row[j] = v1 * y - u1 * x
        for row in V:
            x, y = row[i], row[j]
            row[i] = s * x + t * y
            row[j] = v1 * y - u1 * x

    k = 0
    while k < min(m, n):
        # find a nonzero entry in the remaining block
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if A[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            A[k], A[i0] = A[i0], A[k]
            U[k], U[i0] = U[i0], U[k]
        if j0 != k:
            for row in A:
                row[k], row[j0] = row[j0], row[k]
            for row in V:
                row[k], row[j0] = row[j0], row[k]
        while True:
            # clear column k (plain elimination when divisible: the xgcd
            # transform can otherwise swap rows around without progress)
            for i in range(k + 1, m):
                b = A[i][k]
                if not b:
                    continue
                a = A[k][k]
                if b % a == 0:
                    q = b // a
                    A[i] = [x - q * y for x, y in zip(A[i], A[k])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[k])]
                else:
                    g, s, t = xgcd(a, b)
                    row_op(k, i, g, s, t, b // g, a // g)
            # clear row k
            for j in range(k + 1, n):
                b = A[k][j]
                if not b:
                    continue
                a = A[k][k]
                if b % a == 0:
                    q = b // a
                    for row in A:
                        row[j] -= q * row[k]
                    for row in V:
                        row[j] -= q * row[k]
                else:
                    g, s, t = xgcd(a, b)
                    col_op(k, j, g, s, t, b // g, a // g)
            if all(A[i][k] == 0 for i in range(k + 1, m)) and all(
                A[k][j] == 0 for j in range(k + 1, n)
            ):
                break
        # divisibility: A[k][k] must divide everything below-right
        bad = None
        d = A[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if A[i][j] % d:
                    bad = i
                    break
            if bad:
                break
        if bad is not None:
            # add the offending row to row k and restart this pivot
            A[k] = [x + y for x, y in zip(A[k], A[bad])]
            U[k] = [x + y for x, y in zip(U[k], U[bad])]
            continue
        if A[k][k] < 0:
            A[k] = [-x for x in A[k]]
            U[k] = [-x for x in U[k]]
        k += 1
    D = A
    return U, D, V


def snf(mat) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... (with trailing zeros kept)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    _, D, _ = snf_with_transform(mat)
    return [abs(D[i][i]) for i in range(min(m, n))]


def det(mat) -> int:
    """Bareiss fraction-free determinant."""
    n = len(mat)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = None
            for i in range(k + 1, n):
                if A[i][k]:
                    piv = i
                    break
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve_right(A, B):
    """(X, d): A*X = B*d with X integral and d > 0 minimal for the Gauss run.

    A must be square nonsingular.  Plain rational elimination; sizes here
    are tiny (n <= 12) so Fractions are fine.
    """
    n = len(A)
    m = len(B[0])
    M = [
        [Fraction(int(A[i][j])) for j in range(n)]
        + [Fraction(int(B[i][j])) for j in range(m)]
        for i in range(n)
    ]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if M[i][k]:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        M[k] = [x * inv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                c = M[i][k]
                M[i] = [x - c * y for x, y in zip(M[i], M[k])]
    d = 1
    for i in range(n):
        for j in range(m):
            q = M[i][n + j].denominator
            d = d * q // _gcd(d, q)
    X = [[int(M[i][n + j] * d) for j in range(m)] for i in range(n)]
    return X, d


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def inverse_q(A):
    """Exact inverse as (N, d) with A^{-1} = N / d, d > 0."""
    n = len(A)
    X, d = solve_right(A, identity(n))
    return X, d


def lll_gram(G, exact=False):
    """LLL reduction driven by a positive definite integer Gram matrix.

    Returns a unimodular transform U such that the basis whose Gram is
    U*G*U^T is LLL-reduced.  The default float path retries in exact
    rational arithmetic if it runs into numerical trouble; callers that
    need shortness only heuristically can always use the result.
    """
    if not exact:
        try:
            return _lll_gram_impl(G, float)
        except (OverflowError, ZeroDivisionError, ValueError):
            pass
    return _lll_gram_impl(G, Fraction)


def _lll_gram_impl(G, num):
    n = len(G)
    U = identity(n)
    # current Gram, updated alongside U in O(n) per row operation
    cur = [[num(int(x)) for x in row] for row in G]
    delta = num(99) / num(100)
    half = num(1) / num(2)

    mu = [[num(0)] * n for _ in range(n)]
    B = [num(0)] * n

    def gs():
        for i in range(n):
            B[i] = cur[i][i]
            for j in range(i):
                s = cur[i][j]
                for k in range(j):
                    s -= mu[i][k] * mu[j][k] * B[k]
                if B[j] == 0:
                    raise ZeroDivisionError("gram not positive definite")
                mu[i][j] = s / B[j]
                B[i] = B[i] - mu[i][j] * mu[i][j] * B[j]
            if B[i] <= 0:
                raise ValueError("gram not positive definite")

    def addmul_row(i, j, q):
        # row_i -= q * row_j, applied to U and to cur (row and column)
        U[i] = [x - q * y for x, y in zip(U[i], U[j])]
        cur[i] = [x - q * y for x, y in zip(cur[i], cur[j])]
        for r in range(n):
            cur[r][i] = cur[r][i] - q * cur[r][j] if r != i else cur[r][i]
        cur[i][i] = cur[i][i] - q * cur[i][j]

    gs()
    k = 1
    steps = 0
    while k < n:
        steps += 1
        if steps > 10000:
            raise ValueError("LLL failed to converge")
        for j in range(k - 1, -1, -1):
            m = mu[k][j]
            q = int(m + half) if m >= 0 else -int(-m + half)
            if q:
                addmul_row(k, j, q)
                gs()
        if B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            k += 1
        else:
            U[k], U[k - 1] = U[k - 1], U[k]
            cur[k], cur[k - 1] = cur[k - 1], cur[k]
            for row in cur:
                row[k], row[k - 1] = row[k - 1], row[k]
            gs()
            k = max(k - 1, 1)
    return U


def hnf_modular(mat, d: int) -> list[list[int]]:
    """Row HNF of the lattice spanned by mat rows plus d*Z^n.

    Entries are kept reduced mod d throughout; useful when the lattice is
    known to contain d*Z^n (e.g. an integral ideal containing its norm).
    """
    n = len(mat[0])
    rows = [[x % d for x in row] for row in mat] + [
        [d if i == j else 0 for j in range(n)] for i in range(n)
    ]
    H = hnf_rows(rows)
    assert len(H) == n
    return H
