"""Dense linear algebra over F_p (small matrices, plain row reduction)."""

from __future__ import annotations


def rref_mod_p(mat, p):
    """Reduced row echelon form mod p. Returns (R, pivots)."""
    rows = [[x % p for x in row] for row in mat]
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def kernel_mod_p(mat, p):
    """Basis of {x : x*mat = 0 mod p} (row vectors, length = len(mat))."""
    m = len(mat)
    if m == 0:
        return []
    ncols = len(mat[0])
    # Augment [mat | I] and row-reduce the left block; rows whose left block
    # vanishes carry a kernel combination in the right block.
    work = [list(row) + [1 if i == k else 0 for k in range(m)]
            for i, row in enumerate([[x % p for x in r] for r in mat])]
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if work[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], p - 2, p)
        work[r] = [(x * inv) % p for x in work[r]]
        for i in range(m):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        r += 1
        if r == m:
            break
    out = []
    for i in range(m):
        if all(x % p == 0 for x in work[i][:ncols]):
            out.append([x % p for x in work[i][ncols:]])
    return out


def solve_mod_p(mat, rhs, p):
    """One x with x*mat = rhs mod p, or None (x length = len(mat))."""
    m = len(mat)
    ncols = len(mat[0]) if m else len(rhs)
    aug = [[mat[i][j] % p for i in range(m)] for j in range(ncols)]
    b = [x % p for x in rhs]
    # solve A^T y = b by Gaussian elimination, y = x
    n = ncols
    rows = [aug[j] + [b[j]] for j in range(n)]
    r = 0
    piv_of_col = {}
    for c in range(m):
        piv = None
        for i in range(r, n):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * g) % p for a, g in zip(rows[i], rows[r])]
        piv_of_col[c] = r
        r += 1
        if r == n:
            break
    x = [0] * m
    for c, rr in piv_of_col.items():
        x[c] = rows[rr][m] % p
    # consistency check
    for i in range(n):
        if all(rows[i][c] % p == 0 for c in range(m)) and rows[i][m] % p:
            return None
    # verify (cheap, guards the transpose bookkeeping)
    for j in range(ncols):
        s = 0
        for i in range(m):
            s += x[i] * mat[i][j]
        if (s - rhs[j]) % p:
            return None
    return x


def matmul_mod_p(a, b, p):
    n, k = len(a), len(b[0])
    m = len(b)
    out = [[0] * k for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(m):
            f = ai[j] % p
            if f:
                bj = b[j]
                for c in range(k):
                    oi[c] = (oi[c] + f * bj[c]) % p
    return out
