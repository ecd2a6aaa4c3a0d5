# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: trial division and mod-p distinct-degree splitting.

Same contracts as selmerbound._kernels.pure; see there for documentation.
Polynomial degrees are capped at MAXD - 1 (callers stay far below that).
"""

from libc.stdlib cimport free, malloc

cdef enum:
    MAXD = 64


def trial_factor(n, primes):
    n = int(n)
    if n <= 0:
        raise ValueError("trial_factor needs n > 0")
    cdef Py_ssize_t m = len(primes)
    cdef Py_ssize_t i, start = 0
    exps = [0] * m
    cdef unsigned long long *ps = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    if ps == NULL:
        raise MemoryError
    for i in range(m):
        ps[i] = primes[i]
    cdef int e
    # Python-arithmetic phase while n does not fit in 63 bits.
    while (n >> 63) != 0 and start < m:
        if n % primes[start] == 0:
            e = 0
            while n % primes[start] == 0:
                n //= primes[start]
                e += 1
            exps[start] = e
        start += 1
    cdef unsigned long long nn, p
    if (n >> 63) != 0:
        free(ps)
        return exps, n
    nn = n
    for i in range(start, m):
        p = ps[i]
        if nn == 1 or p * p > nn:
            break
        if nn % p == 0:
            e = 0
            while nn % p == 0:
                nn //= p
                e += 1
            exps[i] = e
    # Whatever survived below sqrt is prime; binary-search the base for it.
    cdef Py_ssize_t lo = 0, hi = m, mid
    if nn != 1 and m > 0 and nn <= ps[m - 1]:
        while lo < hi:
            mid = (lo + hi) // 2
            if ps[mid] < nn:
                lo = mid + 1
            else:
                hi = mid
        if lo < m and ps[lo] == nn:
            exps[lo] += 1
            nn = 1
    free(ps)
    return exps, int(nn)


cdef void _polmod(unsigned long long *a, int *da, unsigned long long *f, int df,
                  unsigned long long p) noexcept:
    cdef int i, shift
    cdef unsigned long long c
    while da[0] >= df:
        c = a[da[0]] % p
        if c:
            shift = da[0] - df
            for i in range(df):
                a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p
        da[0] -= 1
    while da[0] >= 0 and a[da[0]] == 0:
        da[0] -= 1


cdef void _polmulmod(unsigned long long *a, int da, unsigned long long *b, int db,
                     unsigned long long *f, int df, unsigned long long p,
                     unsigned long long *out, int *dout) noexcept:
    cdef unsigned long long tmp[2 * MAXD]
    cdef int i, j
    if da < 0 or db < 0:
        dout[0] = -1
        return
    for i in range(da + db + 1):
        tmp[i] = 0
    for i in range(da + 1):
        if a[i]:
            for j in range(db + 1):
                tmp[i + j] = (tmp[i + j] + a[i] * b[j]) % p
    dout[0] = da + db
    while dout[0] >= 0 and tmp[dout[0]] == 0:
        dout[0] -= 1
    _polmod(tmp, dout, f, df, p)
    for i in range(dout[0] + 1):
        out[i] = tmp[i]


cdef void _polgcd(unsigned long long *a, int da, unsigned long long *b, int db,
                  unsigned long long p, unsigned long long *g, int *dg) noexcept:
    cdef unsigned long long ra[MAXD]
    cdef unsigned long long rb[MAXD]
    cdef unsigned long long inv
    cdef int i, dra = da, drb = db
    for i in range(da + 1):
        ra[i] = a[i] % p
    for i in range(db + 1):
        rb[i] = b[i] % p
    while dra >= 0 and ra[dra] == 0:
        dra -= 1
    while drb >= 0 and rb[drb] == 0:
        drb -= 1
    while drb >= 0:
        # make rb monic, reduce ra mod rb, swap
        inv = _inv(rb[drb], p)
        for i in range(drb + 1):
            rb[i] = (rb[i] * inv) % p
        _polmod(ra, &dra, rb, drb, p)
        for i in range(max2(dra, drb) + 1):
            ra[i], rb[i] = rb[i], ra[i]
        dra, drb = drb, dra
    if dra >= 0:
        inv = _inv(ra[dra], p)
        for i in range(dra + 1):
            ra[i] = (ra[i] * inv) % p
    dg[0] = dra
    for i in range(dra + 1):
        g[i] = ra[i]


cdef inline int max2(int x, int y) noexcept:
    return x if x > y else y


cdef unsigned long long _inv(unsigned long long a, unsigned long long p) noexcept:
    # Fermat inverse via square-and-multiply.
    cdef unsigned long long r = 1, base = a % p
    cdef unsigned long long e = p - 2
    while e:
        if e & 1:
            r = (r * base) % p
        base = (base * base) % p
        e >>= 1
    return r


def splitting_degrees(coeffs, p_in):
    """Degrees of irreducible factors of a monic squarefree poly mod p."""
    cdef unsigned long long p = p_in
    cdef unsigned long long f[MAXD]
    cdef unsigned long long h[MAXD]
    cdef unsigned long long hm[MAXD]
    cdef unsigned long long g[MAXD]
    cdef unsigned long long q[MAXD]
    cdef unsigned long long c
    cdef int df, dh, dhm, dg, dq, i, d, shift
    df = len(coeffs) - 1
    if df + 1 >= MAXD:
        raise ValueError("degree too large for compiled kernel")
    for i in range(df + 1):
        f[i] = coeffs[i] % p
    if f[df] != 1:
        raise ValueError("polynomial must be monic mod p")
    degs = []
    # h = x
    h[0] = 0
    h[1] = 1
    dh = 1
    _polmod(h, &dh, f, df, p)
    d = 0
    cdef unsigned long long e
    cdef unsigned long long sq[MAXD]
    cdef int dsq
    while df > 0:
        d += 1
        if 2 * d > df:
            degs.append(df)
            break
        # h = h^p mod f
        e = p
        # result starts at 1
        sq[0] = 1
        dsq = 0
        while e:
            if e & 1:
                _polmulmod(sq, dsq, h, dh, f, df, p, sq, &dsq)
            e >>= 1
            if e:
                _polmulmod(h, dh, h, dh, f, df, p, h, &dh)
        for i in range(dsq + 1):
            h[i] = sq[i]
        dh = dsq
        # g = gcd(h - x, f)
        dhm = dh
        for i in range(dh + 1):
            hm[i] = h[i]
        if dhm < 1:
            dhm = 1
            for i in range(dh + 1, 2):
                hm[i] = 0
        hm[1] = (hm[1] + p - 1) % p
        while dhm >= 0 and hm[dhm] == 0:
            dhm -= 1
        _polgcd(hm, dhm, f, df, p, g, &dg)
        if dg > 0:
            for i in range(dg // d):
                degs.append(d)
            # f //= g (both monic)
            dq = df - dg
            for i in range(dq + 1):
                q[i] = 0
            while df >= dg:
                c = f[df] % p
                shift = df - dg
                q[shift] = c
                if c:
                    for i in range(dg + 1):
                        f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p
                df -= 1
                while df >= 0 and f[df] == 0:
                    df -= 1
            df = dq
            for i in range(df + 1):
                f[i] = q[i]
            _polmod(h, &dh, f, df, p)
    return sorted(degs)
