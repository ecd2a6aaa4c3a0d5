"""Absolute number fields: maximal orders, arithmetic, certified embeddings.

A field is built from a monic irreducible integer polynomial g.  Elements
are coefficient tuples over the power basis 1, theta, ..., theta^(n-1)
with gmpy2.mpq entries.  The maximal order is computed by the standard
p-maximalization loop (radical, then ring of multipliers) at every prime
whose square divides disc(g); callers that already know where the order
can be non-maximal pass those primes in to skip factoring a large
discriminant.

Real embeddings are kept as certified isolating intervals (ascending
order) and refined on demand, so signs of nonzero elements are exact.
Complex embeddings use mpmath and are only ever consumed by numerical
layers (lattice Gram matrices, regulators).
"""

from __future__ import annotations

from math import gcd

import mpmath
from gmpy2 import mpq

from . import arith, intmat, modp, polys


class ReducibleError(ValueError):
    """Raised when the defining polynomial splits; carries a witness factor."""

    def __init__(self, poly, factor):
        super().__init__(f"polynomial is reducible; factor {factor}")
        self.poly = list(poly)
        self.factor = list(factor)


def _as_int_poly(coeffs):
    out = []
    for c in coeffs:
        q = mpq(c)
        if q.denominator != 1:
            raise ValueError("defining polynomial must be integral")
        out.append(int(q))
    out = polys.pnorm(out)
    if not out or out[-1] != 1:
        raise ValueError("defining polynomial must be monic")
    return out


class NumberField:
    def __init__(self, coeffs, *, order=None, disc_primes=None, check=True, seed=0):
        g = _as_int_poly(coeffs)
        self.poly = tuple(g)
        self.n = len(g) - 1
        if self.n < 1:
            raise ValueError("degree must be at least 1")
        if check:
            _, facs = polys.factor_z(list(g), seed=seed)
            if len(facs) != 1 or facs[0][1] != 1:
                raise ReducibleError(g, facs[0][0])
        dg = polys.discriminant([mpq(c) for c in g])
        if dg == 0:
            raise ReducibleError(g, g)
        self.poly_disc = int(dg)

        if disc_primes is None:
            disc_primes = [p for p, e in arith.factorint(self.poly_disc).items() if e >= 2]
        if order is None:
            bnum, bden = intmat.identity(self.n), 1
        else:
            bnum = [list(map(int, row)) for row in order[0]]
            bden = int(order[1])
            bnum, bden = _normalize_basis(bnum, bden)
        for p in sorted(set(int(p) for p in disc_primes)):
            bnum, bden = self._maximalize_at(bnum, bden, p)
        self.basis_num, self.basis_den = _normalize_basis(bnum, bden)

        detb = intmat.det(self.basis_num)
        idx_num = self.basis_den ** self.n
        assert idx_num % detb == 0, "order basis must contain Z[theta]"
        self.index = idx_num // detb  # [O : Z[theta]]
        assert self.poly_disc % (self.index ** 2) == 0
        self.disc = self.poly_disc // self.index ** 2

        self._binv_num, self._binv_den = intmat.inverse_q(self.basis_num)
        self.mult_table = self._build_mult_table(self.basis_num, self.basis_den)
        self._power_traces = self._build_power_traces()

        self._root_intervals = polys.isolate_real_roots([mpq(c) for c in g])
        self.r1 = len(self._root_intervals)
        self.r2 = (self.n - self.r1) // 2
        self.signature = (self.r1, self.r2)
        self._emb_cache = {}

    # ---- order construction ------------------------------------------------

    def _mult_table_for(self, bnum, bden):
        """w_i * w_j in order coordinates; integer n x n x n table."""
        n = self.n
        inv, invd = intmat.inverse_q(bnum)
        g = list(self.poly)
        table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                prod = _polmul_mod_g(bnum[i], bnum[j], g)
                # element is prod / bden^2; coords c solve c*B/bden = prod/bden^2
                raw = intmat.vec_mat(prod, inv)
                c = []
                for x in raw:
                    num = x
                    denom = invd * bden
                    assert num % denom == 0, "order is not closed under multiplication"
                    c.append(num // denom)
                table[i][j] = c
                table[j][i] = c
        return table

    def _maximalize_at(self, bnum, bden, p):
        n = self.n
        while True:
            mult = self._mult_table_for(bnum, bden)
            # Frobenius matrix on O/pO
            m = 1
            q = p
            while q < n:
                q *= p
                m += 1
            frob = []
            for i in range(n):
                e = [0] * n
                e[i] = 1
                frob.append(_alg_pow_mod_p(e, p, mult, p))
            fm = frob
            for _ in range(m - 1):
                fm = modp.matmul_mod_p(fm, frob, p)
            rad = modp.kernel_mod_p(fm, p)
            # J = radical + p*O as a sublattice of O (rows = O-coords)
            jrows = [[x % p for x in v] for v in rad]
            jrows += [[p if k == i else 0 for k in range(n)] for i in range(n)]
            mj = intmat.hnf_rows(jrows)
            assert len(mj) == n
            # multiplier ring: x in O/pO with x*J inside p*J
            big = []
            for i in range(n):
                flat = []
                for j in range(n):
                    prod = [0] * n
                    for k in range(n):
                        ck = mj[j][k]
                        if ck:
                            row = mult[i][k]
                            for t in range(n):
                                prod[t] += ck * row[t]
                    y = _solve_triangular(mj, prod)
                    flat.extend(v % p for v in y)
                big.append(flat)
            ker = modp.kernel_mod_p(big, p)
            # new order generated by O and ker/p
            rows = [[p * x for x in row] for row in bnum]
            for c in ker:
                rows.append(intmat.vec_mat([x % p for x in c], bnum))
            new_num, new_den = _normalize_basis(intmat.hnf_rows(rows), p * bden)
            if (new_num, new_den) == (_normalize_basis(bnum, bden)):
                return bnum, bden
            bnum, bden = new_num, new_den

    def _build_mult_table(self, bnum, bden):
        return self._mult_table_for(bnum, bden)

    def _build_power_traces(self):
        # Newton's identities: traces of theta^k for k = 0 .. 2n-2
        n = self.n
        g = self.poly
        c = [mpq(g[i]) for i in range(n)]  # g = x^n + c[n-1] x^(n-1) + ... + c[0]
        ps = [mpq(n)]
        for k in range(1, 2 * n - 1):
            s = mpq(0)
            for i in range(1, min(k - 1, n) + 1):
                s += c[n - i] * ps[k - i]
            if k <= n:
                s += mpq(k) * c[n - k]
            ps.append(-s)
        return ps

    # ---- element arithmetic (power-basis coordinate tuples) ----------------

    def el(self, coeffs):
        v = [mpq(c) for c in coeffs]
        if len(v) > self.n:
            # reduce mod g
            g = [mpq(c) for c in self.poly]
            _, r = polys.pdivmod(v, g)
            v = r
        v += [mpq(0)] * (self.n - len(v))
        return tuple(v)

    @property
    def zero(self):
        return self.el([])

    @property
    def one(self):
        return self.el([1])

    @property
    def gen(self):
        return self.el([0, 1])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, a, c):
        c = mpq(c)
        return tuple(x * c for x in a)

    def mul(self, a, b):
        g = [mpq(c) for c in self.poly]
        prod = polys.pmul(list(a), list(b))
        _, r = polys.pdivmod(prod, g)
        return self.el(r)

    def power(self, a, k):
        k = int(k)
        if k < 0:
            return self.power(self.inv(a), -k)
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        # extended euclid in Q[x] against g
        g = [mpq(c) for c in self.poly]
        r0, r1 = g, polys.pnorm(list(a))
        s0, s1 = [], [mpq(1)]
        while polys.degree(r1) > 0:
            q, r = polys.pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, polys.psub(s0, polys.pmul(q, s1))
        assert r1, "gcd hit zero; g reducible?"
        c = 1 / mpq(r1[0])
        return self.el(polys.pscale(s1, c))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def equal(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def norm(self, a):
        g = [mpq(c) for c in self.poly]
        av = polys.pnorm(list(a))
        if not av:
            return mpq(0)
        return polys.resultant(g, av)

    def trace(self, a):
        return sum((mpq(c) * self._power_traces[k] for k, c in enumerate(a)), mpq(0))

    def order_norm(self, c):
        """Norm of an element given by integer coordinates over the integral
        basis: determinant of its multiplication matrix.  Much faster than
        the resultant route for elements produced by lattice reduction."""
        n = self.n
        mt = self.mult_table
        m = [[sum(int(c[k]) * mt[k][i][j] for k in range(n) if c[k])
              for j in range(n)] for i in range(n)]
        return intmat.det(m)

    def minpoly(self, a):
        """Monic minimal polynomial of a over Q (mpq coefficients)."""
        rows = []
        cur = self.one
        for k in range(self.n + 1):
            rows.append([mpq(x) for x in cur])
            dep = _rational_dependency(rows)
            if dep is not None:
                lead = dep[-1]
                return [x / lead for x in dep]
            cur = self.mul(cur, a)
        raise AssertionError("no dependency found")

    def charpoly_deg(self, a):
        """Degree of Q(a) over Q."""
        return polys.degree(self.minpoly(a))

    # ---- integrality -------------------------------------------------------

    def to_order(self, a):
        """Coordinates over the integral basis, or None if not integral."""
        d = self.basis_den
        out = []
        for j in range(self.n):
            s = mpq(0)
            for i in range(self.n):
                if a[i]:
                    s += a[i] * self._binv_num[i][j]
            s = s * d / self._binv_den
            if s.denominator != 1:
                return None
            out.append(int(s))
        return out

    def from_order(self, c):
        d = self.basis_den
        return tuple(
            mpq(sum(int(c[i]) * self.basis_num[i][j] for i in range(self.n)), d)
            for j in range(self.n)
        )

    def is_integral(self, a):
        return self.to_order(a) is not None

    def denominator(self, a):
        """Smallest positive d with d*a integral."""
        d = 1
        for x in a:
            q = int(mpq(x).denominator)
            d = d * q // gcd(d, q)
        # d*a has integer power coordinates, so it lies in Z[theta] <= O.
        # The set {m : m*a in O} is an ideal (d0), so strip primes greedily.
        if d > 1:
            for p in sorted(arith.factorint(d)):
                while d % p == 0 and self.to_order(self.scale(a, d // p)) is not None:
                    d //= p
        return d

    # ---- embeddings ---------------------------------------------------------

    def refine_real_roots(self, eps):
        g = [mpq(c) for c in self.poly]
        out = []
        for lo, hi in self._root_intervals:
            out.append(polys.refine_root(g, lo, hi, eps))
        self._root_intervals = out

    def real_interval(self, a, i, eps):
        """Certified interval for the i-th (ascending) real embedding of a."""
        while True:
            lo, hi = _interval_eval(a, *self._root_intervals[i])
            if hi - lo < eps:
                return lo, hi
            cur = self._root_intervals[i]
            self._root_intervals[i] = polys.refine_root(
                [mpq(c) for c in self.poly], cur[0], cur[1], (cur[1] - cur[0]) / 16
            )

    def real_sign(self, a, i):
        """Sign (+1/-1) of the i-th real embedding of a nonzero element."""
        if self.is_zero(a):
            raise ValueError("sign of zero")
        while True:
            lo, hi = _interval_eval(a, *self._root_intervals[i])
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            cur = self._root_intervals[i]
            self._root_intervals[i] = polys.refine_root(
                [mpq(c) for c in self.poly], cur[0], cur[1], (cur[1] - cur[0]) / 16
            )

    def sign_mask(self, a):
        """Bit i set iff the i-th real embedding of a is negative."""
        mask = 0
        for i in range(self.r1):
            if self.real_sign(a, i) < 0:
                mask |= 1 << i
        return mask

    def embeddings_c(self, prec=60):
        """All embeddings as mpmath complex numbers: r1 real ascending, then
        one per conjugate pair (positive imaginary part).  The real/complex
        split is decided by the certified signature, not a float threshold."""
        key = prec
        if key in self._emb_cache:
            return self._emb_cache[key]
        with mpmath.workdps(prec):
            roots = mpmath.polyroots(
                [mpmath.mpf(int(c)) for c in reversed(self.poly)],
                maxsteps=500, extraprec=200,
            )
            by_imag = sorted(roots, key=lambda z: abs(mpmath.im(z)))
            real_roots = sorted(by_imag[: self.r1], key=lambda z: mpmath.re(z))
            pairs = [z for z in by_imag[self.r1:] if mpmath.im(z) > 0]
            pairs.sort(key=lambda z: (mpmath.re(z), mpmath.im(z)))
            out = [mpmath.mpc(mpmath.re(r), 0) for r in real_roots] + list(pairs)
        assert len(pairs) == self.r2, "conjugate pairing failed"
        self._emb_cache[key] = out
        return out

    def t2_gram_int(self, scale_bits=40, prec=60):
        """Integer Gram matrix of the integral basis under the T2 form,
        scaled by 2^scale_bits (for lattice reduction)."""
        emb = self.embeddings_c(prec)
        n = self.n
        with mpmath.workdps(prec):
            w = []
            for i in range(n):
                row = []
                coeffs = self.from_order([1 if k == i else 0 for k in range(n)])
                for z in emb:
                    val = mpmath.mpc(0)
                    for c in reversed(coeffs):
                        q = mpq(c)
                        val = val * z + mpmath.mpf(int(q.numerator)) / mpmath.mpf(int(q.denominator))
                    row.append(val)
                w.append(row)
            gram = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    s = mpmath.mpf(0)
                    for k in range(len(emb)):
                        weight = 2 if k >= self.r1 else 1
                        s += weight * mpmath.re(w[i][k] * mpmath.conj(w[j][k]))
                    v = int(mpmath.nint(s * (1 << scale_bits)))
                    gram[i][j] = v
                    gram[j][i] = v
        for i in range(n):
            gram[i][i] += 1  # keep positive definite under rounding
        return gram

    def __repr__(self):
        return f"NumberField({list(self.poly)}, disc={self.disc})"


# ---- helpers ----------------------------------------------------------------


def _polmul_mod_g(a, b, g):
    """Product of int coefficient vectors reduced mod monic int g; int output."""
    n = len(g) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j in range(n):
                prod[k - n + j] -= c * g[j]
    out = prod[:n]
    out += [0] * (n - len(out))
    return out


def _alg_mul_mod_p(u, v, mult, p):
    n = len(u)
    out = [0] * n
    for i in range(n):
        if u[i] % p:
            for j in range(n):
                if v[j] % p:
                    f = u[i] * v[j]
                    row = mult[i][j]
                    for k in range(n):
                        out[k] = (out[k] + f * row[k]) % p
    return out


def _alg_pow_mod_p(u, e, mult, p):
    n = len(u)
    out = None
    base = [x % p for x in u]
    while e:
        if e & 1:
            out = base if out is None else _alg_mul_mod_p(out, base, mult, p)
        e >>= 1
        if e:
            base = _alg_mul_mod_p(base, base, mult, p)
    return out if out is not None else None


def _solve_triangular(mj, v):
    """Solve y * MJ = v for MJ in upper-triangular HNF with nonzero pivots.

    Column j < i of row i is zero, so walk the columns in ascending order:
    at column i only rows <= i contribute and rows < i were subtracted off
    already.  Exact; asserts that v lies in the row span."""
    n = len(mj)
    y = [0] * n
    rem = list(v)
    for i in range(n):
        piv = mj[i][i]
        assert rem[i] % piv == 0, "vector not in lattice"
        y[i] = rem[i] // piv
        if y[i]:
            for j in range(i, n):
                rem[j] -= y[i] * mj[i][j]
    assert all(x == 0 for x in rem)
    return y


def _normalize_basis(bnum, bden):
    rows = intmat.hnf_rows([list(map(int, r)) for r in bnum])
    g = int(bden)
    for row in rows:
        for x in row:
            g = gcd(g, x)
    if g > 1:
        rows = [[x // g for x in row] for row in rows]
        bden //= g
    return rows, int(bden)


def _interval_eval(coeffs, lo, hi):
    """Interval Horner evaluation of a polynomial at [lo, hi]."""
    cl = [mpq(c) for c in coeffs]
    if not cl:
        return mpq(0), mpq(0)
    alo = ahi = cl[-1]
    for c in reversed(cl[:-1]):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def _rational_dependency(rows):
    """If the last row depends on the previous ones, return the combination
    (c_0 ... c_k) with sum c_i rows[i] = 0 and c_k = 1; else None."""
    k = len(rows) - 1
    if k < 0:
        return None
    n = len(rows[0])
    # solve sum_{i<k} x_i rows[i] = -rows[k]: column equations, mpq Gauss
    aug = [[mpq(rows[i][j]) for i in range(k)] + [-mpq(rows[k][j])]
           for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        invp = 1 / aug[r][c]
        aug[r] = [t * invp for t in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [t - f * s for t, s in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    x = [mpq(0)] * k
    for rr, c in enumerate(piv_cols):
        x[c] = aug[rr][k]
    dep = x + [mpq(1)]
    for j in range(n):
        s = mpq(0)
        for i, c in enumerate(dep):
            s += c * mpq(rows[i][j])
        if s != 0:
            return None
    return dep
