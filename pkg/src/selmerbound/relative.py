"""Cubic extensions L = K[t]/(F) and their absolutizations.

F is a monic cubic with coefficients in the maximal order of K.  The
absolute model is built on a primitive element eta = t + k*theta; theta
and t are recovered inside L exactly, so the K-structure (relative
norms, sign conventions, which primes of L sit over which of K) is
available on top of plain NumberField arithmetic.

Real places of K are classified against F: a real embedding where F has
one real root keeps a single real extension ('ramified'), three real
roots give three ('unramified'); the three extensions are ordered by the
value of t, ascending.  All matching is done with certified intervals,
never floats.
"""

from __future__ import annotations

from gmpy2 import mpq

from . import arith, ideals, intmat, polys
from .numfield import NumberField, ReducibleError, _interval_eval


class RelativeReducibleError(ValueError):
    """F splits over K; carries a witness factor with K coefficients."""

    def __init__(self, factor):
        super().__init__("cubic is reducible over the base field")
        self.factor = factor  # list of K-elements, low to high


class RelativeCubic:
    def __init__(self, K: NumberField, F, *, disc_primes=None, seed=0):
        """F: length-4 list of K-elements (power-basis tuples), monic."""
        self.K = K
        F = [K.el(c) if not isinstance(c, tuple) else c for c in F]
        assert len(F) == 4 and K.equal(F[3], K.one), "monic cubic required"
        for c in F[:3]:
            assert K.is_integral(c), "coefficients must be integral"
        self.F = F

        self.disc_F = _cubic_disc_over_k(K, F)
        if K.is_zero(self.disc_F):
            raise ValueError("F is not separable")

        m = K.n
        self.degree = 3 * m

        # hints for the maximal order of L
        if disc_primes is None:
            nd = K.norm(self.disc_F)
            assert nd.denominator == 1
            ps = set(arith.factorint(abs(K.disc)))
            ps |= set(arith.factorint(int(nd)))
            disc_primes = sorted(ps)
        self._disc_primes = disc_primes

        self._l_primes_cache = {}
        self._absolutize(seed)
        self._classify_real_places()

    # ---- absolutization ------------------------------------------------------

    def _absolutize(self, seed):
        K = self.K
        m = K.n
        d = self.degree
        for k in range(0, 3 * d * d + 1):
            G = self._eta_charpoly(k)
            gq = [mpq(c) for c in G]
            if polys.degree(polys.pgcd_q(gq, polys.derivative(gq))) > 0:
                continue
            Gz = [int(c) for c in G]
            _, facs = polys.factor_z(list(Gz), seed=seed)
            if len(facs) != 1:
                raise RelativeReducibleError(
                    self._descend_factor(k, facs[0][0]))
            start = self._start_order(k, Gz)
            if start is None:
                # theta not recoverable from this shift; the disc-prime
                # hints are only valid relative to the O_K[t] order, so
                # a new shift is required rather than a bare Z[eta] start.
                continue
            L = NumberField(Gz, check=False, seed=seed,
                            order=start,
                            disc_primes=self._disc_primes)
            self.k_shift = k
            self.L = L
            self._locate_generators(k)
            self._basis_change()
            return
        raise AssertionError("no primitive shift found")

    def _eta_charpoly(self, k):
        """Characteristic polynomial of eta = t + k*theta over Q, monic
        integer coefficients, via evaluation-interpolation of a resultant."""
        K = self.K
        g = [mpq(c) for c in K.poly]
        d = self.degree
        xs = []
        ys = []
        z0 = -(d // 2)
        for i in range(d + 1):
            z = z0 + i
            # h(y) = F(z - k*y) with theta = y substituted into coefficients
            h = _subst_shift(K, self.F, z, k)
            val = polys.resultant(g, h) if polys.pnorm(h) else mpq(0)
            xs.append(mpq(z))
            ys.append(val)
        G = _lagrange(xs, ys)
        G = [mpq(c) for c in G] + [mpq(0)] * (d + 1 - len(G))
        assert G[d] == 1, "charpoly not monic"
        out = []
        for c in G:
            assert c.denominator == 1, "charpoly not integral"
            out.append(int(c))
        return out

    def _start_order(self, k, Gz):
        """Rows of the order generated by {w_a * t^j} over the power basis
        of eta.  Requires theta and t as polynomials in eta, which are not
        known until L exists -- so build them from scratch over Q[x]/(Gz)
        with plain polynomial arithmetic."""
        K = self.K
        m = K.n
        d = self.degree
        gq = [mpq(c) for c in Gz]

        theta = _common_root_mod(K, self.F, k, gq)
        if theta is None:
            return None
        t_poly = polys.psub([mpq(0), mpq(1)], polys.pscale(theta, k))
        _, t_poly = polys.pdivmod(t_poly, gq)

        rows = []
        den = 1
        elems = []
        tj = [mpq(1)]
        for j in range(3):
            for a in range(m):
                wa = K.from_order([1 if i == a else 0 for i in range(m)])
                # w_a(theta) * t^j mod G
                acc = [mpq(0)]
                for i, c in enumerate(wa):
                    if c:
                        th_i = _ppow_mod(theta, i, gq)
                        acc = polys.padd(acc, polys.pscale(th_i, c))
                prod = polys.pmul(acc, tj)
                _, prod = polys.pdivmod(prod, gq)
                elems.append(prod)
            tj = polys.pmul(tj, t_poly)
            _, tj = polys.pdivmod(tj, gq)
        for e in elems:
            for c in e:
                den = den * int(mpq(c).denominator) // _gcd(den, int(mpq(c).denominator))
        for e in elems:
            row = [0] * d
            for i, c in enumerate(e):
                row[i] = int(mpq(c) * den)
            rows.append(row)
        return rows, den

    def _locate_generators(self, k):
        L = self.L
        gq = [mpq(c) for c in L.poly]
        theta = _common_root_mod(self.K, self.F, k, gq)
        assert theta is not None, "theta not found in L"
        self.theta_L = L.el(theta)
        self.t_L = L.sub(L.gen, L.scale(self.theta_L, k))
        # sanity: g(theta_L) = 0 and F(t_L) = 0
        assert L.is_zero(_eval_at(L, [mpq(c) for c in self.K.poly], self.theta_L))
        Ft = L.zero
        for i, c in enumerate(self.F):
            term = self.emb(c)
            term = L.mul(term, L.power(self.t_L, i))
            Ft = L.add(Ft, term)
        assert L.is_zero(Ft)

    def _descend_factor(self, k, g_factor):
        """Trager descent: from a rational factor of the charpoly of eta,
        recover a factor of F over K as gcd(F(x), G_i(x + k*theta))."""
        K = self.K
        Gi = [mpq(c) for c in g_factor]
        kx_plus = [K.scale(K.gen, k), K.one]  # k*theta + x, coeffs in K
        acc = []
        for c in reversed(Gi):
            acc = _kpoly_mul(K, acc, kx_plus) if acc else []
            acc = _kpoly_add(K, acc, [K.el([c])])
        gcd = _kpoly_gcd(K, list(self.F), acc)
        assert 0 < _kdeg(K, gcd) < 3, "descent failed to find a proper factor"
        return gcd

    def _basis_change(self):
        """T: rows are power-eta coordinates of w_a * t^j; T inverse maps an
        L-element to K-coordinates over the basis 1, t, t^2."""
        K, L = self.K, self.L
        m, d = K.n, self.degree
        rows = []
        for j in range(3):
            tj = L.power(self.t_L, j)
            for a in range(m):
                wa = self.emb(K.from_order([1 if i == a else 0 for i in range(m)]))
                rows.append(list(L.mul(wa, tj)))
        self._T = rows
        num, den = _invert_q(rows)
        self._Tinv = (num, den)

    # ---- K <-> L maps ----------------------------------------------------------

    def emb(self, x):
        """Embed a K-element into L."""
        return _eval_at(self.L, list(x), self.theta_L)

    def to_k_coords(self, x):
        """L-element -> [c0, c1, c2] with x = c0 + c1 t + c2 t^2, c_i in K."""
        K = self.K
        m, d = K.n, self.degree
        num, den = self._Tinv
        y = [mpq(0)] * d
        for i in range(d):
            s = mpq(0)
            for j in range(d):
                if x[j]:
                    s += x[j] * num[j][i]
            y[i] = s / den
        out = []
        for j in range(3):
            block = y[j * m:(j + 1) * m]
            # block holds coordinates over the integral basis of K
            power = [
                sum((block[a] * K.basis_num[a][t] for a in range(m)), mpq(0))
                / K.basis_den
                for t in range(m)
            ]
            out.append(K.el(power))
        return out

    def from_k_coords(self, cs):
        L = self.L
        out = L.zero
        for j, c in enumerate(cs):
            out = L.add(out, L.mul(self.emb(c), L.power(self.t_L, j)))
        return out

    def rel_norm(self, x):
        """N_{L/K}(x) as a K-element (determinant of mult-by-x on 1,t,t^2)."""
        K = self.K
        cols = []
        for j in range(3):
            prod = self.L.mul(x, self.L.power(self.t_L, j))
            cols.append(self.to_k_coords(prod))
        # det of the 3x3 matrix with columns cols (entries in K)
        M = [[cols[j][i] for j in range(3)] for i in range(3)]
        det = K.zero
        for (s, (p0, p1, p2)) in [(1, (0, 1, 2)), (1, (1, 2, 0)), (1, (2, 0, 1)),
                                  (-1, (0, 2, 1)), (-1, (2, 1, 0)), (-1, (1, 0, 2))]:
            term = K.mul(K.mul(M[0][p0], M[1][p1]), M[2][p2])
            det = K.add(det, K.scale(term, s))
        return det

    # ---- real places -----------------------------------------------------------

    def _classify_real_places(self):
        K, L = self.K, self.L
        # match each real embedding of L to the real embedding of K it extends
        owner = []
        for i in range(L.r1):
            owner.append(self._match_embedding(i))
        groups = {v: [] for v in range(K.r1)}
        for i, v in enumerate(owner):
            groups[v].append(i)
        self.ramified_real = []    # 'A': one real extension
        self.unramified_real = []  # 'B': three, stored sorted by t-value
        for v in range(K.r1):
            g = groups[v]
            if len(g) == 1:
                self.ramified_real.append((v, g[0]))
            elif len(g) == 3:
                g_sorted = self._sort_by_t(g)
                self.unramified_real.append((v, tuple(g_sorted)))
            else:
                raise AssertionError(f"real place with {len(g)} extensions")
        self.a = len(self.ramified_real)
        self.b = len(self.unramified_real)
        self.c = K.r2
        assert self.a + self.b + self.c == K.r1 + K.r2
        assert L.r1 == self.a + 3 * self.b
        assert L.r2 == self.a + 3 * self.c
        # sign layout: A places (ascending v), then B blocks of three
        self.sign_width_L = self.a + 3 * self.b
        self.sign_width_K = self.a + self.b

    def _match_embedding(self, i):
        """Index v of the real place of K under the i-th real place of L."""
        K, L = self.K, self.L
        eps = mpq(1, 2)
        while True:
            lo, hi = L.real_interval(self.theta_L, i, eps)
            hits = []
            for v in range(K.r1):
                rlo, rhi = K._root_intervals[v]
                if hi < rlo or lo > rhi:
                    continue
                hits.append(v)
            if len(hits) == 1:
                return hits[0]
            assert hits, "theta image misses every root interval"
            eps /= 16
            K.refine_real_roots(eps)

    def _sort_by_t(self, embs):
        L = self.L
        eps = mpq(1, 4)
        while True:
            ivs = [L.real_interval(self.t_L, i, eps) for i in embs]
            order = sorted(range(3), key=lambda j: ivs[j][0])
            ok = all(ivs[order[j]][1] < ivs[order[j + 1]][0] for j in range(2))
            if ok:
                return [embs[order[j]] for j in range(3)]
            eps /= 16

    def sign_vector_L(self, x):
        """Sign mask of x at the real places of L in the structured order:
        ramified blocks (one bit each), then unramified blocks (three bits,
        t-ascending).  Bit set means negative."""
        L = self.L
        mask = 0
        pos = 0
        for v, i in self.ramified_real:
            if L.real_sign(x, i) < 0:
                mask |= 1 << pos
            pos += 1
        for v, triple in self.unramified_real:
            for i in triple:
                if L.real_sign(x, i) < 0:
                    mask |= 1 << pos
                pos += 1
        return mask

    def sign_vector_K(self, x):
        """Sign mask of a K-element in the matching order: A places then B."""
        K = self.K
        mask = 0
        pos = 0
        for v, _ in self.ramified_real:
            if K.real_sign(x, v) < 0:
                mask |= 1 << pos
            pos += 1
        for v, _ in self.unramified_real:
            if K.real_sign(x, v) < 0:
                mask |= 1 << pos
            pos += 1
        return mask

    # ---- primes ------------------------------------------------------------------

    def primes_above(self, P_K, seed=0):
        """Primes of L over the prime P_K of K, with relative e and f."""
        p = P_K.p
        if p not in self._l_primes_cache:
            self._l_primes_cache[p] = ideals.decompose(self.L, p, seed=seed)
        cands = self._l_primes_cache[p]
        pi = ideals.uniformizer(P_K)
        pi_L = self.emb(pi)
        # second generator to pin membership: P_K = (p, h); test val of both
        out = []
        for w in cands:
            e_rel = w.valuation_element(pi_L)
            if e_rel >= 1 and self._prime_over(w, P_K):
                assert w.f % P_K.f == 0
                out.append((w, e_rel, w.f // P_K.f))
        tot = sum(e * f for (_, e, f) in out)
        assert tot == 3, f"relative ef sum {tot} != 3"
        return out

    def _prime_over(self, w, P_K):
        """w lies over P_K iff every generator of P_K lands inside w."""
        for b in P_K.ideal.basis_elements():
            if w.valuation_element(self.emb(b)) < 1:
                return False
        return True


# ---- polynomial helpers over K ------------------------------------------------


def _kdeg(K, f):
    d = -1
    for i, c in enumerate(f):
        if not K.is_zero(c):
            d = i
    return d


def _kpoly_add(K, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.add(a, b))
    return out


def _kpoly_mul(K, f, g):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return out


def _kpoly_norm(K, f):
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def _kpoly_divmod(K, f, g):
    f = _kpoly_norm(K, f)
    g = _kpoly_norm(K, g)
    assert g
    inv = K.inv(g[-1])
    q = [K.zero] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g) and r:
        c = K.mul(r[-1], inv)
        k = len(r) - len(g)
        q[k] = c
        for i in range(len(g)):
            r[k + i] = K.sub(r[k + i], K.mul(c, g[i]))
        r = _kpoly_norm(K, r)
        if not r:
            break
    return q, r


def _kpoly_gcd(K, f, g):
    f = _kpoly_norm(K, f)
    g = _kpoly_norm(K, g)
    while g:
        _, r = _kpoly_divmod(K, f, g)
        f, g = g, r
    if f:
        inv = K.inv(f[-1])
        f = [K.mul(c, inv) for c in f]
    return f


def _cubic_disc_over_k(K, F):
    """Discriminant of a monic cubic with K coefficients."""
    a2, a1, a0 = F[2], F[1], F[0]
    # disc = 18*a2*a1*a0 - 4*a2^3*a0 + a2^2*a1^2 - 4*a1^3 - 27*a0^2
    t1 = K.scale(K.mul(K.mul(a2, a1), a0), 18)
    t2 = K.scale(K.mul(K.power(a2, 3), a0), -4)
    t3 = K.mul(K.power(a2, 2), K.power(a1, 2))
    t4 = K.scale(K.power(a1, 3), -4)
    t5 = K.scale(K.power(a0, 2), -27)
    out = K.zero
    for t in (t1, t2, t3, t4, t5):
        out = K.add(out, t)
    return out


def _subst_shift(K, F, z, k):
    """h(y) = F(z - k*y) where also theta = y in the coefficients; returns a
    univariate rational polynomial in y."""
    m = K.n
    # (z - k*y) as poly in y
    lin = [mpq(z), mpq(-k)]
    acc = []  # F evaluated via Horner: coefficients become polys in y
    for c in reversed(F):
        cpoly = [mpq(v) for v in c]  # c as polynomial in theta = y
        acc = polys.padd(polys.pmul(acc, lin) if acc else [], cpoly)
    return polys.pnorm(acc)


def _lagrange(xs, ys):
    """Interpolating polynomial through (xs, ys), exact rationals."""
    n = len(xs)
    out = []
    for i in range(n):
        num = [mpq(1)]
        den = mpq(1)
        for j in range(n):
            if j != i:
                num = polys.pmul(num, [-xs[j], mpq(1)])
                den *= xs[i] - xs[j]
        out = polys.padd(out, polys.pscale(num, ys[i] / den))
    return out


def _common_root_mod(K, F, k, gq):
    """The image of theta in Q[x]/(G): unique common root of g and
    Phi(eta - k*theta, theta).  Returns the poly rep of theta, or None."""
    d = len(gq) - 1
    # algebra arithmetic mod gq
    def amul(u, v):
        _, r = polys.pdivmod(polys.pmul(u, v), gq)
        return r

    def ainv(u):
        r0, r1 = gq, polys.pnorm(list(u))
        s0, s1 = [], [mpq(1)]
        while polys.degree(r1) > 0:
            q, r = polys.pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, polys.psub(s0, polys.pmul(q, s1))
        if not r1:
            return None
        return polys.pscale(s1, 1 / mpq(r1[0]))

    # polynomials over the algebra: coefficient = poly mod gq
    def apoly_mul(f, g):
        if not f or not g:
            return []
        out = [[mpq(0)] for _ in range(len(f) + len(g) - 1)]
        for i, a in enumerate(f):
            if polys.pnorm(a):
                for j, b in enumerate(g):
                    if polys.pnorm(b):
                        out[i + j] = polys.padd(out[i + j], amul(a, b))
        return out

    def apoly_add(f, g):
        n2 = max(len(f), len(g))
        out = []
        for i in range(n2):
            a = f[i] if i < len(f) else []
            b = g[i] if i < len(g) else []
            out.append(polys.padd(a, b))
        return out

    psi = _build_psi(F, k, apoly_mul, apoly_add)

    gx = [[mpq(c)] for c in K.poly]  # g(x) with scalar coefficients
    # gcd over the algebra (may fail if a leading coeff is not invertible)
    A, B = gx, psi

    def anorm(f):
        f = list(f)
        while f and not polys.pnorm(f[-1]):
            f.pop()
        return f

    A, B = anorm(A), anorm(B)
    while B:
        inv = ainv(B[-1])
        if inv is None:
            return None
        Bm = [amul(c, inv) for c in B]
        # A mod Bm
        R = list(A)
        while len(R) >= len(Bm) and anorm(R):
            R = anorm(R)
            if len(R) < len(Bm):
                break
            c = R[-1]
            kk = len(R) - len(Bm)
            for i in range(len(Bm)):
                R[kk + i] = polys.psub(R[kk + i], amul(c, Bm[i]))
            R = R[:-1]
        A, B = Bm, anorm(R)
    A = anorm(A)
    if len(A) != 2:
        return None
    inv = ainv(A[1])
    if inv is None:
        return None
    theta = amul([mpq(-1) * c for c in A[0]], inv)
    return theta


def _build_psi(F, k, apoly_mul, apoly_add):
    """psi(x) = F(eta - k x) where each coefficient a_i of F contributes
    a_i(x) (theta replaced by the unknown x).  Coefficients live in the
    algebra Q[eta]/(G); the variable is x."""
    eta = [mpq(0), mpq(1)]
    T = [eta, [mpq(-k)]]
    psi = []
    for c in reversed(F):
        psi = apoly_mul(psi, T) if psi else []
        # c as a polynomial in x with scalar (algebra-constant) coefficients
        cx = [[mpq(v)] for v in c]
        psi = apoly_add(psi, cx)
    return psi


def _eval_at(L, coeffs, point):
    """Evaluate a rational-coefficient polynomial at an L-element."""
    acc = L.zero
    for c in reversed(coeffs):
        acc = L.mul(acc, point)
        acc = L.add(acc, L.el([c]))
    return acc


def _ppow_mod(f, e, g):
    out = [mpq(1)]
    base = f
    while e:
        if e & 1:
            _, out = polys.pdivmod(polys.pmul(out, base), g)
        e >>= 1
        if e:
            _, base = polys.pdivmod(polys.pmul(base, base), g)
    return out


def _invert_q(rows):
    """Exact inverse of a rational matrix: returns (num, den)."""
    n = len(rows)
    dlc = 1
    for r in rows:
        for x in r:
            q = int(mpq(x).denominator)
            dlc = dlc * q // _gcd(dlc, q)
    zrows = [[int(mpq(x) * dlc) for x in r] for r in rows]
    num, den = intmat.inverse_q(zrows)
    # (rows)^{-1} = (zrows/dlc)^{-1} = dlc * zrows^{-1} = dlc * num / den
    return [[x * dlc for x in row] for row in num], den


def _gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def two_division_cubic(K, ainv):
    """The monic integral cubic whose roots are 4x(P) for the 2-torsion
    points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6:
    X^3 + b2 X^2 + 8 b4 X + 16 b6 (substituting X = 4x completes the square).
    """
    a1, a2, a3, a4, a6 = [K.el(a) if not isinstance(a, tuple) else a for a in ainv]
    b2 = K.add(K.mul(a1, a1), K.scale(a2, 4))
    b4 = K.add(K.scale(a4, 2), K.mul(a1, a3))
    b6 = K.add(K.mul(a3, a3), K.scale(a6, 4))
    return [K.scale(b6, 16), K.scale(b4, 8), b2, K.one]
