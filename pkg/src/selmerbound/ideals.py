"""Fractional ideals of a maximal order, prime decomposition, valuations.

An ideal is stored as an n x n upper-triangular HNF matrix over the
integral basis together with a positive denominator.  Prime splitting
uses the factorization of the defining polynomial mod p away from the
index, and Berlekamp-style idempotent splitting of O/pO at index primes
(deterministic: split elements come from the kernel of Frobenius - id,
and their minimal polynomials have all roots in F_p).
"""

from __future__ import annotations

from gmpy2 import mpq

from . import intmat, modp, polys


class Ideal:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=1):
        self.field = field
        num = [list(map(int, r)) for r in num]
        den = int(den)
        if den < 0:
            den = -den
        rows = intmat.hnf_rows(num)
        if len(rows) != field.n:
            raise ValueError("ideal matrix must have full rank")
        g = den
        for row in rows:
            for x in row:
                g = _gcd(g, x)
        if g > 1:
            rows = [[x // g for x in row] for row in rows]
            den //= g
        self.num = tuple(tuple(r) for r in rows)
        self.den = den

    # ---- constructors -------------------------------------------------------

    @classmethod
    def one(cls, field):
        return cls(field, intmat.identity(field.n), 1)

    @classmethod
    def from_elements(cls, field, gens):
        """The fractional O-ideal generated by field elements."""
        d = 1
        for a in gens:
            d = d * field.denominator(a) // _gcd(d, field.denominator(a))
        rows = []
        n = field.n
        for a in gens:
            c = field.to_order(field.scale(a, d))
            assert c is not None
            for j in range(n):
                prod = [0] * n
                for i in range(n):
                    if c[i]:
                        row = field.mult_table[i][j]
                        for k in range(n):
                            prod[k] += c[i] * row[k]
                rows.append(prod)
        if not rows:
            raise ValueError("no generators")
        return cls(field, rows, d)

    @classmethod
    def principal(cls, field, a):
        return cls.from_elements(field, [a])

    def scaled(self, q):
        """q * I for rational q."""
        q = mpq(q)
        num = int(q.numerator)
        den = int(q.denominator)
        if num == 0:
            raise ValueError("zero ideal")
        rows = [[abs(num) * x for x in row] for row in self.num]
        return Ideal(self.field, rows, self.den * den)

    # ---- basic ops -----------------------------------------------------------

    def __eq__(self, other):
        return (self.field is other.field and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((id(self.field), self.num, self.den))

    def __repr__(self):
        return f"Ideal(den={self.den}, norm={self.norm()})"

    def mul(self, other):
        f = self.field
        n = f.n
        rows = []
        for r1 in self.num:
            e1 = f.from_order(r1)
            for r2 in other.num:
                e2 = f.from_order(r2)
                prod = f.mul(e1, e2)
                c = f.to_order(prod)
                assert c is not None
                rows.append(c)
        return Ideal(f, rows, self.den * other.den)

    def add(self, other):
        rows = ([[other.den * x for x in r] for r in self.num]
                + [[self.den * x for x in r] for r in other.num])
        return Ideal(self.field, rows, self.den * other.den)

    def inverse(self):
        """(O : I) via the integral trick: N * I^-1 = {x in O : x*I <= N*O}."""
        f = self.field
        n = f.n
        # clear the denominator first: (I/den)^-1 = den * (I_int)^-1
        I = Ideal(f, [list(r) for r in self.num], 1)
        nrm = I.norm_int()
        # stack the multiplication-by-row matrices and the modulus block
        cols = []
        for r in I.num:
            m_r = []
            for i in range(n):
                prod = [0] * n
                for k in range(n):
                    if r[k]:
                        row = f.mult_table[i][k]
                        for t in range(n):
                            prod[t] += r[k] * row[t]
                m_r.append(prod)
            cols.append(m_r)
        A = [[0] * (n * len(cols)) for _ in range(n)]
        for b, m_r in enumerate(cols):
            for i in range(n):
                for t in range(n):
                    A[i][b * n + t] = m_r[i][t]
        stack = [A[i] for i in range(n)]
        w = n * len(cols)
        for j in range(w):
            row = [0] * w
            row[j] = nrm
            stack.append(row)
        ker = intmat.left_kernel(stack)
        rows = [v[:n] for v in ker]
        inv_int = Ideal(f, rows, nrm)
        return inv_int.scaled(mpq(self.den))

    def pow(self, k):
        k = int(k)
        if k == 0:
            return Ideal.one(self.field)
        base = self if k > 0 else self.inverse()
        k = abs(k)
        out = None
        while k:
            if k & 1:
                out = base if out is None else out.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return out

    def norm(self):
        """Ideal norm as an exact rational."""
        d = 1
        for i in range(self.field.n):
            d *= self.num[i][i]
        return mpq(d, self.den ** self.field.n)

    def norm_int(self):
        nr = self.norm()
        assert nr.denominator == 1, "integral ideal expected"
        return int(nr)

    def is_integral(self):
        return self.den == 1

    def contains(self, a):
        """Membership of a field element."""
        c = self.field.to_order(self.field.scale(a, self.den))
        if c is None:
            return False
        return _in_lattice(self.num, c)

    def contains_ideal(self, other):
        return all(
            _in_lattice_scaled(self.num, list(r), other.den, self.den)
            for r in other.num
        )

    def basis_elements(self):
        f = self.field
        return [f.scale(f.from_order(r), mpq(1, self.den)) for r in self.num]


def _in_lattice(rows, v):
    """True iff integer vector v lies in the row lattice (upper-tri HNF)."""
    rem = list(v)
    n = len(rows)
    for i in range(n):
        piv = rows[i][i]
        if rem[i] % piv:
            return False
        q = rem[i] // piv
        if q:
            for j in range(i, n):
                rem[j] -= q * rows[i][j]
    return all(x == 0 for x in rem)


def _in_lattice_scaled(rows, v, dv, dl):
    """v/dv in lattice(rows)/dl  <=>  dl*v in dv*lattice."""
    w = [dl * x for x in v]
    scaled = [[dv * x for x in row] for row in rows]
    return _in_lattice(scaled, w)


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# ---- prime ideals ------------------------------------------------------------


class PrimeIdeal:
    __slots__ = ("field", "p", "e", "f", "ideal", "_tau", "_residue")

    def __init__(self, field, p, e, f, ideal):
        self.field = field
        self.p = int(p)
        self.e = int(e)
        self.f = int(f)
        self.ideal = ideal
        self._tau = None
        self._residue = None

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, e={self.e}, f={self.f})"

    def norm(self):
        return self.p ** self.f

    @property
    def tau(self):
        """An element of P^-1 that is not in O (anti-uniformizer): x/p for
        x in O with x*P inside p*O but x outside p*O.  Found as a kernel
        mod p, which sidesteps ideal inversion (whose HNF entries blow up
        over orders with large index)."""
        if self._tau is None:
            f = self.field
            n, p = f.n, self.p
            gens = [f.from_order(r) for r in self.ideal.num]
            assert self.ideal.den == 1
            mat = []
            for i in range(n):
                bi = f.from_order([1 if j == i else 0 for j in range(n)])
                row = []
                for g in gens:
                    prod = f.to_order(f.mul(bi, g))
                    row.extend(x % p for x in prod)
                mat.append(row)
            ker = modp.kernel_mod_p(mat, p)
            assert ker, "P^-1 = O; not a proper ideal"
            x = f.from_order(ker[0])
            self._tau = f.scale(x, mpq(1, p))
            assert f.to_order(self._tau) is None
        return self._tau

    def valuation_element(self, a):
        """v_P(a) for a nonzero field element."""
        f = self.field
        if f.is_zero(a):
            raise ValueError("valuation of zero")
        d = f.denominator(a)
        v_den = self.valuation_element(f.el([d])) if d > 1 else 0
        x = f.scale(a, d)
        # now x integral; multiply by tau until it leaves O
        v = 0
        cur = f.mul(x, self.tau)
        while f.to_order(cur) is not None:
            v += 1
            x = cur
            cur = f.mul(x, self.tau)
        return v - v_den

    def valuation_ideal(self, I):
        f = self.field
        vals = [self.valuation_element(b) for b in I.basis_elements()]
        return min(vals)

    def residue_field(self):
        if self._residue is None:
            self._residue = ResidueField(self)
        return self._residue


def decompose(field, p, seed=0):
    """The primes of the maximal order above the rational prime p,
    sorted by (f, HNF matrix)."""
    p = int(p)
    n = field.n
    if field.index % p != 0:
        g = [c % p for c in field.poly]
        facs = polys.factor_mod_p(g, p, seed=seed)
        out = []
        for gi, e in facs:
            lift = [int(c) for c in gi]
            gen = field.el(lift)
            pid = Ideal.from_elements(field, [field.el([p]), gen])
            out.append(PrimeIdeal(field, p, e, polys.degree(gi), pid))
    else:
        out = _decompose_index_prime(field, p)
    total = sum(P.e * P.f for P in out)
    assert total == n, f"ef sum {total} != {n} at p={p}"
    out.sort(key=lambda P: (P.f, P.ideal.num))
    return out


def _decompose_index_prime(field, p):
    n = field.n
    mult = [[[x % p for x in field.mult_table[i][j]] for j in range(n)]
            for i in range(n)]

    def amul(u, v):
        out = [0] * n
        for i in range(n):
            if u[i] % p:
                for j in range(n):
                    if v[j] % p:
                        c = u[i] * v[j]
                        row = mult[i][j]
                        for k in range(n):
                            out[k] = (out[k] + c * row[k]) % p
        return out

    def apow(u, e):
        out = None
        base = [x % p for x in u]
        while e:
            if e & 1:
                out = base if out is None else amul(out, base)
            e >>= 1
            if e:
                base = amul(base, base)
        return out

    # radical of O/pO
    m, q = 1, p
    while q < n:
        q *= p
        m += 1
    frob = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        frob.append(apow(e, p))
    fm = frob
    for _ in range(m - 1):
        fm = modp.matmul_mod_p(fm, frob, p)
    rad = modp.kernel_mod_p(fm, p)

    # quotient A/R coordinates: rref the radical, keep non-pivot coords
    rr, pivots = modp.rref_mod_p(rad, p) if rad else ([], [])
    rr = [row for row in rr if any(x % p for x in row)]
    free = [j for j in range(n) if j not in pivots]

    def reduce_q(v):
        v = [x % p for x in v]
        for row, c in zip(rr, pivots):
            if v[c]:
                f0 = v[c]
                v = [(a - f0 * b) % p for a, b in zip(v, row)]
        return [v[j] for j in free]

    def lift_q(w):
        v = [0] * n
        for val, j in zip(w, free):
            v[j] = val % p
        return v

    dimq = len(free)
    one_q = reduce_q(field.to_order(field.one))

    def qmul(u, v):
        return reduce_q(amul(lift_q(u), lift_q(v)))

    # split the etale algebra A/R into fields
    components = []  # list of bases (rows over A/R coords)
    work = [[_unit(dimq, i) for i in range(dimq)]]
    # identity of the full algebra in A/R
    work_ids = [one_q]
    while work:
        basis = work.pop()
        ident = work_ids.pop()
        k = len(basis)
        # Berlekamp subalgebra of this component: kernel of Frob - id
        fr_rows = []
        for b in basis:
            img = qpow_in(qmul, b, p)
            # coordinates of img in the component basis
            co = _coords_in(basis, img, p)
            fr_rows.append(co)
        delta = [[(fr_rows[i][j] - (1 if i == j else 0)) % p for j in range(k)]
                 for i in range(k)]
        berl = modp.kernel_mod_p(delta, p)
        if len(berl) == 1:
            components.append((basis, ident))
            continue
        # find a splitting element: some Berlekamp vector not a multiple of 1
        id_co = _coords_in(basis, ident, p)
        split = None
        for c in berl:
            vec = _combine(basis, c, p)
            if not _is_multiple(_coords_in(basis, vec, p), id_co, p):
                split = vec
                break
        assert split is not None
        # minimal polynomial of split over F_p within the component
        pows = [ident]
        cur = ident
        rows_mat = [_coords_in(basis, ident, p)]
        while True:
            cur = qmul(cur, split)
            co = _coords_in(basis, cur, p)
            dep = _dependency_mod_p(rows_mat, co, p)
            if dep is not None:
                minpoly = dep + [1]
                break
            rows_mat.append(co)
            pows.append(cur)
        roots = polys.roots_mod_p([c % p for c in minpoly], p)
        assert len(roots) == len(minpoly) - 1, "split element minpoly not split"
        for lam in roots:
            # kernel of (split - lam) on the component = new subalgebra
            mat = []
            for b in basis:
                img = qmul(b, split)
                shifted = [(x - lam * y) % p for x, y in
                           zip(img, _scale_vec(b, 1, p))]
                mat.append(_coords_in(basis, shifted, p))
            kerc = modp.kernel_mod_p(mat, p)
            newbasis = [_combine(basis, c, p) for c in kerc]
            # identity of the piece: solve e*e = e, e acts as ident on piece
            e_piece = _piece_identity(qmul, newbasis, ident, p)
            work.append(newbasis)
            work_ids.append(e_piece)

    # maximal ideals: R + lifts of (sum of all other components)
    out = []
    for idx, (basis, ident) in enumerate(components):
        mrows = [r[:] for r in rad]
        for j, (ob, _) in enumerate(components):
            if j != idx:
                mrows += [lift_q(b) for b in ob]
        mrows += [[p if t == s else 0 for t in range(n)] for s in range(n)]
        pid = Ideal(field, intmat.hnf_rows(mrows), 1)
        fdeg = len(basis)
        P = PrimeIdeal(field, p, 0, fdeg, pid)
        e = P.valuation_element(field.el([p]))
        P.e = e
        out.append(P)
    return out


def qpow_in(qmul, b, e):
    out = None
    base = b
    while e:
        if e & 1:
            out = base if out is None else qmul(out, base)
        e >>= 1
        if e:
            base = qmul(base, base)
    return out


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _scale_vec(v, c, p):
    return [(x * c) % p for x in v]


def _combine(basis, coeffs, p):
    n = len(basis[0])
    out = [0] * n
    for c, b in zip(coeffs, basis):
        if c % p:
            for k in range(n):
                out[k] = (out[k] + c * b[k]) % p
    return out


def _coords_in(basis, v, p):
    co = modp.solve_mod_p(basis, v, p)
    assert co is not None, "vector outside component"
    return co


def _is_multiple(v, w, p):
    """v = c*w mod p for some scalar c (w may be zero only if v is)."""
    piv = next((i for i, x in enumerate(w) if x % p), None)
    if piv is None:
        return all(x % p == 0 for x in v)
    c = (v[piv] * pow(w[piv], p - 2, p)) % p
    return all((x - c * y) % p == 0 for x, y in zip(v, w))


def _dependency_mod_p(rows, v, p):
    """Coefficients c with v = -sum c_i rows_i mod p, or None if independent.
    Returned list has len(rows) entries (for minpoly assembly)."""
    if not rows:
        return None
    sol = modp.solve_mod_p(rows, v, p)
    if sol is None:
        return None
    return [(-c) % p for c in sol]


def _piece_identity(qmul, basis, ident, p):
    """Identity element of a direct factor: the component of ident in the
    piece.  Found by solving e in span(basis) with e*b = b for all b."""
    k = len(basis)
    n = len(basis[0])
    # unknowns x_1..x_k with sum x_i basis_i * basis_j = basis_j for all j
    rows = []
    rhs = []
    for j in range(k):
        cols = []
        for i in range(k):
            prod = qmul(basis[i], basis[j])
            cols.append(prod)
        rows.append(cols)
    # assemble linear system over F_p: for each j, sum_i x_i prod[i][j] = basis_j
    mat = [[0] * (k * n) for _ in range(k)]
    target = [0] * (k * n)
    for j in range(k):
        for i in range(k):
            for t in range(n):
                mat[i][j * n + t] = rows[j][i][t] % p
        for t in range(n):
            target[j * n + t] = basis[j][t] % p
    sol = modp.solve_mod_p(mat, target, p)
    assert sol is not None, "piece has no identity"
    return _combine(basis, sol, p)


def element_with_valuations(field, primes, exps):
    """An element x with v_{P_i}(x) = exps[i] exactly, v >= 0 elsewhere.

    Deterministic: x = sum x_i with x_i drawn from P_i^{k_i} * prod_{j != i}
    P_j^{k_j + 1}; the i-th term has the exact valuation and every other
    term a strictly larger one.  Exponents must be >= 0.
    """
    assert all(k >= 0 for k in exps)
    assert len(primes) == len(exps) > 0
    terms = []
    for i, (P, k) in enumerate(zip(primes, exps)):
        J = P.ideal.pow(k)
        for j, (Q, kq) in enumerate(zip(primes, exps)):
            if j != i:
                J = J.mul(Q.ideal.pow(kq + 1))
        best = None
        for b in J.basis_elements():
            if P.valuation_element(b) == k:
                best = b
                break
        assert best is not None, "no basis element with exact valuation"
        terms.append(best)
    x = field.zero
    for t in terms:
        x = field.add(x, t)
    for P, k in zip(primes, exps):
        assert P.valuation_element(x) == k
    return x


def uniformizer(P):
    """An integral element with v_P = 1 (no control at other primes)."""
    for b in P.ideal.basis_elements():
        if P.valuation_element(b) == 1:
            return b
    raise AssertionError("prime ideal without valuation-1 basis element")


# ---- residue fields ----------------------------------------------------------


class ResidueField:
    """O/P as an explicit finite field of order p^f (tiny sizes only)."""

    def __init__(self, prime: PrimeIdeal):
        self.prime = prime
        self.p = prime.p
        self.f = prime.f
        self.q = self.p ** self.f
        field = prime.field
        n = field.n
        rows = prime.ideal.num
        assert prime.ideal.den == 1
        # free positions: pivots equal to p (others are 1)
        free = [i for i in range(n) if rows[i][i] == self.p]
        assert len(free) == self.f
        self.field = field
        self._rows = rows
        self._free = free
        reps = []
        idx = {}
        for code in range(self.q):
            v = [0] * n
            c = code
            for pos in free:
                v[pos] = c % self.p
                c //= self.p
            v = self._reduce(v)
            key = tuple(v)
            idx[key] = len(reps)
            reps.append(v)
        self.reps = reps
        self._idx = idx

    def _reduce(self, v):
        rem = list(v)
        n = len(rem)
        for i in range(n):
            piv = self._rows[i][i]
            q = rem[i] // piv
            if q:
                for j in range(i, n):
                    rem[j] -= q * self._rows[i][j]
            rem[i] %= piv
        return rem

    def reduce_element(self, a):
        """Index of the residue of an integral element a."""
        c = self.field.to_order(a)
        assert c is not None, "element not integral"
        return self._idx[tuple(self._reduce(c))]

    def lift(self, i):
        return self.field.from_order(self.reps[i])

    def add(self, i, j):
        v = [x + y for x, y in zip(self.reps[i], self.reps[j])]
        return self._idx[tuple(self._reduce(v))]

    def mul(self, i, j):
        f = self.field
        prod = f.mul(f.from_order(self.reps[i]), f.from_order(self.reps[j]))
        return self.reduce_element(prod)

    def pow(self, i, e):
        out = self.one
        base = i
        e = int(e)
        while e:
            if e & 1:
                out = self.mul(out, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return out

    @property
    def zero(self):
        return self.reduce_element(self.field.zero)

    @property
    def one(self):
        return self.reduce_element(self.field.one)

    def is_square(self, i):
        if i == self.zero:
            return True
        return self.pow(i, (self.q - 1) // 2) == self.one if self.p != 2 else True

    def trace_to_prime_field(self, i):
        """Trace to F_p, returned as an integer mod p."""
        acc = i
        tot = i
        for _ in range(self.f - 1):
            acc = self.pow(acc, self.p)
            tot = self.add(tot, acc)
        # identify tot with a scalar: tot = c * 1
        c = 0
        cur = self.zero
        while cur != tot:
            cur = self.add(cur, self.one)
            c += 1
            assert c <= self.p, "trace not scalar"
        return c % self.p
