"""Dense univariate polynomial arithmetic over Q, Z and F_p.

Coefficient lists run low to high degree; the zero polynomial is [].
Rational coefficients are gmpy2.mpq, integers plain int/mpz.  This module
provides the exact primitives everything above it consumes:

* resultants (Sylvester determinant, exact) and discriminants,
* Sturm sequences and certified real root isolation over Q,
* factorization mod p (distinct-degree plus Cantor-Zassenhaus, with a
  trace-map splitter for p = 2; randomness is seeded explicitly),
* Zassenhaus factorization over Z for the small degrees used here.

Degrees stay below ~12 throughout the package, so the quadratic and
cubic-time algorithms are the right tools.
"""

from __future__ import annotations

import random

from gmpy2 import mpq, mpz

from . import intmat


def pnorm(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(f):
    return len(f) - 1


def padd(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)]
    return pnorm(out)


def psub(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]
    return pnorm(out)


def pmul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return pnorm(out)


def pscale(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def pdivmod(f, g):
    """Quotient and remainder over Q (exact rational arithmetic)."""
    assert g, "division by zero polynomial"
    f = [mpq(x) for x in pnorm(f)]
    g = pnorm(g)
    dg = degree(g)
    lead = mpq(g[-1])
    q = [mpq(0)] * max(0, len(f) - dg)
    while f and len(f) - 1 >= dg:
        c = f[-1] / lead
        k = len(f) - 1 - dg
        q[k] = c
        for i in range(dg + 1):
            f[k + i] -= c * g[i]
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return pnorm(q), pnorm(f)


def peval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f):
    return pnorm([i * f[i] for i in range(1, len(f))])


def pgcd_q(f, g):
    """Monic gcd over Q."""
    a, b = pnorm(f), pnorm(g)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / mpq(a[-1])
        a = [mpq(x) * inv for x in a]
    return a


def content(f):
    from math import gcd

    c = 0
    for a in f:
        c = gcd(c, abs(int(a)))
    return c


def primitive(f):
    """(f/content, content) for a nonzero integer polynomial."""
    c = content(f)
    if c == 0:
        return list(f), 0
    return [int(x) // c for x in f], c


def clear_denominators(f):
    """(g, d): g integer poly with g = d*f, d > 0 minimal."""
    d = 1
    for a in f:
        q = int(mpq(a).denominator)
        d = d * q // _gcd(d, q)
    return [int(mpq(a) * d) for a in f], int(d)


def _gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def resultant(f, g):
    """Resultant, exact.  Rational inputs give an exact mpq."""
    f, g = pnorm(f), pnorm(g)
    if not f or not g:
        return mpq(0)
    fi, df = clear_denominators(f)
    gi, dg = clear_denominators(g)
    r = _resultant_z(fi, gi)
    m, n = degree(f), degree(g)
    out = mpq(r) / (mpq(df) ** n * mpq(dg) ** m)
    return out


def _resultant_z(f, g):
    m, n = degree(f), degree(g)
    if n == 0:
        return mpz(g[0]) ** m
    if m == 0:
        return mpz(f[0]) ** n
    frev = list(reversed(f))
    grev = list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([0] * i + frev + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + grev + [0] * (m - 1 - i))
    return intmat.det(rows)


def discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), exact rational."""
    f = pnorm(f)
    n = degree(f)
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / mpq(f[-1])


def cubic_discriminant(F):
    """Discriminant of a monic cubic, via Res(F, F').

    Rejects anything that is not a monic cubic.
    """
    F = pnorm(F)
    if degree(F) != 3 or F[-1] != 1:
        raise ValueError("cubic_discriminant needs a monic cubic")
    d = discriminant(F)
    if mpq(d).denominator == 1:
        return int(d)
    return d


# ---------------------------------------------------------------------------
# Real root isolation (Sturm)


def sturm_sequence(f):
    seq = [pnorm(f), derivative(f)]
    while seq[-1]:
        _, r = pdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return [s for s in seq if s]


def _sign_changes(seq, x):
    signs = []
    for s in seq:
        v = peval(s, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    changes = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            changes += 1
    return changes


def count_real_roots(f, lo=None, hi=None):
    """Number of distinct real roots of f in (lo, hi]."""
    f = squarefree_part(f)
    seq = sturm_sequence(f)
    if lo is None or hi is None:
        b = cauchy_bound(f)
        lo = -b if lo is None else lo
        hi = b if hi is None else hi
    return _sign_changes(seq, mpq(lo)) - _sign_changes(seq, mpq(hi))


def cauchy_bound(f):
    f = pnorm(f)
    lead = abs(mpq(f[-1]))
    b = mpq(0)
    for c in f[:-1]:
        b = max(b, abs(mpq(c)) / lead)
    return b + 1


def squarefree_part(f):
    g = pgcd_q(f, derivative(f))
    if degree(g) < 1:
        out = [mpq(x) for x in f]
    else:
        out, _ = pdivmod(f, g)
    inv = 1 / mpq(out[-1])
    return [mpq(x) * inv for x in out]


def isolate_real_roots(f):
    """Disjoint rational isolating intervals for the real roots of f.

    Returns a list of (lo, hi) mpq pairs, ascending, one per distinct real
    root, with f(lo) != 0 != f(hi) and exactly one root in (lo, hi).
    """
    f = squarefree_part(f)
    if degree(f) < 1:
        return []
    seq = sturm_sequence(f)
    b = cauchy_bound(f)
    lo, hi = -b, b
    total = _sign_changes(seq, lo) - _sign_changes(seq, hi)
    out = []

    def rec(lo, hi, nlo, nhi):
        count = nlo - nhi
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while peval(f, mid) == 0:
            # nudge the cut off the root
            mid = mid + (hi - lo) / mpq(1 << 8)
        nmid = _sign_changes(seq, mid)
        rec(lo, mid, nlo, nmid)
        rec(mid, hi, nmid, nhi)

    rec(lo, hi, _sign_changes(seq, lo), _sign_changes(seq, hi))
    assert len(out) == total
    return out


def refine_root(f, lo, hi, eps):
    """Shrink an isolating interval to width < eps by bisection."""
    lo, hi = mpq(lo), mpq(hi)
    flo = peval(f, lo)
    assert flo != 0 and peval(f, hi) != 0
    slo = 1 if flo > 0 else -1
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        v = peval(f, mid)
        if v == 0:
            # exact rational root; return a tight interval around it
            w = (hi - lo) / 4
            lo, hi = mid - min(w, eps / 4), mid + min(w, eps / 4)
            break
        if (1 if v > 0 else -1) == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# Arithmetic mod p


def pmod(f, p):
    return pnorm([int(x) % p for x in f])


def pmul_p(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return pnorm(out)


def pdivmod_p(f, g, p):
    assert g
    f = [x % p for x in pnorm(f)]
    g = pnorm(g)
    dg = degree(g)
    inv = pow(int(g[-1]), p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while f and len(f) - 1 >= dg:
        c = (f[-1] * inv) % p
        k = len(f) - 1 - dg
        q[k] = c
        for i in range(dg + 1):
            f[k + i] = (f[k + i] - c * g[i]) % p
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return pnorm(q), pnorm(f)


def pgcd_p(f, g, p):
    a, b = pmod(f, p), pmod(g, p)
    while b:
        _, r = pdivmod_p(a, b, p)
        a, b = b, r
    if a:
        inv = pow(int(a[-1]), p - 2, p)
        a = [(x * inv) % p for x in a]
    return a


def ppowmod_p(base, e, f, p):
    result = [1]
    base = pdivmod_p(base, f, p)[1]
    e = int(e)
    while e:
        if e & 1:
            result = pdivmod_p(pmul_p(result, base, p), f, p)[1]
        base = pdivmod_p(pmul_p(base, base, p), f, p)[1]
        e >>= 1
    return result


def factor_mod_p(f, p, seed=0):
    """Full factorization of f mod p: list of (monic_factor, multiplicity).

    Constant leading units are absorbed; the product of factor^mult times
    lc(f) equals f mod p.  Randomized splitting is driven by the explicit
    seed, so results are reproducible.
    """
    rng = random.Random(seed)
    f = pmod(f, p)
    if degree(f) < 1:
        return []
    inv = pow(int(f[-1]), p - 2, p)
    f = [(x * inv) % p for x in f]
    out = []
    for g, mult in _squarefree_decomp_p(f, p):
        for h in _factor_squarefree_p(g, p, rng):
            out.append((h, mult))
    out.sort(key=lambda t: (degree(t[0]), t[0]))
    return out


def _squarefree_decomp_p(f, p):
    """(squarefree factor, multiplicity) pairs for monic f mod p."""
    out = []
    df = pnorm([(i * f[i]) % p for i in range(1, len(f))])
    if not df:
        # f is a p-th power
        g = [f[i] for i in range(0, len(f), p)]
        return [(h, m * p) for h, m in _squarefree_decomp_p(g, p)]
    c = pgcd_p(f, df, p)
    w, _ = pdivmod_p(f, c, p)
    i = 1
    while degree(w) > 0:
        y = pgcd_p(w, c, p)
        z, _ = pdivmod_p(w, y, p)
        if degree(z) > 0:
            out.append((z, i))
        w = y
        c, _ = pdivmod_p(c, y, p)
        i += 1
    if degree(c) > 0:
        g = [c[i] for i in range(0, len(c), p)]
        out.extend((h, m * p) for h, m in _squarefree_decomp_p(g, p))
    return out


def _factor_squarefree_p(f, p, rng):
    """Irreducible factors of a monic squarefree f mod p."""
    factors = []
    # distinct degree
    h = [0, 1]
    d = 0
    f = list(f)
    while degree(f) > 0:
        d += 1
        if 2 * d > degree(f):
            factors.append((f, degree(f)))
            break
        h = ppowmod_p(h, p, f, p)
        hm = list(h) + [0] * max(0, 2 - len(h))
        hm[1] = (hm[1] - 1) % p
        g = pgcd_p(pnorm(hm), f, p)
        if degree(g) > 0:
            factors.append((g, d))
            f, _ = pdivmod_p(f, g, p)
            h = pdivmod_p(h, f, p)[1]
    out = []
    for g, d in factors:
        out.extend(_equal_degree_split(g, d, p, rng))
    return out


def _equal_degree_split(f, d, p, rng):
    """Split a product of irreducibles all of degree d (Cantor-Zassenhaus)."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = pnorm(a)
        if degree(a) < 1:
            continue
        if p == 2:
            # trace map over F_{2^d}
            t = list(a)
            acc = list(a)
            for _ in range(d - 1):
                acc = ppowmod_p(acc, 2, f, p)
                t = padd_p(t, acc, p)
            g = pgcd_p(t, f, p)
        else:
            e = (p**d - 1) // 2
            b = ppowmod_p(a, e, f, p)
            b = padd_p(b, [p - 1], p)
            g = pgcd_p(b, f, p)
        if 0 < degree(g) < n:
            left = _equal_degree_split(g, d, p, rng)
            q, _ = pdivmod_p(f, g, p)
            right = _equal_degree_split(q, d, p, rng)
            return left + right


def padd_p(f, g, p):
    n = max(len(f), len(g))
    out = [
        ((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
        for i in range(n)
    ]
    return pnorm(out)


def roots_mod_p(f, p):
    """Roots in F_p of f (ignoring multiplicity), sorted."""
    out = []
    for g, _ in factor_mod_p(f, p):
        if degree(g) == 1:
            out.append((-g[0]) % p)
    return sorted(set(out))


# ---------------------------------------------------------------------------
# Factorization over Z (Zassenhaus, degrees <= ~8)


def _hensel_lift_pair(f, g, h, s, t, p, q):
    """One quadratic Hensel step: f = g*h mod q, lift to mod q^2 (q = p^k)."""
    q2 = q * q
    e = psub(f, pmul(g, h))
    e = [int(x) % q2 for x in e]
    qq, r = _divmod_mod(pmul(s, e), h, q2)
    gg = pnorm([(int(x)) % q2 for x in padd(padd(g, pmul(t, e)), pmul(qq, g))])
    hh = pnorm([(int(x)) % q2 for x in padd(h, r)])
    # lift the Bezout pair as well
    b = psub(padd(pmul(s, gg), pmul(t, hh)), [1])
    b = [int(x) % q2 for x in b]
    cc, d = _divmod_mod(pmul(s, b), hh, q2)
    ss = pnorm([int(x) % q2 for x in psub(s, d)])
    tt = pnorm([int(x) % q2 for x in psub(psub(t, pmul(t, b)), pmul(cc, gg))])
    return gg, hh, ss, tt


def _divmod_mod(f, g, m):
    """Division with remainder mod m, g monic."""
    f = [int(x) % m for x in pnorm(f)]
    dg = degree(g)
    assert g[-1] % m == 1
    q = [0] * max(0, len(f) - dg)
    while f and len(f) - 1 >= dg:
        c = f[-1] % m
        k = len(f) - 1 - dg
        q[k] = c
        for i in range(dg + 1):
            f[k + i] = (f[k + i] - c * g[i]) % m
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return pnorm(q), pnorm(f)


def _hensel_multi(f, factors, p, q_final):
    """Lift a pairwise-coprime monic factorization of monic f mod p.

    f is monic mod q_final (q_final = p^(2^k)); returns the factors lifted
    mod q_final, splitting recursively into two halves.
    """
    if len(factors) == 1:
        return [_monic_mod(f, q_final)]
    mid = len(factors) // 2
    g = [1]
    for fac in factors[:mid]:
        g = pmul_p(g, fac, p)
    h = [1]
    for fac in factors[mid:]:
        h = pmul_p(h, fac, p)
    s, t = _bezout_p(g, h, p)
    G, H, S, T = g, h, s, t
    qq = p
    while qq < q_final:
        G, H, S, T = _hensel_lift_pair(f, G, H, S, T, p, qq)
        qq *= qq
    return _hensel_multi(G, factors[:mid], p, q_final) + _hensel_multi(
        H, factors[mid:], p, q_final
    )


def _monic_mod(f, m):
    f = [int(x) % m for x in pnorm(f)]
    assert f and f[-1] == 1
    return f


def _euler_exp(q, p):
    """Arguments making pow(a, ., .) the inverse mod q = p^k."""
    phi = q // p * (p - 1)
    return (phi - 1, q)


def _bezout_p(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = pmod(g, p), pmod(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub_p(s0, pmul_p(q, s1, p), p)
        t0, t1 = t1, psub_p(t0, pmul_p(q, t1, p), p)
    inv = pow(int(r0[0]), p - 2, p)
    s = [(x * inv) % p for x in s0]
    t = [(x * inv) % p for x in t0]
    return s, t


def psub_p(f, g, p):
    n = max(len(f), len(g))
    out = [
        ((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
        for i in range(n)
    ]
    return pnorm(out)


def _center(x, m):
    x %= m
    return x - m if 2 * x > m else x


def factor_z(f, seed=0):
    """Factor an integer polynomial over Z (Zassenhaus).

    Returns (unit, [(factor, multiplicity)...]):  unit is an integer
    (sign times content) and the factors are primitive irreducible with
    positive leading coefficient; their product times unit is f.
    Degrees in this package stay <= 8, so subset recombination is cheap.
    """
    f = pnorm([int(x) for x in f])
    if degree(f) < 1:
        raise ValueError("constant polynomial")
    prim, cont = primitive(f)
    unit = cont if f[-1] > 0 else -cont
    if prim[-1] < 0:
        prim = [-x for x in prim]
    # squarefree part
    g_q = pgcd_q(prim, derivative(prim))
    if degree(g_q) > 0:
        sqf_q, _ = pdivmod(prim, g_q)
        sqf, _ = clear_denominators(sqf_q)
        sqf = primitive(sqf)[0]
        if sqf[-1] < 0:
            sqf = [-x for x in sqf]
    else:
        sqf = prim
    out = []
    work = prim
    for fac in _factor_squarefree_z(sqf, seed):
        e = 0
        while True:
            q, r = pdivmod(work, fac)
            if r:
                break
            work, d = clear_denominators(q)
            e += 1
        assert e > 0
        out.append((fac, e))
    assert degree(work) == 0
    out.sort(key=lambda t: (degree(t[0]), t[0]))
    return unit, out


def _factor_squarefree_z(f, seed):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    n = degree(f)
    if n == 1:
        return [f]
    disc = discriminant(f)
    assert disc != 0
    p = 3
    while True:
        p = _next_prime(p)
        if int(f[-1]) % p == 0:
            continue
        if int(mpq(disc).numerator) % p != 0:
            break
    modular = [g for g, _ in factor_mod_p(f, p, seed=seed)]
    if len(modular) == 1:
        return [f]
    # Mignotte-style bound on factor coefficients
    norm1 = sum(abs(int(c)) for c in f)
    bound = (1 << (n + 1)) * norm1 * abs(int(f[-1]))
    target = 2 * bound + 1
    q = p
    while q < target:
        q *= q
    lc = int(f[-1])
    lcinv = pow(lc % q, *_euler_exp(q, p))
    fmonic = [(int(x) * lcinv) % q for x in f]
    lifted = _hensel_multi(fmonic, modular, p, q)
    # subset recombination
    used = [False] * len(lifted)
    factors = []
    rest = f
    for size in range(1, len(lifted) + 1):
        for subset in _subsets(len(lifted), size):
            if any(used[i] for i in subset):
                continue
            cand = [int(rest[-1]) % q]
            for i in subset:
                cand = [(a) % q for a in pmul(cand, lifted[i])]
            cand = [_center(x, q) for x in cand]
            cand_prim = primitive(pnorm(cand))[0] if pnorm(cand) else []
            if not cand_prim:
                continue
            if cand_prim[-1] < 0:
                cand_prim = [-x for x in cand_prim]
            qq, r = pdivmod(rest, cand_prim)
            if not r:
                factors.append(cand_prim)
                for i in subset:
                    used[i] = True
                ri, d = clear_denominators(qq)
                assert d == 1
                rest = ri
                if degree(rest) == 0:
                    return factors
        if all(used):
            break
    if degree(rest) > 0:
        factors.append(primitive(rest)[0] if rest[-1] > 0 else [-x for x in primitive(rest)[0]])
    return factors


def _subsets(n, size):
    from itertools import combinations

    return combinations(range(n), size)


def _next_prime(p):
    from gmpy2 import next_prime

    return int(next_prime(p))


def is_irreducible_z(f):
    """Irreducibility over Q of a primitive integer polynomial."""
    _, facs = factor_z(f)
    return len(facs) == 1 and facs[0][1] == 1 and degree(facs[0][0]) == degree(f)


def small_primes(bound):
    """Primes < bound, ascending (simple sieve)."""
    bound = int(bound)
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    i = 2
    while i * i < bound:
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound, i)))
        i += 1
    return [i for i in range(bound) if sieve[i]]
