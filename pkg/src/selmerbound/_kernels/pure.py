"""Pure-Python kernels.

These mirror ``selmerbound._kernels.fast`` exactly and are the reference
implementation for its tests.
"""


from bisect import bisect_left


def trial_factor(n, primes):
    """Divide out the given primes (sorted ascending) from n > 0.

    Returns (exps, cofactor) where exps[i] is the exponent of primes[i]
    and cofactor is the remaining unfactored part (1 iff n is smooth
    over the given primes).
    """
    n = int(n)
    if n <= 0:
        raise ValueError("trial_factor needs n > 0")
    exps = [0] * len(primes)
    for i, p in enumerate(primes):
        if n == 1 or p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            exps[i] = e
    # Whatever survived the loop below sqrt is prime.
    if n != 1 and primes and n <= primes[-1]:
        j = bisect_left(primes, n)
        if j < len(primes) and primes[j] == n:
            exps[j] += 1
            n = 1
    return exps, n


def _polmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _polmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - df
            for i in range(df):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _polgcd(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(x * inv) % p for x in b]
        a = _polmod(a, bm, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(x * inv) % p for x in a]
    return a


def _polpowmod(base, e, f, p):
    result = [1]
    base = _polmod(base, f, p)
    while e:
        if e & 1:
            result = _polmod(_polmul(result, base, p), f, p)
        base = _polmod(_polmul(base, base, p), f, p)
        e >>= 1
    return result


def splitting_degrees(coeffs, p):
    """Degrees of the irreducible factors of a monic squarefree poly mod p.

    coeffs: low-to-high integer coefficients, leading coefficient 1 mod p.
    Returns a sorted list of degrees (with multiplicity one each; the input
    must be squarefree mod p, which is the caller's responsibility).
    """
    f = [c % p for c in coeffs]
    assert f and f[-1] == 1
    degs = []
    h = [0, 1]  # x
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            degs.append(len(f) - 1)
            break
        h = _polpowmod(h, p, f, p)
        hm = list(h)
        # h - x
        while len(hm) < 2:
            hm.append(0)
        hm[1] = (hm[1] - 1) % p
        while hm and hm[-1] == 0:
            hm.pop()
        g = _polgcd(hm, f, p)
        if len(g) - 1 > 0:
            for _ in range((len(g) - 1) // d):
                degs.append(d)
            # divide f by g
            f = _poldiv_exact(f, g, p)
            h = _polmod(h, f, p)
    return sorted(degs)


def _poldiv_exact(a, b, p):
    # both monic, b | a
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] % p
        out[len(a) - 1 - db] = c
        if c:
            shift = len(a) - 1 - db
            for i in range(db + 1):
                a[shift + i] = (a[shift + i] - c * b[i]) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return out
