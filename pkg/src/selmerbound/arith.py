"""Integer utilities: factoring, primality, CRT, quadratic residues.

Deterministic for the input sizes used here (factoring targets stay well
below 2^80; Miller-Rabin uses a base set proven complete to 3.3 * 10^24).
"""

from __future__ import annotations

from math import gcd

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    n = int(n) + 1
    if n <= 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_prime(n):
        n += 2
    return n


def _pollard_brent(n: int, seed: int = 1) -> int:
    if n % 2 == 0:
        return 2
    y, c, m = (seed % (n - 1)) + 1, (seed % (n - 1)) + 1, 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def factorint(n: int) -> dict[int, int]:
    """Prime factorization {p: e} of |n| (n != 0); sign is dropped."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("factorint(0)")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 53
    while p * p <= n and p < 100000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        seed = 1
        while True:
            d = _pollard_brent(m, seed)
            if 1 < d < m:
                break
            seed += 1
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a, n = int(a), int(n)
    assert n > 0 and n % 2 == 1
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def sqrt_mod_p(a: int, p: int) -> int | None:
    """A square root of a mod p (p odd prime), or None."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def crt(residues, moduli) -> int:
    """x mod prod(moduli) with x = r_i mod m_i (moduli pairwise coprime)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        g, s, _ = _xgcd(m, mi)
        assert g == 1, "moduli must be coprime"
        x = (x + (r - x) * s % mi * m) % (m * mi)
        m *= mi
    return x


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    t = (old_r - old_s * a) // b if b else 0
    return old_r, old_s, t


def squarefree_part_int(n: int) -> int:
    """The squarefree kernel of n (sign preserved)."""
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return sign * out
