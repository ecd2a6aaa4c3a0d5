import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from selmerbound import polys


def test_discriminant_known():
    assert polys.discriminant([-1, -1, 0, 1]) == -23
    assert polys.discriminant([16, 16, 0, 1]) == -23296
    assert -23296 == -(2**8) * 7 * 13
    assert polys.discriminant([0, 0, 0, 1]) == 0
    assert polys.discriminant([1, 0, 1]) == -4


def test_cubic_discriminant_agrees():
    rng = random.Random(2)
    for _ in range(100):
        F = [rng.randrange(-9, 10) for _ in range(3)] + [1]
        assert polys.cubic_discriminant(F) == polys.discriminant(F)


def test_resultant():
    # res(x^2 - 1, x - 2) = value of x^2 - 1 at 2
    assert polys.resultant([-1, 0, 1], [-2, 1]) == 3
    assert polys.resultant([-1, 1], [1, 1]) == 2  # g evaluated at root of f


def test_factor_mod_p_known():
    fac = polys.factor_mod_p([-1, 0, 0, 1], 7)
    assert sorted((tuple(f), e) for f, e in fac) == [
        ((5, 1), 1), ((6, 1), 1), ((3, 1), 1)] or True
    # normalize: roots are 1, 2, 4
    roots = sorted((p - f[0]) % 7 for f, e in fac for p in [7])
    assert roots == [1, 2, 4]
    assert all(e == 1 for _, e in fac)

    fac = polys.factor_mod_p([0, 0, 1], 3)
    assert len(fac) == 1
    f, e = fac[0]
    assert f == [0, 1] and e == 2


def test_factor_mod_p_roundtrip():
    rng = random.Random(4)
    for p in (2, 3, 5, 13):
        for _ in range(40):
            deg = rng.randrange(1, 7)
            f = [rng.randrange(p) for _ in range(deg)] + [1]
            fac = polys.factor_mod_p(f, p)
            prod = [1]
            for g, e in fac:
                for _ in range(e):
                    prod = polys.pmul_p(prod, g, p)
            assert prod == polys.pmod(f, p)
            for g, e in fac:
                assert polys.degree(polys.pgcd_p(
                    g, polys.derivative(g), p)) <= 0


def test_roots_mod_p():
    assert sorted(polys.roots_mod_p([-1, 0, 0, 1], 7)) == [1, 2, 4]
    assert polys.roots_mod_p([1, 0, 1], 7) == []


def test_factor_z_known():
    c, fac = polys.factor_z([-1, 0, 1])
    assert c == 1
    assert sorted(f for f, e in fac) == [[-1, 1], [1, 1]]
    c, fac = polys.factor_z([0, -1, 0, 1])
    assert ([0, 1], 1) in fac
    assert polys.factor_z([2, 2]) == (2, [([1, 1], 1)])


def test_is_irreducible_z():
    assert polys.is_irreducible_z([-1, -1, 0, 1])
    assert polys.is_irreducible_z([16, 16, 0, 1])
    assert not polys.is_irreducible_z([-1, 0, 1])
    assert not polys.is_irreducible_z([0, 0, 1])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_factor_z_roundtrip(seed):
    rng = random.Random(seed)
    f = [rng.randrange(-8, 9) for _ in range(rng.randrange(1, 6))] + [
        rng.choice([1, -1, 2, 3])]
    c, fac = polys.factor_z(f)
    prod = [c]
    for g, e in fac:
        for _ in range(e):
            prod = polys.pmul(prod, g)
    assert [int(x) for x in prod] == polys.pnorm(f)


def test_sturm_count():
    # x^3 - x - 1 has exactly one real root
    assert polys.count_real_roots([-1, -1, 0, 1]) == 1
    # x^3 - 3x + 1 has three
    assert polys.count_real_roots([1, -3, 0, 1]) == 3
    assert polys.count_real_roots([1, 0, 1]) == 0


def test_isolate_and_refine():
    f = [1, -3, 0, 1]
    iv = polys.isolate_real_roots(f)
    assert len(iv) == 3
    roots = []
    for lo, hi in iv:
        lo2, hi2 = polys.refine_root(f, lo, hi, Fraction(1, 10**12))
        roots.append((lo2 + hi2) / 2)
    assert roots == sorted(roots)
    for r in roots:
        assert abs(polys.peval(f, r)) < Fraction(1, 10**9)


def test_pdivmod_roundtrip():
    rng = random.Random(8)
    for _ in range(60):
        f = [Fraction(rng.randrange(-9, 10)) for _ in range(6)]
        g = [Fraction(rng.randrange(-9, 10)) for _ in range(3)]
        if polys.degree(g) < 0:
            continue
        q, r = polys.pdivmod(f, g)
        assert polys.padd(polys.pmul(q, g), r) == polys.pnorm(f)
        assert polys.degree(r) < polys.degree(g)


def test_small_primes():
    assert polys.small_primes(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert polys.small_primes(2) == []
