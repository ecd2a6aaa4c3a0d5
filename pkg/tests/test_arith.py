import random

from selmerbound import arith


def test_is_prime():
    assert arith.is_prime(2)
    assert arith.is_prime(3)
    assert not arith.is_prime(1)
    assert not arith.is_prime(561)  # Carmichael
    assert arith.is_prime(2**31 - 1)
    assert not arith.is_prime(2**32 + 1)


def test_next_prime():
    assert arith.next_prime(2) == 3
    assert arith.next_prime(13) == 17
    assert arith.next_prime(1) == 2
    p = arith.next_prime(10**9)
    assert arith.is_prime(p) and p > 10**9


def test_factorint_roundtrip():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randrange(2, 10**10)
        fac = arith.factorint(n)
        prod = 1
        for p, e in fac.items():
            assert arith.is_prime(p)
            prod *= p**e
        assert prod == n


def test_factorint_semiprime():
    p, q = 10007, 10009
    assert arith.factorint(p * q) == {p: 1, q: 1}


def test_jacobi():
    # quadratic residues mod 7 are 1, 2, 4
    assert [arith.jacobi(a, 7) for a in range(1, 7)] == [1, 1, -1, 1, -1, -1]
    assert arith.jacobi(2, 15) == 1  # not a residue: jacobi can still be 1
    assert arith.jacobi(0, 5) == 0


def test_sqrt_mod_p():
    for p in (3, 5, 7, 13, 10007):
        for a in range(1, min(p, 40)):
            r = arith.sqrt_mod_p(a % p, p)
            if r is None:
                assert arith.jacobi(a, p) == -1
            else:
                assert (r * r - a) % p == 0


def test_crt():
    x = arith.crt([2, 3], [3, 5])
    assert x % 3 == 2 and x % 5 == 3


def test_squarefree_part_int():
    assert arith.squarefree_part_int(12) == 3
    assert arith.squarefree_part_int(-4) == -1
    assert arith.squarefree_part_int(21) == 21
