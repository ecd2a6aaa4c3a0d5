import random

from selmerbound import gf2


def test_insert_and_dim():
    S = gf2.F2Space(4)
    assert S.insert(0b0011)
    assert S.insert(0b0110)
    assert not S.insert(0b0101)  # dependent
    assert S.dim == 2
    assert S.contains(0b0101)
    assert not S.contains(0b0001)


def test_coordinates_roundtrip():
    gens = [0b001, 0b110]
    S = gf2.span(gens, 3)
    for v in S.enumerate():
        combo = S.coordinates(v)
        acc = 0
        for i, b in enumerate(gens):
            if (combo >> i) & 1:
                acc ^= b
        assert acc == v
    assert S.coordinates(0b010) is None


def test_enumerate_size():
    S = gf2.span([1, 2, 4], 3)
    assert sorted(S.enumerate()) == list(range(8))


def test_kernel_single_column():
    # the 2x1 matrix with both entries 1: kernel is spanned by (1,1)
    assert gf2.kernel([1, 1], 1) == [0b11]


def test_kernel_is_exact():
    rng = random.Random(3)
    for _ in range(100):
        width = rng.randrange(1, 9)
        rows = [rng.randrange(1 << width) for _ in range(rng.randrange(1, 10))]
        ker = gf2.kernel(rows, width)
        # every kernel mask really does xor to zero
        for mask in ker:
            acc = 0
            for i in range(len(rows)):
                if (mask >> i) & 1:
                    acc ^= rows[i]
            assert acc == 0
        # rank-nullity
        assert len(ker) == len(rows) - gf2.span(rows, width).dim


def test_solve():
    rows = [0b011, 0b110]
    combo = gf2.solve(rows, 0b101, 3)
    assert combo == 0b11
    assert gf2.solve(rows, 0b001, 3) is None


def test_quotient_basis():
    big = gf2.span([0b001, 0b010, 0b100], 3)
    small = gf2.span([0b011], 3)
    q = gf2.quotient_basis(big, small)
    assert len(q) == 2
    T = small.copy()
    for v in q:
        assert T.insert(v)
