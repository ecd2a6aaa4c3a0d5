import pytest

from selmerbound.ideals import (Ideal, ResidueField, decompose,
                                element_with_valuations, uniformizer)
from selmerbound.numfield import NumberField


def K3():
    return NumberField([-3, 0, 1])


def K23():
    return NumberField([-1, -1, 0, 1])


def test_decompose_quadratic():
    K = K3()
    # 7 is inert in Q(sqrt 3), 2 and 3 ramify, 11 splits
    (P,) = decompose(K, 7)
    assert (P.e, P.f) == (1, 2)
    (P,) = decompose(K, 2)
    assert (P.e, P.f) == (2, 1)
    (P,) = decompose(K, 3)
    assert (P.e, P.f) == (2, 1)
    ps = decompose(K, 11)
    assert sorted((P.e, P.f) for P in ps) == [(1, 1), (1, 1)]


def test_decompose_is_deterministic():
    K = K23()
    runs = [[(P.p, P.e, P.f, P.ideal.num) for P in decompose(K, p)]
            for p in (2, 23)]
    runs2 = [[(P.p, P.e, P.f, P.ideal.num) for P in decompose(K, p)]
             for p in (2, 23)]
    assert runs == runs2


def test_decompose_ramified_in_cubic():
    # 23 = P^2 Q in the cubic of discriminant -23
    K = K23()
    ps = decompose(K, 23)
    assert sorted((P.e, P.f) for P in ps) == [(1, 1), (2, 1)]


def test_efn_identity_and_norms():
    for coeffs in ([-3, 0, 1], [-1, -1, 0, 1], [16, 16, 0, 1]):
        K = NumberField(coeffs)
        for p in (2, 3, 5, 7, 13):
            ps = decompose(K, p)
            assert sum(P.e * P.f for P in ps) == K.n
            A = Ideal.one(K)
            for P in ps:
                assert P.ideal.norm_int() == p**P.f
                A = A.mul(P.ideal.pow(P.e))
            assert A == Ideal.principal(K, K.el([p]))


def test_index_prime_decompose():
    # 2 divides the index of x^3 + 16x + 16 (index 8)
    K = NumberField([16, 16, 0, 1])
    ps = decompose(K, 2)
    assert sum(P.e * P.f for P in ps) == 3


def test_valuation_element():
    K = K23()
    for p in (2, 5, 23):
        for P in decompose(K, p):
            pe = K.el([p])
            assert P.valuation_element(pe) == P.e
            assert P.valuation_element(K.one) == 0
            u = uniformizer(P)
            assert P.valuation_element(u) == 1


def test_element_with_valuations():
    K = K23()
    ps = decompose(K, 5) + decompose(K, 23)
    want = [1, 0] + [0] * (len(ps) - 2)
    x = element_with_valuations(K, ps, want)
    for P, w in zip(ps, want):
        assert P.valuation_element(x) == w


def test_ideal_arithmetic():
    K = K3()
    A = Ideal.principal(K, K.el([1, 1]))  # (1 + sqrt 3), norm 2
    assert abs(A.norm_int()) == 2
    B = A.mul(A.inverse())
    assert B == Ideal.one(K)
    assert A.pow(3) == A.mul(A).mul(A)
    assert A.contains(K.el([1, 1]))
    assert not A.contains(K.one)
    assert A.add(Ideal.principal(K, K.el([2]))) == A  # gcd: (1+sqrt3) | (2)


def test_residue_field_small():
    K = K3()
    (P,) = decompose(K, 7)
    rf = P.residue_field()
    assert rf.q == 49
    sq = sum(1 for i in range(rf.q) if i != rf.zero and rf.is_square(i))
    assert sq == 24  # (q - 1) / 2 unit squares
    a = rf.reduce_element(K.gen)
    assert rf.mul(a, a) == rf.reduce_element(K.el([3]))
    # lift then reduce is the identity on indices
    for i in (0, 1, 5, 48):
        assert rf.reduce_element(rf.lift(i)) == i


def test_residue_field_frobenius_fixed():
    K = K23()
    ps = [P for P in decompose(K, 5) if P.f == 2]
    (P,) = ps
    rf = P.residue_field()
    a = rf.reduce_element(K.gen)
    assert rf.pow(a, 25) == a  # x^(q) = x in F_q
    assert rf.pow(a, 5) != a


def test_prime_indexes_sorted():
    K = K23()
    ps = decompose(K, 59)
    assert [P.p for P in ps] == [59] * len(ps)
    assert len({tuple(map(tuple, P.ideal.num)) for P in ps}) == len(ps)
