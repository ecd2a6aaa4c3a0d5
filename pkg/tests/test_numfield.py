import pytest
from gmpy2 import mpq

from selmerbound.numfield import NumberField, ReducibleError


def test_quadratic_sqrt3():
    K = NumberField([-3, 0, 1])
    assert K.disc == 12
    assert K.signature == (2, 0)
    assert K.index == 1
    # integral basis 1, sqrt(3)
    assert K.basis_den == 1


def test_quadratic_sqrt21():
    K = NumberField([-21, 0, 1])
    assert K.disc == 21
    assert K.signature == (2, 0)
    assert K.index == 2  # basis 1, (1 + sqrt(21))/2


def test_reducible_raises():
    with pytest.raises(ReducibleError):
        NumberField([-1, 0, 1])
    try:
        NumberField([-1, 0, 1])
    except ReducibleError as e:
        assert e.factor is not None


def test_cubic_disc_minus_23():
    K = NumberField([-1, -1, 0, 1])
    assert K.disc == -23
    assert K.signature == (1, 1)
    th = K.gen
    assert K.norm(th) == 1  # N(theta) = -(-1)
    assert K.trace(th) == 0
    assert K.equal(K.power(th, 3), K.add(th, K.one))


def test_nonmaximal_cubic():
    # x^3 + 16x + 16 has poly disc -2^8 * 7 * 13, field index 8
    K = NumberField([16, 16, 0, 1])
    assert K.poly_disc == -23296
    assert K.poly_disc == K.index**2 * K.disc
    assert K.index == 8
    assert K.disc == -364
    assert K.signature == (1, 1)


def test_arithmetic_roundtrips():
    K = NumberField([16, 16, 0, 1])
    a = K.el([mpq(1, 2), mpq(3), mpq(-2)])
    b = K.el([mpq(5), mpq(0), mpq(1, 3)])
    assert K.equal(K.mul(a, K.inv(a)), K.one)
    assert K.equal(K.div(K.mul(a, b), b), a)
    assert K.norm(K.mul(a, b)) == K.norm(a) * K.norm(b)
    assert K.trace(K.add(a, b)) == K.trace(a) + K.trace(b)


def test_norm_is_charpoly_constant():
    K = NumberField([-1, -1, 0, 1])
    a = K.el([2, -1, 1])
    mp = K.minpoly(a)
    n = K.norm(a)
    # minpoly of a primitive element: degree 3, norm = (-1)^3 * c0
    assert len(mp) == 4
    assert n == -mp[0]


def test_order_norm_matches_norm():
    K = NumberField([-21, 0, 1])
    a = K.el([3, 2])
    c = K.to_order(a)
    assert c is not None
    assert K.order_norm(c) == K.norm(a)


def test_to_order_roundtrip():
    K = NumberField([-21, 0, 1])
    assert K.basis_num == [[1, 1], [0, 2]] and K.basis_den == 2
    w = K.from_order([1, 0])  # (1 + sqrt(21))/2
    assert K.to_order(w) == [1, 0]
    assert K.is_integral(w)
    assert not K.is_integral(K.el([mpq(1, 3)]))
    assert K.norm(w) == -5  # (1 - 21)/4


def test_real_signs_certified():
    K = NumberField([1, -3, 0, 1])  # three real roots
    assert K.signature == (3, 0)
    th = K.gen
    # roots of x^3 - 3x + 1 are about -1.88, 0.35, 1.53
    assert [K.real_sign(th, i) for i in range(3)] == [-1, 1, 1]
    assert K.sign_mask(th) == 0b001  # bit set where negative
    assert K.sign_mask(K.one) == 0
    with pytest.raises(ValueError):
        K.real_sign(K.zero, 0)


def test_embeddings_match_signs():
    K = NumberField([-1, -1, 0, 1])
    embs = K.embeddings_c(40)
    assert len(embs) == 2  # one real, one complex up to conjugation
    assert abs(embs[0].imag) < 1e-30
    assert embs[1].imag > 0
    th = K.gen
    assert K.real_sign(th, 0) == 1


def test_disc_is_trace_form_det():
    from selmerbound import intmat
    for coeffs in ([-3, 0, 1], [-1, -1, 0, 1], [16, 16, 0, 1]):
        K = NumberField(coeffs)
        n = K.n
        basis = [K.from_order([1 if j == i else 0 for j in range(n)])
                 for i in range(n)]
        gram = [[K.trace(K.mul(bi, bj)) for bj in basis] for bi in basis]
        assert intmat.det([[int(x) for x in row] for row in gram]) == K.disc
