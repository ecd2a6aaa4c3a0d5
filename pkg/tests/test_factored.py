from selmerbound.factored import FactorContext
from selmerbound.ideals import decompose
from selmerbound.numfield import NumberField


def setup_ctx():
    K = NumberField([-3, 0, 1])
    return K, FactorContext(K)


def test_atom_dedup():
    K, ctx = setup_ctx()
    a = ctx.atom(K.el([1, 1]))
    b = ctx.atom(K.el([1, 1]))
    assert len(ctx.atoms) == 1
    assert a.mul(b).exps == {0: 2}


def test_value_is_product():
    K, ctx = setup_ctx()
    a = ctx.atom(K.el([1, 1]))
    b = ctx.atom(K.el([2, -1]))
    x = a.pow(3).mul(b.pow(-2))
    lhs = x.value()
    rhs = K.div(K.power(K.el([1, 1]), 3), K.power(K.el([2, -1]), 2))
    assert K.equal(lhs, rhs)


def test_mod2_and_value_mod_squares():
    K, ctx = setup_ctx()
    a = ctx.atom(K.el([1, 1]))
    b = ctx.atom(K.el([5]))
    x = a.pow(3).mul(b.pow(2))
    y = x.mod2()
    assert y.exps == {0: 1}
    # the dropped part is the square of (1 + sqrt3) * 5
    ratio = K.div(x.value(), x.value_mod_squares())
    sq = K.mul(K.el([1, 1]), K.el([5]))
    assert K.equal(ratio, K.mul(sq, sq))


def test_sign_mask_multiplicative_mod_squares():
    K, ctx = setup_ctx()
    a = ctx.atom(K.el([1, 1]))    # 1 + sqrt3: +, -  at the two real places
    b = ctx.atom(K.el([-1]))
    assert b.sign_mask() == 0b11
    x = a.mul(b)
    assert x.sign_mask() == K.sign_mask(x.value())
    assert a.pow(2).sign_mask() == 0


def test_valuation_additive():
    K, ctx = setup_ctx()
    (P,) = decompose(K, 2)
    a = ctx.atom(K.el([1, 1]))   # valuation 1 at the prime over 2
    b = ctx.atom(K.el([2]))      # valuation 2
    assert a.valuation(P) == 1
    assert b.valuation(P) == 2
    assert a.pow(3).mul(b).valuation(P) == 5
    assert a.div(b).valuation(P) == -1


def test_is_trivial_mod2():
    K, ctx = setup_ctx()
    a = ctx.atom(K.el([1, 1]))
    assert a.pow(2).is_trivial_mod2()
    assert not a.is_trivial_mod2()
    assert ctx.one().is_trivial_mod2()


def test_map_atoms_pushforward():
    K, ctx = setup_ctx()
    ctx2 = FactorContext(K)
    a = ctx.atom(K.el([1, 1]))
    b = ctx.atom(K.el([5]))
    x = a.pow(2).mul(b)
    y = x.map_atoms(ctx2, lambda el: K.mul(el, el))  # square everything
    assert K.equal(y.value(), K.power(x.value(), 2))


def test_logs_match_value():
    import mpmath
    K, ctx = setup_ctx()
    a = ctx.atom(K.el([1, 1]))
    b = ctx.atom(K.el([2, -1]))
    x = a.pow(2).mul(b.pow(-1))
    lv = x.logs(prec=60)
    embs = K.embeddings_c(60)
    val = x.value()
    with mpmath.workdps(60):
        for i, e in enumerate(embs[:2]):
            direct = mpmath.log(abs(
                val[0] + mpmath.mpf(val[1].numerator) /
                mpmath.mpf(val[1].denominator) * e.real))
            assert abs(lv[i] - direct) < 1e-30
