"""Sign-conditioned class groups against classical values and identities."""

import pytest

from selmerbound import gf2, polys
from selmerbound.classgrp import ClassGroup
from selmerbound.numfield import NumberField
from selmerbound.relative import RelativeCubic
from selmerbound.signcls import ClassTower, SignedClassGroup, SignLayout


def rational():
    return NumberField([-2, 1])


def narrow(cg):
    return SignedClassGroup(cg, gf2.F2Space(cg.ctx.sign_width), name="narrow")


# ---- narrow class groups of real quadratic fields ---------------------------

# (d, plain invariants, narrow invariants): classical table values
QUAD_NARROW = [
    (2, [], []),
    (3, [], [2]),
    (6, [], [2]),
    (10, [2], [2]),
    (15, [2], [2, 2]),
    (21, [], [2]),
    (30, [2], [2, 2]),
]


@pytest.mark.parametrize("d,plain,nar", QUAD_NARROW)
def test_quadratic_narrow_known(d, plain, nar):
    cg = ClassGroup(NumberField([-d, 0, 1]))
    assert cg.invariants == plain
    sg = narrow(cg)
    assert sg.invariants == nar
    assert sg.certified


@pytest.mark.parametrize("d", [2, 3, 6, 10, 15, 21, 30, 79, 226])
def test_quadratic_narrow_genus_rank(d):
    """2-rank of the narrow group is one less than the number of prime
    divisors of the field discriminant (genus theory)."""
    K = NumberField([-d, 0, 1])
    from selmerbound import arith

    t = len(arith.factorint(abs(K.disc)))
    sg = narrow(ClassGroup(K))
    assert sg.two_rank == t - 1


def test_imaginary_quadratic_narrow_is_plain():
    cg = ClassGroup(NumberField([5, 0, 1]))
    sg = narrow(cg)
    assert sg.h == cg.h == 2
    assert sg.invariants == cg.invariants == [2]


# ---- the classical index identity -------------------------------------------

def unit_sign_span(cg):
    sp = gf2.F2Space(cg.ctx.sign_width)
    for u in [cg.minus_one] + list(cg.unit_gens):
        sp.insert(u.sign_mask())
    return sp


@pytest.mark.parametrize("poly", [
    [-3, 0, 1], [-21, 0, 1], [-10, 0, 1], [-15, 0, 1],
    [-1, -1, 0, 1], [1, -3, 0, 1], [-10, -12, 0, 1], [-5, -12, 0, 1],
])
def test_signed_order_identity(poly):
    """h_V = h * 2^(width - dim(V + unit signs)) for every cut V: the
    relation witnesses must realize every sign pattern modulo units."""
    cg = ClassGroup(NumberField(poly))
    w = cg.ctx.sign_width
    full = gf2.span([1 << j for j in range(w)], w)
    cuts = [gf2.F2Space(w), full]
    if w >= 2:
        cuts.append(gf2.span([3], w))
    us = unit_sign_span(cg)
    for v0 in cuts:
        sg = SignedClassGroup(cg, v0)
        joint = v0.copy()
        for v in us.basis():
            joint.insert(v)
        assert sg.h == cg.h * 2 ** (w - joint.dim)
        assert sg.h == cg.h * 2 ** sg.sign_quotient_dim


# ---- two-torsion witnesses ---------------------------------------------------

@pytest.mark.parametrize("poly", [[-3, 0, 1], [-15, 0, 1], [-10, -12, 0, 1]])
def test_two_torsion_witnesses_exact(poly):
    cg = ClassGroup(NumberField(poly))
    sg = narrow(cg)
    tors = sg.two_torsion()
    assert len(tors) == sg.two_rank > 0
    from selmerbound.ideals import Ideal

    for ivec, beta in tors:
        assert sg.v0.contains(beta.sign_mask())
        A = Ideal.one(cg.field)
        for P, e in zip(cg.fb, ivec):
            if e:
                A = A.mul(P.ideal.pow(e))
        lhs = A.mul(A)
        rhs = Ideal.principal(cg.field, beta.value())
        assert lhs.num == rhs.num and lhs.den == rhs.den
        assert sg.vector_order(ivec) == 2


# ---- towers over the rationals ----------------------------------------------

def test_tower_one_real_root():
    rel = RelativeCubic(rational(), [[-1], [-1], [], [1]])
    tw = ClassTower(rel)
    assert (rel.a, rel.b) == (1, 0)
    assert tw.layout.index_chain() == (1, 2, 1)
    for g in (tw.plain_L, tw.narrow_L, tw.tail_L, tw.lead_L,
              tw.plain_K, tw.narrow_K):
        assert g.h == 1
    # no unramified blocks: the tail cut degenerates to the narrow one
    assert tw.tail_L.h == tw.narrow_L.h
    assert tw.unit_sign_checks() == {"tail_pairs": 0, "even_flips": 0}
    assert tw.rank_gap() == 0
    assert tw.certified


def test_tower_totally_real():
    rel = RelativeCubic(rational(), [[1], [-3], [], [1]])
    tw = ClassTower(rel)
    assert (rel.a, rel.b) == (0, 1)
    assert tw.layout.index_chain() == (2, 2, 2)
    for g in (tw.plain_L, tw.narrow_L, tw.tail_L, tw.lead_L):
        assert g.h == 1
    assert tw.unit_sign_checks() == {"tail_pairs": 0, "even_flips": 0}
    assert tw.rank_gap() == 0


def test_tower_narrow_differs():
    # x^3 - 12x - 10, disc 4212: plain class group Z/3, narrow Z/6
    rel = RelativeCubic(rational(), [[-10], [-12], [], [1]])
    tw = ClassTower(rel)
    assert tw.plain_L.invariants == [3]
    assert tw.narrow_L.invariants == [6]
    assert tw.rank_gap() == tw.tail_L.two_rank == 1


def test_layout_chain_two_ramified():
    # both real places of Q(sqrt 3) ramify in the field of x^3+16x+16
    K = NumberField([-3, 0, 1])
    rel = RelativeCubic(K, [[16], [16], [], [1]])
    assert (rel.a, rel.b) == (2, 0)
    assert SignLayout(rel).index_chain() == (1, 4, 1)


def test_embedded_sign_vectors_match():
    """from_base must agree with certified signs of embedded elements."""
    K = NumberField([-21, 0, 1])
    rel = RelativeCubic(K, [[128], [], [1], [1]])
    lay = SignLayout(rel)
    import random

    rng = random.Random(5)
    for _ in range(12):
        x = K.el([rng.randrange(-9, 10), rng.randrange(-9, 10)])
        if x == K.zero:
            continue
        got = lay.from_base(rel.sign_vector_K(x))
        assert got == rel.sign_vector_L(rel.emb(x))


def test_seed_independence():
    polyn = [-15, 0, 1]
    base = None
    for seed in (0, 1, 7):
        sg = narrow(ClassGroup(NumberField(polyn), seed=seed))
        cur = (sg.h, sg.invariants, sg.two_rank)
        if base is None:
            base = cur
        assert cur == base
