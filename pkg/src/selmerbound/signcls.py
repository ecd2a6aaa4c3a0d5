"""Class groups cut by sign conditions at the real places.

For a subgroup V of the sign group of a field (an F2 span of sign
masks), the V-conditioned class group is the quotient of all fractional
ideals by the principal ideals admitting a generator whose sign vector
lies in V.  V = everything gives the plain class group, V = 0 the
narrow one; the two intermediate cuts used here live on the structured
sign layout of a cubic extension L/K (ramified blocks of one real
place, unramified blocks of three, tails paired).

The presentation is derived from an already-computed ClassGroup: its
pivot rows with their factored witnesses give the plain relation
lattice, and a row combination is a relation here exactly when its
witness sign lands in V modulo unit signs.  Doubled pivot rows are
always relations, so the lattice has full rank and a Smith normal form
gives the invariants together with 2-torsion witnesses.
"""

from __future__ import annotations

from . import gf2, intmat


class SignLayout:
    """Bit layout for the real places of a cubic extension L/K and the
    distinguished sign subspaces.

    Order: one bit per ramified real place of K (ascending), then three
    bits per unramified real place (roots ascending, lead first).  A
    set bit means negative.
    """

    def __init__(self, rel):
        self.rel = rel
        self.a = rel.a
        self.b = rel.b
        self.width = rel.sign_width_L
        self.width_k = rel.sign_width_K

    def lead_masks(self):
        """One mask per block: the single place of a ramified block, the
        lead (smallest root) of an unramified one."""
        out = [1 << j for j in range(self.a)]
        out.extend(1 << (self.a + 3 * k) for k in range(self.b))
        return out

    def tail_pair_masks(self):
        """One mask per unramified block: both tail places together."""
        return [0b110 << (self.a + 3 * k) for k in range(self.b)]

    def even_flip_masks(self):
        """Two masks per unramified block spanning its even-weight sign
        patterns (tails together, lead with the top place)."""
        out = []
        for k in range(self.b):
            p = self.a + 3 * k
            out.append(0b110 << p)
            out.append(0b101 << p)
        return out

    def zero_span(self):
        return gf2.F2Space(self.width)

    def full_span(self):
        return gf2.span([1 << j for j in range(self.width)], self.width)

    def tail_pair_span(self):
        return gf2.span(self.tail_pair_masks(), self.width)

    def tail_lead_span(self):
        return gf2.span(self.tail_pair_masks() + self.lead_masks(),
                        self.width)

    def even_flip_span(self):
        return gf2.span(self.even_flip_masks(), self.width)

    def from_base(self, mask_k: int) -> int:
        """Sign mask of an embedded K-element: the sign at a base place
        repeats at every place above it."""
        out = 0
        for j in range(self.a):
            if (mask_k >> j) & 1:
                out |= 1 << j
        for k in range(self.b):
            if (mask_k >> (self.a + k)) & 1:
                out |= 0b111 << (self.a + 3 * k)
        return out

    def index_chain(self):
        """Indexes of the chain of sign-conditioned principal ideal
        groups: full over tail+lead, tail+lead over tail, tail over
        narrow."""
        full = self.width
        lead = self.tail_lead_span().dim
        tail = self.tail_pair_span().dim
        return (2 ** (full - lead), 2 ** (lead - tail), 2 ** tail)


class SignedClassGroup:
    """Quotient of the ideals by the principal ideals with a generator
    whose sign vector lies in v0."""

    def __init__(self, cg, v0, name=""):
        self.cg = cg
        self.v0 = v0
        self.name = name
        self.field = cg.field
        self.certified = cg.certified
        self._build()

    def _build(self):
        cg = self.cg
        rows, tags = cg._pivot_matrix()
        m = len(rows)
        units = [cg.minus_one] + list(cg.unit_gens)
        width = cg.ctx.sign_width

        denom = self.v0.copy()
        for u in units:
            denom.insert(u.sign_mask())
        self._units = units
        self._unit_masks = [self.v0.reduce(u.sign_mask()) for u in units]

        reduced = [denom.reduce(t.sign_mask()) for t in tags]
        combos = gf2.kernel(reduced, width)

        pres = []
        wits = []
        for c in combos:
            row = [0] * m
            wit = cg.ctx.one()
            for i in range(len(rows)):
                if (c >> i) & 1:
                    row = [x + y for x, y in zip(row, rows[i])]
                    wit = wit.mul(tags[i])
            pres.append(row)
            wits.append(wit)
        for i in range(len(rows)):
            pres.append([2 * x for x in rows[i]])
            wits.append(tags[i].pow(2))

        self.sign_quotient_dim = m - len(combos)
        if m == 0:
            self._snf_d = []
            self._snf_u = []
            self._snf_vinv = []
            self.h = 1
            self.invariants = []
            self._wits = []
            return

        U, D, V = intmat.snf_with_transform(pres)
        d = [D[i][i] for i in range(m)]
        assert all(d), "sign-conditioned relation lattice lost rank"
        vinv, den = intmat.inverse_q(V)
        assert den == 1
        self._snf_d = d
        self._snf_u = U
        self._snf_v = V
        self._snf_vinv = vinv
        self._wits = wits
        self.h = 1
        for x in d:
            self.h *= abs(x)
        self.invariants = sorted(
            (abs(x) for x in d if abs(x) > 1), reverse=True)
        q, r = divmod(self.h, cg.h)
        assert r == 0 and q == 2 ** self.sign_quotient_dim

    @property
    def two_rank(self):
        return sum(1 for x in self._snf_d if x % 2 == 0)

    def vector_order(self, vec):
        """Order of the class of prod(P^vec) over the factor base."""
        import math

        m = len(self._snf_d)
        assert len(vec) == m
        order = 1
        for i in range(m):
            c = sum(vec[r] * self._snf_v[r][i] for r in range(m))
            d = abs(self._snf_d[i])
            g = math.gcd(c % d, d)
            order = order * (d // g) // math.gcd(order, d // g)
        return order

    def _unit_correct(self, fac):
        """Multiply by units so the sign mask lands in v0 exactly."""
        res = self.v0.reduce(fac.sign_mask())
        if res == 0:
            return fac
        combo = gf2.solve(self._unit_masks, res, self.cg.ctx.sign_width)
        assert combo is not None, "witness sign not reachable from units"
        for j in range(len(self._units)):
            if (combo >> j) & 1:
                fac = fac.mul(self._units[j])
        assert self.v0.contains(fac.sign_mask())
        return fac

    def two_torsion(self):
        """Generators of the 2-torsion: pairs (ideal vector over the
        factor base, beta) with I^2 = (beta) and sign of beta in v0.
        One pair per even elementary divisor."""
        out = []
        for i in range(len(self._snf_d)):
            di = self._snf_d[i]
            if abs(di) % 2:
                continue
            beta = self.cg.ctx.one()
            for j, e in enumerate(self._snf_u[i]):
                if e:
                    beta = beta.mul(self._wits[j].pow(e))
            beta = self._unit_correct(beta)
            ivec = [(di * g) // 2 for g in self._snf_vinv[i]]
            out.append((ivec, beta))
        return out

    def __repr__(self):
        inv = "*".join(str(x) for x in self.invariants) or "1"
        return (f"SignedClassGroup({self.name or 'v0'}, h={self.h}, "
                f"[{inv}], certified={self.certified})")


class ClassTower:
    """The sign-conditioned class groups of L and K for one cubic
    extension, derived from one relation computation per field."""

    def __init__(self, rel, *, seed=0, cg_l=None, cg_k=None, **opts):
        from .classgrp import ClassGroup

        self.rel = rel
        self.layout = SignLayout(rel)
        if cg_l is None:
            cg_l = ClassGroup(rel.L, seed=seed,
                              sign_fn=rel.sign_vector_L,
                              sign_width=self.layout.width, **opts)
        else:
            assert cg_l.ctx.sign_width == self.layout.width
        if cg_k is None:
            cg_k = ClassGroup(rel.K, seed=seed, **opts)
        self.cg_L = cg_l
        self.cg_K = cg_k
        self.certified = cg_l.certified and cg_k.certified
        self._cache = {}

    def _group(self, key, cg, v0):
        if key not in self._cache:
            self._cache[key] = SignedClassGroup(cg, v0, name=key)
        return self._cache[key]

    @property
    def plain_L(self):
        return self._group("plain_L", self.cg_L, self.layout.full_span())

    @property
    def narrow_L(self):
        return self._group("narrow_L", self.cg_L, self.layout.zero_span())

    @property
    def tail_L(self):
        """Cut by tail-pair flips only (positive leads, matched tails)."""
        return self._group("tail_L", self.cg_L, self.layout.tail_pair_span())

    @property
    def lead_L(self):
        """Cut by tail pairs and free leads (matched tails)."""
        return self._group("lead_L", self.cg_L, self.layout.tail_lead_span())

    @property
    def plain_K(self):
        wk = self.cg_K.ctx.sign_width
        return self._group(
            "plain_K", self.cg_K,
            gf2.span([1 << j for j in range(wk)], wk))

    @property
    def narrow_K(self):
        return self._group(
            "narrow_K", self.cg_K, gf2.F2Space(self.cg_K.ctx.sign_width))

    def base_unit_sign_span(self):
        """Span of the sign vectors of the unit group of K, written in
        the sign layout of L."""
        lay = self.layout
        masks = []
        for u in [self.cg_K.minus_one] + list(self.cg_K.unit_gens):
            mk = self.rel.sign_vector_K(u.value())
            masks.append(lay.from_base(mk))
        return gf2.span(masks, lay.width)

    def unit_sign_checks(self):
        """Intersections of the base unit sign span with the tail-pair
        and even-flip spans.  Both must be trivial for the counting
        formulas; computed, not assumed."""
        lay = self.layout
        us = self.base_unit_sign_span()
        out = {}
        for key, sub in (("tail_pairs", lay.tail_pair_span()),
                         ("even_flips", lay.even_flip_span())):
            joint = sub.copy()
            for v in us.basis():
                joint.insert(v)
            out[key] = us.dim + sub.dim - joint.dim
        return out

    def rank_gap(self):
        """Two-rank of the tail-cut group of L minus the two-rank of the
        narrow group of K (the pivot of the rank window)."""
        return self.tail_L.two_rank - self.narrow_K.two_rank
