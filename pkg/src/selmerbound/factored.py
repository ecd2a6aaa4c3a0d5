"""Elements kept in factored form: products of registered atoms.

Class group and unit computations produce witnesses that are huge when
expanded but cheap as exponent vectors over a shared registry of small
field elements.  Signs, valuations and norms are all multiplicative, so
they are computed atom by atom and cached on the registry; the element
itself is only ever expanded after reducing exponents mod 2 (which is
all the square-class layers need).
"""

from __future__ import annotations

from gmpy2 import mpq


class FactorContext:
    """Registry of atoms for one field, with per-atom caches."""

    def __init__(self, field, sign_fn=None, sign_width=None):
        self.field = field
        self.atoms = []
        self._index = {}
        self.sign_fn = sign_fn if sign_fn is not None else field.sign_mask
        self.sign_width = sign_width if sign_width is not None else field.r1
        self._signs = {}
        self._vals = {}

    def atom(self, el):
        key = tuple(el)
        if key not in self._index:
            self._index[key] = len(self.atoms)
            self.atoms.append(el)
        return Factored(self, {self._index[key]: 1})

    def one(self):
        return Factored(self, {})

    def sign_of_atom(self, i):
        if i not in self._signs:
            self._signs[i] = self.sign_fn(self.atoms[i])
        return self._signs[i]

    def val_of_atom(self, prime, i):
        key = (id(prime), i)
        if key not in self._vals:
            self._vals[key] = prime.valuation_element(self.atoms[i])
        return self._vals[key]


class Factored:
    __slots__ = ("ctx", "exps")

    def __init__(self, ctx, exps):
        self.ctx = ctx
        self.exps = {i: e for i, e in exps.items() if e}

    def mul(self, other):
        assert self.ctx is other.ctx
        out = dict(self.exps)
        for i, e in other.exps.items():
            out[i] = out.get(i, 0) + e
        return Factored(self.ctx, out)

    def div(self, other):
        assert self.ctx is other.ctx
        out = dict(self.exps)
        for i, e in other.exps.items():
            out[i] = out.get(i, 0) - e
        return Factored(self.ctx, out)

    def pow(self, k):
        k = int(k)
        return Factored(self.ctx, {i: e * k for i, e in self.exps.items()})

    def mod2(self):
        return Factored(self.ctx, {i: e % 2 for i, e in self.exps.items()})

    def is_trivial_mod2(self):
        return all(e % 2 == 0 for e in self.exps.values())

    def sign_mask(self):
        """Sign vector of the product (set bit = negative embedding)."""
        mask = 0
        for i, e in self.exps.items():
            if e % 2:
                mask ^= self.ctx.sign_of_atom(i)
        return mask

    def valuation(self, prime):
        return sum(e * self.ctx.val_of_atom(prime, i)
                   for i, e in self.exps.items())

    def value(self):
        """Expand to an actual field element.  Reduce mod 2 first unless the
        exact value is really needed; exponents may be negative."""
        f = self.ctx.field
        out = f.one
        for i, e in self.exps.items():
            out = f.mul(out, f.power(self.ctx.atoms[i], e))
        return out

    def value_mod_squares(self):
        return self.mod2().value()

    def map_atoms(self, other_ctx, fn):
        """Push forward along a multiplicative map (e.g. a relative norm):
        atom-wise application, exponents preserved."""
        out = other_ctx.one()
        for i, e in self.exps.items():
            out = out.mul(other_ctx.atom(fn(self.ctx.atoms[i])).pow(e))
        return out

    def logs(self, prec=60):
        """Log-embedding row: log|sigma(x)| per infinite place (complex
        places doubled), via mpmath on the atoms."""
        import mpmath

        f = self.ctx.field
        emb = f.embeddings_c(prec)
        with mpmath.workdps(prec):
            out = [mpmath.mpf(0)] * len(emb)
            for i, e in self.exps.items():
                el = self.ctx.atoms[i]
                for j, z in enumerate(emb):
                    val = mpmath.mpc(0)
                    for c in reversed(el):
                        q = mpq(c)
                        val = val * z + mpmath.mpf(int(q.numerator)) / mpmath.mpf(int(q.denominator))
                    w = 2 if j >= f.r1 else 1
                    out[j] += e * w * mpmath.log(abs(val))
        return out

    def __repr__(self):
        return f"Factored({self.exps})"
