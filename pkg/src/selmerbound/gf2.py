"""Linear algebra over F2 on bitmask row vectors.

Vectors of width w are Python ints with bit i = coordinate i.  All spaces
are kept in reduced row echelon form so membership and coordinates are a
few XORs.
"""

from __future__ import annotations


class F2Space:
    """An F2 subspace built up by inserting generators.

    Tracks, for every echelon row, which inserted generators combine to it,
    so coordinates of a member over the *inserted generator* list can be
    recovered.
    """

    def __init__(self, width: int):
        self.width = width
        # list of (pivot, vector, combo) with combo a mask over inserted gens
        self.rows: list[tuple[int, int, int]] = []
        self.ngens = 0

    def insert(self, v: int) -> bool:
        """Insert a generator; returns True if it enlarged the space."""
        combo = 1 << self.ngens
        self.ngens += 1
        v, combo = self._reduce(v, combo)
        if v == 0:
            return False
        piv = v.bit_length() - 1
        # back-reduce existing rows
        newrows = []
        for p, r, c in self.rows:
            if (r >> piv) & 1:
                r ^= v
                c ^= combo
            newrows.append((p, r, c))
        newrows.append((piv, v, combo))
        newrows.sort(reverse=True)
        self.rows = newrows
        return True

    def _reduce(self, v: int, combo: int) -> tuple[int, int]:
        for p, r, c in self.rows:
            if (v >> p) & 1:
                v ^= r
                combo ^= c
        return v, combo

    def contains(self, v: int) -> bool:
        return self._reduce(v, 0)[0] == 0

    def reduce(self, v: int) -> int:
        """Canonical representative of v modulo the span (F2-linear)."""
        return self._reduce(v, 0)[0]

    def coordinates(self, v: int) -> int | None:
        """Mask over inserted generators producing v, or None."""
        v, combo = self._reduce(v, 0)
        return combo if v == 0 else None

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[int]:
        return [r for _, r, _ in self.rows]

    def enumerate(self):
        """All 2^dim elements of the space."""
        vecs = self.basis()
        for mask in range(1 << len(vecs)):
            x = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    x ^= vecs[i]
                i += 1
                m >>= 1
            yield x

    def copy(self) -> F2Space:
        s = F2Space(self.width)
        s.rows = list(self.rows)
        s.ngens = self.ngens
        return s


def span(vectors, width: int) -> F2Space:
    s = F2Space(width)
    for v in vectors:
        s.insert(v)
    return s


def kernel(rows: list[int], width: int) -> list[int]:
    """Kernel of the map F2^n -> F2^width sending e_i to rows[i].

    Returns masks x over the n rows with XOR_{i in x} rows[i] = 0.
    """
    n = len(rows)
    space = F2Space(width)
    kern = []
    for i, v in enumerate(rows):
        combo = 1 << i
        v2, c2 = space._reduce(v, combo)
        if v2 == 0:
            kern.append(c2)
        else:
            piv = v2.bit_length() - 1
            space.rows.append((piv, v2, c2))
            space.rows.sort(reverse=True)
            space.ngens += 1
    return kern


def solve(rows: list[int], target: int, width: int) -> int | None:
    """A mask x with XOR_{i in x} rows[i] = target, or None."""
    space = F2Space(width)
    for v in rows:
        space.insert(v)
    coords = space.coordinates(target)
    return coords


def quotient_basis(big: F2Space, small: F2Space) -> list[int]:
    """Vectors of `big` mapping to a basis of big/small."""
    assert big.width == small.width
    work = small.copy()
    out = []
    for v in big.basis():
        if work.insert(v):
            out.append(v)
    return out
