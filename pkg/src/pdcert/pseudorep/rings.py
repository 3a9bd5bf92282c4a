"""Small finite local rings with residue field F_p, stored as lookup tables.

Elements are integers 0..size-1; ``add``/``mul`` are size x size numpy tables,
so whole arrays of elements can be combined by fancy indexing.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product

import numpy as np

from ..arith import is_prime

MAX_RING_SIZE = 5**4


class FiniteLocalRing:
    def __init__(self, tag, p, labels, add, mul, residue):
        self.tag = tag
        self.p = p
        self.labels = list(labels)
        self.size = len(self.labels)
        self.add = np.asarray(add, dtype=np.int32)
        self.mul = np.asarray(mul, dtype=np.int32)
        self.residue = np.asarray(residue, dtype=np.int32)
        ident = np.arange(self.size)
        self.zero = next(i for i in range(self.size) if (self.add[i] == ident).all())
        self.one = next(i for i in range(self.size) if (self.mul[i] == ident).all())
        self.neg = np.argmax(self.add == self.zero, axis=1).astype(np.int32)
        self.sub = self.add[:, self.neg]
        self.in_max = self.residue == 0
        self.units = np.flatnonzero(~self.in_max)
        self.inv = np.where(self.in_max, -1, np.argmax(self.mul == self.one, axis=1)).astype(np.int32)
        # multiples of 1, i.e. the image of Z
        ints = [self.zero]
        while True:
            nxt = int(self.add[ints[-1], self.one])
            if nxt == self.zero:
                break
            ints.append(nxt)
        self._ints = ints

    @property
    def characteristic(self) -> int:
        return len(self._ints)

    def __repr__(self):
        return f"FiniteLocalRing({self.tag!r}, size={self.size})"

    def __eq__(self, other):
        return isinstance(other, FiniteLocalRing) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def from_int(self, k: int) -> int:
        return self._ints[k % self.characteristic]

    def label(self, x: int) -> str:
        return self.labels[x]

    def is_unit(self, x) -> bool:
        return not self.in_max[x]

    def scalar_mul(self, k: int, x):
        return self.mul[self.from_int(k), x]

    def power(self, x: int, e: int) -> int:
        out = self.one
        for _ in range(e):
            out = int(self.mul[out, x])
        return out

    # ideals and quotients

    def ideal(self, generators) -> frozenset[int]:
        """The ideal generated by the given elements."""
        elems = {self.zero}
        for g in generators:
            multiples = {int(self.mul[r, g]) for r in range(self.size)}
            new = set(elems)
            for m in multiples:
                for e in elems:
                    new.add(int(self.add[e, m]))
            # close under addition
            frontier = list(new)
            while frontier:
                x = frontier.pop()
                for m in multiples:
                    y = int(self.add[x, m])
                    if y not in new:
                        new.add(y)
                        frontier.append(y)
            elems = new
        return frozenset(elems)

    def maximal_ideal(self) -> frozenset[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.in_max))

    def quotient(self, ideal, name: str | None = None) -> tuple[FiniteLocalRing, np.ndarray]:
        """R/I and the projection as an index array."""
        ideal = sorted(ideal)
        if any(not self.in_max[i] for i in ideal):
            raise ValueError("a proper ideal of a local ring lies in the maximal ideal")
        rep_of = np.full(self.size, -1)
        reps = []
        for x in range(self.size):
            if rep_of[x] >= 0:
                continue
            coset = [int(self.add[x, i]) for i in ideal]
            for y in coset:
                rep_of[y] = len(reps)
            reps.append(x)
        proj = rep_of.astype(np.int32)
        n = len(reps)
        add = [[proj[self.add[a, b]] for b in reps] for a in reps]
        mul = [[proj[self.mul[a, b]] for b in reps] for a in reps]
        if len(ideal) == 1:
            tag = self.tag
        else:
            tag = f"{self.tag}/{name or f'I{len(ideal)}'}"
        labels = [self.labels[r] for r in reps]
        q = FiniteLocalRing(tag, self.p, labels, add, mul, [self.residue[r] for r in reps])
        return q, proj

    def residue_field(self) -> tuple[FiniteLocalRing, np.ndarray]:
        return self.quotient(self.maximal_ideal(), "m")


def _nilpotent_square_zero(p: int, names: tuple[str, ...], tag: str) -> FiniteLocalRing:
    """F_p[x_1..x_r]/(x_1..x_r)^2 with element (c0, c1, .., cr) <-> index sum c_i p^i."""
    r = len(names)
    coords = list(product(range(p), repeat=r + 1))
    coords = [tuple(reversed(c)) for c in coords]  # c0 varies fastest
    index = {c: i for i, c in enumerate(coords)}

    def label(c):
        parts = []
        if c[0]:
            parts.append(str(c[0]))
        for k, name in zip(c[1:], names):
            if k:
                parts.append(name if k == 1 else f"{k}{name}")
        return "+".join(parts) or "0"

    size = len(coords)
    add = np.zeros((size, size), dtype=np.int32)
    mul = np.zeros((size, size), dtype=np.int32)
    for i, a in enumerate(coords):
        for j, b in enumerate(coords):
            add[i, j] = index[tuple((x + y) % p for x, y in zip(a, b))]
            prod_ = (a[0] * b[0] % p,) + tuple(
                (a[0] * b[k] + a[k] * b[0]) % p for k in range(1, r + 1)
            )
            mul[i, j] = index[prod_]
    residue = [c[0] for c in coords]
    ring = FiniteLocalRing(tag, p, [label(c) for c in coords], add, mul, residue)
    ring.coords = coords
    ring.coord_index = index
    return ring


def _cyclic_mod(p: int, e: int) -> FiniteLocalRing:
    n = p**e
    vals = np.arange(n)
    add = (vals[:, None] + vals[None, :]) % n
    mul = (vals[:, None] * vals[None, :]) % n
    ring = FiniteLocalRing(f"Z/{n}", p, [str(v) for v in range(n)], add, mul, vals % p)
    ring.coords = [(v,) for v in range(n)]
    ring.coord_index = {(v,): v for v in range(n)}
    return ring


_TAG = re.compile(r"F(\d+)(?:\[(e|eps|x,y)\])?|Z/(\d+)")


@lru_cache(maxsize=None)
def catalog_ring(tag: str) -> FiniteLocalRing:
    """Rings by tag: ``F3``, ``F3[e]`` (dual numbers), ``F3[x,y]`` (mod (x,y)^2), ``Z/9``."""
    m = _TAG.fullmatch(tag.replace(" ", ""))
    if not m:
        raise ValueError(f"unknown ring tag {tag!r}; try F3, F3[e], F3[x,y] or Z/9")
    if m[3]:
        n = int(m[3])
        p = next((q for q in range(2, n + 1) if n % q == 0), n)
        if p * p != n or not is_prime(p) or p == 2:
            raise ValueError(f"Z/{n}: only Z/p^2 for odd primes p is catalogued")
        ring = _cyclic_mod(p, 2)
    else:
        p = int(m[1])
        if p == 2 or not is_prime(p):
            raise ValueError(f"F{p}: residue characteristic must be an odd prime")
        kind = m[2]
        if kind is None:
            ring = _nilpotent_square_zero(p, (), f"F{p}")
        elif kind in ("e", "eps"):
            ring = _nilpotent_square_zero(p, ("e",), f"F{p}[e]")
        else:
            ring = _nilpotent_square_zero(p, ("x", "y"), f"F{p}[x,y]")
    if ring.size > MAX_RING_SIZE:
        raise ValueError(f"{tag} has {ring.size} elements, above the limit {MAX_RING_SIZE}")
    return ring


CATALOG_RINGS = ("F3", "F3[e]", "F3[x,y]", "Z/9", "F5", "F5[e]", "Z/25")


# 2x2 matrices: tuples (a, b, c, d) of ring elements, or arrays of shape (..., 4).


def mat_mul(R: FiniteLocalRing, A, B):
    A = np.asarray(A)
    B = np.asarray(B)
    a, b, c, d = (A[..., i] for i in range(4))
    e, f, g, h = (B[..., i] for i in range(4))
    M, S = R.mul, R.add
    return np.stack(
        [S[M[a, e], M[b, g]], S[M[a, f], M[b, h]], S[M[c, e], M[d, g]], S[M[c, f], M[d, h]]],
        axis=-1,
    )


def mat_trace(R: FiniteLocalRing, A):
    A = np.asarray(A)
    return R.add[A[..., 0], A[..., 3]]


def mat_det(R: FiniteLocalRing, A):
    A = np.asarray(A)
    return R.sub[R.mul[A[..., 0], A[..., 3]], R.mul[A[..., 1], A[..., 2]]]


def mat_inv(R: FiniteLocalRing, A):
    A = np.asarray(A)
    det = int(mat_det(R, A))
    if not R.is_unit(det):
        raise ValueError("matrix is not invertible over the ring")
    u = int(R.inv[det])
    a, b, c, d = (int(x) for x in A)
    return np.array([R.mul[u, d], R.mul[u, R.neg[b]], R.mul[u, R.neg[c]], R.mul[u, a]])


def identity(R: FiniteLocalRing):
    return np.array([R.one, R.zero, R.zero, R.one])


def diag(R: FiniteLocalRing, x, y):
    return np.array([x, R.zero, R.zero, y])
