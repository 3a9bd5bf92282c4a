"""Generalized matrix algebras (R B; C R) of type (1, 1) over small finite local rings.

Elements of A are tuples (a, b, c, d) with a, d in R, b in B, c in C and
product
    (a, b, c, d)(a', b', c', d') = (aa' + m(b, c'), ab' + d'b, a'c + dc', m(b', c) + dd').
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import log

import numpy as np

from .characters import PseudoCharacter, h1_dimension, is_reducible, residual_characters
from .groups import FiniteGroup
from .representations import Representation, _roots
from .rings import FiniteLocalRing, mat_mul


class RModule:
    """A finite R-module given by its element list, addition and scalar action."""

    def __init__(self, ring, elements, add, act, zero, name="M"):
        self.ring = ring
        self.elements = list(elements)
        self._set = set(self.elements)
        self.add = add
        self.act = act
        self.zero = zero
        self.name = name

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._set

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def span_in_free(cls, ring: FiniteLocalRing, rank: int, gens, name="M") -> RModule:
        """R-span of vectors in R^rank (tuples of ring elements)."""

        def add(x, y):
            return tuple(int(ring.add[a, b]) for a, b in zip(x, y))

        def act(r, x):
            return tuple(int(ring.mul[r, a]) for a in x)

        zero = (ring.zero,) * rank
        elems = _span(ring, zero, add, act, [tuple(int(v) for v in g) for g in gens])
        return cls(ring, sorted(elems), add, act, zero, name)

    @classmethod
    def residue_space(cls, ring: FiniteLocalRing, dim: int, name="M") -> RModule:
        """F_p^dim, with R acting through its residue field."""
        p = ring.p

        def add(x, y):
            return tuple((a + b) % p for a, b in zip(x, y))

        def act(r, x):
            k = int(ring.residue[r])
            return tuple(k * a % p for a in x)

        elems = list(product(range(p), repeat=dim))
        return cls(ring, elems, add, act, (0,) * dim, name)

    def span(self, gens) -> set:
        return _span(self.ring, self.zero, self.add, self.act, list(gens))

    def max_ideal_multiple(self) -> set:
        """m * M."""
        R = self.ring
        gens = {self.act(int(r), x) for r in np.flatnonzero(R.in_max) for x in self.elements}
        return self.span(gens)

    def minimal_generator_count(self) -> int:
        """dim of M/mM over F_p, which by Nakayama is the minimal number of generators."""
        quotient = len(self) // len(self.max_ideal_multiple())
        k = round(log(quotient, self.ring.p)) if quotient > 1 else 0
        if self.ring.p**k != quotient:
            raise AssertionError("M/mM is not an F_p vector space")
        return k

    def annihilator(self, x=None) -> list[int]:
        """Ann(x), or Ann(M) when x is None."""
        targets = [x] if x is not None else self.elements
        return [r for r in range(self.ring.size) if all(self.act(r, t) == self.zero for t in targets)]

    def free_rank_one_generator(self):
        """gamma with M = R gamma and Ann(gamma) = 0, or None."""
        if len(self) != self.ring.size:
            return None
        for g in self.elements:
            if len({self.act(r, g) for r in range(self.ring.size)}) == self.ring.size:
                return g
        return None

    def coefficient(self, gamma, x) -> int:
        """The unique r with r * gamma = x, for a free generator gamma."""
        for r in range(self.ring.size):
            if self.act(r, gamma) == x:
                return r
        raise ValueError(f"{x} is not a multiple of {gamma}")


def _span(ring, zero, add, act, gens) -> set:
    elems = {zero}
    for g in gens:
        multiples = {act(r, g) for r in range(ring.size)}
        frontier = list(elems)
        new = set(elems)
        while frontier:
            x = frontier.pop()
            for m in multiples:
                y = add(x, m)
                if y not in new:
                    new.add(y)
                    frontier.append(y)
        elems = new
    return elems


@dataclass(eq=False)
class DeskGMA:
    ring: FiniteLocalRing
    B: RModule
    C: RModule
    pairing: object  # callable (b, c) -> ring element

    def validate(self) -> list[str]:
        """Violations of bilinearity, m(B, C) in m_R, and the associativity constraints."""
        R, B, C, m = self.ring, self.B, self.C, self.pairing
        problems = []
        table = {(b, c): int(m(b, c)) for b in B for c in C}
        if any(R.in_max[v] == 0 for v in table.values()):
            problems.append("pairing leaves the maximal ideal")
        for b1, b2 in product(B, B):
            s = B.add(b1, b2)
            if any(table[s, c] != R.add[table[b1, c], table[b2, c]] for c in C):
                problems.append("pairing not additive in B")
                break
        for c1, c2 in product(C, C):
            s = C.add(c1, c2)
            if any(table[b, s] != R.add[table[b, c1], table[b, c2]] for b in B):
                problems.append("pairing not additive in C")
                break
        for r in range(R.size):
            if any(table[B.act(r, b), c] != R.mul[r, table[b, c]] or
                   table[b, C.act(r, c)] != R.mul[r, table[b, c]] for b in B for c in C):
                problems.append("pairing not R-linear")
                break
        for b1, c1 in product(B, C):
            v = table[b1, c1]
            if any(B.act(v, b2) != B.act(table[b2, c1], b1) for b2 in B):
                problems.append("m(b1, c1) b2 != m(b2, c1) b1")
                break
            if any(C.act(v, c2) != C.act(table[b1, c2], c1) for c2 in C):
                problems.append("m(b1, c1) c2 != m(b1, c2) c1")
                break
        return problems

    def pairing_ideal(self) -> frozenset[int]:
        vals = {int(self.pairing(b, c)) for b in self.B for c in self.C}
        return self.ring.ideal(vals)

    def mul(self, x, y):
        R, m = self.ring, self.pairing
        a, b, c, d = x
        a2, b2, c2, d2 = y
        return (
            int(R.add[R.mul[a, a2], m(b, c2)]),
            self.B.add(self.B.act(a, b2), self.B.act(d2, b)),
            self.C.add(self.C.act(a2, c), self.C.act(d, c2)),
            int(R.add[m(b2, c), R.mul[d, d2]]),
        )

    def one(self):
        R = self.ring
        return (R.one, self.B.zero, self.C.zero, R.one)

    def trace(self, x) -> int:
        return int(self.ring.add[x[0], x[3]])

    def det(self, x) -> int:
        a, b, c, d = x
        return int(self.ring.sub[self.ring.mul[a, d], self.pairing(b, c)])

    def annihilator_condition(self) -> bool:
        """y B = 0 implies y m(B, C) = 0, for every y in R."""
        R = self.ring
        vals = {int(self.pairing(b, c)) for b in self.B for c in self.C}
        for y in self.B.annihilator():
            if any(R.mul[y, v] != R.zero for v in vals):
                return False
        return True


@dataclass(eq=False)
class GMARepresentation:
    gma: DeskGMA
    group: FiniteGroup
    images: list

    @classmethod
    def from_generators(cls, gma: DeskGMA, group: FiniteGroup, gen_images) -> GMARepresentation | None:
        imgs = [gma.one()]
        for i in range(1, group.order):
            imgs.append(gma.mul(imgs[group.parent[i]], gen_images[group.via[i]]))
        for g in range(group.order):
            for j, s in enumerate(group.generators):
                if gma.mul(imgs[g], gen_images[j]) != imgs[group.mul(g, s)]:
                    return None
        return cls(gma, group, imgs)

    def pseudo_character(self) -> PseudoCharacter:
        t = [self.gma.trace(x) for x in self.images]
        d = [self.gma.det(x) for x in self.images]
        return PseudoCharacter(self.group, self.gma.ring, t, d)


@dataclass
class GMABuild:
    gma: DeskGMA
    representation: GMARepresentation
    conjugated: Representation
    pivot: int
    chi1: np.ndarray
    chi2: np.ndarray
    checks: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.checks.values())


def _eigenvector(R, M, lam):
    """A unimodular v with M v = lam v."""
    a, b, c, d = (int(x) for x in M)
    for y in range(R.size):
        for v in ((R.one, y), (y, R.one)):
            x1, x2 = v
            r1 = R.sub[R.add[R.mul[a, x1], R.mul[b, x2]], R.mul[lam, x1]]
            r2 = R.sub[R.add[R.mul[c, x1], R.mul[d, x2]], R.mul[lam, x2]]
            if r1 == R.zero and r2 == R.zero:
                return v
    raise ValueError("no unimodular eigenvector")


def build_gma_from_rep(rep: Representation) -> GMABuild:
    """Conjugate rho so an element with distinct residual eigenvalues is diagonal,
    then read off B, C as the R-spans of the off-diagonal entries."""
    R, G = rep.ring, rep.group
    pc = rep.pseudo_character()
    split = residual_characters(pc)
    if split is None:
        raise ValueError("residual pseudo-character is irreducible")
    chi1, chi2 = split
    if (chi1 == chi2).all():
        raise ValueError("residually scalar: chi1 = chi2, no idempotent to split with")
    h = int(np.flatnonzero(chi1 != chi2)[0])
    Mh = rep.images[h]
    roots = _roots(R, int(pc.t[h]), int(pc.d[h]))
    alpha = next(r for r in roots if R.residue[r] == chi1[h])
    beta = next(r for r in roots if R.residue[r] == chi2[h])
    va, vb = _eigenvector(R, Mh, alpha), _eigenvector(R, Mh, beta)
    P = np.array([va[0], vb[0], va[1], vb[1]])
    conj = rep.conjugate(P)

    imgs = conj.images
    B = RModule.span_in_free(R, 1, [(int(x[1]),) for x in imgs], "B")
    C = RModule.span_in_free(R, 1, [(int(x[2]),) for x in imgs], "C")
    gma = DeskGMA(R, B, C, lambda b, c: int(R.mul[b[0], c[0]]))
    gimgs = [(int(x[0]), (int(x[1]),), (int(x[2]),), int(x[3])) for x in imgs]
    grep = GMARepresentation(gma, G, gimgs)

    # e = (rho(h) - beta) / (alpha - beta) must be diag(1, 0)
    u = int(R.inv[R.sub[alpha, beta]])
    hm = imgs[h]
    e = [int(R.mul[u, R.sub[hm[0], beta]]), int(R.mul[u, hm[1]]),
         int(R.mul[u, hm[2]]), int(R.mul[u, R.sub[hm[3], beta]])]
    gpc = grep.pseudo_character()
    checks = {
        "trace and determinant preserved": bool((gpc.t == pc.t).all() and (gpc.d == pc.d).all()),
        "pairing lands in the maximal ideal": not any("maximal" in v for v in gma.validate()),
        "GMA axioms": not gma.validate(),
        "idempotent diag(1, 0) lies in R[rho(G)]": e == [R.one, R.zero, R.zero, R.zero],
        "residual diagonal is (chi1, chi2)": bool(
            (R.residue[imgs[:, 0]] == chi1).all() and (R.residue[imgs[:, 3]] == chi2).all()
        ),
    }
    return GMABuild(gma, grep, conj, h, chi1, chi2, checks)


def free_rank_one_transport(grep: GMARepresentation) -> Representation:
    """Map (a, b, c, d) to [[a, beta], [m(gamma, c), d]] where b = beta * gamma."""
    gma = grep.gma
    gamma = gma.B.free_rank_one_generator()
    if gamma is None:
        raise ValueError("B is not free of rank one")
    imgs = np.array(
        [[a, gma.B.coefficient(gamma, b), gma.pairing(gamma, c), d] for a, b, c, d in grep.images],
        dtype=np.int32,
    )
    return Representation(grep.group, gma.ring, imgs)


def ideal_reduction_is_reducible(grep: GMARepresentation) -> bool:
    """t modulo the pairing ideal is a sum of two characters."""
    I = grep.gma.pairing_ideal()
    Rq, proj = grep.gma.ring.quotient(I, "I")
    return bool(is_reducible(grep.pseudo_character().push_forward(Rq, proj)))


@dataclass(frozen=True)
class NakayamaBound:
    mu_B: int
    h1_B: int
    mu_C: int
    h1_C: int

    @property
    def holds(self) -> bool:
        return self.mu_B <= self.h1_B and self.mu_C <= self.h1_C


def nakayama_bound(grep: GMARepresentation, chi1, chi2) -> NakayamaBound:
    """mu(B) <= dim H^1(G, chi1/chi2) and mu(C) <= dim H^1(G, chi2/chi1)."""
    p = grep.gma.ring.p
    G = grep.group
    inv2 = np.array([pow(int(v), -1, p) for v in chi2])
    inv1 = np.array([pow(int(v), -1, p) for v in chi1])
    return NakayamaBound(
        grep.gma.B.minimal_generator_count(),
        h1_dimension(G, p, chi1 * inv2 % p),
        grep.gma.C.minimal_generator_count(),
        h1_dimension(G, p, chi2 * inv1 % p),
    )


def rep_matrix_check(rep: Representation) -> bool:
    """rho(g) rho(h) = rho(gh) over all pairs."""
    R, G = rep.ring, rep.group
    lhs = mat_mul(R, rep.images[:, None], rep.images[None, :])
    return bool((lhs == rep.images[G.table]).all())

