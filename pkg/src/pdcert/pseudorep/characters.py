"""Two-dimensional pseudo-characters (t, d) on finite groups, their axioms,
reducibility, and the group cohomology needed to bound generator counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .groups import FiniteGroup
from .rings import FiniteLocalRing


@dataclass(eq=False)
class PseudoCharacter:
    """A trace function t and determinant d on G with values in R (index arrays)."""

    group: FiniteGroup
    ring: FiniteLocalRing
    t: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=np.int32)
        self.d = np.asarray(self.d, dtype=np.int32)
        n = self.group.order
        if self.t.shape != (n,) or self.d.shape != (n,):
            raise ValueError(f"t and d need one value per group element ({n})")

    def key(self):
        return (self.group.tag, self.ring.tag, tuple(self.t.tolist()), tuple(self.d.tolist()))

    def __eq__(self, other):
        return isinstance(other, PseudoCharacter) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def push_forward(self, target: FiniteLocalRing, proj: np.ndarray) -> PseudoCharacter:
        return PseudoCharacter(self.group, target, proj[self.t], proj[self.d])

    def residual(self) -> PseudoCharacter:
        k, proj = self.ring.residue_field()
        return self.push_forward(k, proj)

    def residual_values(self) -> tuple[np.ndarray, np.ndarray]:
        """(t, d) reduced to integers mod p."""
        return self.ring.residue[self.t], self.ring.residue[self.d]

    def render(self) -> list[str]:
        R, G = self.ring, self.group
        return [
            f"{G.labels[g]}: t={R.labels[self.t[g]]} d={R.labels[self.d[g]]}"
            for g in range(G.order)
        ]


def from_characters(ring: FiniteLocalRing, group: FiniteGroup, eta1, eta2) -> PseudoCharacter:
    eta1, eta2 = np.asarray(eta1), np.asarray(eta2)
    return PseudoCharacter(group, ring, ring.add[eta1, eta2], ring.mul[eta1, eta2])


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok

    def describe(self, group: FiniteGroup | None = None) -> str:
        if self.ok:
            return "all pseudo-character axioms hold"
        names = self.witness if group is None else tuple(group.labels[g] for g in self.witness)
        return f"axiom '{self.axiom}' fails at {names}"


def _first(mask) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def triple_defect(pc: PseudoCharacter) -> np.ndarray:
    """t(g)t(h)t(k) - t(g)t(hk) - t(h)t(gk) - t(k)t(gh) + t(ghk) + t(gkh) over all triples."""
    R, G, T = pc.ring, pc.group, pc.t
    M, A, S = R.mul, R.add, R.sub
    tab = G.table
    n = G.order
    g = np.arange(n)[:, None, None]
    h = np.arange(n)[None, :, None]
    k = np.arange(n)[None, None, :]
    tg, th, tk = T[g], T[h], T[k]
    out = M[M[tg, th], tk]
    out = S[out, M[tg, T[tab[h, k]]]]
    out = S[out, M[th, T[tab[g, k]]]]
    out = S[out, M[tk, T[tab[g, h]]]]
    out = A[out, T[tab[tab[g, h], k]]]
    out = A[out, T[tab[tab[g, k], h]]]
    return out


def check_axioms(pc: PseudoCharacter) -> AxiomReport:
    """Check the axioms of a 2-dimensional pseudo-character, first failure wins."""
    R, G, T, D = pc.ring, pc.group, pc.t, pc.d
    tab = G.table
    if T[0] != R.from_int(2):
        return AxiomReport(False, "t(1) = 2", (0,))
    if D[0] != R.one:
        return AxiomReport(False, "d(1) = 1", (0,))
    w = _first(R.in_max[D])
    if w:
        return AxiomReport(False, "d takes unit values", w)
    w = _first(T[tab] != T[tab.T])
    if w:
        return AxiomReport(False, "t(gh) = t(hg)", w)
    w = _first(R.mul[D[:, None], D[None, :]] != D[tab])
    if w:
        return AxiomReport(False, "d(gh) = d(g)d(h)", w)
    sq = T[np.diag(tab)]
    two_d = R.add[D, D]
    w = _first(two_d != R.sub[R.mul[T, T], sq])
    if w:
        return AxiomReport(False, "2d(g) = t(g)^2 - t(g^2)", w)
    w = _first(triple_defect(pc) != R.zero)
    if w:
        return AxiomReport(False, "dimension-2 trace identity", w)
    return AxiomReport(True)


@lru_cache(maxsize=None)
def _character_table(ring: FiniteLocalRing, group: FiniteGroup) -> np.ndarray:
    """All homomorphisms G -> R^x as rows of an array (K, |G|)."""
    gens = group.generators
    choices = []
    for s in gens:
        order = group.element_order(s)
        ok = [int(u) for u in ring.units if ring.power(int(u), order) == ring.one]
        choices.append(ok)
    cand = np.array(list(product(*choices)), dtype=np.int32).reshape(-1, len(gens))
    K, n = len(cand), group.order
    vals = np.empty((K, n), dtype=np.int32)
    vals[:, 0] = ring.one
    for i in range(1, n):
        vals[:, i] = ring.mul[vals[:, group.parent[i]], cand[:, group.via[i]]]
    good = np.ones(K, dtype=bool)
    for j, s in enumerate(gens):
        good &= (vals[:, group.table[:, s]] == ring.mul[vals, cand[:, j : j + 1]]).all(axis=1)
    return vals[good]


def characters(ring: FiniteLocalRing, group: FiniteGroup) -> np.ndarray:
    return _character_table(ring, group)


@dataclass(frozen=True)
class Reducibility:
    reducible: bool
    eta1: tuple[int, ...] | None = None
    eta2: tuple[int, ...] | None = None

    def __bool__(self):
        return self.reducible


def is_reducible(pc: PseudoCharacter) -> Reducibility:
    """Search for characters eta1, eta2 with t = eta1 + eta2 and d = eta1 * eta2."""
    R = pc.ring
    chars = characters(R, pc.group)
    lookup = {tuple(row.tolist()): i for i, row in enumerate(chars)}
    rest = R.sub[pc.t[None, :], chars]
    for i, row in enumerate(rest):
        j = lookup.get(tuple(row.tolist()))
        if j is None:
            continue
        if (R.mul[chars[i], chars[j]] == pc.d).all():
            return Reducibility(True, tuple(chars[i].tolist()), tuple(chars[j].tolist()))
    return Reducibility(False)


def residual_characters(pc: PseudoCharacter) -> tuple[np.ndarray, np.ndarray] | None:
    """Residual (chi1, chi2) as integer arrays mod p, if the residual pseudo-character splits."""
    red = is_reducible(pc.residual())
    if not red:
        return None
    k = pc.residual().ring
    return k.residue[list(red.eta1)], k.residue[list(red.eta2)]


def h1_dimension(group: FiniteGroup, p: int, chi) -> int:
    """dim_Fp H^1(G, F_p(chi)) by enumerating cocycles on generators."""
    chi = np.asarray(chi) % p
    if chi[0] != 1:
        raise ValueError("chi(1) must be 1")
    if ((chi[:, None] * chi[None, :]) % p != chi[group.table]).any():
        raise ValueError("chi is not a character")
    gens = group.generators
    cand = np.array(list(product(range(p), repeat=len(gens))), dtype=np.int64).reshape(-1, len(gens))
    K, n = len(cand), group.order
    f = np.zeros((K, n), dtype=np.int64)
    for i in range(1, n):
        par = group.parent[i]
        f[:, i] = (f[:, par] + chi[par] * cand[:, group.via[i]]) % p
    good = np.ones(K, dtype=bool)
    for j, s in enumerate(gens):
        good &= ((f + chi[None, :] * cand[:, j : j + 1]) % p == f[:, group.table[:, s]]).all(axis=1)
    z1 = int(good.sum())
    dim_z = round(np.log(z1) / np.log(p))
    if p**dim_z != z1:
        raise AssertionError("cocycle count is not a power of p")
    dim_b = 0 if (chi == 1).all() else 1
    return dim_z - dim_b


def find_breaking_perturbation(pc: PseudoCharacter):
    """Brute-force a change t(g) -> t(g) + delta, delta a nonzero element of m, that the axiom check rejects.

    Non-identity elements are tried first. Returns (g, delta, report) or None.
    """
    R, G = pc.ring, pc.group
    deltas = [int(x) for x in np.flatnonzero(R.in_max) if x != R.zero]
    for g in list(range(1, G.order)) + [0]:
        for delta in deltas:
            t = pc.t.copy()
            t[g] = R.add[t[g], delta]
            rep = check_axioms(PseudoCharacter(G, R, t, pc.d))
            if not rep.ok:
                return g, delta, rep
    return None
