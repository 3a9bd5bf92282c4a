"""Representations G -> GL_2(R), random samples of them, and the search that
decides whether a pseudo-character is the trace of one."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .characters import PseudoCharacter, characters
from .groups import FiniteGroup
from .rings import FiniteLocalRing, diag, identity, mat_det, mat_inv, mat_mul, mat_trace


@dataclass(eq=False)
class Representation:
    group: FiniteGroup
    ring: FiniteLocalRing
    images: np.ndarray  # (|G|, 4)

    @classmethod
    def from_generators(cls, group, ring, gen_images) -> Representation | None:
        """Extend generator images along words; None if that is not a homomorphism."""
        gen_images = np.asarray(gen_images, dtype=np.int32).reshape(len(group.generators), 4)
        imgs = _extend(group, ring, gen_images[None])[0]
        if not _is_hom(group, ring, imgs[None], gen_images[None])[0]:
            return None
        if ring.in_max[mat_det(ring, gen_images)].any():
            return None
        return cls(group, ring, imgs)

    @property
    def trace(self) -> np.ndarray:
        return mat_trace(self.ring, self.images)

    @property
    def det(self) -> np.ndarray:
        return mat_det(self.ring, self.images)

    def pseudo_character(self) -> PseudoCharacter:
        return PseudoCharacter(self.group, self.ring, self.trace, self.det)

    def conjugate(self, P) -> Representation:
        """P^-1 rho P."""
        P = np.asarray(P)
        Pinv = mat_inv(self.ring, P)
        imgs = mat_mul(self.ring, mat_mul(self.ring, Pinv[None], self.images), P[None])
        return Representation(self.group, self.ring, imgs)

    def generator_images(self) -> np.ndarray:
        return self.images[self.group.generators]

    def render(self) -> list[str]:
        R, G = self.ring, self.group
        lines = []
        for name, g in zip(G.gen_names, G.generators):
            a, b, c, d = (R.labels[x] for x in self.images[g])
            lines.append(f"{name} -> [[{a}, {b}], [{c}, {d}]]")
        return lines


def _extend(group, ring, gen_images):
    """Images of all elements for a batch of generator assignments, shape (K, |G|, 4)."""
    K = gen_images.shape[0]
    imgs = np.empty((K, group.order, 4), dtype=np.int32)
    imgs[:, 0] = identity(ring)
    for layer in group.layers:
        imgs[:, layer] = mat_mul(ring, imgs[:, group.parent[layer]], gen_images[:, group.via[layer]])
    return imgs


def _is_hom(group, ring, imgs, gen_images):
    """rho(g) rho(s) = rho(gs) for all g and generators s; that suffices by induction on words."""
    ok = np.ones(imgs.shape[0], dtype=bool)
    for j, s in enumerate(group.generators):
        prod_ = mat_mul(ring, imgs, gen_images[:, None, j])
        ok &= (prod_ == imgs[:, group.table[:, s]]).all(axis=(1, 2))
    return ok


def random_invertible(ring: FiniteLocalRing, rng: np.random.Generator) -> np.ndarray:
    while True:
        P = rng.integers(0, ring.size, size=4)
        if ring.is_unit(int(mat_det(ring, P))):
            return P


def _first_rep(group, ring, batch) -> Representation | None:
    """First homomorphism with invertible images in a batch of generator assignments (K, #gens, 4)."""
    batch = np.asarray(batch, dtype=np.int32)
    imgs = _extend(group, ring, batch)
    ok = _is_hom(group, ring, imgs, batch)
    ok &= ~ring.in_max[mat_det(ring, batch)].any(axis=1)
    hit = np.flatnonzero(ok)
    return Representation(group, ring, imgs[hit[0]]) if len(hit) else None


def _dihedral_like(group: FiniteGroup, ring: FiniteLocalRing, rng) -> Representation | None:
    """r -> [[0, -1], [1, c]], s -> [[0, 1], [1, 0]] for a random c that makes this a rep."""
    if not re.fullmatch(r"S3|D\d+", group.tag):
        return None
    cs = rng.permutation(ring.size)
    batch = np.empty((len(cs), 2, 4), dtype=np.int32)
    batch[:, 0] = [ring.zero, ring.neg[ring.one], ring.one, 0]
    batch[:, 0, 3] = cs
    batch[:, 1] = [ring.zero, ring.one, ring.one, ring.zero]
    return _first_rep(group, ring, batch)


def _triangular(group, ring, rng, attempts=40) -> Representation:
    """[[eta1, b], [0, eta2]] with a random cocycle b, found by rejection sampling."""
    chars = characters(ring, group)
    gens = group.generators
    i, j = rng.integers(0, len(chars), size=2)
    batch = np.empty((attempts + 1, len(gens), 4), dtype=np.int32)
    batch[..., 0] = chars[i][gens]
    batch[..., 2] = ring.zero
    batch[..., 3] = chars[j][gens]
    b = rng.integers(0, ring.size, size=(attempts, len(gens)))
    # sparse b satisfies the cocycle relations far more often
    sparse = (rng.random(attempts) < 0.5)[:, None] & (rng.random((attempts, len(gens))) < 0.5)
    batch[:-1, :, 1] = np.where(sparse, ring.zero, b)
    batch[-1, :, 1] = ring.zero
    return _first_rep(group, ring, batch)


def _diagonal_deformation(group, ring, rng, attempts=40) -> Representation | None:
    """diag(eta1, eta2) + N on generators with N a random matrix over the maximal ideal."""
    chars = characters(ring, group)
    gens = group.generators
    i, j = rng.integers(0, len(chars), size=2)
    base = np.stack(
        [chars[i][gens], np.full(len(gens), ring.zero), np.full(len(gens), ring.zero), chars[j][gens]],
        axis=-1,
    )
    maxl = np.flatnonzero(ring.in_max)
    shape = (attempts,) + base.shape
    noise = maxl[rng.integers(0, len(maxl), size=shape)]
    noise[rng.random(shape) < 0.3] = ring.zero
    return _first_rep(group, ring, ring.add[base[None], noise])


def random_representation(group, ring, rng: np.random.Generator) -> Representation:
    """A random representation drawn from several constructions, then randomly conjugated."""
    kind = rng.integers(0, 3)
    rep = None
    if kind == 0:
        rep = _dihedral_like(group, ring, rng)
    elif kind == 1:
        rep = _diagonal_deformation(group, ring, rng)
    if rep is None:
        rep = _triangular(group, ring, rng)
    if rng.random() < 0.5:
        # swap to lower triangular now and then
        rep = rep.conjugate(np.array([ring.zero, ring.one, ring.one, ring.zero]))
    return rep.conjugate(random_invertible(ring, rng))


@dataclass
class SearchResult:
    """Outcome of the representability search.

    ``status`` is ``found``, ``none`` (exhaustive, so a certificate of
    non-representability) or ``budget`` (search space over the budget).
    ``searched`` counts matrices examined over all levels of the search.
    """

    status: str
    representation: Representation | None = None
    searched: int = 0
    search_space: int = 0
    pivot: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def representable(self) -> bool | None:
        return {"found": True, "none": False}.get(self.status)


def _roots(ring, tr, dt):
    """Roots of X^2 - tr X + dt in R."""
    x = np.arange(ring.size)
    val = ring.add[ring.sub[ring.mul[x, x], ring.mul[tr, x]], dt]
    return [int(r) for r in np.flatnonzero(val == ring.zero)]


def _pivot(pc: PseudoCharacter):
    """A generator whose residual characteristic polynomial has distinct roots in F_p,
    with the lifted roots (alpha, beta), alpha's residue the smaller one."""
    R, G = pc.ring, pc.group
    for j, s in enumerate(G.generators):
        roots = _roots(R, int(pc.t[s]), int(pc.d[s]))
        by_res = {}
        for r in roots:
            by_res.setdefault(int(R.residue[r]), []).append(r)
        if len(by_res) == 2 and all(len(v) == 1 for v in by_res.values()):
            (ra, [alpha]), (rb, [beta]) = sorted(by_res.items())
            return j, alpha, beta
    return None


def _candidates(ring, tr, dt, pivot_diag=None, pivot_constraint=None):
    """All (a, b, c, d) with a + d = tr and ad - bc = dt, lexicographic.

    With a diagonal pivot diag(alpha, beta) and t(pivot * g) known, the pair
    alpha a + beta d = t(hg), a + d = t(g) fixes a and d.
    """
    n = ring.size
    a = np.arange(n)
    d = ring.sub[tr, a]
    if pivot_diag is not None:
        alpha, beta = pivot_diag
        keep = ring.add[ring.mul[alpha, a], ring.mul[beta, d]] == pivot_constraint
        a, d = a[keep], d[keep]
    bc_needed = ring.sub[ring.mul[a, d], dt]
    out = []
    for ai, di, need in zip(a, d, bc_needed):
        b, c = np.nonzero(ring.mul == need)
        out.append(np.stack([np.full(len(b), ai), b, c, np.full(len(b), di)], axis=-1))
    if not out:
        return np.empty((0, 4), dtype=np.int32)
    return np.concatenate(out).astype(np.int32)


DEFAULT_BUDGET = 10**8


def arises_from_representation(pc: PseudoCharacter, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exhaustively decide whether pc = (tr rho, det rho) for some rho: G -> GL_2(R).

    If some generator h has residually distinct eigenvalues, rho(h) is
    conjugated to diag(alpha, beta) (Hensel lifts of those eigenvalues); this
    loses no generality and fixes the diagonal of every other generator.
    ``budget`` caps the size of the normalized search space, the product over
    generators of the number of matrices with the prescribed trace and determinant.
    """
    R, G = pc.ring, pc.group
    gens = G.generators
    pv = _pivot(pc)
    cands = []
    notes = []
    if pv is not None:
        j0, alpha, beta = pv
        notes.append(f"pivot {G.gen_names[j0]} -> diag({R.labels[alpha]}, {R.labels[beta]})")
        for j, s in enumerate(gens):
            if j == j0:
                cands.append(diag(R, alpha, beta)[None].astype(np.int32))
            else:
                hs = G.mul(gens[j0], s)
                cands.append(
                    _candidates(R, int(pc.t[s]), int(pc.d[s]), (alpha, beta), int(pc.t[hs]))
                )
    else:
        notes.append("no generator with residually distinct eigenvalues; unnormalized search")
        for s in gens:
            cands.append(_candidates(R, int(pc.t[s]), int(pc.d[s])))
    space = int(np.prod([len(c) for c in cands], dtype=object))
    pivot_name = G.gen_names[pv[0]] if pv else None
    if space > budget:
        return SearchResult("budget", None, 0, space, pivot_name, notes)
    if space == 0:
        return SearchResult("none", None, 0, 0, pivot_name, notes)

    # depth-first over generators, pruning with traces of pairwise products;
    # the last level is checked as one numpy batch
    searched = 0
    chosen: list[np.ndarray] = []

    def pruned(level):
        cand = cands[level]
        mask = np.ones(len(cand), dtype=bool)
        for i, M in enumerate(chosen):
            prod_ = mat_mul(R, M[None], cand)
            mask &= mat_trace(R, prod_) == pc.t[G.mul(gens[i], gens[level])]
        return cand[mask]

    def finish(last):
        for lo in range(0, len(last), 2048):
            chunk = last[lo : lo + 2048]
            K = len(chunk)
            head = np.broadcast_to(np.stack(chosen)[None], (K, len(chosen), 4)) if chosen else np.empty((K, 0, 4), np.int32)
            gi = np.concatenate([head, chunk[:, None]], axis=1)
            imgs = _extend(G, R, gi)
            ok = _is_hom(G, R, imgs, gi)
            ok &= (mat_trace(R, imgs) == pc.t).all(axis=1)
            ok &= (mat_det(R, imgs) == pc.d).all(axis=1)
            hit = np.flatnonzero(ok)
            if len(hit):
                return Representation(G, R, imgs[hit[0]])
        return None

    def extend(level: int):
        nonlocal searched
        cand = pruned(level)
        searched += len(cands[level])
        if level == len(gens) - 1:
            return finish(cand)
        for row in cand:
            chosen.append(row)
            found = extend(level + 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    rep = extend(0)
    if rep is not None:
        return SearchResult("found", rep, searched, space, pivot_name, notes)
    return SearchResult("none", None, searched, space, pivot_name, notes)
