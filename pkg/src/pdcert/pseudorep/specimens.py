"""Hand-built examples with known answers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import characters
from .gma import DeskGMA, GMARepresentation, RModule
from .groups import catalog_group
from .representations import Representation
from .rings import catalog_ring


@dataclass
class Specimen:
    name: str
    description: str
    ring_tag: str
    group_tag: str
    representable: bool
    rep: Representation | None = None
    gma_rep: GMARepresentation | None = None

    def pseudo_character(self):
        return (self.rep or self.gma_rep).pseudo_character()


def dihedral_quadratic_gma() -> GMARepresentation:
    """Dih(C3 x C3) into the GMA with B = C = F_3^2 over F_3[x,y]/(x,y)^2.

    m((b1, b2), (c1, c2)) = b1 c1 x + b2 c2 y; s -> diag(1, -1) and
    v -> (1 + q(v), v, v, 1 + q(v)) with q(v) = m(v, v)/2. Both Ext^1 groups
    are 2-dimensional and t has no matrix realization.
    """
    R = catalog_ring("F3[x,y]")
    G = catalog_group("Dih(C3xC3)")
    B = RModule.residue_space(R, 2, "B")
    C = RModule.residue_space(R, 2, "C")

    def m(b, c):
        return R.coord_index[(0, b[0] * c[0] % 3, b[1] * c[1] % 3)]

    gma = DeskGMA(R, B, C, m)
    half = int(R.inv[R.from_int(2)])

    def vec(v):
        q = int(R.mul[half, m(v, v)])
        a = int(R.add[R.one, q])
        return (a, v, v, a)

    s = (R.one, B.zero, C.zero, int(R.neg[R.one]))
    rep = GMARepresentation.from_generators(gma, G, [s, vec((1, 0)), vec((0, 1))])
    if rep is None:
        raise AssertionError("dihedral GMA images do not define a representation")
    return rep


def nonsplit_triangular(ring_tag: str = "F3[e]") -> Representation:
    """S3 -> [[1, *], [0, sign]], residually non-split."""
    R = catalog_ring(ring_tag)
    if R.p != 3:
        raise ValueError("the S3 triangular example needs residue characteristic 3")
    G = catalog_group("S3")
    c = [R.one, R.one, R.zero, R.one]
    t = [R.one, R.zero, R.zero, int(R.neg[R.one])]
    return Representation.from_generators(G, R, [c, t])


def dihedral_deformation() -> Representation:
    """D5 over F5[e]: r -> [[0, -1], [1, 2 + e]], s -> [[0, 1], [1, 0]]; pairing ideal (e)."""
    R = catalog_ring("F5[e]")
    G = catalog_group("D5")
    c = R.coord_index[(2, 1)]
    r = [R.zero, int(R.neg[R.one]), R.one, c]
    swap = [R.zero, R.one, R.one, R.zero]
    return Representation.from_generators(G, R, [r, swap])


def split_characters(ring_tag: str = "F5[e]", group_tag: str = "C4") -> Representation:
    """diag(eta1, eta2) for the first two distinct characters in enumeration order."""
    R, G = catalog_ring(ring_tag), catalog_group(group_tag)
    chars = characters(R, G)
    e1, e2 = chars[0], chars[1]
    gens = G.generators
    z = np.full(len(gens), R.zero)
    return Representation.from_generators(G, R, np.stack([e1[gens], z, z, e2[gens]], axis=-1))


def catalog_specimens() -> list[Specimen]:
    return [
        Specimen(
            "dihedral-quadratic",
            "trace of a GMA with 2-dimensional Ext^1 on both sides; no representation",
            "F3[x,y]", "Dih(C3xC3)", False, gma_rep=dihedral_quadratic_gma(),
        ),
        Specimen(
            "nonsplit-triangular",
            "upper triangular, residually non-split; B free of rank one, C = 0",
            "F3[e]", "S3", True, rep=nonsplit_triangular(),
        ),
        Specimen(
            "dihedral-deformation",
            "irreducible deformation of a split residual; pairing ideal (e)",
            "F5[e]", "D5", True, rep=dihedral_deformation(),
        ),
        Specimen(
            "split-characters",
            "sum of two characters; a diagonal representation",
            "F5[e]", "C4", True, rep=split_characters(),
        ),
    ]
