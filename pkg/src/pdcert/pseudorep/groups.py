"""Small finite groups as multiplication tables.

Element 0 is the identity. Every group is generated from explicit generators by
breadth-first closure, which also records a word for each element:
``element[i] = element[parent[i]] * generator[via[i]]``.
"""

from __future__ import annotations

import re
from collections import deque
from functools import lru_cache

import numpy as np


class FiniteGroup:
    def __init__(self, tag, identity, generators, mul, gen_names=None, show=str):
        self.tag = tag
        elements = [identity]
        index = {identity: 0}
        parent = [-1]
        via = [-1]
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for j, s in enumerate(generators):
                y = mul(x, s)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    parent.append(index[x])
                    via.append(j)
                    queue.append(y)
        n = len(elements)
        table = np.empty((n, n), dtype=np.int32)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                table[i, j] = index[mul(x, y)]
        self.order = n
        self.table = table
        self.parent = np.array(parent)
        self.via = np.array(via)
        depth = [0] * n
        for i in range(1, n):
            depth[i] = depth[parent[i]] + 1
        # BFS order keeps each word-length layer contiguous
        self.layers = [np.flatnonzero(np.array(depth) == k) for k in range(1, max(depth) + 1)]
        self.generators = [index[s] for s in generators]
        self.gen_names = list(gen_names or [f"g{j}" for j in range(len(generators))])
        self.inverse = np.argmax(table == 0, axis=1).astype(np.int32)
        self.labels = [show(x) for x in elements]

    def __repr__(self):
        return f"FiniteGroup({self.tag!r}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def word(self, g: int) -> list[int]:
        """Generator indices whose product, left to right, is g."""
        out = []
        while g != 0:
            out.append(int(self.via[g]))
            g = int(self.parent[g])
        return out[::-1]

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(f"C{n}", 0, [1 % n], lambda a, b: (a + b) % n, ["s"], show=lambda a: f"s^{a}")


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: r^k s^e with s r s = r^-1."""

    def mul(x, y):
        (k1, e1), (k2, e2) = x, y
        return ((k1 + (-1) ** e1 * k2) % n, (e1 + e2) % 2)

    return FiniteGroup(
        f"D{n}", (0, 0), [(1 % n, 0), (0, 1)], mul, ["r", "s"],
        show=lambda x: f"r^{x[0]}s^{x[1]}",
    )


def symmetric3() -> FiniteGroup:
    def mul(x, y):
        # apply y then x
        return tuple(x[y[i]] for i in range(3))

    return FiniteGroup("S3", (0, 1, 2), [(1, 2, 0), (1, 0, 2)], mul, ["c", "t"], show=str)


def generalized_dihedral_c3c3() -> FiniteGroup:
    """(C3 x C3) semidirect C2, s acting by inversion; order 18, three generators."""

    def mul(x, y):
        (v1, v2, e), (w1, w2, f) = x, y
        sign = -1 if e else 1
        return ((v1 + sign * w1) % 3, (v2 + sign * w2) % 3, (e + f) % 2)

    return FiniteGroup(
        "Dih(C3xC3)", (0, 0, 0), [(0, 0, 1), (1, 0, 0), (0, 1, 0)], mul, ["s", "a", "b"],
        show=lambda x: f"a^{x[0]}b^{x[1]}s^{x[2]}",
    )


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    gens = [(g, 0) for g in G.generators] + [(0, h) for h in H.generators]
    names = [f"{n}1" for n in G.gen_names] + [f"{n}2" for n in H.gen_names]
    return FiniteGroup(
        f"{G.tag}x{H.tag}", (0, 0), gens,
        lambda x, y: (G.mul(x[0], y[0]), H.mul(x[1], y[1])), names,
        show=lambda x: f"({G.labels[x[0]]},{H.labels[x[1]]})",
    )


_SIMPLE = re.compile(r"C(\d+)|D(\d+)|S3|Dih\(C3xC3\)")


@lru_cache(maxsize=None)
def catalog_group(tag: str) -> FiniteGroup:
    """Groups by tag: ``C6``, ``D4``, ``S3``, ``Dih(C3xC3)``, products like ``C2xC3``."""
    tag = tag.replace(" ", "")
    if tag == "Dih(C3xC3)":
        return generalized_dihedral_c3c3()
    parts = tag.split("x")
    if len(parts) > 1:
        out = catalog_group(parts[0])
        for part in parts[1:]:
            out = direct_product(out, catalog_group(part))
        return out
    m = _SIMPLE.fullmatch(tag)
    if not m:
        raise ValueError(f"unknown group tag {tag!r}; try C4, D5, S3, C2xC2 or Dih(C3xC3)")
    if m[1]:
        if int(m[1]) < 1:
            raise ValueError("cyclic order must be positive")
        return cyclic(int(m[1]))
    if m[2]:
        if int(m[2]) < 2:
            raise ValueError("dihedral D_n needs n >= 2")
        return dihedral(int(m[2]))
    return symmetric3()


CATALOG_GROUPS = ("C2", "C3", "C4", "C6", "S3", "D4", "D5", "C2xC2", "C2xC3", "Dih(C3xC3)")

