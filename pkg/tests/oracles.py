"""Independent brute-force oracles shared by the test modules."""

from __future__ import annotations

import itertools

from tlhom.diagrams import TLDiagram


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def glue_oracle(a: TLDiagram, b: TLDiagram):
    """Compose by union-find over labelled points: a's right meets b's left by height."""
    n = a.n
    uf = UnionFind()
    for tag, D in (("a", a), ("b", b)):
        for p, q in D.pairs:
            uf.union((tag, p), (tag, q))
    for h in range(n):
        uf.union(("a", 2 * n - 1 - h), ("b", h))
    outer = [("a", p) for p in range(n)] + [("b", p) for p in range(n, 2 * n)]
    by_root = {}
    for x in outer:
        by_root.setdefault(uf.find(x), []).append(x)
    pairs = []
    for group in by_root.values():
        assert len(group) == 2
        (_, p), (_, q) = group
        pairs.append((p, q))
    roots = {uf.find(("a", p)) for p in range(2 * n)} | {uf.find(("b", p)) for p in range(2 * n)}
    loops = len(roots) - len(by_root)
    return TLDiagram.from_pairs(n, pairs), loops


def word_product_oracle(n: int, words: list[str]):
    """Multiply generator words by gluing diagrams one generator at a time.

    Returns (diagram, loops) for the concatenated word.
    """
    from tlhom.diagrams import generator_diagram, identity_diagram

    cur, loops = identity_diagram(n), 0
    for w in words:
        for tok in w.split("*"):
            if tok == "id":
                continue
            cur, k = glue_oracle(cur, generator_diagram(n, int(tok[1:])))
            loops += k
    return cur, loops


def gram_oracle(n: int, d: int):
    """Gram entries delta**loops (or 0) by gluing reflected half-diagrams with union-find.

    Works from raw arc lists, not from the package's pairing routine.
    """
    from tlhom.coeff import DELTA, ZERO
    from tlhom.diagrams import enumerate_half

    halves = enumerate_half(n, d)
    rows = []
    for s in halves:
        row = []
        for t in halves:
            uf = UnionFind()
            for a, b in s.arcs:
                uf.union(("s", a), ("s", b))
            for a, b in t.arcs:
                uf.union(("t", a), ("t", b))
            for h in range(n):
                uf.union(("s", h), ("t", h))
            # through points of s and t form the open strands
            ends = [("s", p) for p in s.through] + [("t", p) for p in t.through]
            groups = {}
            for x in ends:
                groups.setdefault(uf.find(x), []).append(x[0])
            ok = all(sorted(g) == ["s", "t"] for g in groups.values())
            roots = {uf.find(("s", h)) for h in range(n)}
            loops = len(roots) - len(groups)
            row.append(DELTA ** loops if ok else ZERO)
        rows.append(row)
    return rows


def all_triples(dim: int):
    return itertools.product(range(dim), repeat=3)
