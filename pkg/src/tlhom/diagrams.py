"""
Planar Temperley-Lieb diagrams and half-diagrams (link states).

An n-diagram has n points on its left side and n on its right. Points are
numbered so that planarity is circular non-crossing:

    left side   0 .. n-1    bottom to top  (height of point i is i)
    right side  n .. 2n-1   top to bottom  (height of point p is 2n-1-p)

A diagram is stored as its matching array ``m`` with ``m[m[i]] == i``.
Products glue the right side of the first factor to the left side of the
second, height against height. The generator ``e_i`` caps the left points at
heights i-1 and i and the matching right points.

A half-diagram records the left half of a diagram: ``d`` arcs among points
0..n-1 plus the n-2d through-strands, none of which may sit under an arc.
"""

from __future__ import annotations

import dataclasses
import re
from functools import lru_cache
from typing import Iterator, Sequence

MAX_ENUMERATION = 10


class DiagramError(ValueError):
    pass


def is_planar_matching(seq: Sequence[int]) -> bool:
    """True if seq is a fixed-point-free involution without circular crossings."""
    size = len(seq)
    if size % 2:
        return False
    for i, j in enumerate(seq):
        if not (0 <= j < size) or j == i or seq[j] != i:
            return False
    stack = []
    for i in range(size):
        if i < seq[i]:
            stack.append(seq[i])
        elif stack.pop() != i:
            return False
    return True


def _mirror_point(n: int, p: int) -> int:
    return 2 * n - 1 - p


@dataclasses.dataclass(frozen=True, order=True)
class TLDiagram:
    n: int
    matching: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DiagramError("diagrams need at least one strand")
        if len(self.matching) != 2 * self.n or not is_planar_matching(self.matching):
            raise DiagramError(f"not a planar matching on {2 * self.n} points: {self.matching}")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> TLDiagram:
        m = [-1] * (2 * n)
        for a, b in pairs:
            if not (0 <= a < 2 * n and 0 <= b < 2 * n) or m[a] != -1 or m[b] != -1:
                raise DiagramError(f"bad pair {(a, b)} for n={n}")
            m[a], m[b] = b, a
        if -1 in m:
            raise DiagramError("pairs do not cover every boundary point")
        return cls(n, tuple(m))

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.matching) if i < j]

    def height(self, p: int) -> int:
        return p if p < self.n else _mirror_point(self.n, p)

    def is_left(self, p: int) -> bool:
        return p < self.n

    @property
    def arcs(self) -> int:
        """Number of arcs on the left side (equal to the number on the right)."""
        return sum(1 for i in range(self.n) if self.matching[i] < self.n) // 2

    def through_strands(self) -> int:
        return self.n - 2 * self.arcs

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json(cls, data: dict) -> TLDiagram:
        return cls.from_pairs(int(data["n"]), [tuple(p) for p in data["pairs"]])

    def __mul__(self, other: TLDiagram) -> tuple[TLDiagram, int]:
        return compose(self, other)


@dataclasses.dataclass(frozen=True, order=True)
class HalfDiagram:
    n: int
    arcs: tuple[tuple[int, int], ...]
    through: tuple[int, ...]

    def __post_init__(self):
        used = sorted([p for a in self.arcs for p in a] + list(self.through))
        if used != list(range(self.n)):
            raise DiagramError(f"half-diagram does not partition 0..{self.n - 1}")
        if any(a >= b for a, b in self.arcs) or tuple(sorted(self.arcs)) != self.arcs:
            raise DiagramError("arcs must be sorted (low, high) pairs")
        if tuple(sorted(self.through)) != self.through:
            raise DiagramError("through points must be increasing")
        for a, b in self.arcs:
            for c, e in self.arcs:
                if a < c < b < e:
                    raise DiagramError(f"arcs {(a, b)} and {(c, e)} cross")
            if any(a < t < b for t in self.through):
                raise DiagramError(f"arc {(a, b)} traps a through-strand")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> HalfDiagram:
        arcs = tuple(sorted(tuple(sorted(a)) for a in arcs))
        used = {p for a in arcs for p in a}
        return cls(n, arcs, tuple(p for p in range(n) if p not in used))

    @property
    def d(self) -> int:
        return len(self.arcs)

    def partner(self) -> list[int]:
        """Partner of each point, -1 for through points."""
        out = [-1] * self.n
        for a, b in self.arcs:
            out[a], out[b] = b, a
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs], "through": list(self.through)}

    @classmethod
    def from_json(cls, data: dict) -> HalfDiagram:
        half = cls.from_arcs(int(data["n"]), [tuple(a) for a in data["arcs"]])
        if "through" in data and list(data["through"]) != list(half.through):
            raise DiagramError("through list does not match the arcs")
        return half


def identity_diagram(n: int) -> TLDiagram:
    if n < 1:
        raise DiagramError("n must be at least 1")
    return TLDiagram(n, tuple(_mirror_point(n, i) for i in range(2 * n)))


def generator_diagram(n: int, i: int) -> TLDiagram:
    """The cup-cap diagram e_i joining heights i-1 and i on both sides."""
    if not 1 <= i <= n - 1:
        raise DiagramError(f"generator index {i} out of range 1..{n - 1}")
    m = list(identity_diagram(n).matching)
    lo, hi = i - 1, i
    rlo, rhi = _mirror_point(n, lo), _mirror_point(n, hi)
    m[lo], m[hi] = hi, lo
    m[rlo], m[rhi] = rhi, rlo
    return TLDiagram(n, tuple(m))


def compose(a: TLDiagram, b: TLDiagram) -> tuple[TLDiagram, int]:
    """Glue a's right side to b's left side; returns (diagram, closed loops)."""
    if a.n != b.n:
        raise DiagramError(f"strand-count mismatch: {a.n} vs {b.n}")
    n = a.n
    am, bm = a.matching, b.matching
    result = [-1] * (2 * n)
    visited = [False] * n  # middle column, indexed by height

    # Result points: left side comes from a (same index), right side from b.
    for start in range(2 * n):
        if result[start] != -1:
            continue
        if start < n:
            side, v = 0, am[start]
        else:
            side, v = 1, bm[start]
        while True:
            if side == 0:
                if v < n:
                    end = v
                    break
                h = _mirror_point(n, v)
                visited[h] = True
                side, v = 1, bm[h]
            else:
                if v >= n:
                    end = v
                    break
                h = v
                visited[h] = True
                side, v = 0, am[_mirror_point(n, h)]
        result[start], result[end] = end, start

    loops = 0
    for h in range(n):
        if visited[h]:
            continue
        loops += 1
        cur = h
        while not visited[cur]:
            visited[cur] = True
            # through b's left side, then back through a's right side
            nxt = bm[cur]
            visited[nxt] = True
            cur = _mirror_point(n, am[_mirror_point(n, nxt)])
    return TLDiagram(n, tuple(result)), loops


def involute(a: TLDiagram) -> TLDiagram:
    """Left-right reflection; heights are preserved."""
    n = a.n
    m = [0] * (2 * n)
    for i, j in enumerate(a.matching):
        m[_mirror_point(n, i)] = _mirror_point(n, j)
    return TLDiagram(n, tuple(m))


def _matchings(points: int) -> Iterator[list[int]]:
    seq = [-1] * points

    def place(i: int, size: int):
        if size == 0:
            yield
            return
        for inner in range(size):
            left, right = i, i + 1 + 2 * inner
            seq[left], seq[right] = right, left
            for _ in place(left + 1, inner):
                for _ in place(right + 1, size - inner - 1):
                    yield

    for _ in place(0, points // 2):
        yield list(seq)


@lru_cache(maxsize=None)
def _diagrams(n: int) -> tuple[TLDiagram, ...]:
    return tuple(sorted(TLDiagram(n, tuple(m)) for m in _matchings(2 * n)))


def enumerate_diagrams(n: int) -> list[TLDiagram]:
    """All n-diagrams, lexicographic in their matching arrays."""
    if not 1 <= n <= MAX_ENUMERATION:
        raise DiagramError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION}, got {n}")
    return list(_diagrams(n))


@lru_cache(maxsize=None)
def _halves(n: int, d: int) -> tuple[HalfDiagram, ...]:
    out = []

    def walk(i: int, stack: list[int], arcs: list[tuple[int, int]], through: list[int]):
        if i == n:
            if not stack and len(arcs) == d:
                out.append(HalfDiagram(n, tuple(sorted(arcs)), tuple(through)))
            return
        remaining = n - i
        if len(arcs) + len(stack) < d and len(stack) + 1 <= remaining - 1:
            walk(i + 1, stack + [i], arcs, through)
        if stack:
            walk(i + 1, stack[:-1], arcs + [(stack[-1], i)], through)
        if not stack:
            walk(i + 1, stack, arcs, through + [i])

    walk(0, [], [], [])
    return tuple(sorted(out, key=lambda h: h.arcs))


def enumerate_half(n: int, d: int) -> list[HalfDiagram]:
    """Half-diagrams with exactly d arcs, ordered by their sorted arc lists."""
    if n < 1 or d < 0 or 2 * d > n:
        raise DiagramError(f"no half-diagrams with d={d} arcs on n={n} points")
    return list(_halves(n, d))


def pair_halves(s: HalfDiagram, t: HalfDiagram) -> TLDiagram:
    """Left half s, right half the mirror of t, through-strands joined by height."""
    if s.n != t.n or s.d != t.d:
        raise DiagramError("half-diagrams must share n and the number of arcs")
    n = s.n
    m = [-1] * (2 * n)
    for a, b in s.arcs:
        m[a], m[b] = b, a
    for a, b in t.arcs:
        ra, rb = _mirror_point(n, a), _mirror_point(n, b)
        m[ra], m[rb] = rb, ra
    for p, q in zip(s.through, t.through):
        rq = _mirror_point(n, q)
        m[p], m[rq] = rq, p
    return TLDiagram(n, tuple(m))


def cell_coords(a: TLDiagram) -> tuple[int, HalfDiagram, HalfDiagram]:
    """Inverse of pair_halves: (arc count, left half, right half)."""
    n = a.n
    left = [(i, j) for i, j in enumerate(a.matching[:n]) if i < j < n]
    right = []
    for p in range(n, 2 * n):
        q = a.matching[p]
        if q >= n and p < q:
            right.append((a.height(q), a.height(p)))
    s = HalfDiagram.from_arcs(n, left)
    t = HalfDiagram.from_arcs(n, right)
    return s.d, s, t


def act_on_half(a: TLDiagram, s: HalfDiagram) -> tuple[HalfDiagram | None, int]:
    """Left action of a diagram on a half-diagram by concatenation.

    Returns (new half, loops) or (None, 0) when two through-strands of s get
    capped off, i.e. when a new arc would be created.
    """
    if a.n != s.n:
        raise DiagramError("size mismatch between diagram and half-diagram")
    n = a.n
    am = a.matching
    sp = s.partner()
    visited = [False] * n

    arcs = []
    through = []
    resolved = [False] * n
    for start in range(n):
        if resolved[start]:
            continue
        v = am[start]
        while True:
            if v < n:
                arcs.append((start, v))
                resolved[v] = True
                break
            h = _mirror_point(n, v)
            visited[h] = True
            if sp[h] == -1:
                through.append(start)
                break
            visited[sp[h]] = True
            v = am[_mirror_point(n, sp[h])]
        resolved[start] = True

    if len(arcs) != s.d:
        return None, 0

    loops = 0
    for h in range(n):
        if visited[h]:
            continue
        # every unvisited middle point lies on a closed loop
        loops += 1
        cur = h
        while not visited[cur]:
            visited[cur] = True
            nxt = sp[cur]
            visited[nxt] = True
            cur = _mirror_point(n, am[_mirror_point(n, nxt)])
    return HalfDiagram.from_arcs(n, arcs), loops


def pairing(s: HalfDiagram, t: HalfDiagram) -> int | None:
    """Loops formed by gluing mirror(s) against t, or None if strands cap off.

    This is the diagrammatic bilinear form on a cell module: the form value
    is ``d**loops`` when every through-strand of s runs into one of t.
    """
    if s.n != t.n or s.d != t.d:
        raise DiagramError("pairing needs equal n and d")
    n = s.n
    sp, tp = s.partner(), t.partner()
    seen = [False] * n
    for p in s.through:
        cur = p
        seen[cur] = True
        while True:
            if tp[cur] == -1:
                break
            cur = tp[cur]
            seen[cur] = True
            if sp[cur] == -1:
                return None
            cur = sp[cur]
            seen[cur] = True
    loops = 0
    for p in range(n):
        if seen[p]:
            continue
        loops += 1
        cur = p
        while not seen[cur]:
            seen[cur] = True
            cur = sp[cur]
            seen[cur] = True
            cur = tp[cur]
    return loops


_WORD_RE = re.compile(r"^e(\d+)$")


def parse_word(n: int, word: str) -> tuple[TLDiagram, int]:
    """Evaluate a generator word like ``"e1*e2*e3"`` or ``"id"``."""
    text = word.strip()
    if not text:
        raise DiagramError("empty word")
    current, loops = identity_diagram(n), 0
    if text == "id":
        return current, 0
    for tok in text.split("*"):
        tok = tok.strip()
        if tok == "id":
            continue
        m = _WORD_RE.match(tok)
        if not m:
            raise DiagramError(f"bad generator {tok!r} in word {word!r}")
        current, k = compose(current, generator_diagram(n, int(m.group(1))))
        loops += k
    return current, loops


@lru_cache(maxsize=None)
def reduced_words(n: int) -> dict[TLDiagram, str]:
    """A shortest generator word for every diagram (breadth-first, e1 first)."""
    start = identity_diagram(n)
    words = {start: "id"}
    frontier = [start]
    while frontier:
        nxt = []
        for D in frontier:
            for i in range(1, n):
                E, loops = compose(D, generator_diagram(n, i))
                if E not in words and loops == 0:
                    base = words[D]
                    words[E] = f"e{i}" if base == "id" else f"{base}*e{i}"
                    nxt.append(E)
        frontier = nxt
    return words


def word_of(a: TLDiagram) -> str:
    return reduced_words(a.n)[a]


def extend_top(a: TLDiagram) -> TLDiagram:
    """Add one horizontal strand above a (the inclusion TL_n -> TL_{n+1})."""
    n = a.n
    m = [0] * (2 * n + 2)
    relabel = [p if p < n else p + 2 for p in range(2 * n)]
    for p, q in enumerate(a.matching):
        m[relabel[p]] = relabel[q]
    m[n], m[n + 1] = n + 1, n
    return TLDiagram(n + 1, tuple(m))


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)
