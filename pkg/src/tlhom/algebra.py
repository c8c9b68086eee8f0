"""
Finite-dimensional algebras with an anti-involution, over Q[d].

A :class:`FiniteAlgebra` is given by structure constants on a fixed basis,
a unit and an involution that permutes the basis. :func:`tl_algebra` builds
the Temperley-Lieb algebra from its diagram basis.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import diagrams as dg
from .coeff import DELTA, DELTA_FIELD, ONE, ZERO, DeltaPoly, Span, format_poly

EXHAUSTIVE_LIMIT = 42
SAMPLE_COUNT = 1000
DEFAULT_SEED = 0


class AlgebraError(ValueError):
    pass


class AlgebraElement:
    """A sparse vector {basis index: coefficient in Q[d]}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, object] | None = None):
        c = {}
        if coefficients:
            for i, v in coefficients.items():
                v = DeltaPoly.coerce(v)
                if v:
                    c[int(i)] = v
        self._c = c
        self._hash = None

    @classmethod
    def basis(cls, i: int, coeff=ONE) -> AlgebraElement:
        return cls({i: coeff})

    @property
    def coefficients(self) -> dict[int, DeltaPoly]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def support(self) -> list[int]:
        return sorted(self._c)

    def coefficient(self, i: int) -> DeltaPoly:
        return self._c.get(i, ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        out = dict(self._c)
        for i, v in other._c.items():
            out[i] = out.get(i, ZERO) + v
        return AlgebraElement(out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement({i: -v for i, v in self._c.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c) -> AlgebraElement:
        c = DeltaPoly.coerce(c)
        return AlgebraElement({i: c * v for i, v in self._c.items()})

    def __rmul__(self, c) -> AlgebraElement:
        if isinstance(c, (int, Fraction, DeltaPoly)):
            return self.scale(c)
        return NotImplemented

    def dense(self, dim: int) -> list[DeltaPoly]:
        return [self._c.get(i, ZERO) for i in range(dim)]

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        if not self._c:
            return "AlgebraElement(0)"
        body = " + ".join(f"({v})*b{i}" for i, v in sorted(self._c.items()))
        return f"AlgebraElement({body})"

    def to_json(self) -> dict[str, str]:
        return {str(i): str(v) for i, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> AlgebraElement:
        return cls({int(k): DeltaPoly.coerce(v) for k, v in data.items()})


class FiniteAlgebra:
    """Basis-indexed associative algebra with unit and anti-involution.

    ``mult_table[i][j]`` is the product of basis elements i and j and
    ``involution[i]`` the index of the image of basis element i. The
    constructor validates associativity, the unit law and the
    anti-homomorphism property (exhaustively up to EXHAUSTIVE_LIMIT basis
    elements, on seeded samples above).
    """

    def __init__(
        self,
        dimension: int,
        mult_table: Sequence[Sequence[AlgebraElement]],
        unit: AlgebraElement,
        involution: Sequence[int],
        labels: Sequence | None = None,
        validate: bool = True,
        seed: int = DEFAULT_SEED,
    ):
        self.dimension = dimension
        self.labels = list(labels) if labels is not None else list(range(dimension))
        self._table = [[dict(mult_table[i][j].items()) for j in range(dimension)] for i in range(dimension)]
        self.unit = unit
        self.involution = tuple(involution)
        if len(self.involution) != dimension or sorted(self.involution) != list(range(dimension)):
            raise AlgebraError("involution must be a permutation of the basis")
        if validate:
            self.validate(seed=seed)

    # -- basic operations ---------------------------------------------------

    def basis_element(self, i: int) -> AlgebraElement:
        if not 0 <= i < self.dimension:
            raise AlgebraError(f"basis index {i} out of range")
        return AlgebraElement.basis(i)

    def basis(self) -> list[AlgebraElement]:
        return [AlgebraElement.basis(i) for i in range(self.dimension)]

    def product_of_basis(self, i: int, j: int) -> AlgebraElement:
        return AlgebraElement(self._table[i][j])

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        out: dict[int, DeltaPoly] = {}
        for i, a in x.items():
            row = self._table[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j].items():
                    out[k] = out.get(k, ZERO) + ab * c
        return AlgebraElement(out)

    def apply_involution(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement({self.involution[i]: v for i, v in x.items()})

    def zero(self) -> AlgebraElement:
        return AlgebraElement()

    def vector(self, x: AlgebraElement) -> list[DeltaPoly]:
        return x.dense(self.dimension)

    # -- validation ---------------------------------------------------------

    def _triples(self, seed: int) -> Iterable[tuple[int, int, int]]:
        n = self.dimension
        if n <= EXHAUSTIVE_LIMIT:
            return itertools.product(range(n), repeat=3)
        rng = random.Random(seed)
        return [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLE_COUNT)]

    def validate(self, seed: int = DEFAULT_SEED) -> None:
        for i in range(self.dimension):
            b = AlgebraElement.basis(i)
            if self.multiply(self.unit, b) != b or self.multiply(b, self.unit) != b:
                raise AlgebraError(f"unit law fails on basis element {i}")
            if self.involution[self.involution[i]] != i:
                raise AlgebraError(f"involution is not involutive at {i}")
        n = self.dimension
        pairs = (itertools.product(range(n), repeat=2) if n <= EXHAUSTIVE_LIMIT
                 else [(a, b) for a, b, _ in self._triples(seed)])
        for i, j in pairs:
            lhs = self.apply_involution(self.product_of_basis(i, j))
            rhs = self.product_of_basis(self.involution[j], self.involution[i])
            if lhs != rhs:
                raise AlgebraError(f"involution is not an anti-homomorphism on {(i, j)}")
        for i, j, k in self._triples(seed):
            left = self.multiply(self.product_of_basis(i, j), AlgebraElement.basis(k))
            right = self.multiply(AlgebraElement.basis(i), self.product_of_basis(j, k))
            if left != right:
                raise AlgebraError(f"associativity fails on {(i, j, k)}")


class TLAlgebra(FiniteAlgebra):
    """Temperley-Lieb algebra on n strands with loop value d."""

    def __init__(self, n: int, validate: bool = True):
        diagrams = dg.enumerate_diagrams(n)
        index = {D: i for i, D in enumerate(diagrams)}
        # (index, loops) table; structure constants are the monomials d^loops
        self._compact = [[(index[c], k) for c, k in (dg.compose(a, b) for b in diagrams)] for a in diagrams]
        table = [[AlgebraElement({k: DELTA ** loops}) for k, loops in row] for row in self._compact]
        unit = AlgebraElement.basis(index[dg.identity_diagram(n)])
        involution = [index[dg.involute(D)] for D in diagrams]
        self.n = n
        self.index = index
        super().__init__(len(diagrams), table, unit, involution, labels=diagrams, validate=validate)

    def validate(self, seed: int = DEFAULT_SEED) -> None:
        # exact check on the integer tables: equivalent because every
        # structure constant is a monomial times one basis diagram
        T = self._compact
        n = self.dimension
        u = self.index[dg.identity_diagram(self.n)]
        inv = self.involution
        for i in range(n):
            if T[u][i] != (i, 0) or T[i][u] != (i, 0):
                raise AlgebraError(f"unit law fails on basis element {i}")
        for i in range(n):
            for j in range(n):
                k, loops = T[i][j]
                if T[inv[j]][inv[i]] != (inv[k], loops):
                    raise AlgebraError(f"involution is not an anti-homomorphism on {(i, j)}")
        triples = self._triples(seed)
        for i, j, k in triples:
            m, l1 = T[i][j]
            r, l2 = T[m][k]
            p, l3 = T[j][k]
            s, l4 = T[i][p]
            if r != s or l1 + l2 != l3 + l4:
                raise AlgebraError(f"associativity fails on {(i, j, k)}")

    def diagram(self, i: int) -> dg.TLDiagram:
        return self.labels[i]

    def element_of(self, diagram: dg.TLDiagram, coeff=ONE) -> AlgebraElement:
        return AlgebraElement({self.index[diagram]: coeff})

    def generator(self, i: int) -> AlgebraElement:
        return self.element_of(dg.generator_diagram(self.n, i))

    def generators(self) -> list[AlgebraElement]:
        return [self.generator(i) for i in range(1, self.n)]

    def word(self, text: str) -> AlgebraElement:
        D, loops = dg.parse_word(self.n, text)
        return self.element_of(D, DELTA ** loops)

    def arcs(self, i: int) -> int:
        return self.labels[i].arcs

    def show(self, x: AlgebraElement) -> str:
        """Readable form in generator words, e.g. 'd*e1 + (d^2 - 1)*e2*e1'."""
        parts = []
        for i, c in x.items():
            word, coeff = dg.word_of(self.labels[i]), format_poly(c)
            if coeff == "1":
                parts.append(word)
            elif coeff == "-1":
                parts.append(f"-{word}")
            else:
                parts.append(f"({coeff})*{word}" if " " in coeff else f"{coeff}*{word}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


@lru_cache(maxsize=None)
def tl_algebra(n: int) -> TLAlgebra:
    """The TL algebra on 1 <= n <= 8 strands (cached; treat as immutable)."""
    if not 1 <= n <= 8:
        raise AlgebraError(f"tl_algebra supports 1 <= n <= 8, got {n}")
    return TLAlgebra(n)


def multiply(A: FiniteAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return A.multiply(x, y)


def apply_involution(A: FiniteAlgebra, x: AlgebraElement) -> AlgebraElement:
    return A.apply_involution(x)


def symmetric_part(A: FiniteAlgebra, x: AlgebraElement) -> AlgebraElement:
    return (x + A.apply_involution(x)).scale(Fraction(1, 2))


def skew_part(A: FiniteAlgebra, x: AlgebraElement) -> AlgebraElement:
    return (x - A.apply_involution(x)).scale(Fraction(1, 2))


def jordan_product(A: FiniteAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return A.multiply(a, b) + A.multiply(b, a)


def lie_bracket(A: FiniteAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return A.multiply(a, b) - A.multiply(b, a)


def span_of(A: FiniteAlgebra, elements: Iterable[AlgebraElement]) -> Span:
    return Span(A.dimension, DELTA_FIELD, (A.vector(x) for x in elements))


def membership_test(A: FiniteAlgebra, span: Sequence[AlgebraElement]):
    """Exact membership predicate for the span of the given elements.

    A span of basis vectors is tested by support containment, anything else
    by reduction against an echelon basis over Q(d).
    """
    if all(len(x.support()) <= 1 for x in span):
        support = {i for x in span for i in x.support()}
        return lambda y: all(i in support for i, _ in y.items())
    S = span_of(A, span)
    return lambda y: S.contains(A.vector(y))


def is_iota_ideal(A: FiniteAlgebra, span: Sequence[AlgebraElement]) -> bool:
    """Two-sided ideal stable under the involution (exact membership tests)."""
    contains = membership_test(A, span)
    for x in span:
        if not x:
            continue
        if not contains(A.apply_involution(x)):
            return False
        for i in range(A.dimension):
            b = AlgebraElement.basis(i)
            if not contains(A.multiply(b, x)) or not contains(A.multiply(x, b)):
                return False
    return True


def check_relations(A: TLAlgebra) -> list[str]:
    """Check the defining relations of the presentation; returns failures."""
    n = A.n
    one = A.unit
    e = {i: A.generator(i) for i in range(1, n)}
    mul = A.multiply
    failures = []
    for i in range(1, n):
        if mul(one, e[i]) != e[i] or mul(e[i], one) != e[i]:
            failures.append(f"id*e{i} = e{i}*id = e{i}")
        if mul(e[i], e[i]) != e[i].scale(DELTA):
            failures.append(f"e{i}^2 = d*e{i}")
        for j in range(1, n):
            if abs(i - j) > 1 and mul(e[i], e[j]) != mul(e[j], e[i]):
                failures.append(f"e{i}e{j} = e{j}e{i}")
        if i + 1 <= n - 1 and mul(mul(e[i], e[i + 1]), e[i]) != e[i]:
            failures.append(f"e{i}e{i+1}e{i} = e{i}")
        if i >= 2 and mul(mul(e[i], e[i - 1]), e[i]) != e[i]:
            failures.append(f"e{i}e{i-1}e{i} = e{i}")
    return failures
