"""
Yau twisting of an algebra into a Hom-associative algebra.

Two flavours are provided. ``yau_twist_type1`` deforms the product by an
algebra endomorphism, ``x*y = alpha(xy)``, and satisfies

    alpha(a) * (b * c) = (a * b) * alpha(c)            (type I1)

``yau_twist_type2`` deforms by the anti-involution, ``x*y = iota(xy)``, and
satisfies

    x * alpha(y * z) = alpha(x * y) * z                (type II)

with twisting map alpha = iota and the original unit as a weak unit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from . import diagrams as dg
from .algebra import (
    DEFAULT_SEED,
    EXHAUSTIVE_LIMIT,
    SAMPLE_COUNT,
    AlgebraElement,
    FiniteAlgebra,
    membership_test,
    tl_algebra,
)
from .coeff import ZERO, DeltaPoly


class Kind(str, Enum):
    TYPE_I1 = "homI"
    TYPE_II = "homII"

    @classmethod
    def parse(cls, value) -> Kind:
        if isinstance(value, Kind):
            return value
        text = str(value).strip().lower()
        aliases = {"homi": cls.TYPE_I1, "homi1": cls.TYPE_I1, "typei1": cls.TYPE_I1, "i1": cls.TYPE_I1,
                   "homii": cls.TYPE_II, "typeii": cls.TYPE_II, "ii": cls.TYPE_II}
        if text not in aliases:
            raise ValueError(f"unknown Hom-associativity kind {value!r}")
        return aliases[text]


class HomAlgebraError(ValueError):
    pass


class MorphismError(ValueError):
    """A map failed a morphism check; ``witness`` names the offending basis data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"


@dataclass
class AxiomResult:
    """Outcome of an axiom check over basis tuples.

    ``witness`` is the first violating tuple of basis indices (None on a pass);
    ``lhs``/``rhs`` are the two sides evaluated there.
    """

    axiom: str
    passed: bool
    checked: int
    mode: str
    seed: int | None = None
    witness: tuple | None = None
    lhs: object = None
    rhs: object = None
    labels: tuple | None = field(default=None, compare=False)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "checked": self.checked, "mode": self.mode,
               "result": "pass" if self.passed else "counterexample"}
        if self.mode == SAMPLED:
            out["seed"] = self.seed
        if not self.passed:
            out["triple"] = list(self.witness)
            if self.labels is not None:
                out["labels"] = list(self.labels)
            out["lhs"] = _element_json(self.lhs)
            out["rhs"] = _element_json(self.rhs)
        return out


def _element_json(x):
    if isinstance(x, AlgebraElement):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [str(v) for v in x]
    return None if x is None else str(x)


def index_tuples(dim: int, arity: int, mode: str, samples: int, seed: int) -> list[tuple[int, ...]]:
    """Basis tuples checked by an axiom test, in deterministic order."""
    if mode == EXHAUSTIVE:
        return list(itertools.product(range(dim), repeat=arity))
    if mode != SAMPLED:
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    return [tuple(rng.randrange(dim) for _ in range(arity)) for _ in range(samples)]


def default_mode(dim: int) -> str:
    return EXHAUSTIVE if dim <= EXHAUSTIVE_LIMIT else SAMPLED


def _linear_images(A: FiniteAlgebra, alpha) -> list[AlgebraElement]:
    """Normalise a linear map given as a permutation, images, or a callable."""
    if callable(alpha):
        return [alpha(AlgebraElement.basis(i)) for i in range(A.dimension)]
    images = list(alpha)
    if len(images) != A.dimension:
        raise HomAlgebraError("twist must give one image per basis element")
    return [AlgebraElement.basis(v) if isinstance(v, int) else v for v in images]


class HomAlgebra:
    """An algebra with twisting map and deformed product stored as a table."""

    def __init__(self, base: FiniteAlgebra, twist: Sequence[AlgebraElement], kind: Kind,
                 product: Sequence[Sequence[AlgebraElement]], name: str = ""):
        self.base = base
        self.dimension = base.dimension
        self.labels = base.labels
        self.kind = Kind.parse(kind)
        self.name = name
        self._twist = [dict(x.items()) for x in twist]
        self._product = [[dict(product[i][j].items()) for j in range(self.dimension)]
                         for i in range(self.dimension)]
        self._mono = None
        if all(len(t) == 1 for t in self._twist) and all(len(e) <= 1 for row in self._product for e in row):
            # term tables (index, coefficient) or None, for fast axiom scans
            self._mono = (
                [next(iter(t.items())) for t in self._twist],
                [[next(iter(e.items())) if e else None for e in row] for row in self._product],
            )

    # -- linear algebra -----------------------------------------------------

    def _combine(self, pieces: Iterable[tuple[DeltaPoly, dict[int, DeltaPoly]]]) -> AlgebraElement:
        out: dict[int, DeltaPoly] = {}
        for c, d in pieces:
            for k, v in d.items():
                out[k] = out.get(k, ZERO) + c * v
        return AlgebraElement(out)

    def twist(self, x: AlgebraElement) -> AlgebraElement:
        return self._combine((c, self._twist[i]) for i, c in x.items())

    def twist_of_basis(self, i: int) -> AlgebraElement:
        return AlgebraElement(self._twist[i])

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        return self._combine((a * b, self._product[i][j]) for i, a in x.items() for j, b in y.items())

    def product_of_basis(self, i: int, j: int) -> AlgebraElement:
        return AlgebraElement(self._product[i][j])

    def basis_element(self, i: int) -> AlgebraElement:
        return self.base.basis_element(i)

    def label(self, i: int) -> str:
        lab = self.labels[i]
        if isinstance(lab, dg.TLDiagram):
            return dg.word_of(lab)
        return str(lab)

    def vector(self, x: AlgebraElement):
        return x.dense(self.dimension)


# -- axioms -----------------------------------------------------------------

@lru_cache(maxsize=4096)
def _pmul(a: DeltaPoly, b: DeltaPoly) -> DeltaPoly:
    return a * b


_ONE = DeltaPoly.constant(1)


def _mono_sides(H: HomAlgebra, kind: Kind, i: int, j: int, k: int):
    T, P = H._mono

    def mul(a, b):
        if a is None or b is None:
            return None
        t = P[a[0]][b[0]]
        return None if t is None else (t[0], _pmul(_pmul(a[1], b[1]), t[1]))

    def tw(a):
        return None if a is None else (T[a[0]][0], _pmul(a[1], T[a[0]][1]))

    one = _ONE
    x, y, z = (i, one), (j, one), (k, one)
    if kind is Kind.TYPE_II:
        return mul(x, tw(mul(y, z))), mul(tw(mul(x, y)), z)
    return mul(tw(x), mul(y, z)), mul(mul(x, y), tw(z))


def _as_element(term) -> AlgebraElement:
    return AlgebraElement() if term is None else AlgebraElement({term[0]: term[1]})


def _sides(H: HomAlgebra, kind: Kind, i: int, j: int, k: int) -> tuple[AlgebraElement, AlgebraElement]:
    if H._mono is not None:
        lhs, rhs = _mono_sides(H, kind, i, j, k)
        return _as_element(lhs), _as_element(rhs)
    x, z = AlgebraElement.basis(i), AlgebraElement.basis(k)
    if kind is Kind.TYPE_II:
        lhs = H.multiply(x, H.twist(H.product_of_basis(j, k)))
        rhs = H.multiply(H.twist(H.product_of_basis(i, j)), z)
    else:
        lhs = H.multiply(H.twist_of_basis(i), H.product_of_basis(j, k))
        rhs = H.multiply(H.product_of_basis(i, j), H.twist_of_basis(k))
    return lhs, rhs


def check_hom_assoc(H: HomAlgebra, kind=None, mode: str | None = None, samples: int = SAMPLE_COUNT,
                    seed: int = DEFAULT_SEED) -> AxiomResult:
    """Check a Hom-associativity axiom on basis triples.

    The exhaustive scan runs over (i, j, k) in lexicographic order of basis
    indices and stops at the first violation. Sampled mode draws seeded
    triples and reports the first violation in draw order.
    """
    kind = H.kind if kind is None else Kind.parse(kind)
    mode = mode or default_mode(H.dimension)
    checked = 0
    for t in index_tuples(H.dimension, 3, mode, samples, seed):
        checked += 1
        if H._mono is not None:
            a, b = _mono_sides(H, kind, *t)
            if a == b or (a is not None and b is not None and a[0] == b[0] and a[1] == b[1]):
                continue
        lhs, rhs = _sides(H, kind, *t)
        if lhs != rhs:
            return AxiomResult(kind.value, False, checked, mode, seed, t, lhs, rhs,
                               labels=tuple(H.label(i) for i in t))
    return AxiomResult(kind.value, True, checked, mode, seed)


def check_weak_unit(H: HomAlgebra, unit: AlgebraElement) -> AxiomResult:
    """e*x = x*e = alpha(x) on every basis element."""
    for i in range(H.dimension):
        x = AlgebraElement.basis(i)
        target = H.twist(x)
        for side in (H.multiply(unit, x), H.multiply(x, unit)):
            if side != target:
                return AxiomResult("weak_unit", False, i + 1, EXHAUSTIVE, None, (i,), side, target)
    return AxiomResult("weak_unit", True, H.dimension, EXHAUSTIVE)


def check_anti_multiplicative(H: HomAlgebra) -> AxiomResult:
    """alpha(x*y) = alpha(y)*alpha(x) on basis pairs."""
    checked = 0
    for i, j in itertools.product(range(H.dimension), repeat=2):
        checked += 1
        lhs = H.twist(H.product_of_basis(i, j))
        rhs = H.multiply(H.twist_of_basis(j), H.twist_of_basis(i))
        if lhs != rhs:
            return AxiomResult("anti_multiplicative", False, checked, EXHAUSTIVE, None, (i, j), lhs, rhs)
    return AxiomResult("anti_multiplicative", True, checked, EXHAUSTIVE)


# -- constructions ----------------------------------------------------------

def yau_twist_type2(A: FiniteAlgebra, verify: bool = True, seed: int = DEFAULT_SEED) -> HomAlgebra:
    """Twist by the anti-involution: x*y = iota(xy), alpha = iota."""
    twist = [AlgebraElement.basis(A.involution[i]) for i in range(A.dimension)]
    product = [[A.apply_involution(A.product_of_basis(i, j)) for j in range(A.dimension)]
               for i in range(A.dimension)]
    H = HomAlgebra(A, twist, Kind.TYPE_II, product, name="type II twist")
    if verify:
        res = check_hom_assoc(H, Kind.TYPE_II, seed=seed)
        if not res:
            raise HomAlgebraError(f"type II axiom fails on {res.witness}")
        unit = check_weak_unit(H, A.unit)
        if not unit:
            raise HomAlgebraError(f"weak unit law fails on basis element {unit.witness[0]}")
    return H


def check_endomorphism(A: FiniteAlgebra, images: Sequence[AlgebraElement]) -> tuple[int, int] | None:
    """First basis pair where alpha(xy) != alpha(x)alpha(y), or None."""
    def apply(x):
        out: dict[int, DeltaPoly] = {}
        for i, c in x.items():
            for k, v in images[i].items():
                out[k] = out.get(k, ZERO) + c * v
        return AlgebraElement(out)

    for i, j in itertools.product(range(A.dimension), repeat=2):
        if apply(A.product_of_basis(i, j)) != A.multiply(images[i], images[j]):
            return (i, j)
    return None


def yau_twist_type1(A: FiniteAlgebra, alpha, verify: bool = True, seed: int = DEFAULT_SEED) -> HomAlgebra:
    """Twist by an algebra endomorphism: x*y = alpha(xy)."""
    images = _linear_images(A, alpha)
    bad = check_endomorphism(A, images)
    if bad is not None:
        raise MorphismError(f"alpha is not multiplicative on basis pair {bad}", bad)
    probe = HomAlgebra(A, images, Kind.TYPE_I1, [[A.zero()] * A.dimension] * A.dimension)
    product = [[probe.twist(A.product_of_basis(i, j)) for j in range(A.dimension)]
               for i in range(A.dimension)]
    H = HomAlgebra(A, images, Kind.TYPE_I1, product, name="type I1 twist")
    if verify:
        res = check_hom_assoc(H, Kind.TYPE_I1, seed=seed)
        if not res:
            raise HomAlgebraError(f"type I1 axiom fails on {res.witness}")
    return H


def is_hom_ideal(H: HomAlgebra, span: Sequence[AlgebraElement], side: str = "two_sided") -> bool:
    """Closure under the deformed product on the given side(s) and under alpha."""
    if side not in ("left", "right", "two_sided"):
        raise ValueError(f"unknown side {side!r}")
    contains = membership_test(H.base, span)
    for x in span:
        if not x:
            continue
        if not contains(H.twist(x)):
            return False
        for i in range(H.dimension):
            b = AlgebraElement.basis(i)
            if side in ("left", "two_sided") and not contains(H.multiply(b, x)):
                return False
            if side in ("right", "two_sided") and not contains(H.multiply(x, b)):
                return False
    return True


# -- the functor F on morphisms -----------------------------------------------

@dataclass
class HomAlgebraMorphism:
    source: HomAlgebra
    target: HomAlgebra
    images: list[AlgebraElement]
    checked_pairs: int

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return _apply_linear(self.images, x)


def _apply_linear(images: Sequence[AlgebraElement], x: AlgebraElement) -> AlgebraElement:
    out: dict[int, DeltaPoly] = {}
    for i, c in x.items():
        for k, v in images[i].items():
            out[k] = out.get(k, ZERO) + c * v
    return AlgebraElement(out)


def functor_on_algebra_morphism(phi, A: FiniteAlgebra, B: FiniteAlgebra) -> HomAlgebraMorphism:
    """Apply F to an iota-algebra morphism and re-verify it as a Hom-algebra map.

    ``phi`` gives the image of each basis element of A (as a list, or a
    callable on basis elements). Raises MorphismError with the violating basis
    index if phi does not commute with the involutions, or the violating pair
    if it is not multiplicative or fails a Hom-algebra morphism law.
    """
    images = _linear_images(A, phi)
    for i in range(A.dimension):
        lhs = _apply_linear(images, A.apply_involution(AlgebraElement.basis(i)))
        if lhs != B.apply_involution(images[i]):
            raise MorphismError(f"phi does not commute with the involutions at basis index {i}", i)
    for i, j in itertools.product(range(A.dimension), repeat=2):
        if _apply_linear(images, A.product_of_basis(i, j)) != B.multiply(images[i], images[j]):
            raise MorphismError(f"phi is not multiplicative on basis pair {(i, j)}", (i, j))
    HA, HB = yau_twist_type2(A, verify=False), yau_twist_type2(B, verify=False)
    checked = 0
    for i in range(A.dimension):
        if _apply_linear(images, HA.twist_of_basis(i)) != HB.twist(images[i]):
            raise MorphismError(f"F(phi) does not intertwine the twists at basis index {i}", i)
    for i, j in itertools.product(range(A.dimension), repeat=2):
        checked += 1
        if _apply_linear(images, HA.product_of_basis(i, j)) != HB.multiply(images[i], images[j]):
            raise MorphismError(f"F(phi) is not multiplicative for the twisted products on {(i, j)}", (i, j))
    return HomAlgebraMorphism(HA, HB, images, checked)


def tl_inclusion(n: int) -> list[AlgebraElement]:
    """Images of the basis of TL_n in TL_{n+1}: add a strand at the top."""
    A, B = tl_algebra(n), tl_algebra(n + 1)
    return [B.element_of(dg.extend_top(D)) for D in A.labels]


@lru_cache(maxsize=None)
def twisted_tl(n: int) -> HomAlgebra:
    """yau_twist_type2(tl_algebra(n)), cached."""
    return yau_twist_type2(tl_algebra(n))
