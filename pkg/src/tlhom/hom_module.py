"""
Right Hom-modules over a type II Hom-associative algebra.

A Hom-module is a space V with a right action ``v.a`` and a linear map
``alpha_V`` such that

    alpha_V(v.a).b = v.alpha(a*b)

for all a, b in the algebra and v in V, where ``*`` is the deformed product.
The functor F turns a left module M of the underlying iota-algebra into the
Hom-module with ``m.a = iota(a) m`` and ``alpha_V = id``.

All computations are exact, either generically over Q(d) (``delta0=None``)
or after specialising d to a rational ``delta0``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import AlgebraElement, FiniteAlgebra
from .coeff import (
    DELTA_FIELD,
    RATIONAL,
    ExactMatrix,
    Span,
    as_fraction,
    coerce_scalar,
    field_one,
    field_zero,
    matrix_nullspace,
    matrix_rank,
    rref,
    specialise,
)
from .hom_twist import (
    EXHAUSTIVE,
    SAMPLED,
    AxiomResult,
    HomAlgebra,
    MorphismError,
    index_tuples,
    yau_twist_type2,
)

SIMPLICITY_LIMIT = 6


class ModuleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# small dense linear algebra over Q or Q(d)
# ---------------------------------------------------------------------------

Matrix = list  # list of rows


def _field(delta0) -> str:
    return DELTA_FIELD if delta0 is None else RATIONAL


def _zeros(rows: int, cols: int, fld: str) -> Matrix:
    z = field_zero(fld)
    return [[z] * cols for _ in range(rows)]


def _identity(n: int, fld: str) -> Matrix:
    m = _zeros(n, n, fld)
    for i in range(n):
        m[i][i] = field_one(fld)
    return m


def _matvec(m: Matrix, v: Sequence, fld: str) -> list:
    z = field_zero(fld)
    out = []
    for row in m:
        acc = z
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def _matmul(a: Matrix, b: Matrix, fld: str) -> Matrix:
    cols = len(b[0]) if b else 0
    bt = [[b[k][j] for k in range(len(b))] for j in range(cols)]
    return [[_dot(row, col, fld) for col in bt] for row in a]


def _dot(u: Sequence, v: Sequence, fld: str):
    acc = field_zero(fld)
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def _add(u: Sequence, v: Sequence) -> list:
    return [a + b for a, b in zip(u, v)]


def _scale(c, v: Sequence) -> list:
    return [c * a for a in v]


def _is_zero(v: Sequence) -> bool:
    return not any(v)


def _columns(m: Matrix) -> list[list]:
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]) if m else 0)]


def _from_columns(cols: Sequence[Sequence], rows: int, fld: str) -> Matrix:
    if not cols:
        return _zeros(rows, 0, fld)
    return [[c[i] for c in cols] for i in range(rows)]


def _unit_vector(n: int, i: int, fld: str) -> list:
    v = [field_zero(fld)] * n
    v[i] = field_one(fld)
    return v


def _coerce_matrix(m, fld: str, delta0) -> Matrix:
    return [[coerce_scalar(specialise(x, delta0), fld) if delta0 is not None else coerce_scalar(x, fld)
             for x in row] for row in m]


def _matrix_of(m: Matrix, fld: str) -> ExactMatrix:
    cols = len(m[0]) if m else 0
    return ExactMatrix(m, cols=cols, field=fld)


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

class LeftModule:
    """A left module of an iota-algebra: ``action[a]`` is the matrix of a."""

    def __init__(self, algebra: FiniteAlgebra, dimension: int, action: Sequence[Matrix], delta0=None,
                 labels: Sequence | None = None, validate: bool = True):
        self.algebra = algebra
        self.dimension = dimension
        self.delta0 = None if delta0 is None else as_fraction(delta0)
        self.field = _field(self.delta0)
        self.labels = list(labels) if labels is not None else list(range(dimension))
        if len(action) != algebra.dimension:
            raise ModuleError("one action matrix per algebra basis element is required")
        self.action = [_coerce_matrix(m, self.field, self.delta0) for m in action]
        if validate:
            problems = self.validate()
            if problems:
                raise ModuleError(problems[0])

    @classmethod
    def from_cell_module(cls, cm, delta0=None) -> LeftModule:
        from .algebra import tl_algebra

        A = tl_algebra(cm.n)
        return cls(A, cm.dimension, [cm.matrix(a) for a in range(A.dimension)], delta0,
                   labels=cm.basis)

    def act_element(self, x: AlgebraElement, v: Sequence) -> list:
        out = [field_zero(self.field)] * self.dimension
        for a, c in x.items():
            c = coerce_scalar(specialise(c, self.delta0), self.field)
            out = _add(out, _scale(c, _matvec(self.action[a], v, self.field)))
        return out

    def element_matrix(self, x: AlgebraElement) -> Matrix:
        m = _zeros(self.dimension, self.dimension, self.field)
        for a, c in x.items():
            c = coerce_scalar(specialise(c, self.delta0), self.field)
            m = [[p + c * q for p, q in zip(r1, r2)] for r1, r2 in zip(m, self.action[a])]
        return m

    def validate(self, samples: int = 300, seed: int = 0) -> list[str]:
        A = self.algebra
        problems = []
        if self.element_matrix(A.unit) != _identity(self.dimension, self.field):
            problems.append("the unit does not act as the identity")
        pairs = (itertools.product(range(A.dimension), repeat=2) if A.dimension <= 42 else
                 index_tuples(A.dimension, 2, SAMPLED, samples, seed))
        for a, b in pairs:
            lhs = _matmul(self.action[a], self.action[b], self.field)
            if lhs != self.element_matrix(A.product_of_basis(a, b)):
                problems.append(f"action does not respect the product of basis pair {(a, b)}")
                break
        return problems


class HomModule:
    """A right Hom-module: ``action[a]`` is the matrix of v -> v.a (columns = images)."""

    def __init__(self, algebra: HomAlgebra, dimension: int, action: Sequence[Matrix], alpha_v: Matrix,
                 delta0=None, labels: Sequence | None = None, name: str = "", verify: bool = True):
        self.algebra = algebra
        self.dimension = dimension
        self.delta0 = None if delta0 is None else as_fraction(delta0)
        self.field = _field(self.delta0)
        self.labels = list(labels) if labels is not None else list(range(dimension))
        self.name = name
        if len(action) != algebra.dimension:
            raise ModuleError("one action matrix per algebra basis element is required")
        self.action = [_coerce_matrix(m, self.field, self.delta0) for m in action]
        self.alpha_v = _coerce_matrix(alpha_v, self.field, self.delta0)
        if verify:
            res = check_hom_module(self)
            if not res:
                raise ModuleError(f"Hom-module axiom fails on (a, b, v) = {res.witness}")

    # -- evaluation ---------------------------------------------------------

    def act(self, v: Sequence, a: int) -> list:
        return _matvec(self.action[a], v, self.field)

    def act_element(self, v: Sequence, x: AlgebraElement) -> list:
        out = [field_zero(self.field)] * self.dimension
        for a, c in x.items():
            c = coerce_scalar(specialise(c, self.delta0), self.field)
            out = _add(out, _scale(c, self.act(v, a)))
        return out

    def alpha(self, v: Sequence) -> list:
        return _matvec(self.alpha_v, v, self.field)

    def basis_vector(self, i: int) -> list:
        return _unit_vector(self.dimension, i, self.field)

    def zero_vector(self) -> list:
        return [field_zero(self.field)] * self.dimension

    def operators(self) -> list[Matrix]:
        return list(self.action) + [self.alpha_v]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.dimension,
            "delta": None if self.delta0 is None else str(self.delta0),
            "alpha": [[str(x) for x in row] for row in self.alpha_v],
            "action": {str(a): [[str(x) for x in row] for row in m] for a, m in enumerate(self.action)},
        }


def check_hom_module(V: HomModule, mode: str = EXHAUSTIVE, samples: int = 1000, seed: int = 0) -> AxiomResult:
    """Check alpha_V(v.a).b = v.alpha(a*b) on basis triples (a, b, v).

    Triples run lexicographically with v innermost; the first violation is
    reported.
    """
    H = V.algebra
    if mode == EXHAUSTIVE:
        triples = itertools.product(range(H.dimension), range(H.dimension), range(V.dimension))
    else:
        rng = random.Random(seed)
        triples = [(rng.randrange(H.dimension), rng.randrange(H.dimension), rng.randrange(V.dimension))
                   for _ in range(samples)] if V.dimension else []
    cache: dict[tuple[int, int], AlgebraElement] = {}
    checked = 0
    for a, b, v in triples:
        checked += 1
        if (a, b) not in cache:
            cache[(a, b)] = H.twist(H.product_of_basis(a, b))
        e = V.basis_vector(v)
        lhs = V.act(V.alpha(V.act(e, a)), b)
        rhs = V.act_element(e, cache[(a, b)])
        if lhs != rhs:
            return AxiomResult("homoduleII", False, checked, mode, seed, (a, b, v), lhs, rhs)
    return AxiomResult("homoduleII", True, checked, mode, seed if mode == SAMPLED else None)


def check_left_hom_module_type1(H: HomAlgebra, action: Sequence[Matrix], alpha_v: Matrix, delta0=None) -> bool:
    """Predicate for left type I1 Hom-modules: (a*b).alpha_V(v) = alpha(a).(b.v)."""
    fld = _field(delta0)
    act = [_coerce_matrix(m, fld, delta0) for m in action]
    al = _coerce_matrix(alpha_v, fld, delta0)
    size = len(al)

    def elem_matrix(x: AlgebraElement) -> Matrix:
        m = _zeros(size, size, fld)
        for k, c in x.items():
            c = coerce_scalar(specialise(c, delta0), fld)
            m = [[p + c * q for p, q in zip(r1, r2)] for r1, r2 in zip(m, act[k])]
        return m

    for a, b in itertools.product(range(H.dimension), repeat=2):
        lhs = _matmul(elem_matrix(H.product_of_basis(a, b)), al, fld)
        rhs = _matmul(elem_matrix(H.twist_of_basis(a)), act[b], fld)
        if lhs != rhs:
            return False
    return True


def functor_module(M: LeftModule, H: HomAlgebra | None = None) -> HomModule:
    """F(M): right action m.a = iota(a) m and alpha_V = id."""
    problems = M.validate()
    if problems:
        raise ModuleError(f"not a left module: {problems[0]}")
    A = M.algebra
    H = H or _twisted(A)
    action = [M.element_matrix(A.apply_involution(AlgebraElement.basis(a))) for a in range(A.dimension)]
    return HomModule(H, M.dimension, action, _identity(M.dimension, M.field), M.delta0,
                     labels=M.labels, name="F(M)")


def _twisted(A: FiniteAlgebra) -> HomAlgebra:
    from .algebra import TLAlgebra
    from .hom_twist import twisted_tl

    if isinstance(A, TLAlgebra):
        return twisted_tl(A.n)
    return yau_twist_type2(A)


def regular_hom_module(H: HomAlgebra, delta0=None) -> HomModule:
    """H acting on itself by v.a = v*a with alpha_V = alpha."""
    n = H.dimension
    action = []
    for a in range(n):
        m = [[0] * n for _ in range(n)]
        for j in range(n):
            for k, c in H.product_of_basis(j, a).items():
                m[k][j] = c
        action.append(m)
    alpha = [[0] * n for _ in range(n)]
    for j in range(n):
        for k, c in H.twist_of_basis(j).items():
            alpha[k][j] = c
    return HomModule(H, n, action, alpha, delta0, labels=H.labels, name="regular")


def cell_hom_module(n: int, d: int, delta0=None) -> HomModule:
    """F applied to the cell module C_d of TL_n."""
    from .cellular import cell_module

    return functor_module(LeftModule.from_cell_module(cell_module(n, d), delta0))


# ---------------------------------------------------------------------------
# submodules
# ---------------------------------------------------------------------------

class HomSubmodule:
    """The span of ``vectors`` in ``parent``; closure is checked on construction."""

    def __init__(self, parent: HomModule, vectors: Sequence[Sequence], check: bool = True):
        self.parent = parent
        self.span = Span(parent.dimension, parent.field, vectors)
        if check and not self.is_closed():
            raise ModuleError("span is not closed under the action and alpha_V")

    @property
    def basis(self) -> list[list]:
        return self.span.basis()

    @property
    def dimension(self) -> int:
        return self.span.rank

    def contains(self, v: Sequence) -> bool:
        return self.span.contains(v)

    def is_closed(self) -> bool:
        V = self.parent
        for u in self.basis:
            if not self.span.contains(V.alpha(u)):
                return False
            for a in range(V.algebra.dimension):
                if not self.span.contains(V.act(u, a)):
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomSubmodule):
            return NotImplemented
        return self.parent is other.parent and self.span == other.span

    def __repr__(self):
        return f"HomSubmodule(dim={self.dimension} in {self.parent.dimension})"


def generated_submodule(V: HomModule, vectors: Sequence[Sequence]) -> HomSubmodule:
    """Smallest Hom-submodule containing the given vectors."""
    span = Span(V.dimension, V.field)
    queue = [list(v) for v in vectors]
    while queue:
        v = queue.pop()
        if span.add(v):
            queue.append(V.alpha(v))
            queue.extend(V.act(v, a) for a in range(V.algebra.dimension))
    return HomSubmodule(V, span.basis())


def zero_submodule(V: HomModule) -> HomSubmodule:
    return HomSubmodule(V, [])


def whole_module(V: HomModule) -> HomSubmodule:
    return HomSubmodule(V, [V.basis_vector(i) for i in range(V.dimension)])


def _same_parent(subs: Sequence[HomSubmodule]) -> HomModule:
    if not subs:
        raise ModuleError("need at least one submodule")
    parent = subs[0].parent
    if any(U.parent is not parent for U in subs):
        raise ModuleError("submodules live in different modules")
    return parent


def submodule_sum(subs: Sequence[HomSubmodule]) -> HomSubmodule:
    parent = _same_parent(subs)
    return HomSubmodule(parent, [v for U in subs for v in U.basis])


def _intersect_two(U: HomSubmodule, W: HomSubmodule) -> list[list]:
    V = U.parent
    bu, bw = U.basis, W.basis
    if not bu or not bw:
        return []
    # solve sum x_i u_i - sum y_j w_j = 0
    cols = bu + [_scale(-field_one(V.field), w) for w in bw]
    M = _matrix_of(_from_columns(cols, V.dimension, V.field), V.field)
    out = []
    for sol in matrix_nullspace(M):
        v = V.zero_vector()
        for x, u in zip(sol[:len(bu)], bu):
            v = _add(v, _scale(x, u))
        out.append(v)
    return out


def submodule_intersection(subs: Sequence[HomSubmodule]) -> HomSubmodule:
    parent = _same_parent(subs)
    current = subs[0]
    for U in subs[1:]:
        current = HomSubmodule(parent, _intersect_two(current, U))
    return HomSubmodule(parent, current.basis)


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

@dataclass
class HomModuleMorphism:
    source: HomModule
    target: HomModule
    matrix: Matrix = field(repr=False)

    def __call__(self, v: Sequence) -> list:
        return _matvec(self.matrix, v, self.target.field)


def check_module_morphism(phi: Matrix, V: HomModule, W: HomModule) -> HomModuleMorphism:
    """Verify phi(v.a) = phi(v).a and alpha_W phi = phi alpha_V on basis data."""
    if V.algebra is not W.algebra:
        raise ModuleError("modules over different Hom-algebras")
    mat = _coerce_matrix(phi, W.field, W.delta0)
    if len(mat) != W.dimension or any(len(r) != V.dimension for r in mat):
        raise ModuleError("morphism matrix has the wrong shape")
    for v in range(V.dimension):
        e = V.basis_vector(v)
        pv = _matvec(mat, e, W.field)
        if _matvec(mat, V.alpha(e), W.field) != W.alpha(pv):
            raise MorphismError(f"phi does not intertwine alpha at basis vector {v}", ("alpha", v))
        for a in range(V.algebra.dimension):
            if _matvec(mat, V.act(e, a), W.field) != W.act(pv, a):
                raise MorphismError(f"phi(v.a) != phi(v).a for (v, a) = {(v, a)}", (v, a))
    return HomModuleMorphism(V, W, mat)


def morphism_image(phi: Matrix, V: HomModule, W: HomModule, sub: HomSubmodule | None = None) -> HomSubmodule:
    f = check_module_morphism(phi, V, W)
    vecs = sub.basis if sub is not None else [V.basis_vector(i) for i in range(V.dimension)]
    return HomSubmodule(W, [f(v) for v in vecs])


def morphism_preimage(phi: Matrix, target: HomSubmodule, V: HomModule) -> HomSubmodule:
    W = target.parent
    f = check_module_morphism(phi, V, W)
    bw = target.basis
    cols = _columns(f.matrix) + [_scale(-field_one(W.field), w) for w in bw]
    M = _matrix_of(_from_columns(cols, W.dimension, W.field), W.field)
    if V.dimension == 0:
        return zero_submodule(V)
    vecs = [sol[:V.dimension] for sol in matrix_nullspace(M)]
    return HomSubmodule(V, vecs)


def kernel(phi: Matrix, V: HomModule, W: HomModule) -> HomSubmodule:
    return morphism_preimage(phi, zero_submodule(W), V)


# ---------------------------------------------------------------------------
# direct sums and quotients
# ---------------------------------------------------------------------------

def _block(mats: Sequence[Matrix], sizes: Sequence[int], fld: str) -> Matrix:
    total = sum(sizes)
    out = _zeros(total, total, fld)
    off = 0
    for m, k in zip(mats, sizes):
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = m[i][j]
        off += k
    return out


def direct_sum(modules: Sequence[HomModule]) -> HomModule:
    if not modules:
        raise ModuleError("direct sum of an empty list")
    H, delta0 = modules[0].algebra, modules[0].delta0
    if any(M.algebra is not H for M in modules):
        raise ModuleError("direct summands live over different Hom-algebras")
    if any(M.delta0 != delta0 for M in modules):
        raise ModuleError("direct summands are specialised differently")
    fld = modules[0].field
    sizes = [M.dimension for M in modules]
    action = [_block([M.action[a] for M in modules], sizes, fld) for a in range(H.dimension)]
    alpha = _block([M.alpha_v for M in modules], sizes, fld)
    labels = [(k, lab) for k, M in enumerate(modules) for lab in M.labels]
    return HomModule(H, sum(sizes), action, alpha, delta0, labels=labels, name="direct sum")


@dataclass
class Quotient:
    module: HomModule
    complement: list[int]
    projection: Matrix = field(repr=False)

    def project(self, v: Sequence) -> list:
        return _matvec(self.projection, v, self.module.field)


def quotient_module(V: HomModule, U: HomSubmodule) -> Quotient:
    """V/U in the coordinates of a complement of standard basis vectors.

    The complement is chosen greedily: e_0, e_1, ... are added to a basis of
    U whenever they enlarge the span.
    """
    if U.parent is not V:
        raise ModuleError("submodule of a different module")
    if not U.is_closed():
        raise ModuleError("submodule is not closed")
    fld = V.field
    n = V.dimension
    span = Span(n, fld, U.basis)
    complement = [i for i in range(n) if span.add(V.basis_vector(i))]
    full = _from_columns(U.basis + [V.basis_vector(i) for i in complement], n, fld)
    k = U.dimension
    # invert the change of basis: rref of [full | I]
    aug = _matrix_of([row + unit for row, unit in zip(full, _identity(n, fld))], fld)
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ModuleError("complement selection did not produce a basis")
    inverse = [r[n:] for r in rows[:n]]
    projection = inverse[k:]
    m = len(complement)
    embed = _from_columns([V.basis_vector(i) for i in complement], n, fld)
    for u in U.basis:
        for op in V.operators():
            if not _is_zero(_matvec(projection, _matvec(op, u, fld), fld)):
                raise ModuleError("induced action depends on the representative")
    action = [_matmul(projection, _matmul(R, embed, fld), fld) if m else [] for R in V.action]
    alpha = _matmul(projection, _matmul(V.alpha_v, embed, fld), fld) if m else []
    Q = HomModule(V.algebra, m, action, alpha, V.delta0, labels=[V.labels[i] for i in complement],
                  name="quotient")
    return Quotient(Q, complement, projection)


# ---------------------------------------------------------------------------
# the functor F on morphisms, morphism spaces, faithfulness
# ---------------------------------------------------------------------------

def check_left_morphism(phi: Matrix, M: LeftModule, N: LeftModule) -> Matrix:
    mat = _coerce_matrix(phi, N.field, N.delta0)
    for a in range(M.algebra.dimension):
        if _matmul(mat, M.action[a], N.field) != _matmul(N.action[a], mat, N.field):
            raise MorphismError(f"phi is not a left-module map for basis element {a}", a)
    return mat


def functor_on_module_morphism(phi: Matrix, M: LeftModule, N: LeftModule) -> HomModuleMorphism:
    """F(phi) = phi, re-verified as a Hom-module morphism F(M) -> F(N)."""
    mat = check_left_morphism(phi, M, N)
    return check_module_morphism(mat, functor_module(M), functor_module(N))


def _intertwiners(src_ops: Sequence[Matrix], dst_ops: Sequence[Matrix], m: int, n: int, fld: str) -> list[Matrix]:
    """Basis of {X (n x m) : X S = T X for each paired (S, T)}."""
    if m == 0 or n == 0:
        return []
    rows = []
    zero = field_zero(fld)
    for S, T in zip(src_ops, dst_ops):
        for i in range(n):
            for j in range(m):
                row = [zero] * (n * m)
                # (X S)_ij = sum_k X_ik S_kj ;  (T X)_ij = sum_k T_ik X_kj
                for k in range(m):
                    if S[k][j]:
                        row[i * m + k] = row[i * m + k] + S[k][j]
                for k in range(n):
                    if T[i][k]:
                        row[k * m + j] = row[k * m + j] - T[i][k]
                if any(row):
                    rows.append(row)
    if not rows:
        sols = [_unit_vector(n * m, i, fld) for i in range(n * m)]
    else:
        sols = matrix_nullspace(_matrix_of(rows, fld))
    return [[sol[i * m:(i + 1) * m] for i in range(n)] for sol in sols]


def left_morphism_space(M: LeftModule, N: LeftModule) -> list[Matrix]:
    """Exact basis of Hom_A(M, N)."""
    if M.field != N.field or M.delta0 != N.delta0:
        raise ModuleError("modules are specialised differently")
    return _intertwiners(M.action, N.action, M.dimension, N.dimension, M.field)


def hom_morphism_space(V: HomModule, W: HomModule) -> list[Matrix]:
    """Exact basis of the Hom-module morphisms V -> W."""
    if V.field != W.field or V.delta0 != W.delta0:
        raise ModuleError("modules are specialised differently")
    return _intertwiners(V.operators(), W.operators(), V.dimension, W.dimension, V.field)


@dataclass
class FaithfulnessReport:
    left_dim: int
    hom_dim: int
    image_rank: int
    images_verified: bool

    @property
    def injective(self) -> bool:
        return self.image_rank == self.left_dim and self.images_verified

    def to_json(self) -> dict:
        return {"left_morphisms": self.left_dim, "hom_morphisms": self.hom_dim,
                "image_rank": self.image_rank, "images_verified": self.images_verified,
                "injective": self.injective}


def faithfulness_probe(M: LeftModule, N: LeftModule) -> FaithfulnessReport:
    """Check that phi -> F(phi) is injective on a basis of Hom_A(M, N)."""
    basis = left_morphism_space(M, N)
    FM, FN = functor_module(M), functor_module(N)
    hom_basis = hom_morphism_space(FM, FN)
    images = []
    ok = True
    for X in basis:
        try:
            images.append(functor_on_module_morphism(X, M, N).matrix)
        except MorphismError:
            ok = False
    flat = [[x for row in X for x in row] for X in images]
    rank = matrix_rank(_matrix_of(flat, M.field)) if flat and flat[0] else 0
    # every image must also lie in the Hom-module morphism space
    hom_span = Span(M.dimension * N.dimension, M.field, ([x for row in X for x in row] for X in hom_basis))
    if flat and flat[0] and not all(hom_span.contains(v) for v in flat):
        ok = False
    return FaithfulnessReport(len(basis), len(hom_basis), rank, ok)


def is_left_submodule(M: LeftModule, vectors: Sequence[Sequence]) -> bool:
    span = Span(M.dimension, M.field, vectors)
    return all(span.contains(_matvec(op, u, M.field)) for u in span.basis() for op in M.action)


# ---------------------------------------------------------------------------
# Hom-simplicity and Hom-semisimplicity
# ---------------------------------------------------------------------------

def operator_algebra(V: HomModule) -> list[Matrix]:
    """Basis of the unital associative algebra generated by the action and alpha_V."""
    n, fld = V.dimension, V.field
    gens = V.operators()
    span = Span(n * n, fld)
    basis: list[Matrix] = []
    queue = [_identity(n, fld)] + gens
    while queue:
        X = queue.pop(0)
        if span.add([x for row in X for x in row]):
            basis.append(X)
            queue.extend(_matmul(G, X, fld) for G in gens)
    return basis


def _generated(ops: Sequence[Matrix], v: Sequence, fld: str) -> int:
    n = len(v)
    span = Span(n, fld)
    queue = [list(v)]
    while queue:
        w = queue.pop()
        if span.add(w):
            queue.extend(_matvec(X, w, fld) for X in ops)
    return span.rank


def _transpose(m: Matrix) -> Matrix:
    return [list(r) for r in zip(*m)] if m else []


def is_hom_simple(V: HomModule) -> bool | None:
    """True/False when decided, None ("not decided") otherwise.

    Decided for dimension <= SIMPLICITY_LIMIT. Simple when the operator
    algebra is all of End(V); reducible when a vector in the kernel of some
    operator-algebra basis element generates a proper submodule (of V or of
    the dual); otherwise Norton's criterion settles irreducibility when that
    kernel is one-dimensional.
    """
    n, fld = V.dimension, V.field
    if n == 0:
        return False
    if n > SIMPLICITY_LIMIT:
        return None
    E = operator_algebra(V)
    if len(E) == n * n:
        return True
    Et = [_transpose(X) for X in E]
    decided_simple = False
    for X in E:
        ker = matrix_nullspace(_matrix_of(X, fld))
        if not ker:
            continue
        coker = matrix_nullspace(_matrix_of(_transpose(X), fld))
        gen_ker = [_generated(E, v, fld) for v in ker]
        gen_coker = [_generated(Et, w, fld) for w in coker]
        if any(0 < g < n for g in gen_ker + gen_coker):
            return False
        if len(ker) == 1:
            decided_simple = True
    return True if decided_simple else None


def is_hom_semisimple(V: HomModule) -> bool | None:
    """Semisimplicity via the trace form of the operator algebra.

    In characteristic zero V is a sum of Hom-simple submodules exactly when
    the (faithful) operator algebra E is semisimple, i.e. when the trace form
    tr(XY) on E is nondegenerate. Like is_hom_simple it reports None
    ("not decided") above SIMPLICITY_LIMIT dimensions.
    """
    if V.dimension == 0:
        return True
    if V.dimension > SIMPLICITY_LIMIT:
        return None
    E = operator_algebra(V)
    fld = V.field
    gram = [[_trace(_matmul(X, Y, fld), fld) for Y in E] for X in E]
    return matrix_rank(_matrix_of(gram, fld)) == len(E)


def _trace(m: Matrix, fld: str):
    acc = field_zero(fld)
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc
