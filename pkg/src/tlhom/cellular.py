"""
Cellular structure of the Temperley-Lieb algebras.

The cellular datum has poset Lambda = {0, ..., n//2} (number of arcs on one
side, ordered by arc count), index sets M(d) of half-diagrams with d arcs,
and C(s, t) the diagram whose left half is s and right half is the mirror of
t. Cell modules, their Gram matrices, radicals and the resulting simple
dimensions are computed exactly, generically or at a rational delta0.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import diagrams as dg
from .algebra import AlgebraElement, TLAlgebra, is_iota_ideal, tl_algebra
from .coeff import (
    DELTA,
    DELTA_FIELD,
    ZERO,
    DeltaPoly,
    DimensionError,
    ExactMatrix,
    as_fraction,
    matrix_det,
    matrix_nullspace,
    matrix_rank,
)
from .hom_twist import is_hom_ideal, twisted_tl


class CellularError(RuntimeError):
    """A cellular axiom failed where it must hold (an implementation bug)."""


class ContractError(ValueError):
    """An operation was called outside the regime where it is defined."""


def _check_nd(n: int, d: int) -> None:
    if not 1 <= n <= 8:
        raise ValueError(f"n must satisfy 1 <= n <= 8, got {n}")
    if not 0 <= 2 * d <= n:
        raise ValueError(f"need 0 <= 2d <= n, got n={n}, d={d}")


# ---------------------------------------------------------------------------
# Cellular datum
# ---------------------------------------------------------------------------

@dataclass
class CellDatum:
    n: int
    lambda_: list[int]
    m_sets: dict[int, list[dg.HalfDiagram]]
    c_map: dict[tuple[int, int, int], int]
    involution: tuple[int, ...]
    coords: dict[int, tuple[int, int, int]] = field(repr=False)

    def basis_index(self, d: int, s: int, t: int) -> int:
        return self.c_map[(d, s, t)]

    def sizes(self) -> list[int]:
        return [len(self.m_sets[d]) for d in self.lambda_]


@lru_cache(maxsize=None)
def cell_datum(n: int) -> CellDatum:
    """Cellular datum of tl_algebra(n), validated at construction."""
    if not 1 <= n <= 8:
        raise ValueError(f"n must satisfy 1 <= n <= 8, got {n}")
    A = tl_algebra(n)
    lam = list(range(n // 2 + 1))
    m_sets = {d: dg.enumerate_half(n, d) for d in lam}
    c_map = {}
    for d in lam:
        for (i, s), (j, t) in itertools.product(enumerate(m_sets[d]), repeat=2):
            c_map[(d, i, j)] = A.index[dg.pair_halves(s, t)]
    if sorted(c_map.values()) != list(range(A.dimension)):
        raise CellularError("C is not a bijection onto the diagram basis")
    coords = {v: k for k, v in c_map.items()}
    for (d, i, j), x in c_map.items():
        if A.involution[x] != c_map[(d, j, i)]:
            raise CellularError(f"iota(C(s,t)) != C(t,s) at d={d}, s={i}, t={j}")
    return CellDatum(n, lam, m_sets, c_map, A.involution, coords)


@dataclass
class CellularityReport:
    n: int
    involution_ok: bool
    left_ok: bool
    star_ok: bool
    t_independent: bool
    tables: dict[tuple[str, int], list[list[DeltaPoly]]]
    failures: list[str]

    @property
    def passed(self) -> bool:
        return self.involution_ok and self.left_ok and self.star_ok and self.t_independent

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "involution": self.involution_ok,
            "left": self.left_ok,
            "star": self.star_ok,
            "t_independent": self.t_independent,
            "failures": self.failures,
            "tables": [
                {"a": a, "d": d, "r": [[str(v) for v in row] for row in table]}
                for (a, d), table in sorted(self.tables.items())
            ],
        }


def _layer_terms(datum: CellDatum, x: AlgebraElement, d: int, failures: list[str], what: str):
    """Terms of x in layer d; terms below d are recorded as failures."""
    out = []
    for k, c in x.items():
        dk, sk, tk = datum.coords[k]
        if dk < d:
            failures.append(f"{what}: term below layer {d}")
        elif dk == d:
            out.append((sk, tk, c))
    return out


def verify_cellularity(datum: CellDatum, algebra: TLAlgebra | None = None,
                       elements: str = "generators") -> CellularityReport:
    """Check the cellular axioms and extract the coefficient tables r_a(s', s).

    For each a (the generators by default, or every basis diagram with
    ``elements="basis"``) and each (d, s, t), ``a C(s,t)`` is expanded; modulo
    diagrams with more than d arcs it must equal sum_s' r_a(s',s) C(s',t)
    with r_a independent of t, and ``C(t,s) iota(a)`` must give the same
    coefficients on C(t,s').
    """
    A = algebra or tl_algebra(datum.n)
    failures: list[str] = []
    involution_ok = all(A.involution[x] == datum.c_map[(d, j, i)] for (d, i, j), x in datum.c_map.items())
    if not involution_ok:
        failures.append("iota(C(s,t)) != C(t,s)")
    if elements == "generators":
        acting = [A.index[dg.generator_diagram(datum.n, i)] for i in range(1, datum.n)]
    elif elements == "basis":
        acting = list(range(A.dimension))
    else:
        raise ValueError(f"unknown element set {elements!r}")

    left_ok = star_ok = t_indep = True
    tables = {}
    for a in acting:
        label = dg.word_of(A.labels[a])
        a_elem = AlgebraElement.basis(a)
        a_star = A.apply_involution(a_elem)
        for d in datum.lambda_:
            size = len(datum.m_sets[d])
            per_t = []
            for t in range(size):
                r = [[ZERO] * size for _ in range(size)]
                for s in range(size):
                    x = AlgebraElement.basis(datum.c_map[(d, s, t)])
                    terms = _layer_terms(datum, A.multiply(a_elem, x), d, failures, f"{label}*C")
                    for sk, tk, c in terms:
                        if tk != t:
                            left_ok = False
                            failures.append(f"{label}*C({s},{t}) changes t at d={d}")
                        r[sk][s] = r[sk][s] + c
                per_t.append(r)
            if any(r != per_t[0] for r in per_t[1:]):
                t_indep = False
                failures.append(f"r_{label} depends on t at d={d}")
            table = per_t[0] if per_t else []
            tables[(label, d)] = table
            # star law: C(t,s) iota(a) = sum_s' r_a(s',s) C(t,s') mod higher layers
            for s, t in itertools.product(range(size), repeat=2):
                x = AlgebraElement.basis(datum.c_map[(d, t, s)])
                got = {}
                for tk, sk, c in _layer_terms(datum, A.multiply(x, a_star), d, failures, f"C*{label}"):
                    if tk != t:
                        star_ok = False
                        failures.append(f"C({t},{s})*iota({label}) changes the left index at d={d}")
                    got[sk] = got.get(sk, ZERO) + c
                want = {sp: table[sp][s] for sp in range(size) if table[sp][s]}
                if {k: v for k, v in got.items() if v} != want:
                    star_ok = False
                    failures.append(f"star law fails for {label} at d={d}, s={s}, t={t}")
    if any("below layer" in f for f in failures):
        left_ok = False
    return CellularityReport(datum.n, involution_ok, left_ok, star_ok, t_indep, tables, failures)


# ---------------------------------------------------------------------------
# Cell modules and Gram matrices
# ---------------------------------------------------------------------------

@dataclass
class CellModule:
    n: int
    d: int
    basis: list[dg.HalfDiagram]
    action: dict[tuple[int, int], dict[int, DeltaPoly]] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def act_basis(self, a: int, v: int) -> dict[int, DeltaPoly]:
        return self.action[(a, v)]

    def act(self, x: AlgebraElement, vec: dict[int, DeltaPoly]) -> dict[int, DeltaPoly]:
        """Left action of an algebra element on a sparse vector."""
        out: dict[int, DeltaPoly] = {}
        for a, c in x.items():
            for v, w in vec.items():
                for k, e in self.action[(a, v)].items():
                    out[k] = out.get(k, ZERO) + c * w * e
        return {k: v for k, v in out.items() if v}

    def matrix(self, a: int) -> list[list[DeltaPoly]]:
        """Matrix of the basis diagram a: column v holds a.v."""
        m = [[ZERO] * self.dimension for _ in range(self.dimension)]
        for v in range(self.dimension):
            for k, c in self.action[(a, v)].items():
                m[k][v] = c
        return m

    def validate(self, samples: int = 500, seed: int = 0) -> list[str]:
        A = tl_algebra(self.n)
        problems = []
        u = A.index[dg.identity_diagram(self.n)]
        for v in range(self.dimension):
            if self.action[(u, v)] != {v: DeltaPoly.constant(1)}:
                problems.append(f"unit does not fix basis vector {v}")
        if A.dimension <= 42:
            triples = itertools.product(range(A.dimension), range(A.dimension), range(self.dimension))
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(A.dimension), rng.randrange(A.dimension), rng.randrange(self.dimension))
                       for _ in range(samples)]
        for a, b, v in triples:
            lhs = self.act(AlgebraElement.basis(a), self.action[(b, v)])
            rhs = self.act(A.product_of_basis(a, b), {v: DeltaPoly.constant(1)})
            if lhs != rhs:
                problems.append(f"a(bv) != (ab)v for {(a, b, v)}")
                break
        return problems


@lru_cache(maxsize=None)
def cell_module(n: int, d: int) -> CellModule:
    """The cell module spanned by half-diagrams with d arcs."""
    _check_nd(n, d)
    A = tl_algebra(n)
    basis = dg.enumerate_half(n, d)
    index = {h: i for i, h in enumerate(basis)}
    action = {}
    for a, D in enumerate(A.labels):
        for v, h in enumerate(basis):
            new, loops = dg.act_on_half(D, h)
            action[(a, v)] = {} if new is None else {index[new]: DELTA ** loops}
    return CellModule(n, d, basis, action)


@dataclass
class GramData:
    d: int
    gram: ExactMatrix
    det: DeltaPoly
    entries: list[list[DeltaPoly]] = field(repr=False)

    def to_json(self) -> dict:
        return {"d": self.d, "gram": [[str(v) for v in r] for r in self.entries], "det": str(self.det)}


def gram_entries(n: int, d: int) -> list[list[DeltaPoly]]:
    halves = dg.enumerate_half(n, d)
    out = []
    for s in halves:
        row = []
        for t in halves:
            loops = dg.pairing(s, t)
            row.append(ZERO if loops is None else DELTA ** loops)
        out.append(row)
    return out


@lru_cache(maxsize=None)
def gram_matrix(n: int, d: int) -> GramData:
    """Gram matrix of the cell form phi^d in the half-diagram basis."""
    _check_nd(n, d)
    entries = gram_entries(n, d)
    G = ExactMatrix(entries, cols=len(entries), field=DELTA_FIELD)
    return GramData(d, G, matrix_det(G).as_poly(), entries)


def _specialised_gram(n: int, d: int, delta0) -> ExactMatrix:
    G = gram_matrix(n, d).gram
    return G if delta0 is None else G.evaluate(as_fraction(delta0))


def radical_dim(n: int, d: int, delta0=None) -> int:
    """Dimension of the radical of phi^d; ``delta0=None`` means generic d."""
    G = _specialised_gram(n, d, delta0)
    return G.rows - matrix_rank(G)


def radical_basis(n: int, d: int, delta0=None) -> list[list]:
    """Exact basis of the radical as coordinate vectors over the half-diagrams."""
    return matrix_nullspace(_specialised_gram(n, d, delta0))


def lambda_zero(n: int, delta0=None) -> list[int]:
    """The d whose form is not identically zero at delta0."""
    return [d for d in range(n // 2 + 1) if not _specialised_gram(n, d, delta0).is_zero()]


def simple_dims(n: int, delta0=None) -> dict[int, int]:
    """dim of the simple head |M(d)| - radical, for d in Lambda^0."""
    return {d: len(dg.enumerate_half(n, d)) - radical_dim(n, d, delta0) for d in lambda_zero(n, delta0)}


def is_semisimple(n: int, delta0=None) -> bool:
    return all(radical_dim(n, d, delta0) == 0 for d in range(n // 2 + 1))


def wedderburn_terms(n: int) -> list[int]:
    return [len(dg.enumerate_half(n, d)) for d in range(n // 2 + 1)]


def wedderburn_check(n: int, delta0=None) -> bool:
    """Sum of dim(C_d)^2 equals Catalan(n); only meaningful when semisimple."""
    if not is_semisimple(n, delta0):
        raise ContractError(f"TL_{n} is not semisimple at delta0={delta0}; no Wedderburn decomposition")
    return sum(k * k for k in wedderburn_terms(n)) == dg.catalan(n)


def decomposition_matrix(n: int, delta0=None) -> ExactMatrix:
    """D for the semisimple regime (identity on Lambda = Lambda^0)."""
    if not is_semisimple(n, delta0):
        raise ContractError("decomposition matrices are only computed in the semisimple regime")
    return ExactMatrix.identity(n // 2 + 1)


def cartan_from_decomposition(D: ExactMatrix, rows: int | None = None, cols: int | None = None) -> ExactMatrix:
    """C = D^t D; ``rows``/``cols`` optionally pin |Lambda| and |Lambda^0|."""
    if (rows is not None and D.rows != rows) or (cols is not None and D.cols != cols):
        raise DimensionError(f"decomposition matrix has shape {D.shape}, expected {(rows, cols)}")
    if D.rows == 0 or D.cols == 0:
        raise DimensionError("empty decomposition matrix")
    return D.transpose() @ D


# ---------------------------------------------------------------------------
# Cell chain
# ---------------------------------------------------------------------------

@dataclass
class ChainReport:
    n: int
    layer_dims: list[int]
    expected_dims: list[int]
    ideal_ok: list[bool]
    hom_ideal_ok: list[bool]
    iota_stable: list[bool]
    equivariant: list[bool]
    bimodule_ok: list[bool]

    @property
    def passed(self) -> bool:
        return (self.layer_dims == self.expected_dims
                and all(self.ideal_ok) and all(self.hom_ideal_ok) and all(self.iota_stable)
                and all(self.equivariant) and all(self.bimodule_ok))

    def to_json(self) -> dict:
        return {"n": self.n, "passed": self.passed, "layer_dims": self.layer_dims,
                "expected_dims": self.expected_dims, "iota_ideal": self.ideal_ok,
                "hom_ideal": self.hom_ideal_ok, "iota_stable": self.iota_stable,
                "equivariant": self.equivariant, "bimodule": self.bimodule_ok}


def verify_cell_chain(n: int, twisted: bool = True) -> ChainReport:
    """Check the filtration J_0 > J_1 > ... by arc count.

    J_d is spanned by diagrams with at least d arcs. Each J_d must be a
    two-sided iota-ideal (and, with ``twisted``, a two-sided Hom-ideal of the
    twisted algebra); the layer J_d / J_{d+1} must have dimension |M(d)|^2,
    its (s, t) coordinates must be swapped by iota, and the left action on
    the layer must act on s alone through the cell module.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"verify_cell_chain supports 1 <= n <= 6, got {n}")
    A = tl_algebra(n)
    datum = cell_datum(n)
    H = twisted_tl(n) if twisted else None
    lam = datum.lambda_
    spans = {d: [AlgebraElement.basis(i) for i in range(A.dimension) if A.labels[i].arcs >= d] for d in lam}
    layer_dims, ideal_ok, hom_ok, stable, equiv, bimod = [], [], [], [], [], []
    for d in lam:
        upper = len(spans[d + 1]) if d + 1 in spans else 0
        layer_dims.append(len(spans[d]) - upper)
        ideal_ok.append(is_iota_ideal(A, spans[d]))
        hom_ok.append(is_hom_ideal(H, spans[d]) if H is not None else True)
        stable.append(all(A.labels[A.involution[x.support()[0]]].arcs >= d for x in spans[d]))
        size = len(datum.m_sets[d])
        ok = all(datum.coords[A.involution[datum.c_map[(d, s, t)]]] == (d, t, s)
                 for s, t in itertools.product(range(size), repeat=2))
        equiv.append(ok)
        M = cell_module(n, d)
        good = True
        for a in range(A.dimension):
            for s, t in itertools.product(range(size), repeat=2):
                prod = A.multiply(AlgebraElement.basis(a), AlgebraElement.basis(datum.c_map[(d, s, t)]))
                layer = {}
                for k, c in prod.items():
                    dk, sk, tk = datum.coords[k]
                    if dk == d:
                        layer[(sk, tk)] = c
                want = {(sk, t): c for sk, c in M.act_basis(a, s).items()}
                if layer != want:
                    good = False
                    break
            if not good:
                break
        bimod.append(good)
    expected = [len(datum.m_sets[d]) ** 2 for d in lam]
    return ChainReport(n, layer_dims, expected, ideal_ok, hom_ok, stable, equiv, bimod)

