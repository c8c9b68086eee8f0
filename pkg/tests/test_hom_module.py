from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from tlhom import hom_module as hm
from tlhom.algebra import AlgebraElement, tl_algebra
from tlhom.cellular import cell_module, radical_basis
from tlhom.coeff import DELTA
from tlhom.hom_twist import MorphismError, twisted_tl

from constructions import random_vector, run_random_construction

d = DELTA


def left(n, k, delta0=None):
    return hm.LeftModule.from_cell_module(cell_module(n, k), delta0)


def arcs_index(V, arcs):
    return [h.arcs for h in V.labels].index(arcs)


# -- the axiom ----------------------------------------------------------------

def test_regular_module_tl3():
    V = hm.regular_hom_module(twisted_tl(3))
    res = hm.check_hom_module(V)
    assert res.passed and res.checked == 125


def test_functor_on_cell_modules_tl3():
    res = hm.check_hom_module(hm.cell_hom_module(3, 1))
    assert res.passed and res.checked == 50


@pytest.mark.parametrize("k,count", [(0, 196), (1, 588), (2, 392)])
def test_functor_on_cell_modules_tl4(k, count):
    V = hm.cell_hom_module(4, k)
    assert V.dimension == cell_module(4, k).dimension
    res = hm.check_hom_module(V)
    assert res.passed and res.checked == count


def test_axiom_matches_direct_brute_force():
    """alpha_V(v.a).b = v.alpha(a*b), with a*b = iota(ab), from dense matrices."""
    A = tl_algebra(3)
    M = left(3, 1)
    V = hm.functor_module(M)
    for a, b in itertools.product(range(5), repeat=2):
        # v.x = iota(x) v on F(M)
        ab_star = A.apply_involution(A.multiply(AlgebraElement.basis(a), AlgebraElement.basis(b)))
        alpha_ab = A.apply_involution(ab_star)  # the twist is iota again
        for v in range(M.dimension):
            e = V.basis_vector(v)
            lhs = V.act(V.alpha(V.act(e, a)), b)
            rhs = M.act_element(A.apply_involution(alpha_ab), e)
            assert lhs == rhs


def test_trivial_module_n1():
    V = hm.cell_hom_module(1, 0)
    assert V.dimension == 1 and hm.check_hom_module(V).passed


def test_corrupted_action_is_caught():
    V = hm.cell_hom_module(3, 1)
    action = [[row[:] for row in m] for m in V.action]
    a = next(a for a in range(5) if any(x for row in action[a] for x in row) and a != tl_algebra(3).unit.support()[0])
    i, j = next((i, j) for i in range(2) for j in range(2) if action[a][i][j])
    action[a][i][j] = 0
    W = hm.HomModule(V.algebra, 2, action, V.alpha_v, verify=False)
    assert not hm.check_hom_module(W).passed
    with pytest.raises(hm.ModuleError):
        hm.HomModule(V.algebra, 2, action, V.alpha_v)


def test_sampled_mode_is_reproducible():
    V = hm.cell_hom_module(4, 1)
    a = hm.check_hom_module(V, mode="sampled", samples=40, seed=3)
    b = hm.check_hom_module(V, mode="sampled", samples=40, seed=3)
    assert a.to_json() == b.to_json() and a.passed


def test_displayed_computations_tl4():
    A = tl_algebra(4)
    V = hm.cell_hom_module(4, 1)
    H = V.algebra
    v23, v12 = arcs_index(V, ((2, 3),)), arcs_index(V, ((1, 2),))
    # acting on the right flips the diagram: arc(2,3) . e2e3 = arc(2,3)
    e23 = A.word("e2*e3").support()[0]
    assert V.act(V.basis_vector(v23), e23) == V.basis_vector(v23)
    # both sides of the axiom on (a, b, v) = (e3, e2, arc(2,3)) are d * arc(1,2)
    a, b = A.word("e3").support()[0], A.word("e2").support()[0]
    e = V.basis_vector(v23)
    lhs = V.act(V.alpha(V.act(e, a)), b)
    rhs = V.act_element(e, H.twist(H.product_of_basis(a, b)))
    target = [x * d for x in V.basis_vector(v12)]
    assert lhs == rhs == target


def test_left_module_validation():
    with pytest.raises(hm.ModuleError):
        hm.LeftModule(tl_algebra(3), 2, [[[1, 0], [0, 1]]] * 5)


# -- submodules, morphisms, constructions ---------------------------------------

def test_trivial_images():
    V = hm.cell_hom_module(4, 1)
    ident = [V.basis_vector(i) for i in range(3)]
    assert hm.morphism_image(ident, V, V).dimension == 3
    zero = [[0] * 3 for _ in range(3)]
    assert hm.morphism_image(zero, V, V).dimension == 0
    with pytest.raises(MorphismError):
        hm.morphism_image([[1, 0, 0], [0, 0, 0], [0, 0, 0]], V, V)


def test_preimage_of_zero_is_kernel():
    V = hm.cell_hom_module(4, 1)
    W = hm.direct_sum([V, V])
    # phi(u, w) = (d u - d w, u - w): rank 3, kernel the diagonal copy
    n = 3
    phi = [[0] * 6 for _ in range(6)]
    for i in range(n):
        phi[i][i], phi[i][n + i] = d, -d
        phi[n + i][i], phi[n + i][n + i] = 1, -1
    K = hm.kernel(phi, W, W)
    assert K.dimension == 3 and K.is_closed()
    pre = hm.morphism_preimage(phi, hm.zero_submodule(W), W)
    assert pre == K
    for i in range(n):
        diag = [0] * 6
        diag[i] = diag[n + i] = 1
        assert K.contains(diag)
    img = hm.morphism_image(phi, W, W)
    assert img.dimension == 3 and img.is_closed()


def test_sum_and_intersection_identities():
    V = hm.regular_hom_module(twisted_tl(3), delta0=1)
    U = hm.generated_submodule(V, [V.basis_vector(0)])
    assert 0 < U.dimension < 5
    assert hm.submodule_intersection([U, U]) == U
    assert hm.submodule_sum([U, hm.zero_submodule(V)]) == U
    W = hm.direct_sum([V, V])
    with pytest.raises(hm.ModuleError):
        hm.submodule_sum([U, hm.zero_submodule(W)])


def test_radical_intersections():
    for k in (1, 2):
        V = hm.cell_hom_module(4, k, delta0=1)
        R = hm.HomSubmodule(V, radical_basis(4, k, 1))
        assert R.dimension == (1 if k == 2 else 0)
        for containing in (R, hm.whole_module(V), hm.submodule_sum([R, hm.generated_submodule(V, [V.basis_vector(0)])])):
            assert hm.submodule_intersection([R, containing]) == R


def test_direct_sums():
    mods = [hm.cell_hom_module(4, k) for k in range(3)]
    S = hm.direct_sum(mods)
    assert S.dimension == 6
    S3 = hm.direct_sum([hm.cell_hom_module(3, 0), hm.cell_hom_module(3, 1)])
    assert hm.check_hom_module(S3).passed and hm.check_hom_module(S3).checked == 75
    V = hm.cell_hom_module(4, 1)
    Z = hm.quotient_module(V, hm.whole_module(V)).module
    VZ = hm.direct_sum([V, Z])
    assert VZ.dimension == 3 and VZ.action == V.action and VZ.alpha_v == V.alpha_v
    with pytest.raises(hm.ModuleError):
        hm.direct_sum([V, hm.cell_hom_module(3, 1)])


def test_quotients():
    V = hm.cell_hom_module(4, 1)
    Q0 = hm.quotient_module(V, hm.zero_submodule(V))
    assert Q0.module.dimension == 3 and Q0.module.action == V.action
    assert hm.quotient_module(V, hm.whole_module(V)).module.dimension == 0
    V2 = hm.cell_hom_module(4, 2, delta0=1)
    R = hm.HomSubmodule(V2, radical_basis(4, 2, 1))
    Q = hm.quotient_module(V2, R).module
    assert Q.dimension == 1 and hm.is_hom_simple(Q) is True
    with pytest.raises(hm.ModuleError):
        hm.HomSubmodule(V2, [V2.basis_vector(0)])


# -- the seeded property suite for images, preimages, sums, intersections, quotients

SEEDS = range(60)


@pytest.mark.parametrize("seed", SEEDS)
def test_random_constructions(seed):
    assert run_random_construction(seed) == []


# -- the functor on morphisms ---------------------------------------------------

def test_identity_morphism_passes():
    M = left(4, 1)
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    f = hm.functor_on_module_morphism(ident, M, M)
    assert f.matrix == hm.functor_module(M).alpha_v


def test_morphism_spaces_tl3():
    mods = [left(3, 0), left(3, 1)]
    dims = [[len(hm.left_morphism_space(M, N)) for N in mods] for M in mods]
    assert dims == [[1, 0], [0, 1]]


def test_faithfulness_tl3():
    mods = [left(3, 0), left(3, 1)]
    for M, N in itertools.product(mods, repeat=2):
        rep = hm.faithfulness_probe(M, N)
        assert rep.injective and rep.image_rank == rep.left_dim <= rep.hom_dim


def test_faithfulness_non_semisimple():
    mods = [left(3, 0, 1), left(3, 1, 1)]
    for M, N in itertools.product(mods, repeat=2):
        assert hm.faithfulness_probe(M, N).injective


def test_non_morphism_is_rejected():
    M = left(3, 1)
    with pytest.raises(MorphismError):
        hm.functor_on_module_morphism([[1, 0], [0, 0]], M, M)


@pytest.mark.parametrize("n,k,delta0", [(3, 1, None), (3, 1, 1), (4, 1, None), (4, 2, 1), (4, 1, 2)])
def test_submodule_lattices_agree(n, k, delta0):
    rng = random.Random(n * 100 + k)
    M = left(n, k, delta0)
    V = hm.functor_module(M)
    spans = [[random_vector(rng, M.dimension)] for _ in range(6)]
    if delta0 is not None:
        spans.append(radical_basis(n, k, delta0))
    for vecs in spans:
        hom_closed = hm.HomSubmodule(V, vecs, check=False).is_closed()
        assert hm.is_left_submodule(M, vecs) == hom_closed


# -- simplicity ------------------------------------------------------------------

def test_simplicity_predicates():
    assert hm.is_hom_simple(hm.cell_hom_module(4, 1)) is True
    assert hm.is_hom_simple(hm.cell_hom_module(4, 2, 1)) is False
    assert hm.is_hom_semisimple(hm.cell_hom_module(4, 2, 1)) is False
    assert hm.is_hom_semisimple(hm.cell_hom_module(4, 2, 2)) is True
    reg = twisted_tl(3)
    assert hm.is_hom_semisimple(hm.regular_hom_module(reg, 2)) is True
    assert hm.is_hom_semisimple(hm.regular_hom_module(reg, 1)) is False
    big = hm.direct_sum([hm.cell_hom_module(4, 1), hm.cell_hom_module(4, 1), hm.cell_hom_module(4, 0)])
    assert hm.is_hom_simple(big) is None and hm.is_hom_semisimple(big) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cell_modules_hom_simple_generically(n):
    for k in range(n // 2 + 1):
        assert hm.is_hom_simple(hm.cell_hom_module(n, k)) is True


def test_module_json():
    j = hm.cell_hom_module(3, 1).to_json()
    assert j["dimension"] == 2 and j["alpha"] == [["1", "0"], ["0", "1"]]
    assert j["action"]["0"] == [["d", "1"], ["0", "0"]]
