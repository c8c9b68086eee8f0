from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlhom.coeff import (
    DELTA,
    DELTA_FIELD,
    ONE,
    RATIONAL,
    DeltaPoly,
    DeltaRational,
    DimensionError,
    ExactMatrix,
    Span,
    format_poly,
    matrix_det,
    matrix_nullspace,
    matrix_rank,
    parse_poly,
    poly_eval,
)

d = DELTA

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7)
polys = st.dictionaries(st.integers(0, 5), fractions, max_size=4).map(DeltaPoly)


def leibniz_det(rows):
    """Determinant by the permutation expansion; independent of elimination."""
    n = len(rows)
    total = DeltaPoly()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i in range(n):
            term = term * DeltaPoly.coerce(rows[i][perm[i]])
        total = total - term if inv % 2 else total + term
    return total


def test_poly_arithmetic_basics():
    p = d ** 3 - 2 * d
    assert p.degree == 3
    assert p.coefficient(1) == -2
    assert (d + 1) * (d - 1) == d ** 2 - 1
    assert poly_eval(p, 2) == 4
    assert poly_eval(DeltaPoly(), 7) == 0
    assert p(Fraction(1, 2)) == Fraction(1, 8) - 1


def test_poly_division():
    q, r = (d ** 3 - 2 * d).divmod(d - 1)
    assert q * (d - 1) + r == d ** 3 - 2 * d
    assert r == DeltaPoly.constant(-1)
    assert (d ** 4 - d ** 2).exact_div(d ** 2) == d ** 2 - 1


def test_format_examples():
    assert format_poly(d ** 3 - 2 * d) == "d^3 - 2*d"
    assert format_poly(DeltaPoly()) == "0"
    assert parse_poly("d^3 - 2*d") == d ** 3 - 2 * d
    assert parse_poly("1/2*d + 3") == DeltaPoly({1: Fraction(1, 2), 0: 3})


@given(polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys, polys, fractions)
def test_evaluation_is_a_ring_map(a, b, x):
    assert poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x)
    assert poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x)


@given(polys, polys.filter(bool))
def test_rational_functions_cancel(a, b):
    r = DeltaRational(a, b) * DeltaRational(b)
    assert r.as_poly() == a


def test_rank_examples():
    assert matrix_rank(ExactMatrix([[1, 1], [1, 1]])) == 1
    assert matrix_rank(ExactMatrix([[d, 1], [1, d]])) == 2
    assert matrix_rank(ExactMatrix([[d, 1], [1, d]]).evaluate(1)) == 1


def test_det_examples():
    assert matrix_det(ExactMatrix([[d, 1], [1, d]])).as_poly() == d ** 2 - 1
    tri = [[d, 1, 0], [1, d, 1], [0, 1, d]]
    assert matrix_det(ExactMatrix(tri)).as_poly() == d ** 3 - 2 * d
    assert leibniz_det(tri) == d ** 3 - 2 * d
    assert matrix_det(ExactMatrix.identity(4)) == 1


def test_nullspace_examples():
    ns = matrix_nullspace(ExactMatrix([[1, 1], [1, 1]]))
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + v[1] == 0 and v[1] != 0
    assert matrix_nullspace(ExactMatrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])) == []


small_mats = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=60)
@given(small_mats)
def test_det_matches_leibniz(rows):
    assert DeltaPoly.coerce(matrix_det(ExactMatrix(rows))) == leibniz_det(rows)


@settings(max_examples=60)
@given(small_mats)
def test_rank_nullity(rows):
    M = ExactMatrix(rows)
    ns = matrix_nullspace(M)
    assert matrix_rank(M) + len(ns) == M.cols
    for v in ns:
        assert all(sum(Fraction(r[j]) * v[j] for j in range(M.cols)) == 0 for r in rows)


def test_delta_matrix_field_and_product():
    M = ExactMatrix([[d, 1], [1, d]])
    assert M.field == DELTA_FIELD
    assert ExactMatrix([[1, 2]]).field == RATIONAL
    P = M @ ExactMatrix.identity(2, DELTA_FIELD)
    assert P == M
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2]]) @ ExactMatrix([[1, 2]])


def test_span_membership():
    S = Span(3, RATIONAL, [[1, 0, 1], [0, 1, 1]])
    assert S.rank == 2
    assert S.contains([1, 1, 2])
    assert not S.contains([0, 0, 1])
    assert not S.add([2, 2, 4])
    assert S.add([0, 0, 1]) and S.rank == 3
