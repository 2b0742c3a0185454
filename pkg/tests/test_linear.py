from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gradekit import errors as E
from gradekit.groups import cyclic_group
from gradekit.linear import (
    GradedBasis,
    Vector,
    nullspace,
    project_component,
    row_reduce,
    scalar,
    solve,
    span_membership,
)


def test_scalar_is_exact():
    assert scalar("1/3") == Fraction(1, 3)
    with pytest.raises(TypeError):
        scalar(0.5)


def test_project_component(S3, QS3):
    B = QS3.basis
    v = B.e(0, 3) + B.e(S3.index("(12)"), 2)
    assert project_component(v, S3.identity) == B.e(0, 3)
    assert project_component(B.zero(), 4) == B.zero()


def test_project_empty_fiber():
    C3 = cyclic_group(3)
    B = GradedBasis(C3, (0, 0))
    v = B.e(0) + B.e(1, 7)
    assert not project_component(v, 1)


def test_membership_in():
    B = GradedBasis(cyclic_group(1), (0, 0))
    x1, x2 = B.e(0), B.e(1)
    m = span_membership([x1, x2], x1 + x2 * 5)
    assert m.member and list(m.coefficients) == [1, 5]


def test_membership_not_in():
    B = GradedBasis(cyclic_group(1), (0, 0))
    m = span_membership([B.e(0) - B.e(1)], B.e(0))
    assert not m.member
    assert m.witness in (0, 1)
    assert m.residual[m.witness] != 0


def test_vector_algebra():
    B = GradedBasis(cyclic_group(2), (0, 1, 1))
    v = B.e(0, 2) + B.e(2, "1/2")
    assert v - v == B.zero()
    assert (v * 0) == B.zero()
    assert v.support() == (0, 2)
    assert not v.is_homogeneous() and v.degree() is None
    assert (B.e(1) + B.e(2)).degree() == 1


def test_mixed_bases_rejected():
    B1 = GradedBasis(cyclic_group(2), (0, 1))
    B2 = GradedBasis(cyclic_group(2), (1, 1))
    with pytest.raises(E.BasisMismatch):
        B1.e(0) + B2.e(0)


def test_solve_and_nullspace():
    cols = [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(1), 1: Fraction(-1)}]
    x = solve(cols, {0: Fraction(2)})
    assert x == [1, 1]
    assert solve([{0: Fraction(1)}], {1: Fraction(1)}) is None
    ns = nullspace([{0: Fraction(1)}, {0: Fraction(2)}])
    assert len(ns) == 1


coeff = st.integers(-3, 3)
vecs = st.lists(st.lists(coeff, min_size=4, max_size=4), min_size=0, max_size=5)


@given(vecs, st.lists(coeff, min_size=4, max_size=4))
def test_membership_certificates(rows, q):
    B = GradedBasis(cyclic_group(1), (0,) * 4)
    gens = [Vector(B, enumerate(r)) for r in rows]
    query = Vector(B, enumerate(q))
    m = span_membership(gens, query)
    if m.member:
        total = B.zero()
        for c, g in zip(m.coefficients, gens):
            total = total + g * c
        assert total == query
    else:
        # the residual is outside the span but differs from the query by a span element
        assert not span_membership(gens, m.residual).member


@given(vecs)
def test_rref_rank_matches_span(rows):
    B = GradedBasis(cyclic_group(1), (0,) * 4)
    gens = [Vector(B, enumerate(r)) for r in rows]
    S = row_reduce(gens, B)
    for g in gens:
        assert S.contains(g).member
    for r in S.rows:
        assert span_membership(gens, r).member
    assert len(S.pivots) == S.rank == len(S.rows)
