import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from gradekit import errors as E
from gradekit import fixtures
from gradekit.algebra import identity_hom, validate_hom
from gradekit.linear import GradedBasis
from gradekit.random_algebras import random_structure_algebra
from gradekit.tensor import (
    GradedLieAlgebra,
    TruncatedTensorAlgebra,
    commutator_lie,
    lie_hom,
    tensor_multiply,
    validate_lie,
    word_degree,
)


def test_word_degrees(S3):
    L = fixtures.abelian_s3()
    assert word_degree((), L.basis) == S3.identity
    assert S3.label(word_degree((0, 1), L.basis)) == "(132)"
    assert S3.label(word_degree((1, 0), L.basis)) == "(123)"


def test_concatenation():
    T = TruncatedTensorAlgebra(fixtures.heisenberg().basis, 3)
    one = T.word(())
    w = T.word((0, 2))
    assert tensor_multiply(T, one, w) == w
    assert T.multiply(T.word((0,)), T.word((1,))) == T.word((0, 1))
    with pytest.raises(E.DepthExceeded):
        T.multiply(T.word((0, 1)), T.word((1, 2)))
    assert len(T) == 1 + 3 + 9 + 27


def test_layers(S3):
    T = TruncatedTensorAlgebra(fixtures.abelian_s3().basis, 2)
    assert T.layer(S3.identity) == ((), (0, 0), (1, 1))


def test_abelian_lie_valid():
    for L in (fixtures.abelian_s3(), fixtures.abelian_c3()):
        rep = validate_lie(L)
        assert rep.lie_valid and rep.nc_graded


def test_commutator_lie_of_s3(S3, QS3):
    L = commutator_lie(QS3)
    assert L.dim == 6 and validate_lie(L).holds
    for g, h in product(range(6), repeat=2):
        assert L.const(g, h) == QS3.e(S3.mul(g, h)) - QS3.e(S3.mul(h, g))


def test_commutative_algebra_gives_abelian():
    P = fixtures.truncated_polynomial_algebra(fixtures.cyclic_group(3), [1, 2], 2)
    assert commutator_lie(P).brackets == {}


def test_antisymmetry_witness():
    B = GradedBasis(fixtures.cyclic_group(1), (0, 0), ("x", "y"))
    L = GradedLieAlgebra(B, {(0, 1): B.e(0)})
    rep = validate_lie(L)
    assert not rep.lie_valid
    assert ("antisymmetry", 0, 1) in rep.witnesses


def test_commutator_needs_associative(QS3):
    from gradekit.functors import DeformationData, deform
    D = deform(QS3, DeformationData.constant(QS3.group, 1, -1))
    with pytest.raises(E.NotAssociative):
        commutator_lie(D)


def test_lie_hom(QS3):
    f = lie_hom(identity_hom(QS3))
    assert validate_hom(f).valid


def test_heisenberg_fixture():
    L = fixtures.heisenberg()
    assert validate_lie(L).holds
    assert L.const(0, 1) == L.e(2) and L.const(1, 0) == L.e(2, -1)


@given(st.integers(0, 10_000), st.integers(0, 3), st.integers(0, 3))
def test_concatenation_is_graded(seed, a, b):
    rng = random.Random(seed)
    S3 = fixtures.s3()
    B = GradedBasis(S3, tuple(rng.randrange(6) for _ in range(2)))
    T = TruncatedTensorAlgebra(B, 6)
    x = tuple(rng.randrange(2) for _ in range(a))
    y = tuple(rng.randrange(2) for _ in range(b))
    v = T.multiply(T.word(x), T.word(y))
    assert v.degree() == S3.mul(word_degree(x, B), word_degree(y, B))


@given(st.integers(0, 10_000))
def test_random_commutator_lie_is_valid(seed):
    A = random_structure_algebra(fixtures.s3(), random.Random(seed), mode="classical", dim=3)
    from gradekit.algebra import validate_algebra
    if validate_algebra(A).associative:
        assert validate_lie(commutator_lie(A)).holds
