from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from gradekit import errors as E
from gradekit.groups import (
    build_group,
    build_hom,
    compose_hom,
    cyclic_group,
    dihedral_group,
    direct_product,
    identity_hom,
    kernel,
    normal_subgroup,
    quotient_group,
    symmetric_group,
    trivial_group,
)


def test_c2_table():
    G = build_group([[0, 1], [1, 0]])
    assert G.order == 2 and G.identity == 0
    assert G.inv(1) == 1


def test_s3_from_permutation_composition():
    perms = list(permutations(range(3)))
    # composition (p o q)(x) = p[q[x]], an oracle independent of the library
    table = [[perms.index(tuple(p[q[x]] for x in range(3))) for q in perms] for p in perms]
    G = build_group(table, name="S3")
    assert G.order == 6 and G.identity == 0
    assert not G.is_abelian()
    assert G.table == symmetric_group(3).table


def test_no_inverse():
    with pytest.raises(E.NoInverse):
        build_group([[0, 1], [1, 1]])


def test_not_closed_and_not_associative():
    with pytest.raises(E.NotClosed):
        build_group([[0, 2], [2, 0]])
    # a Latin square with identity 0 that is not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(E.NotAssociative) as exc:
        build_group(bad)
    a, b, c = exc.value.witness
    assert bad[bad[a][b]][c] != bad[a][bad[b][c]]


def test_labels(S3):
    assert [S3.label(g) for g in range(6)] == ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]
    assert S3.mul(S3.index("(12)"), S3.index("(13)")) == S3.index("(132)")
    assert S3.mul(S3.index("(13)"), S3.index("(12)")) == S3.index("(123)")


def test_hom_kinds(S3):
    assert identity_hom(S3).kind == "iso"
    from gradekit.fixtures import c3_into_s3
    theta = c3_into_s3()
    assert theta.kind == "mono"
    for g, h in product(range(3), repeat=2):
        assert theta(theta.domain.mul(g, h)) == S3.mul(theta(g), theta(h))
    C2 = cyclic_group(2)
    assert build_hom(C2, C2, [0, 0]).kind == "general"


def test_not_homomorphism(S3):
    C2 = cyclic_group(2)
    with pytest.raises(E.NotHomomorphism):
        build_hom(C2, S3, [0, S3.index("(123)")])


def test_quotient_by_a3(S3):
    N = normal_subgroup(S3, [0, 3, 4])
    Q, pi = quotient_group(S3, N)
    assert Q.order == 2
    assert pi.kind == "epi"
    assert {g for g in range(6) if pi(g) == Q.identity} == {0, 3, 4}


def test_quotient_extremes(S3):
    Q, pi = quotient_group(S3, normal_subgroup(S3, [0]))
    assert Q.order == 6 and pi.kind == "iso"
    Q, pi = quotient_group(S3, normal_subgroup(S3, range(6)))
    assert Q.order == 1


def test_subgroup_errors(S3):
    with pytest.raises(E.NotSubgroup):
        normal_subgroup(S3, [0, 3])
    with pytest.raises(E.NotNormal) as exc:
        normal_subgroup(S3, [0, S3.index("(12)")])
    g, n = exc.value.witness
    assert S3.prod([g, n, S3.inv(g)]) not in (0, S3.index("(12)"))


def test_kernel_of_sign(S3):
    Q, pi = quotient_group(S3, normal_subgroup(S3, [0, 3, 4]))
    assert sorted(kernel(pi).members) == [0, 3, 4]


def test_fixture_groups():
    assert dihedral_group(4).order == 8
    assert trivial_group().order == 1
    P = direct_product(cyclic_group(2), cyclic_group(3))
    assert P.order == 6 and P.is_abelian()


groups = st.sampled_from([symmetric_group(3), dihedral_group(4), cyclic_group(5)])


@given(groups, st.data())
def test_group_axioms(G, data):
    a, b, c = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity == G.mul(G.inv(a), a)
    assert G.inv(G.mul(a, b)) == G.mul(G.inv(b), G.inv(a))


@given(st.data())
def test_hom_composition_law(data):
    S3 = symmetric_group(3)
    Q, pi = quotient_group(S3, normal_subgroup(S3, [0, 3, 4]))
    g = data.draw(st.integers(0, 5))
    assert compose_hom(pi, identity_hom(S3))(g) == pi(g)
