"""Standard fixtures: small groups, their group algebras, deformations and
Lie algebras.  ``python -m gradekit.fixtures [DIR]`` regenerates the JSON
files shipped in ``gradekit/data``.
"""

from __future__ import annotations

import os
import sys
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement

from .algebra import GradedAlgebra, GradedHom, group_algebra
from .functors import DeformationData, coarsen, deform, group_algebra_hom
from .groups import (
    build_hom,
    cyclic_group,
    dihedral_group,
    normal_subgroup,
    quotient_group,
    symmetric_group,
    trivial_group,
)
from .linear import GradedBasis
from .tensor import GradedLieAlgebra, abelian_lie, commutator_lie


def data_path(name: str = "") -> str:
    return str(resources.files("gradekit") / "data" / name)


# -- groups --------------------------------------------------------------

def s3():
    return symmetric_group(3)


def c3_into_s3():
    """C3 -> S3 sending the generator to the 3-cycle (123)."""
    S3, C3 = s3(), cyclic_group(3)
    r = S3.index("(123)")
    return build_hom(C3, S3, [S3.identity, r, S3.mul(r, r)])


def a3():
    S3 = s3()
    return normal_subgroup(S3, [S3.index(x) for x in ("e", "(123)", "(132)")])


def s3_mod_a3():
    """``(S3/A3, pi)``."""
    return quotient_group(s3(), a3())


# -- algebras ------------------------------------------------------------

def s3_nc_counterexample() -> GradedAlgebra:
    """x in degree (12), y in degree (13), z in degree e, x*y = z."""
    S3 = s3()
    basis = GradedBasis(S3, (S3.index("(12)"), S3.index("(13)"), S3.identity), ("x", "y", "z"))
    return GradedAlgebra(basis, {(0, 1): basis.e(2)})


def nilpotent_c2() -> GradedAlgebra:
    """Q[t]/(t^2) with t in the odd fiber of C2."""
    C2 = cyclic_group(2)
    basis = GradedBasis(C2, (0, 1), ("1", "t"))
    return GradedAlgebra(basis, {(0, 0): basis.e(0), (0, 1): basis.e(1), (1, 0): basis.e(1)})


def truncated_polynomial_algebra(group, var_degrees, max_degree: int, names=None) -> GradedAlgebra:
    """Commutative Q[x_1..x_r] modulo all monomials of total degree > max_degree."""
    r = len(var_degrees)
    names = names or [f"s{k + 1}" for k in range(r)]
    monos = [m for k in range(max_degree + 1) for m in combinations_with_replacement(range(r), k)]
    index = {m: i for i, m in enumerate(monos)}
    degs = tuple(group.prod(var_degrees[k] for k in m) for m in monos)
    labels = tuple("*".join(names[k] for k in m) or "1" for m in monos)
    basis = GradedBasis(group, degs, labels)
    consts = {}
    for i, m in enumerate(monos):
        for j, n in enumerate(monos):
            p = tuple(sorted(m + n))
            if len(p) <= max_degree:
                consts[(i, j)] = basis.e(index[p])
    return GradedAlgebra(basis, consts)


# -- Lie algebras --------------------------------------------------------

def abelian_s3() -> GradedLieAlgebra:
    """Abelian rank 2 with deg x = (12), deg y = (13)."""
    S3 = s3()
    return abelian_lie(GradedBasis(S3, (S3.index("(12)"), S3.index("(13)")), ("x", "y")))


def abelian_c3() -> GradedLieAlgebra:
    return abelian_lie(GradedBasis(cyclic_group(3), (1, 1), ("x", "y")))


def heisenberg() -> GradedLieAlgebra:
    """[x1, x2] = x3 graded by C3: x1, x2 in degree 1, x3 in degree 2."""
    basis = GradedBasis(cyclic_group(3), (1, 1, 2), ("x1", "x2", "x3"))
    return GradedLieAlgebra(basis, {(0, 1): basis.e(2), (1, 0): basis.e(2, -1)})


# -- the shipped data directory -----------------------------------------

def fixture_files() -> dict:
    """Mapping file name -> JSON object for every shipped fixture."""
    from .files import (
        algebra_to_json,
        deformation_to_json,
        group_hom_to_json,
        group_to_json,
        hom_to_json,
        subgroup_to_json,
    )

    S3, C3 = s3(), cyclic_group(3)
    Q, pi = s3_mod_a3()
    theta = c3_into_s3()
    A = group_algebra(S3)
    AC3 = group_algebra(C3)
    AQ = group_algebra(Q)
    half = Fraction(1, 2)
    d_comm = DeformationData.constant(S3, 1, -1)
    d_anti = DeformationData.constant(S3, 1, 1)
    d_half = DeformationData.constant(S3, half, half)

    out = {
        "c1.json": group_to_json(trivial_group()),
        "c2.json": group_to_json(cyclic_group(2)),
        "c3.json": group_to_json(C3),
        "s3.json": group_to_json(S3),
        "d4.json": group_to_json(dihedral_group(4)),
        "s3-mod-a3.json": group_to_json(Q),
        "a3.json": subgroup_to_json(a3(), "s3.json"),
        "c3-to-s3.json": group_hom_to_json(theta, "c3.json", "s3.json"),
        "s3-to-s3-mod-a3.json": group_hom_to_json(pi, "s3.json", "s3-mod-a3.json"),
        "s3-group-algebra.json": algebra_to_json(A, "s3.json"),
        "c3-group-algebra.json": algebra_to_json(AC3, "c3.json"),
        "s3-mod-a3-group-algebra.json": algebra_to_json(AQ, "s3-mod-a3.json"),
        "s3-coarsened.json": algebra_to_json(coarsen(A, pi), "s3-mod-a3.json"),
        "s3-commutator.json": algebra_to_json(deform(A, d_comm), "s3.json"),
        "s3-anticommutator.json": algebra_to_json(deform(A, d_anti), "s3.json"),
        "s3-half.json": algebra_to_json(deform(A, d_half), "s3.json"),
        "s3-nc-counterexample.json": algebra_to_json(s3_nc_counterexample(), "s3.json"),
        "commutator-s3.deformation.json": deformation_to_json(d_comm, "s3.json"),
        "anticommutator-s3.deformation.json": deformation_to_json(d_anti, "s3.json"),
        "half-s3.deformation.json": deformation_to_json(d_half, "s3.json"),
        "c3-into-s3.hom.json": hom_to_json(
            group_algebra_hom(theta, AC3, A), "c3-group-algebra.json", "s3-group-algebra.json"),
        "abelian-s3.json": algebra_to_json(abelian_s3(), "s3.json"),
        "abelian-c3.json": algebra_to_json(abelian_c3(), "c3.json"),
        "heisenberg.json": algebra_to_json(heisenberg(), "c3.json"),
        "s3-lie.json": algebra_to_json(commutator_lie(A), "s3.json"),
        "diagonal.diagram.json": {
            "objects": {"alpha": "s3-group-algebra.json", "beta": "s3-group-algebra.json"},
            "maps": [{"lower": "alpha", "upper": "beta", "map": "s3-identity.hom.json"}],
        },
        "s3-identity.hom.json": hom_to_json(
            GradedHom(A, A, [A.basis.e(i) for i in range(A.dim)]),
            "s3-group-algebra.json", "s3-group-algebra.json"),
    }
    return out


def write_fixtures(directory: str) -> list:
    from .files import write_json

    os.makedirs(directory, exist_ok=True)
    names = []
    for name, obj in sorted(fixture_files().items()):
        write_json(os.path.join(directory, name), obj)
        names.append(name)
    return names


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else data_path()
    for n in write_fixtures(target):
        print(n)
