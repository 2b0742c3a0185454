"""Exact computations with group-graded algebras, their functors, and
truncated universal enveloping algebras."""

from . import errors
from .errors import GradekitError, ParseError, ValidationError
from .groups import (
    GroupHom,
    GroupTable,
    NormalSubgroup,
    build_group,
    build_hom,
    cyclic_group,
    dihedral_group,
    normal_subgroup,
    quotient_group,
    symmetric_group,
    trivial_group,
)
from .linear import (
    GradedBasis,
    Membership,
    SubspaceBasis,
    Vector,
    project_component,
    row_reduce,
    span_membership,
)
from .algebra import (
    CLASSICAL,
    NONCOMMUTATIVE,
    GradedAlgebra,
    GradedHom,
    check_grading,
    find_unit,
    finite_inverse_limit,
    group_algebra,
    homogeneous_inverse,
    inverse_feasibility,
    validate_algebra,
    validate_hom,
)
from .functors import (
    DeformationData,
    adjunction_phi_roundtrip,
    adjunction_psi_roundtrip,
    coarsen,
    deform,
    group_ring_lift,
    induce,
    opposite,
    restrict,
)
from .tensor import (
    GradedLieAlgebra,
    TruncatedTensorAlgebra,
    commutator_lie,
    validate_lie,
    word_degree,
)
from .enveloping import (
    check_ideal_graded,
    ideal_truncation,
    pbw_monomials,
    pbw_verify,
    straighten,
    universal_property_check,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL",
    "DeformationData",
    "GradedAlgebra",
    "GradedBasis",
    "GradedHom",
    "GradedLieAlgebra",
    "GradekitError",
    "GroupHom",
    "GroupTable",
    "Membership",
    "NONCOMMUTATIVE",
    "NormalSubgroup",
    "ParseError",
    "SubspaceBasis",
    "TruncatedTensorAlgebra",
    "ValidationError",
    "Vector",
    "adjunction_phi_roundtrip",
    "adjunction_psi_roundtrip",
    "build_group",
    "build_hom",
    "check_grading",
    "check_ideal_graded",
    "coarsen",
    "commutator_lie",
    "cyclic_group",
    "deform",
    "dihedral_group",
    "errors",
    "find_unit",
    "finite_inverse_limit",
    "group_algebra",
    "group_ring_lift",
    "homogeneous_inverse",
    "ideal_truncation",
    "induce",
    "inverse_feasibility",
    "normal_subgroup",
    "opposite",
    "pbw_monomials",
    "pbw_verify",
    "project_component",
    "quotient_group",
    "restrict",
    "row_reduce",
    "span_membership",
    "straighten",
    "symmetric_group",
    "trivial_group",
    "universal_property_check",
    "validate_algebra",
    "validate_hom",
    "validate_lie",
    "word_degree",
]
