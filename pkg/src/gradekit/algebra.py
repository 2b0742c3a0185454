"""Structure-constant algebras with a degree map.

A :class:`GradedAlgebra` stores the product of every pair of basis
elements.  Gradings are not assumed; :func:`check_grading` decides
whether the degree map is a classical grading (``A_g A_h`` inside
``A_gh``) or a noncommutative one (``A_g A_h`` inside ``A_gh + A_hg``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Mapping, Optional, Sequence

from .errors import (
    BasisMismatch,
    InvalidHom,
    NotHomogeneous,
    NotInverseSystem,
    NotUnital,
    NotValidated,
)
from .groups import GroupTable
from .linear import (
    GradedBasis,
    SubspaceBasis,
    Vector,
    _axpy,
    nullspace,
    project_component,
    same_basis,
    solve,
)

CLASSICAL = "classical"
NONCOMMUTATIVE = "noncommutative"

_MODES = {"classical": CLASSICAL, "noncommutative": NONCOMMUTATIVE, "nc": NONCOMMUTATIVE}


def _mode(mode: str) -> str:
    try:
        return _MODES[mode]
    except KeyError:
        raise ValueError(f"unknown grading mode {mode!r}") from None


class _StructureConstants:
    """Shared storage for bilinear products given on a basis."""

    _table_name = "constants"

    def __init__(self, basis: GradedBasis, table=None):
        self.basis = basis
        clean = {}
        items = table.items() if isinstance(table, Mapping) else (table or ())
        n = basis.size
        for (i, j), v in items:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"product index {(i, j)} out of range for size {n}")
            if not isinstance(v, Vector):
                v = Vector(basis, v)
            elif not same_basis(v.basis, basis):
                raise BasisMismatch(f"product {(i, j)} is not over the algebra basis")
            if v:
                clean[(i, j)] = v
        self._table = dict(sorted(clean.items()))
        self.flags: Dict[str, bool] = {}

    @property
    def dim(self) -> int:
        return self.basis.size

    @property
    def group(self) -> GroupTable:
        return self.basis.group

    def const(self, i: int, j: int) -> Vector:
        v = self._table.get((i, j))
        return v if v is not None else Vector(self.basis)

    def product(self, x: Vector, y: Vector) -> Vector:
        if not (same_basis(x.basis, self.basis) and same_basis(y.basis, self.basis)):
            raise BasisMismatch("operands are not over the algebra basis")
        acc = {}
        table = self._table
        for i, a in x.coeffs.items():
            for j, b in y.coeffs.items():
                v = table.get((i, j))
                if v is not None:
                    _axpy(acc, a * b, v.coeffs)
        return Vector._raw(self.basis, acc)

    def e(self, i: int, c=1) -> Vector:
        return self.basis.e(i, c)

    def vector(self, coeffs=None) -> Vector:
        return Vector(self.basis, coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.basis == other.basis and self._table == other._table

    def __hash__(self):
        return hash((self.basis.degrees, len(self._table)))

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, group={self.group.name})"


class GradedAlgebra(_StructureConstants):
    """Finite-dimensional algebra: basis, degree map and structure constants.

    ``constants`` maps ``(i, j)`` to the vector ``b_i * b_j``; missing
    pairs are zero products.
    """

    @property
    def constants(self) -> dict:
        return self._table

    def multiply(self, x: Vector, y: Vector) -> Vector:
        return self.product(x, y)


def multiply(A: GradedAlgebra, x: Vector, y: Vector) -> Vector:
    return A.product(x, y)


def group_algebra(G: GroupTable) -> GradedAlgebra:
    labels = tuple(G.label(g) for g in range(G.order))
    basis = GradedBasis(G, tuple(range(G.order)), labels)
    consts = {(g, h): basis.e(G.mul(g, h)) for g in range(G.order) for h in range(G.order)}
    return GradedAlgebra(basis, consts)


# -- validation ----------------------------------------------------------

@dataclass
class AlgebraReport:
    associative: bool
    witnesses: list = field(default_factory=list)


def validate_algebra(A: GradedAlgebra, max_witnesses: int = 10) -> AlgebraReport:
    """Associativity on all basis triples.  Bilinearity is structural."""
    n = A.dim
    witnesses = []
    cache = {}

    def left(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = A.const(i, j)
        return cache[(i, j)]

    for i, j, k in product(range(n), repeat=3):
        lhs = A.product(left(i, j), A.e(k))
        rhs = A.product(A.e(i), left(j, k))
        if lhs != rhs:
            witnesses.append((i, j, k))
            if len(witnesses) >= max_witnesses:
                break
    A.flags["associative"] = not witnesses
    return AlgebraReport(not witnesses, witnesses)


@dataclass
class GradingReport:
    mode: str
    holds: bool
    witnesses: list = field(default_factory=list)


def _target_degrees(G: GroupTable, g: int, h: int, mode: str) -> frozenset:
    if mode == CLASSICAL:
        return frozenset((G.mul(g, h),))
    return frozenset((G.mul(g, h), G.mul(h, g)))


def fiber_span(product_obj, degrees) -> SubspaceBasis:
    basis = product_obj.basis
    gens = [basis.e(i) for d in sorted(degrees) for i in basis.fiber(d)]
    return SubspaceBasis(basis, gens)


def check_grading(A, mode: str = NONCOMMUTATIVE) -> GradingReport:
    """Test every basis product against its target fiber(s).

    Works for anything with ``basis`` and ``const`` (algebras and Lie
    algebras alike).  Witnesses are ``(g, h, i, j, product)``.
    """
    mode = _mode(mode)
    G = A.basis.group
    degs = A.basis.degrees
    spans = {}
    witnesses = []
    n = A.basis.size
    for i in range(n):
        for j in range(n):
            v = A.const(i, j)
            if not v:
                continue
            g, h = degs[i], degs[j]
            key = _target_degrees(G, g, h, mode)
            if key not in spans:
                spans[key] = fiber_span(A, key)
            if not spans[key].contains(v).member:
                witnesses.append((g, h, i, j, v))
    holds = not witnesses
    if mode == CLASSICAL:
        A.flags["classically_graded"] = holds
        if holds:
            A.flags["nc_graded"] = True
    else:
        A.flags["nc_graded"] = holds
    return GradingReport(mode, holds, witnesses)


def is_classically_graded(A) -> bool:
    if "classically_graded" not in A.flags:
        check_grading(A, CLASSICAL)
    return A.flags["classically_graded"]


def is_nc_graded(A) -> bool:
    if "nc_graded" not in A.flags:
        check_grading(A, NONCOMMUTATIVE)
    return A.flags["nc_graded"]


# -- units and inverses --------------------------------------------------

def find_unit(A: GradedAlgebra) -> Optional[Vector]:
    """The two-sided identity element, if one exists.

    Requires :func:`validate_algebra` to have been run.  The unit is
    unique when it exists, so the exact solve is a decision procedure.
    """
    if "associative" not in A.flags:
        raise NotValidated("run validate_algebra before find_unit")
    n = A.dim
    cols = []
    for k in range(n):
        col = {}
        for i in range(n):
            for m, c in A.const(k, i).items():
                col[i * n + m] = c
            for m, c in A.const(i, k).items():
                col[n * n + i * n + m] = c
        cols.append(col)
    rhs = {}
    for i in range(n):
        rhs[i * n + i] = Fraction(1)
        rhs[n * n + i * n + i] = Fraction(1)
    x = solve(cols, rhs)
    if x is None:
        A.flags["unital"] = False
        return None
    u = Vector(A.basis, enumerate(x))
    A.flags["unital"] = True
    if is_nc_graded(A):
        e = A.group.identity
        if project_component(u, e) != u:
            raise AssertionError(f"unit {u!r} of an nc-graded algebra is not in degree e")
    return u


def _inverse_columns(A: GradedAlgebra, a: Vector, side: str, indices) -> list:
    if side == "right":
        return [A.product(a, A.e(k)).coeffs for k in indices]
    if side == "left":
        return [A.product(A.e(k), a).coeffs for k in indices]
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def _unit_for_inverse(A: GradedAlgebra, a: Vector) -> Vector:
    if not same_basis(a.basis, A.basis):
        raise BasisMismatch("element is not over the algebra basis")
    if not a or not a.is_homogeneous():
        raise NotHomogeneous("need a nonzero homogeneous element", witness=a.support_degrees())
    if "associative" not in A.flags:
        validate_algebra(A)
    u = find_unit(A)
    if u is None:
        raise NotUnital("algebra has no unit")
    return u


def homogeneous_inverse(A: GradedAlgebra, a: Vector, side: str = "right") -> Optional[Vector]:
    """Solve ``a x = 1`` (right) or ``x a = 1`` (left) with ``x`` in ``A_{g^-1}``."""
    u = _unit_for_inverse(A, a)
    G = A.group
    fiber = A.basis.fiber(G.inv(a.degree()))
    x = solve(_inverse_columns(A, a, side, fiber), u.coeffs)
    if x is None:
        return None
    return Vector(A.basis, zip(fiber, x))


def unconstrained_inverse(A: GradedAlgebra, a: Vector, side: str = "right") -> Optional[Vector]:
    """Any one-sided inverse of ``a``, with no degree constraint."""
    u = _unit_for_inverse(A, a)
    idx = range(A.dim)
    x = solve(_inverse_columns(A, a, side, idx), u.coeffs)
    if x is None:
        return None
    return Vector(A.basis, enumerate(x))


def inverse_feasibility(A: GradedAlgebra, a: Vector, side: str = "right") -> tuple:
    """``(unconstrained solvable, degree-constrained solvable)``."""
    return (
        unconstrained_inverse(A, a, side) is not None,
        homogeneous_inverse(A, a, side) is not None,
    )


# -- homomorphisms -------------------------------------------------------

class GradedHom:
    """Linear map given by the image of each source basis element.

    Source and target are anything with ``basis`` and ``product``, so the
    same class carries algebra homs and Lie algebra homs.
    """

    def __init__(self, source, target, images: Sequence):
        self.source = source
        self.target = target
        imgs = []
        if len(images) != source.basis.size:
            raise InvalidHom(
                f"need {source.basis.size} images, got {len(images)}", witness=len(images)
            )
        for v in images:
            if not isinstance(v, Vector):
                v = Vector(target.basis, v)
            elif not same_basis(v.basis, target.basis):
                raise BasisMismatch("image is not over the target basis")
            imgs.append(v)
        self.images = tuple(imgs)

    def __call__(self, x: Vector) -> Vector:
        if not same_basis(x.basis, self.source.basis):
            raise BasisMismatch("argument is not over the source basis")
        acc = {}
        for i, c in x.coeffs.items():
            _axpy(acc, c, self.images[i].coeffs)
        return Vector._raw(self.target.basis, acc)

    def __eq__(self, other):
        if not isinstance(other, GradedHom):
            return NotImplemented
        return (
            same_basis(self.source.basis, other.source.basis)
            and same_basis(self.target.basis, other.target.basis)
            and self.images == other.images
        )

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GradedHom({self.source!r} -> {self.target!r})"


GradedAlgebraHom = GradedHom


def identity_hom(A) -> GradedHom:
    return GradedHom(A, A, [A.basis.e(i) for i in range(A.basis.size)])


def zero_hom(A, B) -> GradedHom:
    return GradedHom(A, B, [Vector(B.basis) for _ in range(A.basis.size)])


def compose(f: GradedHom, g: GradedHom) -> GradedHom:
    """``f o g`` (apply ``g`` first)."""
    if not same_basis(g.target.basis, f.source.basis):
        raise BasisMismatch("cannot compose: target of g is not source of f")
    return GradedHom(g.source, f.target, [f(v) for v in g.images])


@dataclass
class HomReport:
    valid: bool
    multiplicative: bool
    graded: bool
    witnesses: list = field(default_factory=list)


def validate_hom(f: GradedHom) -> HomReport:
    """Multiplicativity on basis pairs and gradedness fiber by fiber.

    Witnesses are ``("product", i, j)`` and ``("degree", i, g)``.
    """
    S, T = f.source, f.target
    witnesses = []
    if S.basis.group != T.basis.group:
        return HomReport(False, False, False, [("group", S.basis.group.name, T.basis.group.name)])
    graded = True
    for i, v in enumerate(f.images):
        g = S.basis.degrees[i]
        if project_component(v, g) != v:
            graded = False
            witnesses.append(("degree", i, g))
    mult = True
    n = S.basis.size
    for i in range(n):
        for j in range(n):
            lhs = f(S.const(i, j))
            rhs = T.product(f.images[i], f.images[j])
            if lhs != rhs:
                mult = False
                witnesses.append(("product", i, j))
    return HomReport(mult and graded, mult, graded, witnesses)


# -- finite inverse limits ----------------------------------------------

@dataclass
class InverseLimit:
    algebra: GradedAlgebra
    projections: dict
    product_basis: GradedBasis
    embedding: list
    offsets: dict
    _span: SubspaceBasis = field(repr=False, default=None)

    def coordinates(self, p_vec: Vector) -> Optional[Vector]:
        """Coordinates of a product-space vector in the limit basis."""
        m = self._span.contains(p_vec)
        if not m.member:
            return None
        return Vector(self.algebra.basis, enumerate(m.coefficients))

    def factor(self, cone: Mapping) -> GradedHom:
        """The unique graded map ``u`` with ``p_a o u = cone[a]`` for all ``a``."""
        sources = {id(c.source.basis): c.source for c in cone.values()}
        if len(sources) != 1:
            raise InvalidHom("cone maps must share one source")
        F = next(iter(sources.values()))
        if set(cone) != set(self.offsets):
            raise InvalidHom("cone must have one map per index")
        images = []
        for y in range(F.basis.size):
            acc = {}
            for a, u in cone.items():
                off = self.offsets[a]
                for k, c in u.images[y].items():
                    acc[off + k] = c
            coords = self.coordinates(Vector(self.product_basis, acc))
            if coords is None:
                raise InvalidHom("cone is not compatible with the inverse system", witness=y)
            images.append(coords)
        return GradedHom(F, self.algebra, images)


def _check_inverse_system(indices, algebras, maps):
    rel = set(maps)
    for a, b in rel:
        if a not in algebras or b not in algebras:
            raise NotInverseSystem(f"relation {(a, b)} names an unknown index", witness=(a, b))
        f = maps[(a, b)]
        if not (same_basis(f.source.basis, algebras[b].basis)
                and same_basis(f.target.basis, algebras[a].basis)):
            raise NotInverseSystem(f"map for {(a, b)} must go A_b -> A_a", witness=(a, b))
        rep = validate_hom(f)
        if not rep.valid:
            raise NotInverseSystem(f"map for {(a, b)} is not a graded hom", witness=(a, b))
    full = dict(maps)
    for a in indices:
        idm = identity_hom(algebras[a])
        if (a, a) in full and full[(a, a)] != idm:
            raise NotInverseSystem(f"f_aa is not the identity for {a!r}", witness=(a, a))
        full[(a, a)] = idm
    for (a, b), (b2, c) in product(list(full), repeat=2):
        if b != b2:
            continue
        if (a, c) not in full:
            raise NotInverseSystem(f"relations not transitive: missing {(a, c)}", witness=(a, b, c))
        if full[(a, c)] != compose(full[(a, b)], full[(b, c)]):
            raise NotInverseSystem(f"f_ac != f_ab o f_bc for {(a, b, c)}", witness=(a, b, c))
    return full


def finite_inverse_limit(indices: Sequence, algebras: Mapping, maps: Mapping) -> InverseLimit:
    """Limit of a finite inverse system of graded algebras.

    ``maps[(a, b)]`` is the morphism ``A_b -> A_a`` for ``a <= b``;
    identities on the diagonal may be omitted.  The limit is computed
    fiber by fiber as the solution space of the compatibility equations.
    """
    indices = list(indices)
    groups = {algebras[a].group for a in indices}
    if len(groups) != 1:
        raise BasisMismatch("all algebras in the diagram must be graded by one group")
    G = groups.pop()
    full = _check_inverse_system(indices, algebras, maps)

    offsets, degrees, labels = {}, [], []
    for a in indices:
        offsets[a] = len(degrees)
        A = algebras[a]
        degrees.extend(A.basis.degrees)
        labels.extend(f"{a}:{A.basis.label(i)}" for i in range(A.dim))
    P = GradedBasis(G, tuple(degrees), tuple(labels))
    owner = [(a, i) for a in indices for i in range(algebras[a].dim)]

    relations = [(a, b) for (a, b) in full if a != b]
    eq_off, total = {}, 0
    for r in relations:
        eq_off[r] = total
        total += algebras[r[0]].dim

    embedding, q_degrees = [], []
    for g in range(G.order):
        vars_g = P.fiber(g)
        cols = []
        for pidx in vars_g:
            b, i = owner[pidx]
            col = {}
            for (a, bb) in relations:
                off = eq_off[(a, bb)]
                if a == b:
                    col[off + i] = col.get(off + i, 0) + 1
                if bb == b:
                    for m, c in full[(a, bb)].images[i].items():
                        col[off + m] = col.get(off + m, 0) - c
            cols.append({k: v for k, v in col.items() if v})
        for x in nullspace(cols):
            embedding.append({vars_g[k]: c for k, c in x.items()})
            q_degrees.append(g)

    span = SubspaceBasis(P, [Vector(P, e) for e in embedding])
    qbasis = GradedBasis(G, tuple(q_degrees), tuple(f"q{k}" for k in range(len(q_degrees))))

    def split(e):
        parts = {a: {} for a in indices}
        for pidx, c in e.items():
            a, i = owner[pidx]
            parts[a][i] = c
        return {a: Vector(algebras[a].basis, d) for a, d in parts.items()}

    comps = [split(e) for e in embedding]
    consts = {}
    for s, x in enumerate(comps):
        for t, y in enumerate(comps):
            acc = {}
            for a in indices:
                off = offsets[a]
                for k, c in algebras[a].product(x[a], y[a]).items():
                    acc[off + k] = c
            if not acc:
                continue
            m = span.contains(Vector(P, acc))
            if not m.member:
                raise AssertionError("limit is not closed under the product")
            consts[(s, t)] = Vector(qbasis, enumerate(m.coefficients))
    Q = GradedAlgebra(qbasis, consts)
    projections = {a: GradedHom(Q, algebras[a], [x[a] for x in comps]) for a in indices}
    return InverseLimit(Q, projections, P, embedding, offsets, span)
