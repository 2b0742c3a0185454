"""Constructions on graded algebras and the two change-of-group adjunctions.

Objects of the deformed categories are carried as :class:`LambdaMuAlgebra`:
an undeformed, classically graded base algebra together with the
coefficients of the deformed product.  Morphisms between such objects are
graded homs of the base algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .algebra import (
    CLASSICAL,
    GradedAlgebra,
    GradedHom,
    check_grading,
    compose,
    identity_hom,
    validate_hom,
    zero_hom,
)
from .errors import (
    BasisMismatch,
    InvalidHom,
    NotClassicallyGraded,
    NotClosed,
    NotEpi,
    NotMono,
    NotNormal,
)
from .groups import GroupHom, GroupTable, NormalSubgroup, quotient_group
from .linear import GradedBasis, Vector, _axpy, same_basis, scalar


@dataclass(frozen=True)
class DeformationData:
    """Coefficients ``lam[g][h]`` and ``mu[h][g]`` of the deformed product."""

    group: GroupTable
    lam: tuple
    mu: tuple

    def __post_init__(self):
        n = self.group.order
        for name in ("lam", "mu"):
            rows = getattr(self, name)
            if len(rows) != n or any(len(r) != n for r in rows):
                raise ValueError(f"{name} must be a {n}x{n} array")
            object.__setattr__(self, name, tuple(tuple(scalar(x) for x in r) for r in rows))

    @classmethod
    def constant(cls, group: GroupTable, lam, mu) -> "DeformationData":
        n = group.order
        lam, mu = scalar(lam), scalar(mu)
        return cls(group, ((lam,) * n,) * n, ((mu,) * n,) * n)

    def preserves_unit(self) -> bool:
        """``lam[g][e] + mu[e][g] == 1 == lam[e][g] + mu[g][e]`` for all g."""
        e = self.group.identity
        return all(
            self.lam[g][e] + self.mu[e][g] == 1 == self.lam[e][g] + self.mu[g][e]
            for g in range(self.group.order)
        )


def undeformed(group: GroupTable) -> DeformationData:
    return DeformationData.constant(group, 1, 0)


def deform(A: GradedAlgebra, d: DeformationData) -> GradedAlgebra:
    """New product ``b_i . b_j = lam[g][h] b_i b_j + mu[h][g] b_j b_i``."""
    if d.group != A.group:
        raise BasisMismatch("deformation data is for a different group")
    rep = check_grading(A, CLASSICAL)
    if not rep.holds:
        raise NotClassicallyGraded("deformation needs a classically graded algebra",
                                   witness=rep.witnesses[0][:4])
    degs = A.basis.degrees
    n = A.dim
    consts = {}
    for i in range(n):
        g = degs[i]
        for j in range(n):
            h = degs[j]
            acc = _axpy({}, d.lam[g][h], A.const(i, j).coeffs)
            _axpy(acc, d.mu[h][g], A.const(j, i).coeffs)
            if acc:
                consts[(i, j)] = Vector._raw(A.basis, acc)
    return GradedAlgebra(A.basis, consts)


@dataclass(eq=False)
class LambdaMuAlgebra:
    """An object ``(A, lam, mu)``: base algebra plus deformation data."""

    base: GradedAlgebra
    data: DeformationData

    @cached_property
    def algebra(self) -> GradedAlgebra:
        return deform(self.base, self.data)

    @property
    def basis(self):
        return self.base.basis

    @property
    def group(self):
        return self.base.group


def _base(A):
    return A.base if isinstance(A, LambdaMuAlgebra) else A


# -- opposite ------------------------------------------------------------

def opposite(A: GradedAlgebra) -> GradedAlgebra:
    """Same module, reversed product, degrees inverted."""
    G = A.group
    basis = GradedBasis(G, tuple(G.inv(d) for d in A.basis.degrees), A.basis.labels)
    consts = {(j, i): Vector._raw(basis, v.coeffs) for (i, j), v in A.constants.items()}
    return GradedAlgebra(basis, consts)


def opposite_hom(f: GradedHom, Aop=None, Bop=None) -> GradedHom:
    Aop = Aop if Aop is not None else opposite(f.source)
    Bop = Bop if Bop is not None else opposite(f.target)
    return GradedHom(Aop, Bop, [v.coeffs for v in f.images])


# -- restriction and induction along a monomorphism ---------------------

def _require_mono(theta: GroupHom):
    if not theta.is_mono:
        raise NotMono(f"group hom is {theta.kind}, need mono", witness=theta.kind)


def _retained(A: GradedAlgebra, theta: GroupHom):
    img = theta.image()
    keep = [i for i, d in enumerate(A.basis.degrees) if d in img]
    return keep, {old: new for new, old in enumerate(keep)}


def _pullback(theta: GroupHom) -> dict:
    return {theta(h): h for h in range(theta.domain.order)}


def restrict(A: GradedAlgebra, theta: GroupHom) -> GradedAlgebra:
    """Keep the fibers over ``theta(H)``, regraded by ``H``."""
    _require_mono(theta)
    if theta.codomain != A.group:
        raise BasisMismatch("theta does not land in the algebra's group")
    keep, new = _retained(A, theta)
    back = _pullback(theta)
    labels = None if A.basis.labels is None else tuple(A.basis.labels[i] for i in keep)
    basis = GradedBasis(theta.domain, tuple(back[A.basis.degrees[i]] for i in keep), labels)
    consts = {}
    for i in keep:
        for j in keep:
            v = A.const(i, j)
            if not v:
                continue
            if any(k not in new for k in v.coeffs):
                raise NotClosed("product leaves the restricted fibers", witness=(i, j, v))
            consts[(new[i], new[j])] = Vector._raw(basis, {new[k]: c for k, c in v.items()})
    return GradedAlgebra(basis, consts)


def restrict_hom(f: GradedHom, theta: GroupHom, A_H=None, B_H=None) -> GradedHom:
    A_H = A_H if A_H is not None else restrict(f.source, theta)
    B_H = B_H if B_H is not None else restrict(f.target, theta)
    keep, _ = _retained(f.source, theta)
    _, new_b = _retained(f.target, theta)
    images = []
    for i in keep:
        v = f.images[i]
        if any(k not in new_b for k in v.coeffs):
            raise NotClosed("hom image leaves the restricted fibers", witness=i)
        images.append({new_b[k]: c for k, c in v.items()})
    return GradedHom(A_H, B_H, images)


def induce(A: GradedAlgebra, theta: GroupHom) -> GradedAlgebra:
    """Same algebra, degrees pushed forward; fibers off ``theta(H)`` are zero."""
    _require_mono(theta)
    if theta.domain != A.group:
        raise BasisMismatch("theta does not start at the algebra's group")
    basis = GradedBasis(theta.codomain, tuple(theta(d) for d in A.basis.degrees), A.basis.labels)
    return GradedAlgebra(basis, {k: Vector._raw(basis, v.coeffs) for k, v in A.constants.items()})


def induce_hom(f: GradedHom, theta: GroupHom, A_bar=None, B_bar=None) -> GradedHom:
    A_bar = A_bar if A_bar is not None else induce(f.source, theta)
    B_bar = B_bar if B_bar is not None else induce(f.target, theta)
    return GradedHom(A_bar, B_bar, [v.coeffs for v in f.images])


# -- coarsening along an epimorphism ------------------------------------

def coarsen(A, pi: GroupHom) -> GradedAlgebra:
    """Regrade along ``pi``: the new fiber at h merges all fibers over h."""
    A = _base(A)
    if not pi.is_epi:
        raise NotEpi(f"group hom is {pi.kind}, need epi", witness=pi.kind)
    if pi.domain != A.group:
        raise BasisMismatch("pi does not start at the algebra's group")
    basis = GradedBasis(pi.codomain, tuple(pi(d) for d in A.basis.degrees), A.basis.labels)
    return GradedAlgebra(basis, {k: Vector._raw(basis, v.coeffs) for k, v in A.constants.items()})


def coarsen_hom(f: GradedHom, pi: GroupHom, A_c=None, B_c=None) -> GradedHom:
    A_c = A_c if A_c is not None else coarsen(f.source, pi)
    B_c = B_c if B_c is not None else coarsen(f.target, pi)
    return GradedHom(A_c, B_c, [v.coeffs for v in f.images])


# -- group-ring lift -----------------------------------------------------

@dataclass(eq=False)
class GroupRingLift:
    """``F(A)`` inside the group ring ``A[G]``.

    Basis element ``k`` is ``pairs[k] = (b, g)``: the basis vector ``b`` of
    ``A`` (with degree ``pi(g)``) times the group element ``g``.
    """

    source: GradedAlgebra
    G: GroupTable
    N: NormalSubgroup
    pi: GroupHom
    pairs: tuple
    obj: LambdaMuAlgebra
    index: dict = field(repr=False, default_factory=dict)

    @property
    def base(self) -> GradedAlgebra:
        return self.obj.base

    @property
    def algebra(self) -> GradedAlgebra:
        return self.obj.algebra

    def embed(self, v: Vector, g: int) -> Vector:
        """``v * g`` for ``v`` in the source fiber over ``pi(g)``."""
        acc = {}
        for b, c in v.items():
            k = self.index.get((b, g))
            if k is None:
                raise NotClosed("element not in the fiber over pi(g)", witness=(b, g))
            acc[k] = c
        return Vector._raw(self.base.basis, acc)

    def augment(self, w: Vector) -> Vector:
        """Forget the group element: ``a g -> a``."""
        acc = {}
        for k, c in w.items():
            _axpy(acc, c, {self.pairs[k][0]: 1})
        return Vector._raw(self.source.basis, acc)


def _quotient_for(G: GroupTable, N: NormalSubgroup):
    if N.parent != G:
        raise NotNormal("N is not a subgroup of G")
    return quotient_group(G, N)


def _same_group(a: GroupTable, b: GroupTable) -> bool:
    return a.table == b.table and a.identity == b.identity


def group_ring_lift(A, G: GroupTable, N: NormalSubgroup,
                    data: Optional[DeformationData] = None) -> GroupRingLift:
    """The functor ``F`` on objects: a G/N-graded algebra to a G-graded one.

    ``A`` may be a :class:`LambdaMuAlgebra`; only its base product is used.
    ``data`` indexes the deformed product of the result by elements of G
    (default: undeformed).
    """
    A = _base(A)
    Q, pi = _quotient_for(G, N)
    if not _same_group(A.group, Q):
        raise BasisMismatch("algebra is not graded by G/N")
    if not check_grading(A, CLASSICAL).holds:
        raise NotClassicallyGraded("lift needs a classically graded algebra")
    data = data if data is not None else undeformed(G)
    if data.group != G:
        raise BasisMismatch("deformation data is for a different group")
    pairs = tuple((b, g) for g in range(G.order) for b in A.basis.fiber(pi(g)))
    index = {p: k for k, p in enumerate(pairs)}
    labels = tuple(f"{A.basis.label(b)}*{G.label(g)}" for b, g in pairs)
    basis = GradedBasis(G, tuple(g for _, g in pairs), labels)
    consts = {}
    for k1, (a, g) in enumerate(pairs):
        for k2, (b, h) in enumerate(pairs):
            ab = A.const(a, b)
            if ab:
                gh = G.mul(g, h)
                consts[(k1, k2)] = Vector._raw(basis, {index[(m, gh)]: c for m, c in ab.items()})
    obj = LambdaMuAlgebra(GradedAlgebra(basis, consts), data)
    return GroupRingLift(A, G, N, pi, pairs, obj, index)


def lift_hom(f: GradedHom, FA: GroupRingLift, FB: GroupRingLift) -> GradedHom:
    """``F(f)(a g) = f(a) g``."""
    if not same_basis(f.source.basis, FA.source.basis) or not same_basis(f.target.basis, FB.source.basis):
        raise BasisMismatch("hom does not match the lifted objects")
    images = [FB.embed(f.images[b], g) for b, g in FA.pairs]
    return GradedHom(FA.base, FB.base, images)


# -- adjunction checks ---------------------------------------------------

@dataclass
class AdjunctionReport:
    roundtrip: bool
    reverse_roundtrip: bool
    naturality: list = field(default_factory=list)
    multiplicative: bool = True
    witnesses: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return (self.roundtrip and self.reverse_roundtrip and self.multiplicative
                and all(ok for _, ok in self.naturality))


def _sample_homs(X, Y, extra) -> list:
    out = []
    if same_basis(X.basis, Y.basis):
        out.append(("identity", identity_hom(X)))
    out.append(("zero", zero_hom(X, Y)))
    out.extend(extra or ())
    return out


def phi(f: GradedHom, theta: GroupHom, A: GradedAlgebra) -> GradedHom:
    """``f: induce(A) -> B`` to ``f_H: A -> B_H``."""
    B_H = restrict(f.target, theta)
    _, new_b = _retained(f.target, theta)
    images = []
    for v in f.images:
        if any(k not in new_b for k in v.coeffs):
            raise InvalidHom("f is not graded: image leaves theta(H) fibers")
        images.append({new_b[k]: c for k, c in v.items()})
    return GradedHom(A, B_H, images)


def phi_inverse(fp: GradedHom, theta: GroupHom, B: GradedAlgebra) -> GradedHom:
    """``f': A -> B_H`` to its induced map ``induce(A) -> B``."""
    keep, _ = _retained(B, theta)
    A_bar = induce(fp.source, theta)
    return GradedHom(A_bar, B, [{keep[k]: c for k, c in v.items()} for v in fp.images])


def adjunction_phi_roundtrip(A: GradedAlgebra, B: GradedAlgebra, theta: GroupHom,
                             f: GradedHom, p_samples=(), q_samples=()) -> AdjunctionReport:
    """Check the induction/restriction adjunction on one hom.

    ``p_samples`` are ``(label, p: A' -> A)``, ``q_samples`` are
    ``(label, q: B -> B')``; identity and zero maps are always included.
    """
    _require_mono(theta)
    rep = validate_hom(f)
    if not rep.valid:
        raise InvalidHom("f is not a graded hom", witness=rep.witnesses[:1])
    A_bar = induce(A, theta)
    if not same_basis(f.source.basis, A_bar.basis) or not same_basis(f.target.basis, B.basis):
        raise BasisMismatch("f must go induce(A) -> B")
    fH = phi(f, theta, A)
    back = phi_inverse(fH, theta, B)
    roundtrip = back == f
    reverse = phi(back, theta, A) == fH
    witnesses = []
    if not roundtrip:
        witnesses.append(("roundtrip", [i for i, (x, y) in enumerate(zip(back.images, f.images)) if x != y]))

    naturality = []
    for pl, p in _sample_homs(A, A, p_samples):
        for ql, q in _sample_homs(B, B, q_samples):
            A1 = p.source
            eps = compose(q, compose(f, induce_hom(p, theta, induce(A1, theta), A_bar)))
            left = phi(eps, theta, A1)
            right = compose(restrict_hom(q, theta), compose(fH, p))
            ok = left.images == right.images
            naturality.append((f"p={pl}, q={ql}", ok))
            if not ok:
                witnesses.append(("naturality", pl, ql))
    return AdjunctionReport(roundtrip, reverse, naturality, True, witnesses)


def psi(f: GradedHom, A, FB: GroupRingLift) -> GradedHom:
    """``f: A^{G/N} -> B`` to ``A -> F(B)``, ``a_g -> f(a_g) g``."""
    A = _base(A)
    return GradedHom(A, FB.base, [FB.embed(f.images[i], g) for i, g in enumerate(A.basis.degrees)])


def psi_inverse(phi_: GradedHom, FB: GroupRingLift, pi: GroupHom) -> GradedHom:
    """Compose with the augmentation ``F(B) -> B``."""
    A_c = coarsen(phi_.source, pi)
    return GradedHom(A_c, FB.source, [FB.augment(v) for v in phi_.images])


def adjunction_psi_roundtrip(A, B, N: NormalSubgroup, f: GradedHom,
                             data: Optional[DeformationData] = None,
                             p_samples=(), q_samples=()) -> AdjunctionReport:
    """Check the coarsening / group-ring-lift adjunction on one hom.

    ``A`` is G-graded, ``B`` is G/N-graded; ``f: coarsen(A) -> B`` is a
    graded hom of base algebras.  ``Psi(f)`` is validated for both the
    base and the deformed products.
    """
    if isinstance(A, LambdaMuAlgebra):
        data = data if data is not None else A.data
    A0, B0 = _base(A), _base(B)
    G = A0.group
    data = data if data is not None else undeformed(G)
    FB = group_ring_lift(B0, G, N, data)
    pi = FB.pi
    A_c = coarsen(A0, pi)
    if not same_basis(f.source.basis, A_c.basis) or not same_basis(f.target.basis, B0.basis):
        raise BasisMismatch("f must go coarsen(A) -> B")
    rep = validate_hom(f)
    if not rep.valid:
        raise InvalidHom("f is not a graded hom", witness=rep.witnesses[:1])

    g = psi(f, A0, FB)
    witnesses = []
    base_rep = validate_hom(g)
    deformed = GradedHom(LambdaMuAlgebra(A0, data).algebra, FB.algebra, g.images)
    def_rep = validate_hom(deformed)
    multiplicative = base_rep.valid and def_rep.valid
    if not multiplicative:
        witnesses.append(("psi(f) not a hom", base_rep.witnesses[:3] + def_rep.witnesses[:3]))

    back = psi_inverse(g, FB, pi)
    roundtrip = back == f
    reverse = psi(back, A0, FB) == g
    if not roundtrip:
        witnesses.append(("roundtrip", [i for i, (x, y) in enumerate(zip(back.images, f.images)) if x != y]))

    naturality = []
    for pl, p in _sample_homs(A0, A0, p_samples):
        for ql, q in _sample_homs(B0, B0, q_samples):
            A1, B1 = p.source, q.target
            FB1 = FB if B1 is B0 else group_ring_lift(B1, G, N, data)
            moved = compose(q, compose(f, coarsen_hom(p, pi, coarsen(A1, pi), A_c)))
            left = psi(moved, A1, FB1)
            right = compose(lift_hom(q, FB, FB1), compose(g, p))
            ok = left.images == right.images
            naturality.append((f"p={pl}, q={ql}", ok))
            if not ok:
                witnesses.append(("naturality", pl, ql))
    return AdjunctionReport(roundtrip, reverse, naturality, multiplicative, witnesses)


def embedding_hom(A: GradedAlgebra, B: GradedAlgebra, index_map: Sequence[int]) -> GradedHom:
    """Hom sending basis element ``i`` of A to basis element ``index_map[i]`` of B."""
    return GradedHom(A, B, [B.basis.e(k) for k in index_map])


def group_algebra_hom(theta: GroupHom, A: GradedAlgebra, B: GradedAlgebra) -> GradedHom:
    """Hom of group algebras induced by a group hom."""
    return embedding_hom(A, B, theta.images)


__all__ = [
    "DeformationData", "LambdaMuAlgebra", "GroupRingLift", "AdjunctionReport",
    "deform", "undeformed", "opposite", "opposite_hom", "restrict", "restrict_hom",
    "induce", "induce_hom", "coarsen", "coarsen_hom", "group_ring_lift", "lift_hom",
    "phi", "phi_inverse", "psi", "psi_inverse", "adjunction_phi_roundtrip",
    "adjunction_psi_roundtrip", "embedding_hom", "group_algebra_hom",
]
