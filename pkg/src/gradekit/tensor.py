"""Truncated graded tensor algebras and noncommutatively graded Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .algebra import (
    CLASSICAL,
    NONCOMMUTATIVE,
    GradedAlgebra,
    GradedHom,
    _StructureConstants,
    check_grading,
    validate_algebra,
)
from .errors import DepthExceeded, NotAssociative, NotClassicallyGraded
from .linear import GradedBasis, Vector, same_basis

DEFAULT_DEPTH = 3


def word_degree(word, basis: GradedBasis) -> int:
    """Ordered product of the letter degrees; the empty word has degree e."""
    return basis.group.prod(basis.degrees[x] for x in word)


class TruncatedTensorAlgebra:
    """All words of length at most ``depth`` over a graded basis.

    Words are tuples of basis indices, enumerated by length and then
    lexicographically.  ``self.basis`` grades the word coordinates by
    :func:`word_degree`.
    """

    def __init__(self, letters: GradedBasis, depth: int = DEFAULT_DEPTH):
        if depth < 0:
            raise ValueError("depth must be non-negative")
        self.letters = letters
        self.depth = depth
        r = letters.size
        words = []
        for k in range(depth + 1):
            words.extend(product(range(r), repeat=k))
        self.words = tuple(words)
        self.index = {w: n for n, w in enumerate(words)}
        labels = tuple(
            "⊗".join(letters.label(x) for x in w) if w else "1" for w in words
        )
        self.basis = GradedBasis(
            letters.group, tuple(word_degree(w, letters) for w in words), labels
        )

    def __len__(self):
        return len(self.words)

    def word(self, w, c=1) -> Vector:
        w = tuple(w)
        if len(w) > self.depth:
            raise DepthExceeded(f"word of length {len(w)} exceeds depth {self.depth}", witness=w)
        return self.basis.e(self.index[w], c)

    def from_dict(self, terms: Mapping) -> Vector:
        acc = {}
        for w, c in terms.items():
            w = tuple(w)
            if len(w) > self.depth:
                raise DepthExceeded(f"word of length {len(w)} exceeds depth {self.depth}", witness=w)
            if c:
                acc[self.index[w]] = acc.get(self.index[w], 0) + c
        return Vector(self.basis, acc)

    def to_dict(self, v: Vector) -> dict:
        return {self.words[k]: c for k, c in v.items()}

    def layer(self, g: int) -> tuple:
        """Words of degree ``g``."""
        return tuple(self.words[k] for k in self.basis.fiber(g))

    def multiply(self, x: Vector, y: Vector) -> Vector:
        """Concatenation product, extended bilinearly."""
        if not (same_basis(x.basis, self.basis) and same_basis(y.basis, self.basis)):
            raise ValueError("operands are not in this truncation")
        acc = {}
        words = self.words
        for i, a in x.items():
            for j, b in y.items():
                w = words[i] + words[j]
                if len(w) > self.depth:
                    raise DepthExceeded(
                        f"product of length {len(w)} exceeds depth {self.depth}", witness=w
                    )
                k = self.index[w]
                s = acc.get(k, 0) + a * b
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return Vector._raw(self.basis, acc)


def tensor_multiply(T: TruncatedTensorAlgebra, x: Vector, y: Vector) -> Vector:
    return T.multiply(x, y)


class GradedLieAlgebra(_StructureConstants):
    """Bracket structure constants ``[b_i, b_j]`` over a graded basis."""

    @property
    def brackets(self) -> dict:
        return self._table

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return self.product(x, y)


@dataclass
class LieReport:
    lie_valid: bool
    nc_graded: bool
    witnesses: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.lie_valid and self.nc_graded


def validate_lie(L: GradedLieAlgebra, max_witnesses: int = 20) -> LieReport:
    """Alternating, antisymmetric, Jacobi on all basis triples, and the
    noncommutative grading inclusion.

    Witness tuples start with ``"alternating"``, ``"antisymmetry"``,
    ``"jacobi"`` or ``"grading"``.
    """
    n = L.dim
    w = []
    for i in range(n):
        if L.const(i, i):
            w.append(("alternating", i))
    for i in range(n):
        for j in range(i + 1, n):
            if L.const(i, j) + L.const(j, i):
                w.append(("antisymmetry", i, j))
    e = L.basis.e
    for i, j, k in product(range(n), repeat=3):
        a, b, c = e(i), e(j), e(k)
        s = (L.bracket(a, L.const(j, k)) + L.bracket(c, L.const(i, j))
             + L.bracket(b, L.const(k, i)))
        if s:
            w.append(("jacobi", i, j, k))
            if len(w) >= max_witnesses:
                break
    lie_valid = not w
    grading = check_grading(L, NONCOMMUTATIVE)
    for g, h, i, j, v in grading.witnesses:
        w.append(("grading", g, h, i, j))
    L.flags["lie_valid"] = lie_valid
    return LieReport(lie_valid, grading.holds, w)


def commutator_lie(A: GradedAlgebra) -> GradedLieAlgebra:
    """``[a, b] = ab - ba`` on an associative, classically graded algebra."""
    if "associative" not in A.flags:
        validate_algebra(A)
    if not A.flags["associative"]:
        raise NotAssociative("commutator Lie algebra needs an associative algebra")
    rep = check_grading(A, CLASSICAL)
    if not rep.holds:
        raise NotClassicallyGraded("commutator Lie algebra needs a classical grading",
                                   witness=rep.witnesses[0][:4])
    n = A.dim
    brackets = {}
    for i in range(n):
        for j in range(n):
            v = A.const(i, j) - A.const(j, i)
            if v:
                brackets[(i, j)] = v
    return GradedLieAlgebra(A.basis, brackets)


def lie_hom(f: GradedHom, LA=None, LB=None) -> GradedHom:
    """The Lie functor on a hom of associative graded algebras."""
    LA = LA if LA is not None else commutator_lie(f.source)
    LB = LB if LB is not None else commutator_lie(f.target)
    return GradedHom(LA, LB, [v.coeffs for v in f.images])


def abelian_lie(basis: GradedBasis) -> GradedLieAlgebra:
    return GradedLieAlgebra(basis, {})
