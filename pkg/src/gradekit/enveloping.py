"""Universal enveloping algebra ``T(L)/I`` at a finite truncation depth.

Normal forms are PBW monomials: words whose letters are non-decreasing
under a fixed total order on the Lie basis.  Straightening rewrites an
adjacent inversion ``b_j b_i`` (``b_j`` after ``b_i`` in the order) to
``b_i b_j + [b_j, b_i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Mapping, Optional

from .algebra import GradedAlgebra, GradedHom, find_unit, validate_algebra, validate_hom
from .errors import DepthExceeded, InvalidLieHom, NotAssociative, NotUnital
from .linear import SubspaceBasis, Vector, _axpy, project_component, same_basis
from .tensor import (
    DEFAULT_DEPTH,
    GradedLieAlgebra,
    TruncatedTensorAlgebra,
    commutator_lie,
    word_degree,
)

DEGREE_MAJOR = "degree-major"
INDEX = "index"


def basis_rank(L: GradedLieAlgebra, order: str = DEGREE_MAJOR) -> tuple:
    """Position of each basis index in the total order."""
    n = L.dim
    if order == DEGREE_MAJOR:
        seq = sorted(range(n), key=lambda i: (L.basis.degrees[i], i))
    elif order == INDEX:
        seq = list(range(n))
    else:
        raise ValueError(f"unknown order {order!r}")
    rank = [0] * n
    for pos, i in enumerate(seq):
        rank[i] = pos
    return tuple(rank)


def is_pbw(word, rank) -> bool:
    return all(rank[a] <= rank[b] for a, b in zip(word, word[1:]))


def pbw_monomials(L: GradedLieAlgebra, depth: int, order: str = DEGREE_MAJOR) -> list:
    rank = basis_rank(L, order)
    seq = sorted(range(L.dim), key=lambda i: rank[i])
    out = []
    for k in range(depth + 1):
        out.extend(combinations_with_replacement(seq, k))
    return out


def pbw_count_formula(rank: int, depth: int) -> int:
    if rank == 0:
        return 1
    return sum(comb(rank + k - 1, k) for k in range(depth + 1))


class UElement:
    """Linear combination of PBW monomials with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        for m, c in (terms.items() if isinstance(terms, Mapping) else (terms or ())):
            c = Fraction(c)
            if c:
                d[tuple(m)] = d.get(tuple(m), 0) + c
        self.terms = {m: c for m, c in sorted(d.items()) if c}

    @classmethod
    def one(cls) -> "UElement":
        return cls({(): 1})

    def __add__(self, other):
        acc = dict(self.terms)
        _axpy(acc, 1, other.terms)
        return UElement(acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        _axpy(acc, -1, other.terms)
        return UElement(acc)

    def __mul__(self, c):
        return UElement({m: c * x for m, x in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, UElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in self.terms.items())


def _as_terms(w) -> dict:
    if isinstance(w, UElement):
        return dict(w.terms)
    if isinstance(w, Mapping):
        return {tuple(k): Fraction(c) for k, c in w.items()}
    return {tuple(w): Fraction(1)}


def straighten(L: GradedLieAlgebra, w, depth: int = DEFAULT_DEPTH,
               order: str = DEGREE_MAJOR, strategy: str = "leftmost") -> UElement:
    """PBW normal form of a word or word combination.

    Always rewrites the greatest pending word (lexicographic in the order
    ranks).  ``strategy`` picks its leftmost or rightmost adjacent
    inversion; both must agree, which the tests check.
    """
    rank = basis_rank(L, order)
    pending = _as_terms(w)
    for word in pending:
        if len(word) > depth:
            raise DepthExceeded(f"word {word} longer than depth {depth}", witness=word)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending = {k: v for k, v in pending.items() if v}
    result = {}
    key = lambda word: tuple(rank[x] for x in word)
    while pending:
        word = max(pending, key=key)
        c = pending.pop(word)
        inv = [k for k in range(len(word) - 1) if rank[word[k]] > rank[word[k + 1]]]
        if not inv:
            _axpy(result, c, {word: 1})
            continue
        k = inv[0] if strategy == "leftmost" else inv[-1]
        j, i = word[k], word[k + 1]
        head, tail = word[:k], word[k + 2:]
        _axpy(pending, c, {head + (i, j) + tail: 1})
        br = L.const(j, i)
        if br:
            _axpy(pending, c, {head + (m,) + tail: b for m, b in br.items()})
    return UElement(result)


def u_multiply(L: GradedLieAlgebra, u1: UElement, u2: UElement,
               depth: int = DEFAULT_DEPTH, order: str = DEGREE_MAJOR) -> UElement:
    acc = {}
    for m1, c1 in u1.terms.items():
        for m2, c2 in u2.terms.items():
            w = m1 + m2
            if len(w) > depth:
                raise DepthExceeded(f"product of length {len(w)} exceeds depth {depth}", witness=w)
            _axpy(acc, c1 * c2, {w: 1})
    return straighten(L, acc, depth, order)


# -- the ideal -----------------------------------------------------------

@dataclass
class IdealTruncation:
    """``I`` intersected with words of length at most ``depth``.

    ``generators[k]`` is ``(w1, (j, i), w2)`` for the spanning vector
    ``w1 (b_j b_i - b_i b_j - [b_j, b_i]) w2``.
    """

    lie: GradedLieAlgebra
    depth: int
    order: str
    tensor: TruncatedTensorAlgebra
    spanning: SubspaceBasis
    generators: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.spanning.rank


def ideal_truncation(L: GradedLieAlgebra, depth: int = DEFAULT_DEPTH,
                     order: str = DEGREE_MAJOR) -> IdealTruncation:
    T = TruncatedTensorAlgebra(L.basis, depth)
    rank = basis_rank(L, order)
    span = SubspaceBasis(T.basis)
    labels = []
    n = L.dim
    pairs = [(j, i) for i in range(n) for j in range(n) if rank[j] > rank[i]]
    for j, i in pairs:
        core = {(j, i): Fraction(1), (i, j): Fraction(-1)}
        for m, c in L.const(j, i).items():
            _axpy(core, -c, {(m,): 1})
        for total in range(max(depth - 1, 0)):
            for a in range(total + 1):
                for w1 in _words(n, a):
                    for w2 in _words(n, total - a):
                        terms = {w1 + x + w2: c for x, c in core.items()}
                        span.add(T.from_dict(terms))
                        labels.append((w1, (j, i), w2))
    return IdealTruncation(L, depth, order, T, span, labels)


def _words(n, k):
    if k == 0:
        return [()]
    return [w + (x,) for w in _words(n, k - 1) for x in range(n)]


@dataclass
class IdealGradedReport:
    graded: bool
    witnesses: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "graded" if self.graded else "not_graded"


def check_ideal_graded(L: GradedLieAlgebra, depth: int = DEFAULT_DEPTH,
                       order: str = DEGREE_MAJOR,
                       ideal: Optional[IdealTruncation] = None) -> IdealGradedReport:
    """Is ``I`` (truncated) a sum of its homogeneous components?

    Each spanning row is split into degree components and every
    component is tested for membership.  Witnesses are dicts with the
    row, the offending degree, the component and the membership result.
    """
    I = ideal if ideal is not None else ideal_truncation(L, depth, order)
    witnesses = []
    for row in I.spanning.rows:
        for g in sorted(row.support_degrees()):
            comp = project_component(row, g)
            m = I.spanning.contains(comp)
            if not m.member:
                witnesses.append({"row": row, "degree": g, "component": comp, "membership": m})
    return IdealGradedReport(not witnesses, witnesses)


# -- PBW verification ----------------------------------------------------

@dataclass
class PbwReport:
    pbw_count: int
    expected_count: int
    quotient_dim: int
    ideal_dim: int
    spanning: bool
    independent: bool
    ideal_graded: str
    homogeneous_basis: bool
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.spanning and self.independent and self.pbw_count == self.expected_count


def pbw_verify(L: GradedLieAlgebra, depth: int = DEFAULT_DEPTH,
               order: str = DEGREE_MAJOR, ideal: Optional[IdealTruncation] = None) -> PbwReport:
    I = ideal if ideal is not None else ideal_truncation(L, depth, order)
    T = I.tensor
    witnesses = []

    spanning = True
    for w in T.words:
        nf = straighten(L, w, depth, order)
        diff = T.word(w) - T.from_dict(nf.terms)
        if not I.spanning.contains(diff).member:
            spanning = False
            witnesses.append(("spanning", w))

    monos = pbw_monomials(L, depth, order)
    combined = SubspaceBasis(T.basis, I.spanning.rows)
    for m in monos:
        combined.add(T.word(m))
    independent = combined.rank - I.dim == len(monos)
    if not independent:
        witnesses.append(("independence", combined.rank - I.dim, len(monos)))

    graded = check_ideal_graded(L, depth, order, ideal=I)
    for wit in graded.witnesses:
        witnesses.append(("ideal_not_graded", wit["degree"], wit["component"]))
    notes = ["PBW monomials use non-decreasing letter order (repeated letters allowed)"]
    if not graded.graded:
        notes.append("ideal is not graded at this depth; homogeneity of the PBW basis is not asserted")
    return PbwReport(
        pbw_count=len(monos),
        expected_count=pbw_count_formula(L.dim, depth),
        quotient_dim=len(T) - I.dim,
        ideal_dim=I.dim,
        spanning=spanning,
        independent=independent,
        ideal_graded=graded.verdict,
        homogeneous_basis=graded.graded,
        witnesses=witnesses,
        notes=notes,
    )


# -- universal property --------------------------------------------------

@dataclass
class UniversalReport:
    factorizes: bool
    kills_ideal: bool
    graded: bool
    consistent: bool
    images: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.factorizes and self.kills_ideal and self.graded and self.consistent


class EnvelopingMap:
    """``k``: words (and PBW monomials) to ``A`` by multiplying images of ``j``."""

    def __init__(self, A: GradedAlgebra, j: GradedHom, unit: Vector):
        self.A, self.j, self.unit = A, j, unit
        self._cache = {(): unit}

    def word(self, w) -> Vector:
        w = tuple(w)
        if w not in self._cache:
            self._cache[w] = self.A.product(self.word(w[:-1]), self.j.images[w[-1]])
        return self._cache[w]

    def __call__(self, terms: Mapping) -> Vector:
        acc = {}
        for w, c in terms.items():
            _axpy(acc, c, self.word(w).coeffs)
        return Vector._raw(self.A.basis, acc)


def universal_property_check(L: GradedLieAlgebra, A: GradedAlgebra, j: GradedHom,
                             depth: int = DEFAULT_DEPTH, order: str = DEGREE_MAJOR,
                             ideal: Optional[IdealTruncation] = None) -> UniversalReport:
    """Build ``k`` with ``j = k o i`` and verify it on the truncation."""
    if "associative" not in A.flags:
        validate_algebra(A)
    if not A.flags["associative"]:
        raise NotAssociative("target algebra must be associative")
    u = find_unit(A)
    if u is None:
        raise NotUnital("target algebra has no unit")
    LA = commutator_lie(A)
    if not same_basis(j.source.basis, L.basis) or not same_basis(j.target.basis, LA.basis):
        raise InvalidLieHom("j must go L -> Lie(A)")
    rep = validate_hom(GradedHom(L, LA, j.images))
    if not rep.valid:
        raise InvalidLieHom("j is not a graded Lie hom", witness=rep.witnesses[:3])

    k = EnvelopingMap(A, j, u)
    I = ideal if ideal is not None else ideal_truncation(L, depth, order)
    T = I.tensor
    witnesses = []

    factorizes = True
    for b in range(L.dim):
        ib = straighten(L, (b,), depth, order)
        if k(ib.terms) != j.images[b]:
            factorizes = False
            witnesses.append(("k o i != j", b))

    kills = True
    for row in I.spanning.rows:
        if k(T.to_dict(row)):
            kills = False
            witnesses.append(("k(I) != 0", row))

    consistent = True
    for w in T.words:
        if k({w: 1}) != k(straighten(L, w, depth, order).terms):
            consistent = False
            witnesses.append(("k(w) != k(straighten(w))", w))

    graded = True
    images = {}
    for m in pbw_monomials(L, depth, order):
        img = k.word(m)
        images[m] = img
        g = word_degree(m, L.basis)
        if project_component(img, g) != img:
            graded = False
            witnesses.append(("degree", m, g))
    return UniversalReport(factorizes, kills, graded, consistent, images, witnesses)
