"""Graded free modules over the rationals and exact row reduction.

Scalars are :class:`fractions.Fraction`.  Vectors are sparse maps from
basis index to nonzero coefficient.  :class:`SubspaceBasis` keeps rows in
reduced row-echelon form and answers span-membership queries with a
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import BasisMismatch
from .groups import GroupTable

Scalar = Fraction


def scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point scalars are not accepted; use Fraction or int")
    return Fraction(x)


@dataclass(frozen=True)
class GradedBasis:
    group: GroupTable
    degrees: tuple
    labels: Optional[tuple] = None

    def __post_init__(self):
        for i, d in enumerate(self.degrees):
            if not 0 <= d < self.group.order:
                raise ValueError(f"degree {d} of basis element {i} is not a group element")
        if self.labels is not None and len(self.labels) != len(self.degrees):
            raise ValueError("label count does not match basis size")

    @property
    def size(self) -> int:
        return len(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"b{i}"

    @cached_property
    def _fibers(self) -> dict:
        out = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {d: tuple(ix) for d, ix in out.items()}

    def fiber(self, g: int) -> tuple:
        """Indices of the basis elements of degree ``g``."""
        return self._fibers.get(g, ())

    def vector(self, coeffs=None) -> "Vector":
        return Vector(self, coeffs)

    def e(self, i: int, c=1) -> "Vector":
        return Vector(self, {i: c})

    def zero(self) -> "Vector":
        return Vector(self)


def same_basis(a: GradedBasis, b: GradedBasis) -> bool:
    return a is b or a == b


class Vector:
    """Sparse exact-rational vector over a :class:`GradedBasis`."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: GradedBasis, coeffs=None):
        self.basis = basis
        d = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            n = basis.size
            for i, c in items:
                if not 0 <= i < n:
                    raise IndexError(f"basis index {i} out of range for size {n}")
                c = scalar(c)
                if c:
                    d[i] = d.get(i, 0) + c
            d = {i: d[i] for i in sorted(d) if d[i]}
        self.coeffs = d

    @classmethod
    def _raw(cls, basis, coeffs: dict) -> "Vector":
        # trusted constructor: coeffs already Fractions, nonzero
        v = cls.__new__(cls)
        v.basis = basis
        v.coeffs = {i: coeffs[i] for i in sorted(coeffs)}
        return v

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs.get(i, Fraction(0))

    def items(self):
        return self.coeffs.items()

    def support(self) -> tuple:
        return tuple(self.coeffs)

    def support_degrees(self) -> frozenset:
        return frozenset(self.basis.degrees[i] for i in self.coeffs)

    def is_homogeneous(self) -> bool:
        return len(self.support_degrees()) <= 1

    def degree(self) -> Optional[int]:
        """Degree of a nonzero homogeneous vector, else ``None``."""
        ds = self.support_degrees()
        return next(iter(ds)) if len(ds) == 1 else None

    def _check(self, other: "Vector"):
        if not same_basis(self.basis, other.basis):
            raise BasisMismatch("vectors live over different bases")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector._raw(self.basis, _axpy(dict(self.coeffs), 1, other.coeffs))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector._raw(self.basis, _axpy(dict(self.coeffs), -1, other.coeffs))

    def __neg__(self) -> "Vector":
        return Vector._raw(self.basis, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, c) -> "Vector":
        c = scalar(c)
        if not c:
            return Vector(self.basis)
        return Vector._raw(self.basis, {i: c * x for i, x in self.coeffs.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return same_basis(self.basis, other.basis) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{self.basis.label(i)}" for i, c in self.coeffs.items())


def linear_combination(basis: GradedBasis, terms: Iterable) -> Vector:
    """Sum of ``c * v`` over ``(c, v)`` pairs."""
    acc = {}
    for c, v in terms:
        if not same_basis(basis, v.basis):
            raise BasisMismatch("vector over a foreign basis")
        _axpy(acc, scalar(c), v.coeffs)
    return Vector._raw(basis, acc)


def project_component(v: Vector, g: int) -> Vector:
    """Restriction of ``v`` to the basis elements of degree ``g``."""
    degs = v.basis.degrees
    return Vector._raw(v.basis, {i: c for i, c in v.coeffs.items() if degs[i] == g})


def _axpy(acc: dict, a, x: dict) -> dict:
    """``acc += a * x`` in place on plain dicts, dropping zeros."""
    if not a:
        return acc
    for i, c in x.items():
        s = acc.get(i, 0) + a * c
        if s:
            acc[i] = s
        else:
            acc.pop(i, None)
    return acc


# -- row reduction -------------------------------------------------------

class Echelon:
    """Incremental reduced row-echelon form over plain sparse dicts.

    The pivot of a row is its smallest column index.  Each stored row has
    leading coefficient 1 and is zero in every other row's pivot column.
    ``combos[p]`` expresses the pivot-``p`` row over the inserted
    generators (by insertion number).
    """

    def __init__(self):
        self.rows: dict = {}
        self.combos: dict = {}
        self.count = 0

    def reduce(self, v: dict):
        """Reduce ``v`` against the rows.

        Returns ``(residual, used)`` where ``used`` maps pivot -> the
        multiple of that row that was subtracted.
        """
        r = dict(v)
        used = {}
        for p in sorted(self.rows):
            c = r.get(p)
            if c:
                used[p] = c
                _axpy(r, -c, self.rows[p])
        return r, used

    def insert(self, v: dict) -> Optional[int]:
        """Add a generator; returns the new pivot, or ``None`` if dependent."""
        k = self.count
        self.count += 1
        r, used = self.reduce(v)
        if not r:
            return None
        combo = {k: Fraction(1)}
        for p, c in used.items():
            _axpy(combo, -c, self.combos[p])
        p = min(r)
        lead = r[p]
        if lead != 1:
            inv = 1 / lead
            r = {i: c * inv for i, c in r.items()}
            combo = {i: c * inv for i, c in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, r)
                _axpy(self.combos[q], -c, combo)
        self.rows[p] = r
        self.combos[p] = combo
        return p

    @property
    def rank(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Membership:
    """Result of a span-membership query.

    ``member`` decides the query.  When true, ``coefficients`` reproduces
    the query over the generators.  When false, ``witness`` is the first
    nonzero coordinate of ``residual``, the query reduced modulo the span.
    """

    member: bool
    coefficients: Optional[tuple] = None
    witness: Optional[int] = None
    residual: Optional[Vector] = field(default=None, compare=False)

    def __bool__(self):
        return self.member


class SubspaceBasis:
    """Span of a list of vectors, stored in reduced row-echelon form."""

    def __init__(self, ambient: GradedBasis, generators: Sequence[Vector] = ()):
        self.ambient = ambient
        self.generators = []
        self._ech = Echelon()
        for v in generators:
            self.add(v)

    def add(self, v: Vector) -> bool:
        if not same_basis(self.ambient, v.basis):
            raise BasisMismatch("generator over a foreign basis")
        self.generators.append(v)
        return self._ech.insert(v.coeffs) is not None

    @property
    def rank(self) -> int:
        return self._ech.rank

    @property
    def dim(self) -> int:
        return self._ech.rank

    @property
    def pivots(self) -> tuple:
        return tuple(sorted(self._ech.rows))

    @property
    def rows(self) -> list:
        return [Vector._raw(self.ambient, self._ech.rows[p]) for p in self.pivots]

    def contains(self, query: Vector) -> Membership:
        if not same_basis(self.ambient, query.basis):
            raise BasisMismatch("query over a foreign basis")
        r, used = self._ech.reduce(query.coeffs)
        if r:
            res = Vector._raw(self.ambient, r)
            return Membership(False, witness=min(r), residual=res)
        acc = {}
        for p, c in used.items():
            _axpy(acc, c, self._ech.combos[p])
        coeffs = tuple(acc.get(k, Fraction(0)) for k in range(len(self.generators)))
        return Membership(True, coefficients=coeffs, residual=Vector(self.ambient))

    def __contains__(self, v: Vector) -> bool:
        return self.contains(v).member

    def reduce(self, v: Vector) -> Vector:
        """Normal form of ``v`` modulo the span."""
        r, _ = self._ech.reduce(v.coeffs)
        return Vector._raw(self.ambient, r)


def row_reduce(vectors: Sequence[Vector], ambient: Optional[GradedBasis] = None) -> SubspaceBasis:
    if ambient is None:
        if not vectors:
            raise ValueError("need an ambient basis for an empty list")
        ambient = vectors[0].basis
    return SubspaceBasis(ambient, vectors)


def span_membership(generators: Sequence[Vector], query: Vector) -> Membership:
    """Decide whether ``query`` lies in the span of ``generators``."""
    for v in generators:
        if not same_basis(v.basis, query.basis):
            raise BasisMismatch("generators and query over different bases")
    return SubspaceBasis(query.basis, generators).contains(query)


# -- linear systems on plain dicts ---------------------------------------

def solve(columns: Sequence[dict], rhs: dict):
    """Find ``x`` with ``sum_k x[k] * columns[k] == rhs``, or ``None``.

    Columns and the right-hand side are sparse dicts over equation
    indices.  Free variables are set to zero.
    """
    ech = Echelon()
    for col in columns:
        ech.insert(col)
    r, used = ech.reduce(rhs)
    if r:
        return None
    acc = {}
    for p, c in used.items():
        _axpy(acc, c, ech.combos[p])
    return [acc.get(k, Fraction(0)) for k in range(len(columns))]


def nullspace(columns: Sequence[dict]) -> list:
    """Basis of ``{x : sum_k x[k] * columns[k] == 0}`` as dicts over k."""
    # reduce the transposed system: rows = equations, unknowns = columns
    eq = {}
    for k, col in enumerate(columns):
        for i, c in col.items():
            eq.setdefault(i, {})[k] = c
    ech = Echelon()
    for i in sorted(eq):
        ech.insert(eq[i])
    pivots = set(ech.rows)
    out = []
    for f in range(len(columns)):
        if f in pivots:
            continue
        x = {f: Fraction(1)}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(dict(sorted(x.items())))
    return out
