"""Seeded random structure-constant algebras for property suites.

All generators take a ``random.Random`` instance; callers seed it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import CLASSICAL, NONCOMMUTATIVE, GradedAlgebra
from .groups import GroupTable
from .linear import GradedBasis, Vector, solve

FREE = "free"


def _targets(basis: GradedBasis, g: int, h: int, mode: str):
    G = basis.group
    if mode == CLASSICAL:
        return basis.fiber(G.mul(g, h))
    if mode == NONCOMMUTATIVE:
        gh, hg = G.mul(g, h), G.mul(h, g)
        return basis.fiber(gh) + (basis.fiber(hg) if hg != gh else ())
    return tuple(range(basis.size))


def random_degrees(G: GroupTable, dim: int, rng: random.Random, include_identity=False):
    degs = [rng.randrange(G.order) for _ in range(dim)]
    if include_identity and dim:
        degs[0] = G.identity
    return tuple(degs)


def random_structure_algebra(G: GroupTable, rng: random.Random, dim: int = 4,
                             mode: str = "mixed", density: float = 0.5,
                             lo: int = -2, hi: int = 2) -> GradedAlgebra:
    """Sparse random constants with entries in ``lo..hi``.

    ``mode`` restricts where products may land: ``classical`` (fiber gh),
    ``noncommutative`` (fibers gh and hg), ``free`` (anywhere) or
    ``mixed`` (one of the three, chosen at random).
    """
    if mode == "mixed":
        mode = rng.choice((CLASSICAL, NONCOMMUTATIVE, FREE))
    basis = GradedBasis(G, random_degrees(G, dim, rng))
    consts = {}
    for i in range(dim):
        for j in range(dim):
            if rng.random() >= density:
                continue
            tg = _targets(basis, basis.degrees[i], basis.degrees[j], mode)
            coeffs = {k: rng.randint(lo, hi) for k in tg if rng.random() < 0.6}
            v = Vector(basis, coeffs)
            if v:
                consts[(i, j)] = v
    return GradedAlgebra(basis, consts)


def _random_invertible_block(size: int, rng: random.Random, lo=-2, hi=2):
    while True:
        cols = [{r: Fraction(rng.randint(lo, hi)) for r in range(size)} for _ in range(size)]
        cols = [{r: c for r, c in col.items() if c} for col in cols]
        # invertible iff every unit vector is reachable
        if all(solve(cols, {r: Fraction(1)}) is not None for r in range(size)):
            return cols


def random_unital_nc_algebra(G: GroupTable, rng: random.Random, dim: int = 5,
                             density: float = 0.6, lo: int = -2, hi: int = 2,
                             change_basis: bool = True) -> GradedAlgebra:
    """Random noncommutatively graded algebra with a two-sided unit.

    The unit starts as basis element 0 in degree e.  With
    ``change_basis`` the algebra is rewritten in a random basis that
    respects the fibers, so the unit becomes a dense vector in ``A_e``.
    """
    basis = GradedBasis(G, random_degrees(G, dim, rng, include_identity=True))
    consts = {}
    for j in range(dim):
        consts[(0, j)] = basis.e(j)
        consts[(j, 0)] = basis.e(j)
    for i in range(1, dim):
        for j in range(1, dim):
            if rng.random() >= density:
                continue
            tg = _targets(basis, basis.degrees[i], basis.degrees[j], NONCOMMUTATIVE)
            v = Vector(basis, {k: rng.randint(lo, hi) for k in tg if rng.random() < 0.7})
            if v:
                consts[(i, j)] = v
    A = GradedAlgebra(basis, consts)
    if not change_basis:
        return A
    return change_of_basis(A, random_graded_basis_change(basis, rng, lo, hi))


def random_graded_basis_change(basis: GradedBasis, rng: random.Random, lo=-2, hi=2) -> list:
    """Columns of a random invertible map preserving every degree fiber."""
    cols = [None] * basis.size
    for g in range(basis.group.order):
        fib = basis.fiber(g)
        if not fib:
            continue
        block = _random_invertible_block(len(fib), rng, lo, hi)
        for c, col in zip(fib, block):
            cols[c] = Vector(basis, {fib[r]: x for r, x in col.items()})
    return cols


def change_of_basis(A: GradedAlgebra, cols: list) -> GradedAlgebra:
    """Structure constants of ``A`` in the basis ``cols`` (old coordinates)."""
    raw = [c.coeffs for c in cols]

    def coords(v: Vector) -> Vector:
        x = solve(raw, v.coeffs)
        if x is None:
            raise ValueError("basis change is not invertible")
        return Vector(A.basis, enumerate(x))

    consts = {}
    for i, ci in enumerate(cols):
        for j, cj in enumerate(cols):
            p = A.product(ci, cj)
            if p:
                consts[(i, j)] = coords(p)
    return GradedAlgebra(A.basis, consts)
