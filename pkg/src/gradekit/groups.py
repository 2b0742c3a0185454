"""Finite groups as Cayley tables, homomorphisms, normal subgroups, quotients.

Elements are dense indices ``0..order-1``.  All objects are immutable
once validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional, Sequence

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotHomomorphism,
    NotNormal,
    NotSubgroup,
)

MAX_ORDER = 64


@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple
    identity: int
    inverses: tuple
    name: str = ""
    elements: Optional[tuple] = field(default=None, compare=False)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def prod(self, elems) -> int:
        acc = self.identity
        for g in elems:
            acc = self.table[acc][g]
        return acc

    def commute(self, g: int, h: int) -> bool:
        return self.table[g][h] == self.table[h][g]

    def is_abelian(self) -> bool:
        return all(self.commute(g, h) for g in range(self.order) for h in range(g))

    def label(self, g: int) -> str:
        if self.elements is not None:
            return self.elements[g]
        return str(g)

    def index(self, label: str) -> int:
        """Element index from its label (inverse of :meth:`label`)."""
        if self.elements is not None and label in self.elements:
            return self.elements.index(label)
        return int(label)

    def __repr__(self):
        return f"GroupTable({self.name or '?'}, order={self.order})"


def build_group(table: Sequence[Sequence[int]], name: str = "", elements=None) -> GroupTable:
    """Validate a raw Cayley table and derive identity and inverses."""
    n = len(table)
    if n == 0 or n > MAX_ORDER:
        raise NotClosed(f"group order must be in 1..{MAX_ORDER}, got {n}", witness=n)
    rows = []
    for g, row in enumerate(table):
        if len(row) != n:
            raise NotClosed(f"row {g} has length {len(row)}, expected {n}", witness=g)
        for h, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise NotClosed(f"entry table[{g}][{h}] = {x!r} out of range", witness=(g, h))
        rows.append(tuple(row))
    t = tuple(rows)

    identity = None
    for e in range(n):
        if all(t[e][g] == g and t[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")

    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAssociative(f"(ab)c != a(bc) for {(a, b, c)}", witness=(a, b, c))

    inverses = []
    for g in range(n):
        for h in range(n):
            if t[g][h] == identity and t[h][g] == identity:
                inverses.append(h)
                break
        else:
            raise NoInverse(f"element {g} has no inverse", witness=g)

    if elements is not None:
        elements = tuple(elements)
        if len(elements) != n:
            raise NotClosed("element label count does not match order", witness=len(elements))
    return GroupTable(n, t, identity, tuple(inverses), name, elements)


# -- fixture generators --------------------------------------------------

def _cycle_notation(perm) -> str:
    """1-based cycle notation, e.g. ``(123)``; the identity is ``e``."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "e"


def permutation_group(perms, name: str = "") -> GroupTable:
    """Cayley table of a list of permutations closed under composition.

    Composition is right-to-left: ``(s*t)(i) = s(t(i))``.
    """
    perms = [tuple(p) for p in perms]
    pos = {p: i for i, p in enumerate(perms)}
    table = []
    for s in perms:
        row = []
        for t in perms:
            st = tuple(s[t[i]] for i in range(len(t)))
            if st not in pos:
                raise NotClosed("permutations not closed under composition", witness=(s, t))
            row.append(pos[st])
        table.append(row)
    return build_group(table, name, [_cycle_notation(p) for p in perms])


def symmetric_group(n: int) -> GroupTable:
    # lexicographic order puts the identity at index 0
    return permutation_group(list(permutations(range(n))), f"S{n}")


def cyclic_group(n: int) -> GroupTable:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return build_group(table, f"C{n}", [str(a) for a in range(n)])


def trivial_group() -> GroupTable:
    return build_group([[0]], "C1", ["e"])


def dihedral_group(n: int) -> GroupTable:
    """Symmetries of the regular n-gon as permutations of its vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    elems = [tuple(range(n))]
    frontier = list(elems)
    while frontier:
        nxt = []
        for p in frontier:
            for s in (rot, ref):
                q = tuple(s[p[i]] for i in range(n))
                if q not in elems:
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    elems.sort()
    return permutation_group(elems, f"D{n}")


def direct_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    n2 = g2.order
    n = g1.order * n2
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            table[a][b] = g1.mul(a // n2, b // n2) * n2 + g2.mul(a % n2, b % n2)
    labels = [f"({g1.label(a // n2)},{g2.label(a % n2)})" for a in range(n)]
    return build_group(table, f"{g1.name}x{g2.name}", labels)


# -- homomorphisms -------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    domain: GroupTable
    codomain: GroupTable
    images: tuple
    kind: str

    def __call__(self, g: int) -> int:
        return self.images[g]

    def image(self) -> frozenset:
        return frozenset(self.images)

    def preimage(self, h: int) -> tuple:
        return tuple(g for g, x in enumerate(self.images) if x == h)

    @property
    def is_mono(self) -> bool:
        return self.kind in ("mono", "iso")

    @property
    def is_epi(self) -> bool:
        return self.kind in ("epi", "iso")


def _kind(images, cod_order) -> str:
    injective = len(set(images)) == len(images)
    surjective = len(set(images)) == cod_order
    if injective and surjective:
        return "iso"
    if injective:
        return "mono"
    if surjective:
        return "epi"
    return "general"


def build_hom(dom: GroupTable, cod: GroupTable, images: Sequence[int]) -> GroupHom:
    images = tuple(images)
    if len(images) != dom.order:
        raise NotHomomorphism(
            f"expected {dom.order} images, got {len(images)}", witness=len(images)
        )
    for g, x in enumerate(images):
        if not 0 <= x < cod.order:
            raise NotHomomorphism(f"image of {g} out of range", witness=g)
    for g, h in product(range(dom.order), repeat=2):
        if images[dom.mul(g, h)] != cod.mul(images[g], images[h]):
            raise NotHomomorphism(f"f(gh) != f(g)f(h) at {(g, h)}", witness=(g, h))
    return GroupHom(dom, cod, images, _kind(images, cod.order))


def identity_hom(G: GroupTable) -> GroupHom:
    return build_hom(G, G, range(G.order))


def compose_hom(f: GroupHom, g: GroupHom) -> GroupHom:
    """``f o g`` (apply ``g`` first)."""
    if g.codomain != f.domain:
        raise NotHomomorphism("codomain/domain mismatch in composition")
    return build_hom(g.domain, f.codomain, [f.images[x] for x in g.images])


# -- subgroups and quotients ---------------------------------------------

@dataclass(frozen=True)
class NormalSubgroup:
    parent: GroupTable
    members: tuple

    def __contains__(self, g):
        return g in self.members


def subgroup_closure_errors(G: GroupTable, members) -> None:
    ms = set(members)
    if G.identity not in ms:
        raise NotSubgroup("identity missing", witness=G.identity)
    for a in ms:
        if G.inv(a) not in ms:
            raise NotSubgroup(f"inverse of {a} missing", witness=a)
        for b in ms:
            if G.mul(a, b) not in ms:
                raise NotSubgroup(f"product of {a} and {b} missing", witness=(a, b))


def normal_subgroup(G: GroupTable, members) -> NormalSubgroup:
    ms = sorted(set(members))
    for m in ms:
        if not 0 <= m < G.order:
            raise NotSubgroup(f"member {m} out of range", witness=m)
    subgroup_closure_errors(G, ms)
    mset = set(ms)
    for g in range(G.order):
        for n in ms:
            c = G.mul(G.mul(g, n), G.inv(g))
            if c not in mset:
                raise NotNormal(f"g n g^-1 not in N for g={g}, n={n}", witness=(g, n))
    return NormalSubgroup(G, tuple(ms))


def kernel(f: GroupHom) -> NormalSubgroup:
    return normal_subgroup(f.domain, f.preimage(f.codomain.identity))


def quotient_group(G: GroupTable, N: NormalSubgroup):
    """``G/N`` over coset representatives, plus the canonical epimorphism.

    Cosets are ordered by their smallest member, which is also the
    representative.
    """
    if N.parent != G:
        raise NotNormal("subgroup belongs to a different group")
    # re-validate: NormalSubgroup may have been built by hand
    N = normal_subgroup(G, N.members)
    coset_of = [None] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] is not None:
            continue
        k = len(reps)
        reps.append(g)
        for n in N.members:
            coset_of[G.mul(g, n)] = k
    table = [[coset_of[G.mul(a, b)] for b in reps] for a in reps]
    labels = None
    if G.elements is not None:
        labels = ["{" + ",".join(G.label(x) for x in range(G.order) if coset_of[x] == k) + "}"
                  for k in range(len(reps))]
    name = f"{G.name}/{{{','.join(G.label(m) for m in N.members)}}}"
    Q = build_group(table, name, labels)
    pi = build_hom(G, Q, coset_of)
    return Q, pi
