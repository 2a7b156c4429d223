"""Finite semigroups given by Cayley tables, and their involutive morphisms.

Elements are dense indices 0..n-1 and the Cayley table is the single
source of structure: table[x][y] is the product x*y. Standard families
use a fixed, documented element order so example vectors stay stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import BadParams, EntryOutOfRange, NotAssociative, NotInvolutive, NotMorphism, TooLarge

# Morphism enumeration brute-forces all n! permutations.
MAX_MORPHISM_ORDER = 8
# Full census filters all n^(n^2) tables.
MAX_CENSUS_ORDER = 3


class MorphismKind(str, Enum):
    AUTOMORPHISM = "auto"
    ANTI_AUTOMORPHISM = "anti"


@dataclass(frozen=True)
class FiniteSemigroup:
    """Associative magma on {0..n-1}; an identity is detected, not required."""

    table: tuple[tuple[int, ...], ...]
    name: str | None = None
    identity: int | None = None

    @property
    def n(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def elements(self) -> range:
        return range(self.n)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in self.elements() for y in self.elements())


@dataclass(frozen=True)
class InvolutiveMorphism:
    """Permutation sigma with sigma(sigma(x)) = x obeying its kind's law.

    kind "auto" means sigma(xy) = sigma(x)sigma(y), kind "anti" means
    sigma(xy) = sigma(y)sigma(x). On abelian semigroups the same map can
    qualify as either kind; the declared kind is kept as data.
    """

    map: tuple[int, ...]
    kind: MorphismKind

    def __call__(self, x: int) -> int:
        return self.map[x]


@dataclass(frozen=True)
class ElementOrbit:
    """Eventual cycle data of the power sequence x, x^2, x^3, ...

    x^(index + period) = x^index with both parameters minimal, >= 1.
    """

    element: int
    index: int
    period: int


def _first_nonassociative_triple(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    return (x, y, z)
    return None


def _find_identity(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def validate_semigroup(table: Sequence[Sequence[int]], name: str | None = None) -> FiniteSemigroup:
    """Check a Cayley table and return the wrapped semigroup.

    Raises EntryOutOfRange on a bad cell and NotAssociative with the
    first failing triple in row-major scan order.
    """
    n = len(table)
    if n < 1:
        raise BadParams("semigroup needs at least one element")
    rows = []
    for x, row in enumerate(table):
        if len(row) != n:
            raise BadParams(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise EntryOutOfRange(x, y, v, n)
        rows.append(tuple(row))
    t = tuple(rows)
    bad = _first_nonassociative_triple(t)
    if bad is not None:
        raise NotAssociative(*bad)
    return FiniteSemigroup(table=t, name=name, identity=_find_identity(t))


def center(sg: FiniteSemigroup) -> list[int]:
    """Elements commuting with everything, ascending."""
    t = sg.table
    return [z for z in sg.elements() if all(t[z][x] == t[x][z] for x in sg.elements())]


def validate_morphism(sg: FiniteSemigroup, map_: Sequence[int], kind: MorphismKind) -> InvolutiveMorphism:
    """Check an explicit map against the involution and structure laws."""
    n = sg.n
    if len(map_) != n or sorted(map_) != list(range(n)):
        raise NotMorphism(f"map must be a permutation of 0..{n - 1}")
    m = tuple(map_)
    if any(m[m[x]] != x for x in range(n)):
        raise NotInvolutive("map composed with itself is not the identity")
    t = sg.table
    if kind is MorphismKind.AUTOMORPHISM:
        ok = all(m[t[x][y]] == t[m[x]][m[y]] for x in range(n) for y in range(n))
    else:
        ok = all(m[t[x][y]] == t[m[y]][m[x]] for x in range(n) for y in range(n))
    if not ok:
        raise NotMorphism(f"map does not satisfy the {kind.value} structure law")
    return InvolutiveMorphism(map=m, kind=kind)


def enumerate_involutive_morphisms(sg: FiniteSemigroup, kind: MorphismKind) -> list[InvolutiveMorphism]:
    """All involutive morphisms of the given kind, in lexicographic map order.

    Brute force over permutations; raises TooLarge past MAX_MORPHISM_ORDER.
    A map valid for both kinds on an abelian semigroup is emitted for
    whichever kind was requested, never merged across kinds.
    """
    n = sg.n
    if n > MAX_MORPHISM_ORDER:
        raise TooLarge(f"morphism enumeration caps at order {MAX_MORPHISM_ORDER}, got {n}")
    t = sg.table
    out = []
    for perm in itertools.permutations(range(n)):
        if any(perm[perm[x]] != x for x in range(n)):
            continue
        if kind is MorphismKind.AUTOMORPHISM:
            ok = all(perm[t[x][y]] == t[perm[x]][perm[y]] for x in range(n) for y in range(n))
        else:
            ok = all(perm[t[x][y]] == t[perm[y]][perm[x]] for x in range(n) for y in range(n))
        if ok:
            out.append(InvolutiveMorphism(map=perm, kind=kind))
    return out


def index_period(sg: FiniteSemigroup, x: int) -> ElementOrbit:
    """Minimal (k, p) with x^(k+p) = x^k; both >= 1 on a finite semigroup."""
    if not 0 <= x < sg.n:
        raise BadParams(f"element {x} outside 0..{sg.n - 1}")
    seen: dict[int, int] = {}
    power, step = x, 1
    while power not in seen:
        seen[power] = step
        power = sg.mul(power, x)
        step += 1
    k = seen[power]
    return ElementOrbit(element=x, index=k, period=step - k)


def cyclic_group(n: int) -> FiniteSemigroup:
    """Z/nZ under addition, elements 0..n-1."""
    if n < 1:
        raise BadParams("cyclic group needs n >= 1")
    table = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    return FiniteSemigroup(table=table, name=f"C{n}", identity=0)


def null_semigroup(n: int) -> FiniteSemigroup:
    """Constant product x*y = 0."""
    if n < 1:
        raise BadParams("null semigroup needs n >= 1")
    table = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return FiniteSemigroup(table=table, name=f"null{n}", identity=0 if n == 1 else None)


def left_zero(n: int) -> FiniteSemigroup:
    """x*y = x."""
    if n < 1:
        raise BadParams("left zero semigroup needs n >= 1")
    table = tuple(tuple(x for _ in range(n)) for x in range(n))
    return FiniteSemigroup(table=table, name=f"leftzero{n}", identity=0 if n == 1 else None)


def right_zero(n: int) -> FiniteSemigroup:
    """x*y = y."""
    if n < 1:
        raise BadParams("right zero semigroup needs n >= 1")
    table = tuple(tuple(y for y in range(n)) for _ in range(n))
    return FiniteSemigroup(table=table, name=f"rightzero{n}", identity=0 if n == 1 else None)


# One-line notations in lexicographic order; index 0 is the identity.
_S3_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def symmetric_group_3() -> FiniteSemigroup:
    """S3 as permutations of {0,1,2} in lexicographic one-line order.

    Product x*y is the composition "apply y first, then x", i.e.
    (x*y)(i) = perm_x[perm_y[i]].
    """
    idx = {p: i for i, p in enumerate(_S3_PERMS)}
    table = tuple(
        tuple(idx[tuple(p[q[i]] for i in range(3))] for q in _S3_PERMS) for p in _S3_PERMS
    )
    return FiniteSemigroup(table=table, name="S3", identity=0)


def s3_inversion() -> InvolutiveMorphism:
    """x -> x^(-1) on S3, an involutive anti-automorphism."""
    sg = symmetric_group_3()
    inv = []
    for x in sg.elements():
        inv.append(next(y for y in sg.elements() if sg.mul(x, y) == 0 and sg.mul(y, x) == 0))
    return InvolutiveMorphism(map=tuple(inv), kind=MorphismKind.ANTI_AUTOMORPHISM)


def direct_product(a: FiniteSemigroup, b: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; pair (x, y) gets index x * b.n + y."""
    nb = b.n
    table = tuple(
        tuple(a.mul(x1, x2) * nb + b.mul(y1, y2) for x2 in a.elements() for y2 in b.elements())
        for x1 in a.elements()
        for y1 in b.elements()
    )
    ident = None
    if a.identity is not None and b.identity is not None:
        ident = a.identity * nb + b.identity
    name = None
    if a.name and b.name:
        name = f"{a.name}x{b.name}"
    return FiniteSemigroup(table=table, name=name, identity=ident)


_FAMILIES = {
    "cyclic": cyclic_group,
    "null": null_semigroup,
    "left_zero": left_zero,
    "right_zero": right_zero,
}


def build_standard(family: str, n: int | None = None,
                   factors: tuple[FiniteSemigroup, FiniteSemigroup] | None = None) -> FiniteSemigroup:
    """Dispatch to a named standard family.

    Sized families ("cyclic", "null", "left_zero", "right_zero") need n;
    "sym3" takes no parameter; "product" needs factors.
    """
    if family in _FAMILIES:
        if n is None:
            raise BadParams(f"family '{family}' needs n")
        return _FAMILIES[family](n)
    if family == "sym3":
        if n not in (None, 6):
            raise BadParams("sym3 has fixed order 6")
        return symmetric_group_3()
    if family == "product":
        if factors is None:
            raise BadParams("family 'product' needs factors")
        return direct_product(*factors)
    raise BadParams(f"unknown family '{family}'")


def enumerate_all_semigroups(n: int) -> Iterator[FiniteSemigroup]:
    """Every associative Cayley table on 0..n-1, in lexicographic table order.

    Labeled census (no isomorphism reduction): 1 table for n=1, 8 for
    n=2, 113 for n=3. Raises TooLarge past MAX_CENSUS_ORDER.
    """
    if n < 1:
        raise BadParams("census needs n >= 1")
    if n > MAX_CENSUS_ORDER:
        raise TooLarge(f"census caps at order {MAX_CENSUS_ORDER}, got {n}")
    for flat in itertools.product(range(n), repeat=n * n):
        table = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if _first_nonassociative_triple(table) is None:
            yield FiniteSemigroup(table=table, identity=_find_identity(table))
