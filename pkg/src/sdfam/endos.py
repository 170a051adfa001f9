"""Endomorphisms and automorphism sets on a finite group.

Maps are stored as full value tables, so every structural predicate is an
exhaustive scan; at the orders this package targets that is both fast and
correct by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    HomomorphismError,
    HypothesisError,
    InvalidParameterError,
    TheoremViolationError,
)
from .fields import Element, FiniteField, additive_group
from .groups import FiniteGroup, digits_of, index_of_digits


def _hom_witness(group: FiniteGroup, table: Sequence[int]) -> Optional[tuple[int, int]]:
    """First (x, y) with f(x+y) != f(x)+f(y), or None."""
    tab = group.table
    for x in range(group.order):
        row = tab[x]
        fx = table[x]
        frow = tab[fx]
        for y in range(group.order):
            if table[row[y]] != frow[table[y]]:
                return (x, y)
    return None


class Endomorphism:
    """An additive endomorphism, validated against the group table."""

    def __init__(self, group: FiniteGroup, table: Sequence[int]):
        tab = tuple(int(t) for t in table)
        if len(tab) != group.order or any(t not in range(group.order) for t in tab):
            raise InvalidParameterError("map table must list one element index per element")
        witness = _hom_witness(group, tab)
        if witness is not None:
            x, y = witness
            raise HomomorphismError(witness, f"f({x}+{y}) != f({x})+f({y})")
        self.group = group
        self.table = tab

    @classmethod
    def _trusted(cls, group: FiniteGroup, table: Sequence[int]) -> "Endomorphism":
        # For compositions and inverses of already-validated maps.
        obj = object.__new__(cls)
        obj.group = group
        obj.table = tuple(table)
        return obj

    def __call__(self, x: int) -> int:
        return self.table[x]

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """self after other."""
        if other.group is not self.group:
            raise InvalidParameterError("cannot compose maps on different groups")
        t = self.table
        return Endomorphism._trusted(self.group, tuple(t[o] for o in other.table))

    @property
    def is_zero(self) -> bool:
        return all(t == 0 for t in self.table)

    @property
    def is_identity(self) -> bool:
        return all(t == x for x, t in enumerate(self.table))

    @property
    def is_bijective(self) -> bool:
        return len(set(self.table)) == self.group.order

    def inverse(self) -> "Endomorphism":
        if not self.is_bijective:
            raise InvalidParameterError("cannot invert a non-bijective map")
        inv = [0] * self.group.order
        for x, y in enumerate(self.table):
            inv[y] = x
        return Endomorphism._trusted(self.group, tuple(inv))

    def pow(self, k: int) -> "Endomorphism":
        if k < 0:
            return self.inverse().pow(-k)
        out = identity_endo(self.group)
        for _ in range(k):
            out = self.compose(out)
        return out

    def order(self) -> int:
        if not self.is_bijective:
            raise InvalidParameterError("only bijective maps return to the identity")
        n, acc = 1, self
        while not acc.is_identity:
            acc = acc.compose(self)
            n += 1
        return n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.group is other.group and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Endomorphism({list(self.table)!r})"


def identity_endo(group: FiniteGroup) -> Endomorphism:
    return Endomorphism._trusted(group, tuple(range(group.order)))


def zero_endo(group: FiniteGroup) -> Endomorphism:
    return Endomorphism._trusted(group, (0,) * group.order)


def make_endo(group: FiniteGroup, table: Sequence[int]) -> Endomorphism:
    """Validate a raw table as an endomorphism (witness pair on failure)."""
    return Endomorphism(group, table)


def scalar_endo(group: FiniteGroup, c: int) -> Endomorphism:
    """x -> c*x (c-fold sum) on a commutative group."""
    if not group.commutative:
        raise InvalidParameterError("scalar maps are only additive on commutative groups")
    if c < 0:
        raise InvalidParameterError("scalar must be nonnegative")
    table = []
    for x in group.elements():
        acc, base, e = 0, x, c
        while e:
            if e & 1:
                acc = group.add(acc, base)
            base = group.add(base, base)
            e >>= 1
        table.append(acc)
    return Endomorphism(group, table)


def _elementary_abelian_shape(group: FiniteGroup) -> tuple[int, int]:
    """(p, k) if the group has the canonical (Z_p)^k table, else an error."""
    cached = getattr(group, "_ea_shape", None)
    if cached is not None:
        return cached
    v = group.order
    p = 2
    while v % p:
        p += 1
    k, m = 0, v
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise InvalidParameterError(f"group order {v} is not a prime power")
    digs = [digits_of(i, p, k) for i in range(v)]
    for x in range(v):
        dx = digs[x]
        row = group.table[x]
        for y in range(v):
            expected = index_of_digits([(a + b) % p for a, b in zip(dx, digs[y])], p)
            if row[y] != expected:
                raise InvalidParameterError(
                    "group table does not match the canonical elementary abelian encoding")
    group._ea_shape = (p, k)
    return (p, k)


def matrix_endo(group: FiniteGroup, rows: Sequence[Sequence[int]]) -> Endomorphism:
    """Digit-vector map x -> M.x mod p on a canonical elementary abelian group."""
    p, k = _elementary_abelian_shape(group)
    mat = [tuple(int(e) % p for e in row) for row in rows]
    if len(mat) != k or any(len(r) != k for r in mat):
        raise InvalidParameterError(f"matrix must be {k}x{k} for this group")
    table = []
    for x in group.elements():
        d = digits_of(x, p, k)
        out = [sum(mat[r][c] * d[c] for c in range(k)) % p for r in range(k)]
        table.append(index_of_digits(out, p))
    return Endomorphism(group, table)


def field_mult_endo(field: FiniteField, a: Element) -> Endomorphism:
    """Left multiplication by ``a`` on the additive group of the field."""
    group = additive_group(field)
    a = tuple(int(c) for c in a)
    table = [field.element_index(field.mul(a, field.element_at(x))) for x in group.elements()]
    return Endomorphism(group, table)


@dataclass(frozen=True)
class MapCheck:
    """A raw self-map plus the verdicts of the endomorphism/bijectivity scans."""

    group: FiniteGroup
    table: tuple[int, ...]
    is_endomorphism: bool
    is_bijective: bool
    witness: Optional[tuple[int, int]]  # homomorphism failure pair, if any

    def endo(self) -> Endomorphism:
        if not self.is_endomorphism:
            raise HomomorphismError(self.witness)
        return Endomorphism._trusted(self.group, self.table)


def one_minus(alpha: Endomorphism) -> MapCheck:
    """The pointwise map x -> x - alpha(x), with validation flags.

    The result is returned even when it is not an endomorphism, because the
    segment constructions quantify over exactly that situation.
    """
    g = alpha.group
    table = tuple(g.sub(x, alpha.table[x]) for x in g.elements())
    witness = _hom_witness(g, table)
    return MapCheck(g, table, witness is None, len(set(table)) == g.order, witness)


def difference_table(alpha: Endomorphism, beta: Endomorphism) -> tuple[int, ...]:
    """Value table of the pointwise difference x -> alpha(x) - beta(x)."""
    g = alpha.group
    if beta.group is not g:
        raise InvalidParameterError("maps live on different groups")
    return tuple(g.sub(alpha.table[x], beta.table[x]) for x in g.elements())


def _ensure_same_group(maps: Sequence[Endomorphism]) -> FiniteGroup:
    if not maps:
        raise InvalidParameterError("empty map set")
    group = maps[0].group
    if any(m.group is not group for m in maps):
        raise InvalidParameterError("all maps must live on the same group")
    return group


def dedup_endos(maps: Sequence[Endomorphism]) -> tuple[Endomorphism, ...]:
    """Drop duplicate tables, preserving first-seen order (set semantics)."""
    _ensure_same_group(maps)
    seen: dict[tuple, Endomorphism] = {}
    for m in maps:
        seen.setdefault(m.table, m)
    return tuple(seen.values())


def closure(gens: Sequence[Endomorphism]) -> tuple[Endomorphism, ...]:
    """Composition closure of bijective generators, sorted by value table."""
    group = _ensure_same_group(gens)
    for g in gens:
        if not g.is_bijective:
            raise InvalidParameterError("closure generators must be bijective")
    seen = {identity_endo(group).table: identity_endo(group)}
    frontier = []
    for g in gens:
        if g.table not in seen:
            seen[g.table] = g
            frontier.append(g)
    gen_list = list(dict.fromkeys(gens, None))
    while frontier:
        nxt = []
        for a in gen_list:
            for b in frontier:
                c = a.compose(b)
                if c.table not in seen:
                    seen[c.table] = c
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda e: e.table))


def ensure_automorphism_group(maps: Sequence[Endomorphism]) -> FiniteGroup:
    """Check the list is a duplicate-free group of automorphisms."""
    group = _ensure_same_group(maps)
    if len({m.table for m in maps}) != len(maps):
        raise InvalidParameterError("automorphism group lists one map per element")
    tables = {m.table for m in maps}
    if identity_endo(group).table not in tables:
        raise InvalidParameterError("automorphism group must contain the identity")
    for m in maps:
        if not m.is_bijective:
            raise InvalidParameterError("automorphism group members must be bijective")
    for a in maps:
        for b in maps:
            if a.compose(b).table not in tables:
                raise InvalidParameterError("map list is not closed under composition")
    return group


@dataclass(frozen=True)
class FpfWitness:
    """Two distinct maps agreeing on a nonzero element."""

    x: int
    first: Endomorphism
    second: Endomorphism


def fpf_failure(maps: Sequence[Endomorphism]) -> Optional[FpfWitness]:
    """Witness against |S(x)| = |S| on the nonzero elements, or None."""
    maps = dedup_endos(maps)
    group = maps[0].group
    for x in group.nonzero():
        seen: dict[int, Endomorphism] = {}
        for m in maps:
            val = m.table[x]
            if val in seen:
                return FpfWitness(x, seen[val], m)
            seen[val] = m
    return None


def is_fpf(maps: Sequence[Endomorphism]) -> bool:
    return fpf_failure(maps) is None


def orbit(maps: Sequence[Endomorphism], x: int) -> tuple[int, ...]:
    """S(x) = { f(x) : f in S } as a sorted duplicate-free tuple."""
    return tuple(sorted({m.table[x] for m in maps}))


def cyclic_generated(alpha: Endomorphism) -> tuple[Endomorphism, ...]:
    """The cyclic group of compositions generated by a bijective map."""
    if not alpha.is_bijective:
        raise InvalidParameterError("generator must be bijective")
    out = [identity_endo(alpha.group)]
    acc = alpha
    while not acc.is_identity:
        out.append(acc)
        acc = acc.compose(alpha)
    return tuple(out)


def center(phi: Sequence[Endomorphism]) -> tuple[Endomorphism, ...]:
    ensure_automorphism_group(phi)
    members = [a for a in phi
               if all(a.compose(b).table == b.compose(a).table for b in phi)]
    return tuple(sorted(members, key=lambda e: e.table))


def normalizes(alpha: Endomorphism, sub: Sequence[Endomorphism]) -> bool:
    """alpha H alpha^-1 == H, elementwise on tables."""
    ensure_automorphism_group(sub)
    if not alpha.is_bijective:
        raise InvalidParameterError("conjugating map must be bijective")
    inv = alpha.inverse()
    tables = {h.table for h in sub}
    return all(alpha.compose(h).compose(inv).table in tables for h in sub)


def centralizes(alpha: Endomorphism, sub: Sequence[Endomorphism]) -> bool:
    ensure_automorphism_group(sub)
    return all(alpha.compose(h).table == h.compose(alpha).table for h in sub)


def is_cyclic(phi: Sequence[Endomorphism]) -> bool:
    ensure_automorphism_group(phi)
    return any(a.order() == len(phi) for a in phi)


#: |Phi / Z(Phi)| values compatible with sets closed under alpha -> 1 - alpha.
RECOGNIZED_QUOTIENT_ORDERS = frozenset({1, 12, 24, 60, 120})


@dataclass(frozen=True)
class ClassificationReport:
    """Order-level structure report; makes no isomorphism claim."""

    order: int
    center_order: int
    quotient_order: int
    member: bool


def classification_check(phi: Sequence[Endomorphism]) -> ClassificationReport:
    z = center(phi)
    quotient = len(phi) // len(z)
    return ClassificationReport(len(phi), len(z), quotient,
                                quotient in RECOGNIZED_QUOTIENT_ORDERS)


def halving_endo(group: FiniteGroup) -> Endomorphism:
    """The inverse of doubling x -> x+x, where doubling is a bijection."""
    if not group.commutative:
        raise InvalidParameterError("halving is only defined on commutative groups")
    doubling = [group.add(x, x) for x in group.elements()]
    if len(set(doubling)) != group.order:
        raise InvalidParameterError("doubling is not a bijection, no halving map exists")
    inv = [0] * group.order
    for x, y in enumerate(doubling):
        inv[y] = x
    return Endomorphism(group, inv)


def order6_segment_set(phi: Sequence[Endomorphism]) -> tuple[Endomorphism, ...]:
    """Zero, identity, and every order-6 member of a fixed-point-free group.

    Verifies that the set is stable under alpha -> 1 - alpha before
    returning it.
    """
    group = ensure_automorphism_group(phi)
    bad = fpf_failure(phi)
    if bad is not None:
        raise HypothesisError("Φ fpf", {"x": bad.x, "first": list(bad.first.table),
                                        "second": list(bad.second.table)})
    if len(phi) % 6 != 0:
        raise HypothesisError("6 divides |Φ|", {"order": len(phi)})
    sixes = sorted((a for a in phi if a.order() == 6), key=lambda e: e.table)
    out = [zero_endo(group), identity_endo(group)] + sixes
    tables = {m.table for m in out}
    for m in out:
        if one_minus(m).table not in tables:
            raise TheoremViolationError(
                "S = 1-S", {"map": list(m.table)},
                "order-6 construction produced a set not stable under 1 - alpha")
    return tuple(out)
