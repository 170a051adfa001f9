"""Finite groups in additive notation, backed by validated Cayley tables.

Elements are dense indices ``0 .. order-1`` and index 0 is always the
identity.  All group axioms are checked exhaustively at construction time;
the O(v^3) associativity scan is done with numpy and a documented order cap
keeps it fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import GroupAxiomError, InvalidParameterError

#: Default upper bound on group order; keeps eager validation under a second.
MAX_ORDER = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteGroup:
    """A finite (not necessarily abelian) group written additively.

    The constructor validates the full addition table: index 0 must be a
    two-sided identity, every element needs a two-sided inverse, and
    associativity is checked over all triples.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                 *, max_order: int = MAX_ORDER):
        tab = tuple(tuple(int(x) for x in row) for row in table)
        v = len(tab)
        if v < 2:
            raise InvalidParameterError(f"group order must be at least 2, got {v}")
        if v > max_order:
            raise InvalidParameterError(f"group order {v} exceeds the cap {max_order}")
        if names is not None and len(names) != v:
            raise InvalidParameterError("name table length must equal the group order")
        negs, commutative = _validate_table(tab, v)
        self.order = v
        self.table = tab
        self.negs = negs
        self.commutative = commutative
        self.names = tuple(str(n) for n in names) if names is not None else None

    def add(self, x: int, y: int) -> int:
        return self.table[x][y]

    def neg(self, x: int) -> int:
        return self.negs[x]

    def sub(self, x: int, y: int) -> int:
        """x + (-y)."""
        return self.table[x][self.negs[y]]

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        """All elements except the identity."""
        return range(1, self.order)

    def element_order(self, x: int) -> int:
        n, acc = 1, x
        while acc != 0:
            acc = self.table[acc][x]
            n += 1
        return n

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def __repr__(self) -> str:
        kind = "abelian" if self.commutative else "non-abelian"
        return f"FiniteGroup(order={self.order}, {kind})"


def _validate_table(tab: tuple, v: int) -> tuple:
    arr = np.asarray(tab, dtype=np.int64)
    if arr.ndim != 2 or arr.shape != (v, v):
        raise InvalidParameterError(f"addition table must be {v}x{v}")
    if arr.min() < 0 or arr.max() >= v:
        x, y = map(int, np.argwhere((arr < 0) | (arr >= v))[0])
        raise InvalidParameterError(f"table entry at ({x},{y}) is outside [0,{v})")

    idx = np.arange(v)
    if not np.array_equal(arr[0], idx):
        x = int(np.flatnonzero(arr[0] != idx)[0])
        raise GroupAxiomError("identity", (0, x), f"0 + {x} = {int(arr[0, x])}, expected {x}")
    if not np.array_equal(arr[:, 0], idx):
        x = int(np.flatnonzero(arr[:, 0] != idx)[0])
        raise GroupAxiomError("identity", (x, 0), f"{x} + 0 = {int(arr[x, 0])}, expected {x}")

    negs = []
    for x in range(v):
        zeros = np.flatnonzero(arr[x] == 0)
        if len(zeros) == 0:
            raise GroupAxiomError("inverse", (x,), f"element {x} has no right inverse")
        y = int(zeros[0])
        if arr[y, x] != 0:
            raise GroupAxiomError("inverse", (x, y), f"{x} + {y} = 0 but {y} + {x} = {int(arr[y, x])}")
        negs.append(y)

    # (x+y)+z vs x+(y+z): one fancy-indexed v x v slab per x keeps memory flat.
    for x in range(v):
        lhs = arr[arr[x]]
        rhs = arr[x][arr]
        if not np.array_equal(lhs, rhs):
            y, z = map(int, np.argwhere(lhs != rhs)[0])
            raise GroupAxiomError(
                "associativity", (x, y, z),
                f"({x}+{y})+{z} = {int(lhs[y, z])} but {x}+({y}+{z}) = {int(rhs[y, z])}")

    return tuple(negs), bool(np.array_equal(arr, arr.T))


def build_cyclic(n: int, *, max_order: int = MAX_ORDER) -> FiniteGroup:
    """The cyclic group Z_n with addition mod n."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"cyclic group order must be an integer >= 2, got {n!r}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, max_order=max_order)


def digits_of(index: int, p: int, k: int) -> tuple[int, ...]:
    """Base-p digits of ``index``, least significant first, padded to length k."""
    out = []
    for _ in range(k):
        index, r = divmod(index, p)
        out.append(r)
    return tuple(out)


def index_of_digits(digits: Sequence[int], p: int) -> int:
    index = 0
    for d in reversed(digits):
        index = index * p + d
    return index


def build_elementary_abelian(p: int, k: int, *, max_order: int = MAX_ORDER) -> FiniteGroup:
    """(Z_p)^k with componentwise addition; index = sum(digit_i * p^i)."""
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    if k < 1:
        raise InvalidParameterError(f"exponent must be positive, got {k}")
    v = p ** k
    if v > max_order:
        raise InvalidParameterError(f"group order {v} exceeds the cap {max_order}")
    digs = [digits_of(i, p, k) for i in range(v)]
    table = [[index_of_digits([(a + b) % p for a, b in zip(dx, dy)], p) for dy in digs]
             for dx in digs]
    names = ["(" + ",".join(map(str, d)) + ")" for d in digs]
    return FiniteGroup(table, names, max_order=max_order)


def build_direct_product(factors: Sequence[FiniteGroup], *, max_order: int = MAX_ORDER) -> FiniteGroup:
    """Componentwise product; the first factor is the least significant digit."""
    if not factors:
        raise InvalidParameterError("direct product needs at least one factor")
    orders = [g.order for g in factors]
    v = 1
    for o in orders:
        v *= o
    if v > max_order:
        raise InvalidParameterError(f"group order {v} exceeds the cap {max_order}")

    def decode(i: int) -> tuple[int, ...]:
        out = []
        for o in orders:
            i, r = divmod(i, o)
            out.append(r)
        return tuple(out)

    def encode(parts: Sequence[int]) -> int:
        i = 0
        for o, x in zip(reversed(orders), reversed(parts)):
            i = i * o + x
        return i

    coords = [decode(i) for i in range(v)]
    table = [[encode([g.add(a, b) for g, a, b in zip(factors, cx, cy)]) for cy in coords]
             for cx in coords]
    return FiniteGroup(table, max_order=max_order)


def build_from_cayley(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                      *, max_order: int = MAX_ORDER) -> FiniteGroup:
    """Validate an explicit Cayley table; rejects non-groups with a witness."""
    return FiniteGroup(table, names, max_order=max_order)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element set."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        if not is_subgroup(self.group, elems):
            raise InvalidParameterError(f"{elems!r} is not a subgroup")

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def is_subgroup(group: FiniteGroup, elems: Iterable[int]) -> bool:
    """True iff ``elems`` is nonempty and closed under addition and negation."""
    s = set(elems)
    if not s or any(x not in range(group.order) for x in s):
        return False
    if any(group.negs[x] not in s for x in s):
        return False
    return all(group.table[x][y] in s for x in s for y in s)


def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``, by closure iteration."""
    gens = set(gens)
    if any(g not in range(group.order) for g in gens):
        raise InvalidParameterError("generator outside the element range")
    elems = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.table[x][g]
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return Subgroup(group, tuple(sorted(elems)))


def all_subgroups(group: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup, via closure of incrementally extended generator sets.

    Intended for small orders (the exhaustive lemma checks use <= 24).
    """
    seen = {frozenset({0})}
    queue = [frozenset({0})]
    while queue:
        base = queue.pop()
        for x in group.nonzero():
            if x in base:
                continue
            bigger = frozenset(subgroup_generated(group, set(base) | {x}).elements)
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    subs = [Subgroup(group, tuple(sorted(s))) for s in seen]
    subs.sort(key=lambda h: (len(h.elements), h.elements))
    return tuple(subs)
