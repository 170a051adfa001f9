"""Shared brute-force oracles and small-group builders for the tests.

Everything here is deliberately naive and independent of the library's
internal counting paths, so the tests can freeze expected values computed
by a second route.
"""

from __future__ import annotations

import itertools
from math import gcd

from sdfam import FiniteGroup, build_from_cayley


def naive_pair_counts(v: int, blocks) -> dict:
    """How often each unordered point pair appears across the blocks."""
    counts = {(a, b): 0 for a in range(v) for b in range(a + 1, v)}
    for block in blocks:
        for a, b in itertools.combinations(sorted(block), 2):
            counts[(a, b)] += 1
    return counts


def naive_diff_counts(group: FiniteGroup, entries) -> dict:
    """Triple count per nonzero d: (entry, a, b) with a, b in the block, a-b=d."""
    counts = {d: 0 for d in group.nonzero()}
    for _, block in entries:
        for a in block:
            for b in block:
                if a != b:
                    counts[group.sub(a, b)] += 1
    return counts


def naive_translates(group: FiniteGroup, block, g):
    return tuple(sorted(group.add(b, g) for b in block))


def naive_stabilizer(group: FiniteGroup, block) -> set:
    want = set(block)
    return {g for g in group.elements()
            if {group.add(b, g) for b in block} == want}


def all_automorphism_tables(group: FiniteGroup) -> list[tuple[int, ...]]:
    """Every bijective homomorphism table, by filtering permutations fixing 0.

    Exponential in the order; only use on groups of order <= 8.
    """
    out = []
    v = group.order
    for rest in itertools.permutations(range(1, v)):
        table = (0,) + rest
        ok = True
        for x in range(v):
            for y in range(v):
                if table[group.add(x, y)] != group.add(table[x], table[y]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(table)
    return out


def group_from_permutations(perms) -> FiniteGroup:
    """Cayley table of a set of permutations closed under composition.

    The identity gets index 0; the rest are sorted for determinism.
    """
    perms = {tuple(p) for p in perms}
    n = len(next(iter(perms)))
    ident = tuple(range(n))
    assert ident in perms
    ordered = [ident] + sorted(perms - {ident})
    index = {p: i for i, p in enumerate(ordered)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in ordered] for p in ordered]
    return build_from_cayley(table)


def symmetric_group(n: int) -> FiniteGroup:
    return group_from_permutations(itertools.permutations(range(n)))


def dihedral_square() -> FiniteGroup:
    """Symmetries of a square as permutations of its corners (order 8)."""
    rot = (1, 2, 3, 0)
    flip = (1, 0, 3, 2)
    perms = {tuple(range(4))}
    frontier = [tuple(range(4))]
    while frontier:
        p = frontier.pop()
        for q in (rot, flip):
            comp = tuple(q[p[i]] for i in range(4))
            if comp not in perms:
                perms.add(comp)
                frontier.append(comp)
    assert len(perms) == 8
    return group_from_permutations(perms)


def quaternion_group() -> FiniteGroup:
    """The order-8 quaternion group via its multiplication rules.

    Elements are 1, -1, i, -i, j, -j, k, -k in that index order.
    """
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(a: str, b: str) -> str:
        sign = 1
        for t in (a, b):
            if t.startswith("-"):
                sign = -sign
        x, y = a.lstrip("-"), b.lstrip("-")
        rules = {
            ("1", "1"): (1, "1"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
            ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
        }
        if x == "1":
            s, z = 1, y
        elif y == "1":
            s, z = 1, x
        else:
            s, z = rules[(x, y)]
        sign *= s
        return z if sign == 1 else "-" + z

    table = [[names.index(mul(a, b)) for b in names] for a in names]
    return build_from_cayley(table, names)


def alternating_group_4() -> FiniteGroup:
    perms = [p for p in itertools.permutations(range(4))
             if sum(1 for i, j in itertools.combinations(range(4), 2) if p[i] > p[j]) % 2 == 0]
    return group_from_permutations(perms)


def units_mod(n: int) -> list[int]:
    return [u for u in range(1, n) if gcd(u, n) == 1]


def random_labeled_family(rng, group):
    """A randomized labeled family, or None when the draw degenerates.

    Mixes three shapes: unrelated random blocks, orbit families of random
    map pools, and the distinct translates of one random block.  The mix is
    tuned so that a useful fraction verifies as a short difference family.
    """
    from sdfam import InvalidParameterError, LabeledFamily

    v = group.order
    kind = rng.randrange(3)
    if kind == 0:
        k = rng.randint(1, min(v, 4))
        m = rng.randint(1, 4)
        entries = [(i, tuple(sorted(rng.sample(range(v), k)))) for i in range(m)]
    elif kind == 1:
        if group.commutative:
            tabs = []
            for c in rng.sample(range(v), rng.randint(2, min(4, v))):
                t = []
                for x in range(v):
                    acc = 0
                    for _ in range(c):
                        acc = group.add(acc, x)
                    t.append(acc)
                tabs.append(tuple(t))
        else:
            tabs = [tuple(group.add(group.add(group.neg(c), x), c) for x in range(v))
                    for c in rng.sample(range(v), rng.randint(2, 4))]
        tabs = list(dict.fromkeys(tabs))
        entries = [(x, tuple(sorted({t[x] for t in tabs}))) for x in group.nonzero()]
    else:
        block = tuple(sorted(rng.sample(range(v), rng.randint(1, min(v, 4)))))
        seen = []
        for g in range(v):
            t = tuple(sorted(group.add(b, g) for b in block))
            if t not in seen:
                seen.append(t)
        entries = [(i, b) for i, b in enumerate(seen)]
    try:
        return LabeledFamily(group, tuple(entries))
    except InvalidParameterError:
        return None
