"""Blocks, labeled families, developments, and the verification engines.

A labeled family is an ordered list of (label, block) pairs.  Keeping the
labels, rather than collapsing to a plain set of blocks, makes the triple
count |S|*(|S|-1) literal for orbit families even when distinct labels
yield the same block; verifying the deduplicated set version must then
agree on lambda, and the test suite checks that agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import DesignCheckError, InvalidParameterError, SdfCheckError
from .groups import FiniteGroup, Subgroup

Block = tuple  # sorted duplicate-free tuple of element indices
Label = Union[int, str]


def make_block(group: FiniteGroup, elems: Iterable[int]) -> Block:
    out = tuple(sorted(set(int(x) for x in elems)))
    if not out:
        raise InvalidParameterError("blocks must be nonempty")
    if out[0] < 0 or out[-1] >= group.order:
        raise InvalidParameterError(f"block {out!r} has elements outside [0,{group.order})")
    return out


class FamilyEntry(NamedTuple):
    label: Label
    block: Block


@dataclass(frozen=True)
class LabeledFamily:
    """Ordered (label, block) pairs over one group; labels are distinct."""

    group: FiniteGroup
    entries: tuple[FamilyEntry, ...]

    def __post_init__(self):
        normalized = tuple(FamilyEntry(label, make_block(self.group, block))
                           for label, block in self.entries)
        labels = [e.label for e in normalized]
        if len(set(labels)) != len(labels):
            dup = next(l for l in labels if labels.count(l) > 1)
            raise InvalidParameterError(f"duplicate family label {dup!r}")
        object.__setattr__(self, "entries", normalized)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def blocks(self) -> tuple[Block, ...]:
        return tuple(e.block for e in self.entries)

    def dedup(self) -> "LabeledFamily":
        """Set-semantics version: one entry per distinct block, first label kept."""
        seen = {}
        for label, block in self.entries:
            seen.setdefault(block, label)
        return LabeledFamily(self.group, tuple(FamilyEntry(l, b) for b, l in seen.items()))


@dataclass(frozen=True)
class SdfCertificate:
    """Verified short-difference-family parameters."""

    v: int
    k: int
    mu: int
    nu: int
    lam_prime: int
    lam: int

    def __post_init__(self):
        if min(self.v, self.k, self.mu, self.nu, self.lam_prime, self.lam) < 1:
            raise InvalidParameterError("certificate parameters must be positive")
        if self.lam * self.mu * self.nu != self.lam_prime:
            raise InvalidParameterError("inconsistent certificate: lam*mu*nu != lam_prime")

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.v, self.k, self.lam)


@dataclass(frozen=True)
class Design:
    """Points 0..v-1 plus a duplicate-free block set with verified (v,k,lam)."""

    v: int
    k: int
    lam: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if len(set(blocks)) != len(blocks):
            raise InvalidParameterError("designs cannot repeat blocks")
        if any(len(b) != self.k for b in blocks):
            raise InvalidParameterError(f"designs need uniform block size {self.k}")
        object.__setattr__(self, "blocks", blocks)


def translate(group: FiniteGroup, block: Block, g: int) -> Block:
    """The right translate B + g."""
    return tuple(sorted(group.table[b][g] for b in block))


def stabilizer(group: FiniteGroup, block: Block) -> Subgroup:
    """All g with B + g = B; always a subgroup, and the largest one H with
    B + H = B (every such H is contained in it)."""
    want = set(block)
    fixers = [g for g in group.elements()
              if all(group.table[b][g] in want for b in block)]
    return Subgroup(group, tuple(fixers))


def are_translates(group: FiniteGroup, b: Block, c: Block) -> Optional[int]:
    """Smallest g with B = C + g, or None."""
    want = frozenset(b)
    if len(b) != len(c):
        return None
    for g in group.elements():
        if all(group.table[x][g] in want for x in c):
            return g
    return None


def equivalence_classes(family: LabeledFamily) -> tuple[tuple[Label, ...], ...]:
    """Labels grouped by translate-equivalence of their blocks, in entry order."""
    group = family.group
    reps: list[tuple[Block, list[Label]]] = []
    for label, block in family.entries:
        for rep, members in reps:
            if are_translates(group, block, rep) is not None:
                members.append(label)
                break
        else:
            reps.append((block, [label]))
    return tuple(tuple(members) for _, members in reps)


def development(family: LabeledFamily) -> tuple[Block, ...]:
    """All translates of all blocks, deduplicated and sorted."""
    group = family.group
    out = set()
    for block in set(family.blocks()):
        for g in group.elements():
            out.add(translate(group, block, g))
    return tuple(sorted(out))


def verify_sdf(family: LabeledFamily) -> SdfCertificate:
    """Check the four short-difference-family conditions over a labeled family.

    Uniform block size k, uniform stabilizer size mu, uniform
    translate-class size nu, and a constant positive count lam_prime of
    triples (entry, a, b) with a - b = d for every nonzero d; emits
    lam = lam_prime / (mu * nu) after the divisibility check.  Raises
    SdfCheckError naming the failed condition with a concrete witness.
    """
    group = family.group
    entries = family.entries
    if not entries:
        raise InvalidParameterError("family has no entries")

    k = len(entries[0].block)
    for label, block in entries[1:]:
        if len(block) != k:
            raise SdfCheckError("block-size", {
                "label_a": entries[0].label, "size_a": k,
                "label_b": label, "size_b": len(block)})

    mu = len(stabilizer(group, entries[0].block))
    for label, block in entries[1:]:
        m = len(stabilizer(group, block))
        if m != mu:
            raise SdfCheckError("stabilizer-size", {
                "label_a": entries[0].label, "mu_a": mu,
                "label_b": label, "mu_b": m})

    classes = equivalence_classes(family)
    sizes = {label: len(cls) for cls in classes for label in cls}
    nu = sizes[entries[0].label]
    for label, _ in entries[1:]:
        if sizes[label] != nu:
            raise SdfCheckError("class-size", {
                "label_a": entries[0].label, "nu_a": nu,
                "label_b": label, "nu_b": sizes[label]})

    counts = [0] * group.order
    for _, block in entries:
        for a in block:
            for b in block:
                if a != b:
                    counts[group.sub(a, b)] += 1
    lam_prime = counts[1] if group.order > 1 else 0
    for d in range(2, group.order):
        if counts[d] != lam_prime:
            raise SdfCheckError("difference-count", {
                "d_a": 1, "count_a": lam_prime, "d_b": d, "count_b": counts[d]})
    if lam_prime == 0:
        raise SdfCheckError("difference-count", {"d": 1, "count": 0},
                            "difference counts must be positive")

    if lam_prime % (mu * nu) != 0:
        raise SdfCheckError("divisibility", {
            "lam_prime": lam_prime, "mu": mu, "nu": nu})

    return SdfCertificate(group.order, k, mu, nu, lam_prime, lam_prime // (mu * nu))


def verify_bibd(v: int, blocks: Sequence[Iterable[int]]) -> Design:
    """Exhaustive balanced-incomplete-block-design check over all point pairs.

    Raises DesignCheckError with the first violating block or pair.
    """
    if v < 2:
        raise InvalidParameterError(f"designs need at least 2 points, got {v}")
    if not blocks:
        raise InvalidParameterError("design has no blocks")
    normalized = []
    for raw in blocks:
        raw = tuple(int(x) for x in raw)
        block = tuple(sorted(set(raw)))
        if len(block) != len(raw):
            raise InvalidParameterError(f"block {raw!r} repeats a point")
        if not block:
            raise InvalidParameterError("blocks must be nonempty")
        if block[0] < 0 or block[-1] >= v:
            raise InvalidParameterError(f"block {block!r} has points outside [0,{v})")
        normalized.append(block)

    seen = set()
    for block in normalized:
        if block in seen:
            raise DesignCheckError("repeated-block", {"block": list(block)})
        seen.add(block)

    k = len(normalized[0])
    for block in normalized[1:]:
        if len(block) != k:
            raise DesignCheckError("block-size", {
                "block_a": list(normalized[0]), "block_b": list(block)})

    counts = [[0] * v for _ in range(v)]
    for block in normalized:
        for i, a in enumerate(block):
            for b in block[i + 1:]:
                counts[a][b] += 1
    lam = counts[0][1]
    for a in range(v):
        for b in range(a + 1, v):
            if counts[a][b] != lam:
                raise DesignCheckError("pair-coverage", {
                    "pair_a": [0, 1], "count_a": lam,
                    "pair_b": [a, b], "count_b": counts[a][b]})
    if lam == 0:
        raise DesignCheckError("pair-coverage", {"pair": [0, 1], "count": 0},
                               "every pair must be covered at least once")
    return Design(v, k, lam, tuple(normalized))


def is_design_automorphism(perm: Sequence[int], design: Design) -> bool:
    """True iff the point bijection maps the block set onto itself."""
    perm = tuple(int(p) for p in perm)
    if len(perm) != design.v or len(set(perm)) != design.v \
            or any(p not in range(design.v) for p in perm):
        raise InvalidParameterError("permutation must be a bijection on the points")
    blocks = set(design.blocks)
    return all(tuple(sorted(perm[x] for x in block)) in blocks for block in blocks)


def is_doubly_transitive(perms: Sequence[Sequence[int]], v: int) -> bool:
    """Breadth-first orbit of the ordered pair (0, 1); true iff it has size v*(v-1)."""
    if v < 2:
        raise InvalidParameterError("need at least 2 points for ordered pairs")
    gens = []
    for perm in perms:
        p = tuple(int(x) for x in perm)
        if len(p) != v or len(set(p)) != v or any(x not in range(v) for x in p):
            raise InvalidParameterError("permutation must be a bijection on the points")
        gens.append(p)
    start = (0, 1)
    seen = {start}
    frontier = [start]
    target = v * (v - 1)
    while frontier and len(seen) < target:
        nxt = []
        for (a, b) in frontier:
            for p in gens:
                img = (p[a], p[b])
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen) == target
