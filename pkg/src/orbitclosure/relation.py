"""Binary relations on finite point sets and the closure operators built on them.

A relation stores one bitmask row per point: bit ``y`` of ``rows[x]`` is set
when ``y`` is in ``E(x)``. Relations carry no topology; every operator that
needs one takes the space explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from orbitclosure.errors import DimensionMismatch, EmptyCarrier
from orbitclosure.finspace import FinSpace, PointSet, closure, full, mask, members, subspace


@dataclass(frozen=True)
class Relation:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise DimensionMismatch(f"expected {self.n} rows, got {len(self.rows)}")
        top = full(self.n)
        if any(r & ~top for r in self.rows):
            raise DimensionMismatch("relation mentions points outside the carrier")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise DimensionMismatch(f"pair ({x}, {y}) outside 0..{n - 1}")
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    @classmethod
    def from_partition(cls, n: int, classes: Iterable[Iterable[int]]) -> "Relation":
        rows = [0] * n
        seen = 0
        for block in classes:
            m = mask(block)
            if m & seen:
                raise ValueError("partition blocks overlap")
            if m == 0:
                raise ValueError("partition blocks must be nonempty")
            seen |= m
            for x in members(m):
                if x >= n:
                    raise DimensionMismatch(f"point {x} outside 0..{n - 1}")
                rows[x] = m
        if seen != full(n):
            raise ValueError("partition does not cover every point")
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "Relation":
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def full(cls, n: int) -> "Relation":
        return cls(n, (full(n),) * n)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in members(self.rows[x])]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        x, y = pair
        return bool((self.rows[x] >> y) & 1)

    def __le__(self, other: "Relation") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def inverse(self) -> "Relation":
        return Relation.from_pairs(self.n, ((y, x) for x, y in self.pairs()))

    def classes(self) -> list[list[int]]:
        """Distinct rows, ordered by smallest member. Meaningful for equivalences."""
        seen = []
        for r in self.rows:
            if r not in seen:
                seen.append(r)
        return [members(r) for r in sorted(seen, key=lambda r: (r & -r, r))]

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.pairs()]


@dataclass(frozen=True)
class RelationProfile:
    reflexive: bool
    symmetric: bool
    transitive: bool

    @property
    def equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive


def is_reflexive(E: Relation) -> bool:
    return all((r >> x) & 1 for x, r in enumerate(E.rows))


def is_symmetric(E: Relation) -> bool:
    return all((E.rows[y] >> x) & 1 for x in range(E.n) for y in members(E.rows[x]))


def is_transitive(E: Relation) -> bool:
    return all(saturate(E, E.rows[x]) & ~E.rows[x] == 0 for x in range(E.n))


def is_equivalence(E: Relation) -> bool:
    return is_reflexive(E) and is_symmetric(E) and is_transitive(E)


def relation_profile(E: Relation) -> RelationProfile:
    return RelationProfile(is_reflexive(E), is_symmetric(E), is_transitive(E))


def _check(X: FinSpace, E: Relation) -> None:
    if X.n != E.n:
        raise DimensionMismatch(f"space has {X.n} points, relation has {E.n}")


def saturate(E: Relation, a: PointSet) -> PointSet:
    """``E(A)``: union of the rows over ``A``."""
    out = 0
    for x in members(a):
        out |= E.rows[x]
    return out


def hat(X: FinSpace, E: Relation) -> Relation:
    """Row-wise closure: ``hat(E)(x) = cl(E(x))``."""
    _check(X, E)
    return Relation(E.n, tuple(closure(X, r) for r in E.rows))


def product_closure(X: FinSpace, E: Relation) -> Relation:
    """Closure of ``E`` as a subset of ``X x X``.

    ``(x, y)`` is in it iff ``min_open(x) x min_open(y)`` meets ``E``, so
    row ``x`` is the closure of ``E(min_open(x))``.
    """
    _check(X, E)
    return Relation(E.n, tuple(closure(X, saturate(E, u)) for u in X.min_open))


def prolongation(X: FinSpace, E: Relation) -> Relation:
    """Prolongation relation by direct neighbourhood quantification.

    ``y`` is in ``D(x)`` when every neighbourhood pair ``U`` of ``x``, ``V`` of
    ``y`` admits ``a`` in ``U`` and ``b`` in ``V`` with ``b`` in ``E(a)``.
    Convergent nets in a finite space are eventually inside the minimal
    neighbourhoods, so quantifying over those is exact.
    """
    _check(X, E)
    rows = []
    for x in range(X.n):
        row = 0
        for y in range(X.n):
            u, v = X.min_open[x], X.min_open[y]
            if any(E.rows[a] & v for a in members(u)):
                row |= 1 << y
        rows.append(row)
    return Relation(E.n, tuple(rows))


def tilde(X: FinSpace, E: Relation) -> Relation:
    """Orbit-class relation: same row of ``hat(E)``."""
    h = hat(X, E)
    rows = []
    for x in range(E.n):
        rows.append(mask(y for y in range(E.n) if h.rows[y] == h.rows[x]))
    return Relation(E.n, tuple(rows))


def is_closed_relation(X: FinSpace, E: Relation) -> bool:
    return product_closure(X, E) == E


class Restriction(NamedTuple):
    space: FinSpace
    relation: Relation
    index: tuple[int, ...]


def restrict(X: FinSpace, E: Relation, s: PointSet) -> Restriction:
    """Subspace on ``s`` with ``E`` cut down to ``s x s``; ``index`` maps new to old points."""
    _check(X, E)
    if s & X.points == 0:
        raise EmptyCarrier("restriction to the empty set")
    sub, index = subspace(X, s)
    rows = []
    for old in index:
        r = E.rows[old]
        rows.append(mask(new for new, o in enumerate(index) if (r >> o) & 1))
    return Restriction(sub, Relation(sub.n, tuple(rows)), index)


def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All set partitions of ``0..n-1`` (restricted growth strings)."""
    if n == 0:
        yield []
        return

    def grow(i: int, labels: list[int], k: int) -> Iterator[list[int]]:
        if i == n:
            yield labels
            return
        for lab in range(k + 1):
            yield from grow(i + 1, labels + [lab], max(k, lab + 1))

    for labels in grow(1, [0], 1):
        blocks: list[list[int]] = [[] for _ in range(max(labels) + 1)]
        for x, lab in enumerate(labels):
            blocks[lab].append(x)
        yield blocks


def all_equivalences(n: int) -> Iterator[Relation]:
    for blocks in set_partitions(n):
        yield Relation.from_partition(n, blocks)


def random_equivalence(rng, n: int) -> Relation:
    k = rng.randint(1, n)
    labels = [rng.randrange(k) for _ in range(n)]
    blocks: dict[int, list[int]] = {}
    for x, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(x)
    return Relation.from_partition(n, blocks.values())


def relation_from_json(n: int, doc: dict) -> Relation:
    has_rel, has_part = "relation" in doc, "partition" in doc
    if has_rel == has_part:
        raise ValueError("give exactly one of 'relation' or 'partition'")
    if has_rel:
        pairs = doc["relation"]
        if not all(isinstance(p, (list, tuple)) and len(p) == 2 for p in pairs):
            raise ValueError("relation: expected a list of [x, y] pairs")
        return Relation.from_pairs(n, (tuple(p) for p in pairs))
    return Relation.from_partition(n, doc["partition"])


def all_relations(n: int) -> Iterator[Relation]:
    """Every relation on ``n`` points; only sensible for tiny ``n``."""
    for rows in itertools.product(range(1 << n), repeat=n):
        yield Relation(n, tuple(rows))
