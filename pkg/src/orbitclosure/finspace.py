"""Finite topological spaces.

Every topology on a finite set is Alexandrov, so a space is stored as the
minimal open neighbourhood of each point. Point sets are plain ``int``
bitmasks: bit ``i`` set means point ``i`` is a member.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from orbitclosure.errors import CapExceeded, EmptyCarrier, NotATopology

PointSet = int

MAX_ENUMERATION_POINTS = 4


def mask(points: Iterable[int]) -> PointSet:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(s: PointSet) -> list[int]:
    """Indices of the set bits of ``s``, ascending."""
    out = []
    i = 0
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def full(n: int) -> PointSet:
    return (1 << n) - 1


def subsets(s: PointSet) -> Iterator[PointSet]:
    """All submasks of ``s`` (including 0 and ``s``)."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


@dataclass(frozen=True)
class FinSpace:
    """A finite topological space on points ``0..n-1``.

    ``min_open[x]`` is the smallest open set containing ``x``.
    """

    n: int
    min_open: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.min_open) != self.n:
            raise NotATopology(f"expected {self.n} minimal opens, got {len(self.min_open)}")
        top = full(self.n)
        for x, u in enumerate(self.min_open):
            if u & ~top:
                raise NotATopology(f"min_open({x}) mentions points outside 0..{self.n - 1}")
            if not (u >> x) & 1:
                raise NotATopology(f"point {x} is not in its own minimal open set")
            for y in members(u):
                if self.min_open[y] & ~u:
                    raise NotATopology(
                        f"min_open({y}) is not contained in min_open({x}) although {y} is in it",
                        pair=(members(u), members(self.min_open[y])),
                    )

    @property
    def points(self) -> PointSet:
        return full(self.n)

    def up(self, s: PointSet) -> PointSet:
        """Smallest open superset of ``s``."""
        out = 0
        for x in members(s):
            out |= self.min_open[x]
        return out

    def is_open(self, s: PointSet) -> bool:
        return self.up(s) == s

    def is_closed(self, s: PointSet) -> bool:
        return self.is_open(self.points & ~s)

    def opens(self) -> list[PointSet]:
        """Every open set, in increasing bitmask order."""
        return [s for s in range(1 << self.n) if self.is_open(s)]

    def closed_sets(self) -> list[PointSet]:
        return [s for s in range(1 << self.n) if self.is_closed(s)]

    def specialization(self) -> list[tuple[int, int]]:
        """Pairs ``(x, y)`` with ``y`` in ``min_open(x)``, i.e. ``x`` in the closure of ``y``."""
        return [(x, y) for x in range(self.n) for y in members(self.min_open[x])]

    def to_json(self) -> dict:
        return {"points": self.n, "min_open": [members(u) for u in self.min_open]}


def from_min_open(n: int, min_open: Sequence[Iterable[int]]) -> FinSpace:
    return FinSpace(n, tuple(mask(u) for u in min_open))


def build_space(n: int, opens: Iterable[Iterable[int]]) -> FinSpace:
    """Validate a claimed topology and return it as a FinSpace.

    The empty set is added implicitly; the whole space must be listed.
    """
    if n < 1:
        raise EmptyCarrier("a space needs at least one point")
    top = full(n)
    family = set()
    for s in opens:
        m = mask(s)
        if m & ~top:
            raise NotATopology(f"open set {sorted(s)} mentions points outside 0..{n - 1}")
        family.add(m)
    if top not in family:
        raise NotATopology("the whole space is not among the open sets")
    family.add(0)
    ordered = sorted(family)
    for a, b in itertools.combinations(ordered, 2):
        if a | b not in family:
            raise NotATopology("union of open sets is not open", pair=(members(a), members(b)))
        if a & b not in family:
            raise NotATopology("intersection of open sets is not open", pair=(members(a), members(b)))
    min_open = []
    for x in range(n):
        u = top
        for s in ordered:
            if (s >> x) & 1:
                u &= s
        min_open.append(u)
    return FinSpace(n, tuple(min_open))


def discrete(n: int) -> FinSpace:
    return FinSpace(n, tuple(1 << x for x in range(n)))


def indiscrete(n: int) -> FinSpace:
    return FinSpace(n, (full(n),) * n)


def sierpinski() -> FinSpace:
    """Two points, open sets {}, {1}, {0, 1}."""
    return build_space(2, [[1], [0, 1]])


def closure(X: FinSpace, s: PointSet) -> PointSet:
    out = 0
    for x in range(X.n):
        if X.min_open[x] & s:
            out |= 1 << x
    return out


def interior(X: FinSpace, s: PointSet) -> PointSet:
    out = 0
    for x in range(X.n):
        if X.min_open[x] & ~s == 0:
            out |= 1 << x
    return out


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    hausdorff: bool
    regular: bool
    t3: bool
    normal: bool

    def to_json(self) -> dict:
        return {
            "T0": self.t0,
            "T1": self.t1,
            "Hausdorff": self.hausdorff,
            "regular": self.regular,
            "T3": self.t3,
            "normal": self.normal,
        }


def separation_profile(X: FinSpace) -> SeparationProfile:
    n, mo = X.n, X.min_open
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    t0 = all(mo[x] != mo[y] for x, y in pairs)
    t1 = all((mo[x] >> y) & 1 == 0 for x, y in pairs)
    hausdorff = all(mo[x] & mo[y] == 0 for x, y in pairs)
    # The hardest closed set avoiding x is the complement of min_open(x);
    # its smallest open neighbourhood is the union of the minimal opens.
    regular = all(X.up(X.points & ~mo[x]) & mo[x] == 0 for x in range(n))
    # Disjoint closed sets C, D fail to separate iff some c in C, d in D have
    # meeting minimal opens; shrinking to cl{c}, cl{d} only helps disjointness.
    cl = [closure(X, 1 << x) for x in range(n)]
    normal = all(mo[c] & mo[d] == 0 or cl[c] & cl[d] != 0 for c in range(n) for d in range(n))
    return SeparationProfile(t0, t1, hausdorff, regular, hausdorff and regular, normal)


def product(X: FinSpace, Y: FinSpace) -> FinSpace:
    """Product space; the pair ``(i, j)`` has index ``i * Y.n + j``."""
    m = Y.n
    min_open = []
    for i in range(X.n):
        for j in range(Y.n):
            u = 0
            for a in members(X.min_open[i]):
                u |= Y.min_open[j] << (a * m)
            min_open.append(u)
    return FinSpace(X.n * m, tuple(min_open))


def subspace(X: FinSpace, s: PointSet) -> tuple[FinSpace, tuple[int, ...]]:
    """Relative topology on ``s``; returns the space and the new-to-old index map."""
    if s & X.points == 0:
        raise EmptyCarrier("subspace of the empty set")
    index = tuple(members(s & X.points))
    position = {old: new for new, old in enumerate(index)}
    min_open = []
    for old in index:
        min_open.append(mask(position[y] for y in members(X.min_open[old] & s)))
    return FinSpace(len(index), tuple(min_open)), index


def _preorders(n: int) -> Iterator[tuple[int, ...]]:
    """Reflexive transitive relations on ``n`` points as row bitmasks."""
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    for bits in range(1 << len(off)):
        rows = [1 << x for x in range(n)]
        for k, (x, y) in enumerate(off):
            if (bits >> k) & 1:
                rows[x] |= 1 << y
        if all(rows[y] & ~rows[x] == 0 for x in range(n) for y in members(rows[x])):
            yield tuple(rows)


def all_topologies(n: int) -> Iterator[FinSpace]:
    """Every topology on ``n`` labelled points, each exactly once.

    Topologies on a finite set correspond to preorders, and ``min_open(x)``
    is the up-set of ``x``.
    """
    if n > MAX_ENUMERATION_POINTS:
        raise CapExceeded(f"all_topologies is capped at {MAX_ENUMERATION_POINTS} points, got {n}")
    if n < 1:
        raise EmptyCarrier("no topologies on zero points in this library")
    for rows in _preorders(n):
        yield FinSpace(n, rows)


def random_space(rng: random.Random, n: int, density: float | None = None) -> FinSpace:
    """Alexandrov topology of a random preorder (reflexive-transitive closure of a random digraph)."""
    if density is None:
        density = rng.random() * 0.6
    rows = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < density:
                rows[x] |= 1 << y
    changed = True
    while changed:
        changed = False
        for x in range(n):
            grown = rows[x]
            for y in members(rows[x]):
                grown |= rows[y]
            if grown != rows[x]:
                rows[x] = grown
                changed = True
    return FinSpace(n, tuple(rows))


def space_from_json(doc: dict) -> FinSpace:
    if not isinstance(doc, dict):
        raise ValueError("space: expected an object")
    if "points" not in doc:
        raise KeyError("points")
    n = doc["points"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("points: expected a positive integer")
    has_opens, has_min = "opens" in doc, "min_open" in doc
    if has_opens == has_min:
        raise ValueError("space: give exactly one of 'opens' or 'min_open'")
    if has_opens:
        return build_space(n, doc["opens"])
    return from_min_open(n, doc["min_open"])
