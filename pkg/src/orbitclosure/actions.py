"""Group actions on finite spaces given by generator permutations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from orbitclosure.checkers import FINITE_NOTE, Verdict, Witness
from orbitclosure.errors import InvalidGenerator, NotABijection
from orbitclosure.finspace import FinSpace, PointSet, mask, members
from orbitclosure.relation import Relation

GroupKind = Literal["Z", "finite"]
Perm = tuple[int, ...]


@dataclass(frozen=True)
class ActionSpec:
    space: FinSpace
    generators: tuple[Perm, ...]
    group: GroupKind = "Z"

    def __post_init__(self) -> None:
        if self.group not in ("Z", "finite"):
            raise InvalidGenerator(f"unknown group kind {self.group!r}")
        if self.group == "Z" and len(self.generators) != 1:
            raise InvalidGenerator("a Z-action takes exactly one generator")
        for g in self.generators:
            if len(g) != self.space.n:
                raise InvalidGenerator(f"generator {list(g)} has the wrong length")
            try:
                v = verify_homeomorphism(self.space, g)
            except NotABijection as exc:
                raise InvalidGenerator(str(exc)) from exc
            if not v:
                raise InvalidGenerator(v.witness.explanation)


def image(f: Sequence[int], s: PointSet) -> PointSet:
    return mask(f[x] for x in members(s))


def inverse(f: Sequence[int]) -> Perm:
    inv = [0] * len(f)
    for x, fx in enumerate(f):
        inv[fx] = x
    return tuple(inv)


def compose(f: Sequence[int], g: Sequence[int]) -> Perm:
    """``f`` after ``g``."""
    return tuple(f[g[x]] for x in range(len(g)))


def _continuity_failure(X: FinSpace, f: Sequence[int]) -> int | None:
    for x in range(X.n):
        if image(f, X.min_open[x]) & ~X.min_open[f[x]]:
            return x
    return None


def verify_homeomorphism(X: FinSpace, f: Sequence[int]) -> Verdict:
    """A map between Alexandrov spaces is continuous iff it maps each
    minimal open set into the minimal open set of the image point."""
    if sorted(f) != list(range(X.n)):
        raise NotABijection(f"{list(f)} is not a permutation of 0..{X.n - 1}")
    for direction, g in (("map", f), ("inverse", inverse(f))):
        x = _continuity_failure(X, g)
        if x is not None:
            return Verdict(
                False,
                Witness(
                    "continuity-failure",
                    (x,),
                    f"the {direction} sends min_open({x}) outside min_open({g[x]})",
                ),
            )
    return Verdict(True)


def orbit_relation(A: ActionSpec) -> Relation:
    """Equivalence whose classes are the orbits of the generated group."""
    n = A.space.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in A.generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return Relation.from_partition(n, blocks.values())


def group_elements(A: ActionSpec) -> list[Perm]:
    """Every element of the permutation group generated by ``A.generators``."""
    n = A.space.n
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    order = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in A.generators:
                k = compose(g, h)
                if k not in seen:
                    seen.add(k)
                    order.append(k)
                    nxt.append(k)
        frontier = nxt
    return order


def orbit_length(f: Sequence[int], x: int) -> int:
    k, y = 1, f[x]
    while y != x:
        y = f[y]
        k += 1
    return k


@dataclass(frozen=True)
class SyndeticWitness:
    point: int
    neighbourhood: tuple[int, ...]
    return_times: tuple[int, ...]
    period: int
    gap: int
    compact_set: tuple[int, ...]


@dataclass(frozen=True)
class SyndeticResult:
    holds: bool
    note: str
    certificates: tuple[SyndeticWitness, ...]

    def __bool__(self) -> bool:
        return self.holds


def _z_certificate(f: Sequence[int], x: int, u: PointSet) -> SyndeticWitness:
    period = orbit_length(f, x)
    times = []
    y = x
    for k in range(period):
        if (u >> y) & 1:
            times.append(k)
        y = f[y]
    # Return times are the residues in ``times`` modulo the period.
    cyclic = times + [times[0] + period]
    gap = max(b - a for a, b in zip(cyclic, cyclic[1:]))
    return SyndeticWitness(x, tuple(members(u)), tuple(times), period, gap, tuple(range(gap)))


def _covers_z(times: Sequence[int], period: int, k: Sequence[int]) -> bool:
    residues = {(a + b) % period for a in k for b in times}
    return len(residues) == period


def flow_pap_syndetic(A: ActionSpec) -> SyndeticResult:
    """Every return-time set N(x, U) is syndetic.

    It suffices to take U = min_open(x): return-time sets only grow with U.
    """
    X = A.space
    certs = []
    if A.group == "Z":
        f = A.generators[0]
        for x in range(X.n):
            c = _z_certificate(f, x, X.min_open[x])
            # K + N(x, U) must cover every integer; checking one period suffices.
            if not _covers_z(c.return_times, c.period, c.compact_set):
                return SyndeticResult(False, "compact set fails to cover Z", (c,))
            certs.append(c)
        return SyndeticResult(True, FINITE_NOTE + " (every orbit is periodic)", tuple(certs))
    elements = group_elements(A)
    index = {g: i for i, g in enumerate(elements)}
    for x in range(X.n):
        u = X.min_open[x]
        hits = [i for i, g in enumerate(elements) if (u >> g[x]) & 1]
        covered = {index[compose(k, elements[h])] for k in elements for h in hits}
        if len(covered) != len(elements):
            return SyndeticResult(False, "K = G fails to cover G", ())
        certs.append(
            SyndeticWitness(x, tuple(members(u)), tuple(hits), len(elements), len(elements), tuple(range(len(elements))))
        )
    return SyndeticResult(True, FINITE_NOTE + " (K = G, identity returns)", tuple(certs))


@dataclass(frozen=True)
class PeriodicityProfile:
    pointwise_periodic: bool
    periodic: bool
    max_order: int | None

    def to_json(self) -> dict:
        return {
            "pointwise_periodic": self.pointwise_periodic,
            "periodic": self.periodic,
            "max_order": "inf" if self.max_order is None else self.max_order,
        }


def periodicity_profile(A: ActionSpec) -> PeriodicityProfile:
    if len(A.generators) != 1:
        raise InvalidGenerator("periodicity profile needs a single generator")
    f = A.generators[0]
    order = 1
    for x in range(A.space.n):
        order = math.lcm(order, orbit_length(f, x))
    return PeriodicityProfile(True, True, order)


def action_from_json(space: FinSpace, doc: dict) -> ActionSpec:
    gens = doc["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise ValueError("generators: expected a list of permutations")
    return ActionSpec(space, tuple(tuple(g) for g in gens), doc.get("group", "Z"))
