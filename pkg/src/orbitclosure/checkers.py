"""Verdict-plus-witness checkers for orbit-closure properties of a relation on a finite space.

Every negative verdict comes with a :class:`Witness` that :func:`replay`
re-derives from the inputs alone.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from orbitclosure.errors import ConsistencyError, NotAnEquivalence
from orbitclosure.finspace import (
    FinSpace,
    PointSet,
    all_topologies,
    closure,
    interior,
    mask,
    members,
    random_space,
    separation_profile,
)
from orbitclosure.relation import (
    Relation,
    all_equivalences,
    hat,
    is_closed_relation,
    is_equivalence,
    is_reflexive,
    is_symmetric,
    is_transitive,
    product_closure,
    prolongation,
    random_equivalence,
    restrict,
    saturate,
    tilde,
)

FINITE_NOTE = "trivially true on finite spaces"
WAP_ENUMERATION_CAP = 6


@dataclass(frozen=True)
class Witness:
    kind: str
    points: tuple
    explanation: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "points": list(self.points), "explanation": self.explanation}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Witness | None = None
    note: str | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class Report:
    verdicts: dict[str, bool]
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "verdicts": dict(self.verdicts),
            "witnesses": [w.to_json() for w in self.witnesses],
            "notes": list(self.notes),
            "data": self.data,
        }


def _fmt(s: PointSet) -> str:
    return "{" + ", ".join(map(str, members(s))) + "}"


def is_pointwise_almost_periodic(X: FinSpace, E: Relation) -> Verdict:
    """Whether ``hat(E)`` is an equivalence relation."""
    h = hat(X, E)
    verdict = _equivalence_verdict(h)
    if is_equivalence(E):
        # For an equivalence E, symmetry of hat(E) already forces transitivity.
        if is_symmetric(h) != verdict.holds:
            raise ConsistencyError("symmetry shortcut disagrees with the full equivalence check")
    return verdict


def _equivalence_verdict(h: Relation) -> Verdict:
    n = h.n
    for x in range(n):
        if not (h.rows[x] >> x) & 1:
            return Verdict(False, Witness("reflexivity-failure", (x,), f"{x} is not in the orbit closure of {x}"))
    for x in range(n):
        for y in members(h.rows[x]):
            if not (h.rows[y] >> x) & 1:
                return Verdict(
                    False,
                    Witness(
                        "symmetry-failure",
                        (y, x),
                        f"{y} is in the orbit closure of {x} but {x} is not in the orbit closure of {y}",
                    ),
                )
    for x in range(n):
        for y in members(h.rows[x]):
            extra = h.rows[y] & ~h.rows[x]
            if extra:
                z = members(extra)[0]
                return Verdict(
                    False,
                    Witness(
                        "transitivity-failure",
                        (x, y, z),
                        f"{y} is in the orbit closure of {x}, {z} in that of {y}, but {z} not in that of {x}",
                    ),
                )
    return Verdict(True)


def _first_gap(big: Relation, small: Relation) -> tuple[int, int] | None:
    for x in range(big.n):
        gap = big.rows[x] & ~small.rows[x]
        if gap:
            return x, members(gap)[0]
    return None


def is_r_closed(X: FinSpace, E: Relation) -> Verdict:
    """Whether ``hat(E)`` is closed in ``X x X``."""
    h = hat(X, E)
    closed_hat = product_closure(X, h)
    holds = closed_hat == h
    # hat(E) sits between E and its closure, so closedness of hat(E) is the
    # same as hat(E) equalling the closure of E itself.
    if holds != (product_closure(X, E) == h):
        raise ConsistencyError("the two formulations of R-closedness disagree")
    if holds:
        return Verdict(True)
    x, y = _first_gap(closed_hat, h)
    return Verdict(
        False,
        Witness(
            "closure-gap",
            (x, y),
            f"({x}, {y}) lies in the closure of the orbit-closure relation but {y} is not in cl(E({x}))",
        ),
    )


def is_d_stable(X: FinSpace, E: Relation) -> Verdict:
    """Whether the prolongation of ``E`` coincides with ``hat(E)``."""
    h = hat(X, E)
    d = prolongation(X, E)
    if d == h:
        return Verdict(True)
    x, y = _first_gap(d, h)
    return Verdict(
        False,
        Witness("prolongation-gap", (x, y), f"{y} is in the prolongation D({x}) but not in cl(E({x}))"),
    )


def largest_saturated_open(X: FinSpace, E: Relation, u: PointSet) -> PointSet:
    """Largest open ``W`` inside ``u`` with ``E(W)`` contained in ``W``."""
    w = interior(X, u)
    while True:
        closed_under = mask(z for z in members(w) if E.rows[z] & ~w == 0)
        nxt = interior(X, closed_under)
        if nxt == w:
            return w
        w = nxt


def is_l_stable(X: FinSpace, E: Relation) -> Verdict:
    """Every open neighbourhood of each ``cl(E(x))`` contains a saturated open neighbourhood of it.

    Only the smallest open superset needs checking: a saturated neighbourhood
    that fits inside it fits inside every larger one.
    """
    h = hat(X, E)
    for x in range(X.n):
        u_star = X.up(h.rows[x])
        w = largest_saturated_open(X, E, u_star)
        if h.rows[x] & ~w:
            return Verdict(
                False,
                Witness(
                    "l-stability-failure",
                    (x, tuple(members(u_star))),
                    f"no E-saturated open set between cl(E({x})) = {_fmt(h.rows[x])} and {_fmt(u_star)}",
                ),
            )
    return Verdict(True)


def is_weakly_almost_periodic(X: FinSpace, E: Relation) -> Verdict:
    """Saturating any closed set by closures of its elements' classes stays closed.

    Always true for finite spaces; verified anyway on small ones.
    """
    if X.n <= WAP_ENUMERATION_CAP:
        h = hat(X, E)
        for a in X.closed_sets():
            sat = saturate(h, a)
            if not X.is_closed(sat):
                raise ConsistencyError(f"finite union of closed sets is not closed: {_fmt(sat)}")
        return Verdict(True, note=FINITE_NOTE)
    return Verdict(True, note=FINITE_NOTE + " (not enumerated above %d points)" % WAP_ENUMERATION_CAP)


def is_minimal(X: FinSpace, E: Relation) -> Verdict:
    for x in range(X.n):
        c = closure(X, E.rows[x])
        if c != X.points:
            return Verdict(
                False,
                Witness("density-failure", (x,), f"cl(E({x})) = {_fmt(c)} is not the whole space"),
            )
    return Verdict(True)


def has_dense_element(X: FinSpace, E: Relation) -> bool:
    return any(closure(X, r) == X.points for r in E.rows)


def point_corollary(X: FinSpace, E: Relation, x: int) -> dict[str, bool]:
    """The three per-point conditions plus whether ``cl(E(x))`` is E-saturated."""
    h = hat(X, E)
    c = h.rows[x]
    ap = all(h.rows[y] == c for y in members(c))
    sub, r, _ = restrict(X, h, c)
    return {
        "almost_periodic": ap,
        "restriction_symmetric": is_symmetric(r),
        "restriction_closed_equivalence": is_equivalence(r) and is_closed_relation(sub, r),
        "saturated": saturate(E, c) & ~c == 0,
    }


def _corollary_violation(c: dict[str, bool]) -> str | None:
    ap, sym, ceq = c["almost_periodic"], c["restriction_symmetric"], c["restriction_closed_equivalence"]
    if ap and not ceq:
        return "almost periodic but restriction is not a closed equivalence"
    if ceq and not sym:
        return "closed equivalence restriction that is not symmetric"
    # Symmetric restriction implies almost periodicity only when the orbit
    # closure is E-saturated, as it is for orbits of flows.
    if c["saturated"] and sym and not ap:
        return "symmetric restriction on a saturated orbit closure but not almost periodic"
    return None


def almost_periodic_points(X: FinSpace, E: Relation) -> PointSet:
    h = hat(X, E)
    out = mask(x for x in range(X.n) if all(h.rows[y] == h.rows[x] for y in members(h.rows[x])))
    if is_equivalence(E):
        for x in range(X.n):
            problem = _corollary_violation(point_corollary(X, E, x))
            if problem:
                raise ConsistencyError(f"point {x}: {problem}")
    return out


@dataclass(frozen=True)
class Quotient:
    space: FinSpace
    projection: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


def quotient(X: FinSpace, Q: Relation) -> Quotient:
    """Quotient space by an equivalence; classes are numbered by smallest member."""
    if X.n != Q.n or not is_equivalence(Q):
        raise NotAnEquivalence("quotient needs an equivalence relation on the space")
    classes = Q.classes()
    projection = [0] * X.n
    for k, block in enumerate(classes):
        for x in block:
            projection[x] = k
    min_open = []
    for block in classes:
        # Smallest saturated open set containing the class.
        w = mask(block)
        while True:
            nxt = saturate(Q, X.up(w))
            if nxt == w:
                break
            w = nxt
        min_open.append(mask({projection[y] for y in members(w)}))
    return Quotient(
        FinSpace(len(classes), tuple(min_open)),
        tuple(projection),
        tuple(tuple(b) for b in classes),
    )


def orbit_class_relation(X: FinSpace, E: Relation) -> tuple[Relation, str | None]:
    h = hat(X, E)
    if is_equivalence(h):
        return h, None
    return tilde(X, E), "orbit closures do not form a partition; quotient taken by equal orbit closures"


def quotient_is_hausdorff(X: FinSpace, E: Relation) -> Verdict:
    q_rel, note = orbit_class_relation(X, E)
    q = quotient(X, q_rel)
    mo = q.space.min_open
    for a in range(q.space.n):
        for b in range(a + 1, q.space.n):
            if mo[a] & mo[b]:
                pa, pb = q.classes[a][0], q.classes[b][0]
                return Verdict(
                    False,
                    Witness(
                        "hausdorff-failure",
                        (pa, pb),
                        f"the classes of {pa} and {pb} have no disjoint saturated open neighbourhoods",
                    ),
                    note,
                )
    return Verdict(True, note=note)


def analyze(X: FinSpace, E: Relation) -> Report:
    h = hat(X, E)
    checks = {
        "pap_decomposition": is_pointwise_almost_periodic(X, E),
        "r_closed": is_r_closed(X, E),
        "d_stable": is_d_stable(X, E),
        "l_stable": is_l_stable(X, E),
        "weakly_almost_periodic": is_weakly_almost_periodic(X, E),
        "minimal": is_minimal(X, E),
        "quotient_hausdorff": quotient_is_hausdorff(X, E),
    }
    verdicts = {k: v.holds for k, v in checks.items()}
    verdicts["compact_classes"] = True
    verdicts["pointwise_periodic_like"] = True
    notes = [
        "compact_classes: trivially compact (finite)",
        "pointwise_periodic_like: every class is finite",
    ]
    witnesses = []
    for k, v in checks.items():
        if v.witness is not None:
            witnesses.append(v.witness)
        if v.note:
            notes.append(f"{k}: {v.note}")
    if verdicts["r_closed"] != verdicts["d_stable"]:
        raise ConsistencyError("R-closed and D-stable verdicts differ")
    sep = separation_profile(X)
    if sep.hausdorff and verdicts["r_closed"] != verdicts["l_stable"]:
        raise ConsistencyError("R-closed and L-stable verdicts differ on a Hausdorff space")
    if is_equivalence(E) and verdicts["r_closed"] and not verdicts["pap_decomposition"]:
        raise ConsistencyError("R-closed equivalence whose orbit closures do not partition the space")
    ap = almost_periodic_points(X, E)
    data = {
        "points": X.n,
        "separation": sep.to_json(),
        "orbit_closure_relation": h.to_json(),
        "orbit_classes": tilde(X, E).classes(),
        "almost_periodic_points": members(ap),
    }
    return Report(verdicts, witnesses, notes, data)


def replay(X: FinSpace, E: Relation, w: Witness) -> bool:
    """True when ``w`` still demonstrates a failure on ``(X, E)``."""
    h = hat(X, E)
    p = w.points
    if w.kind == "reflexivity-failure":
        return (p[0], p[0]) not in h
    if w.kind == "symmetry-failure":
        a, b = p
        return (b, a) in h and (a, b) not in h
    if w.kind == "transitivity-failure":
        x, y, z = p
        return (x, y) in h and (y, z) in h and (x, z) not in h
    if w.kind == "closure-gap":
        x, y = p
        hit = any(h.rows[a] & X.min_open[y] for a in members(X.min_open[x]))
        return hit and (x, y) not in h
    if w.kind == "prolongation-gap":
        return p in prolongation(X, E) and p not in h
    if w.kind == "l-stability-failure":
        x, u = p
        return h.rows[x] & ~largest_saturated_open(X, E, mask(u)) != 0
    if w.kind == "density-failure":
        return closure(X, E.rows[p[0]]) != X.points
    if w.kind == "hausdorff-failure":
        q_rel, _ = orbit_class_relation(X, E)
        q = quotient(X, q_rel)
        a, b = (q.projection[i] for i in p)
        return a != b and q.space.min_open[a] & q.space.min_open[b] != 0
    raise ValueError(f"unknown witness kind {w.kind!r}")


@dataclass(frozen=True)
class Violation:
    instance: int
    check: str
    detail: str

    def to_json(self) -> dict:
        return {"instance": self.instance, "check": self.check, "detail": self.detail}


def check_instance(X: FinSpace, E: Relation) -> list[tuple[str, str]]:
    """Run every lemma-level check on one ``(space, equivalence)`` pair."""
    out: list[tuple[str, str]] = []
    h = hat(X, E)
    sym, trans = is_symmetric(h), is_transitive(h)
    equiv = is_reflexive(h) and sym and trans
    closed = is_closed_relation(X, h)

    if sym and not trans:
        out.append(("symmetry-implies-transitivity", "hat(E) symmetric but not transitive"))
    if closed and not equiv:
        out.append(("closed-implies-equivalence", "hat(E) closed but not an equivalence"))
    criterion = all(saturate(E, h.rows[x]) & ~h.rows[x] == 0 for x in range(X.n))
    if trans != criterion:
        out.append(("transitivity-criterion", f"transitive={trans}, saturation criterion={criterion}"))
    r_closed = closed
    d_stable = prolongation(X, E) == h
    if r_closed != d_stable:
        out.append(("r-closed-equals-d-stable", f"r_closed={r_closed}, d_stable={d_stable}"))
    if r_closed and not equiv:
        out.append(("r-closed-implies-pap", "R-closed but orbit closures do not partition"))
    if separation_profile(X).hausdorff:
        l_stable = is_l_stable(X, E).holds
        if r_closed != l_stable:
            out.append(("r-closed-equals-l-stable", f"r_closed={r_closed}, l_stable={l_stable}"))
    if has_dense_element(X, E):
        four = {
            "symmetric": sym,
            "equivalence": equiv,
            "closed_equivalence": equiv and closed,
            "minimal": is_minimal(X, E).holds,
        }
        if len(set(four.values())) != 1:
            out.append(("dense-element-equivalences", repr(four)))
    for x in range(X.n):
        problem = _corollary_violation(point_corollary(X, E, x))
        if problem:
            out.append(("almost-periodic-point", f"point {x}: {problem}"))
    if equiv and closed:
        for a in X.closed_sets():
            if not X.is_closed(saturate(h, a)):
                out.append(("closed-saturation", f"saturation of {_fmt(a)} is not closed"))
                break
    return out


def _check_chunk(chunk: list[tuple[int, FinSpace, Relation]]) -> list[Violation]:
    out = []
    for i, X, E in chunk:
        if not is_equivalence(E):
            raise NotAnEquivalence(f"instance {i}: the battery takes equivalence relations")
        out.extend(Violation(i, check, detail) for check, detail in check_instance(X, E))
    return out


def theorem_battery(instances: Iterable[tuple[FinSpace, Relation]], jobs: int = 1) -> list[Violation]:
    """Violations of the lemma-level checks, ordered by instance index."""
    indexed = [(i, X, E) for i, (X, E) in enumerate(instances)]
    if jobs <= 1 or len(indexed) < 2 * jobs:
        return _check_chunk(indexed)
    size = -(-len(indexed) // (4 * jobs))
    chunks = [indexed[k : k + size] for k in range(0, len(indexed), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [v for part in pool.map(_check_chunk, chunks) for v in part]


def exhaustive_instances(n: int) -> Iterator[tuple[FinSpace, Relation]]:
    equivalences = list(all_equivalences(n))
    for X in all_topologies(n):
        for E in equivalences:
            yield X, E


def random_instances(seed: int, count: int, max_points: int = 6) -> Iterator[tuple[FinSpace, Relation]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_points)
        yield random_space(rng, n), random_equivalence(rng, n)
