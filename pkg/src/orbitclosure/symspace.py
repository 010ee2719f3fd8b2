"""Two countable non-Hausdorff-flavoured dynamical systems handled symbolically.

``cofinite_with_f``
    The circle ``R/Z`` (restricted to the countable invariant set of points
    ``q + m*alpha`` with ``q`` rational) with open sets ``U`` and ``U - F``
    for ``U`` cofinite, where ``F`` is the orbit of 0 under rotation by a
    fixed irrational ``alpha``. ``alpha`` never takes a numeric value: since
    it is irrational, ``q + m*alpha`` and ``q' + m'*alpha`` agree mod 1
    exactly when ``m == m'`` and ``q == q'`` mod 1.

``discrete_plus_infinity``
    Level ``n >= 2`` holds the points ``k/n`` of a circle rotated by ``1/n``,
    so every orbit is a level. Levels are isolated; neighbourhoods of the
    added point at infinity are the sets with finite complement.

Every verdict depends only on which class a point falls in (in ``F`` or
not; on a level or at infinity), so verdicts are decided on class
representatives and returned with certificates that can be replayed
against concrete neighbourhoods.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal, Union

from orbitclosure.actions import ActionSpec, orbit_relation, periodicity_profile
from orbitclosure.checkers import Report, analyze
from orbitclosure.errors import NotOpen, PointNotInU, UnsupportedSetShape
from orbitclosure.finspace import discrete

Kind = Literal["cofinite_with_f", "discrete_plus_infinity"]


@dataclass(frozen=True)
class RotPoint:
    """The point ``q + m*alpha`` of ``R/Z``."""

    q: Fraction
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q) % 1)

    def __str__(self) -> str:
        return f"{self.q}{self.m:+d}a"


@dataclass(frozen=True)
class LevelPoint:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 2 or not 0 <= self.k < self.n:
            raise ValueError(f"no level point ({self.n}, {self.k})")

    def __str__(self) -> str:
        return f"L{self.n}:{self.k}"


@dataclass(frozen=True)
class InfinityPoint:
    def __str__(self) -> str:
        return "inf"


INFINITY = InfinityPoint()
SymPoint = Union[RotPoint, LevelPoint, InfinityPoint]


# Set shapes. Each has a decidable membership test for the kinds it belongs to.
@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Whole:
    pass


@dataclass(frozen=True)
class Finite:
    points: frozenset


@dataclass(frozen=True)
class Cofinite:
    excluded: frozenset


@dataclass(frozen=True)
class FPlusFinite:
    extra: frozenset


@dataclass(frozen=True)
class CofiniteMinusF:
    excluded: frozenset


@dataclass(frozen=True)
class Orbit:
    base: SymPoint


@dataclass(frozen=True)
class Level:
    n: int


@dataclass(frozen=True)
class WithInfinity:
    """``{inf}`` together with a set of level points."""

    part: "SymSet"


SymSet = Union[Empty, Whole, Finite, Cofinite, FPlusFinite, CofiniteMinusF, Orbit, Level, WithInfinity]


def finite(*points: SymPoint) -> Finite:
    return Finite(frozenset(points))


def cofinite(*points: SymPoint) -> SymSet:
    return Cofinite(frozenset(points)) if points else Whole()


@dataclass(frozen=True)
class SymSystem:
    kind: Kind
    name: str
    with_f: bool = True
    rotating: bool = True


def ex002() -> SymSystem:
    return SymSystem("cofinite_with_f", "ex002")


def ex06() -> SymSystem:
    return SymSystem("discrete_plus_infinity", "ex06")


def degenerate() -> SymSystem:
    """Cofinite circle, ``F`` empty, trivial action."""
    return SymSystem("cofinite_with_f", "cofinite-trivial", with_f=False, rotating=False)


def _check_point(sys: SymSystem, p: SymPoint) -> None:
    ok = isinstance(p, RotPoint) if sys.kind == "cofinite_with_f" else isinstance(p, (LevelPoint, InfinityPoint))
    if not ok:
        raise TypeError(f"{p!r} is not a point of {sys.name}")


def _check_shape(sys: SymSystem, s: SymSet) -> None:
    if sys.kind == "cofinite_with_f":
        if isinstance(s, (Level, WithInfinity)):
            raise UnsupportedSetShape(f"{type(s).__name__} has no meaning on {sys.name}")
        if isinstance(s, (FPlusFinite, CofiniteMinusF)) and not sys.with_f:
            raise UnsupportedSetShape(f"{type(s).__name__} needs a nonempty F")
    elif isinstance(s, (FPlusFinite, CofiniteMinusF)):
        raise UnsupportedSetShape(f"{type(s).__name__} has no meaning on {sys.name}")


def in_f(sys: SymSystem, p: SymPoint) -> bool:
    return sys.kind == "cofinite_with_f" and sys.with_f and p.q == 0


def act(sys: SymSystem, p: SymPoint, t: int) -> SymPoint:
    """The generator applied ``t`` times."""
    if isinstance(p, RotPoint):
        return RotPoint(p.q, p.m + t) if sys.rotating else p
    if isinstance(p, LevelPoint):
        return LevelPoint(p.n, (p.k + t) % p.n)
    return p


def orbit_period(sys: SymSystem, p: SymPoint) -> int | None:
    """Least positive period, ``None`` for an infinite orbit."""
    if isinstance(p, RotPoint):
        return None if sys.rotating else 1
    if isinstance(p, LevelPoint):
        return p.n
    return 1


def contains(sys: SymSystem, s: SymSet, p: SymPoint) -> bool:
    _check_shape(sys, s)
    if isinstance(s, Empty):
        return False
    if isinstance(s, Whole):
        return True
    if isinstance(s, Finite):
        return p in s.points
    if isinstance(s, Cofinite):
        return p not in s.excluded
    if isinstance(s, FPlusFinite):
        return in_f(sys, p) or p in s.extra
    if isinstance(s, CofiniteMinusF):
        return not in_f(sys, p) and p not in s.excluded
    if isinstance(s, Orbit):
        b = s.base
        if isinstance(b, RotPoint):
            return isinstance(p, RotPoint) and (p.q == b.q if sys.rotating else p == b)
        if isinstance(b, LevelPoint):
            return isinstance(p, LevelPoint) and p.n == b.n
        return p == b
    if isinstance(s, Level):
        return isinstance(p, LevelPoint) and p.n == s.n
    if isinstance(s, WithInfinity):
        return p == INFINITY or contains(sys, s.part, p)
    raise UnsupportedSetShape(repr(s))


def _complement_is_finite(sys: SymSystem, s: SymSet) -> bool:
    if isinstance(s, (Whole, Cofinite)):
        return True
    if isinstance(s, WithInfinity):
        return isinstance(s.part, (Whole, Cofinite))
    return False


def is_closed(sys: SymSystem, s: SymSet) -> bool:
    _check_shape(sys, s)
    if isinstance(s, (Empty, Whole, Finite)):
        return True
    if sys.kind == "cofinite_with_f":
        # Closed sets: X, finite sets, and F plus a finite set.
        if isinstance(s, FPlusFinite):
            return True
        if isinstance(s, Orbit):
            return orbit_period(sys, s.base) is not None or in_f(sys, s.base)
        return False
    # Closed sets: finite sets of level points, or anything containing inf.
    if isinstance(s, Cofinite):
        return INFINITY not in s.excluded
    return isinstance(s, (Level, Orbit, WithInfinity))


def is_open(sys: SymSystem, s: SymSet) -> bool:
    _check_shape(sys, s)
    if isinstance(s, (Empty, Whole, Cofinite)):
        return True
    if sys.kind == "cofinite_with_f":
        return isinstance(s, CofiniteMinusF)
    if isinstance(s, Finite):
        return INFINITY not in s.points
    if isinstance(s, Level):
        return True
    if isinstance(s, Orbit):
        return s.base != INFINITY
    if isinstance(s, WithInfinity):
        return _complement_is_finite(sys, s)
    return False


def sym_closure(sys: SymSystem, s: SymSet) -> SymSet:
    """Least closed superset within the kind's closed-set lattice."""
    _check_shape(sys, s)
    if is_closed(sys, s):
        if isinstance(s, Orbit):
            if in_f(sys, s.base) and sys.rotating:
                return FPlusFinite(frozenset())
            if isinstance(s.base, LevelPoint):
                return Level(s.base.n)
            return Finite(frozenset([s.base]))
        return s
    if sys.kind == "cofinite_with_f":
        # A non-closed set is infinite and not inside F plus a finite set
        # (orbits inside F are closed), so only X contains it.
        return Whole()
    # Non-closed here means infinitely many level points without inf.
    assert isinstance(s, Cofinite)
    return Cofinite(s.excluded - {INFINITY})


def orbit_closure(sys: SymSystem, p: SymPoint) -> SymSet:
    _check_point(sys, p)
    return sym_closure(sys, Orbit(p))


def in_orbit_closure_relation(sys: SymSystem, x: SymPoint, y: SymPoint) -> bool:
    """``(x, y)`` in ``R``: ``y`` lies in the closure of the orbit of ``x``."""
    return contains(sys, orbit_closure(sys, x), y)


def _candidate_points(sys: SymSystem) -> Iterator[SymPoint]:
    if sys.kind == "cofinite_with_f":
        for d in itertools.count(1):
            for a in range(d):
                if math.gcd(a, d) == 1:
                    for m in range(-d, d + 1):
                        yield RotPoint(Fraction(a, d), m)
    else:
        yield INFINITY
        for n in itertools.count(2):
            for k in range(n):
                yield LevelPoint(n, k)


def find_point(sys: SymSystem, *sets: SymSet, limit: int = 100_000) -> SymPoint | None:
    """First enumerated point lying in every set, or ``None`` within ``limit`` tries."""
    for p in itertools.islice(_candidate_points(sys), limit):
        if all(contains(sys, s, p) for s in sets):
            return p
    return None


def _nonzero_integers() -> Iterator[int]:
    yield 0
    for j in itertools.count(1):
        yield j
        yield -j


@dataclass(frozen=True)
class Certificate:
    kind: str
    claim: str
    points: tuple
    explanation: str
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "claim": self.claim,
            "points": [str(p) for p in self.points],
            "explanation": self.explanation,
        }
        if self.extra:
            out["extra"] = self.extra
        return out


def _levels_of(sys: SymSystem, s: SymSet) -> set[int] | None:
    """Levels a set meets, or ``None`` if it meets infinitely many."""
    if isinstance(s, Empty):
        return set()
    if isinstance(s, Finite):
        return {p.n for p in s.points if isinstance(p, LevelPoint)}
    if isinstance(s, Level):
        return {s.n}
    if isinstance(s, Orbit):
        return {s.base.n} if isinstance(s.base, LevelPoint) else set()
    if isinstance(s, WithInfinity):
        return _levels_of(sys, s.part)
    return None


def _meets_level(sys: SymSystem, s: SymSet, n: int) -> bool:
    return any(contains(sys, s, LevelPoint(n, k)) for k in range(n))


def meets_relation(sys: SymSystem, u: SymSet, v: SymSet) -> tuple[SymPoint, SymPoint] | None:
    """A pair of ``R`` inside ``U x V``, or ``None`` when there is none.

    Only decided for the discrete-plus-infinity kind, where ``R`` is the union
    of the level squares and ``(inf, inf)``.
    """
    if sys.kind != "discrete_plus_infinity":
        raise UnsupportedSetShape("exact disjointness from R is decided only on the level model")
    if contains(sys, u, INFINITY) and contains(sys, v, INFINITY):
        return INFINITY, INFINITY
    lu, lv = _levels_of(sys, u), _levels_of(sys, v)
    if lu is None and lv is None:
        # Both meet infinitely many levels with finitely many exceptions.
        candidates: Iterator[int] = itertools.count(2)
    else:
        candidates = iter(sorted(lu if lv is None else lv if lu is None else lu & lv))
    for n in candidates:
        a = next((LevelPoint(n, k) for k in range(n) if contains(sys, u, LevelPoint(n, k))), None)
        b = next((LevelPoint(n, k) for k in range(n) if contains(sys, v, LevelPoint(n, k))), None)
        if a is not None and b is not None:
            return a, b
    return None


def replay_bar(sys: SymSystem, cert: Certificate, x: SymPoint, y: SymPoint, u: SymSet, v: SymSet):
    """Check a closure-membership certificate against one neighbourhood pair.

    Positive certificates return a pair of ``R`` inside ``U x V``; negative
    ones return ``True`` when their recorded ``U x V`` misses ``R``.
    """
    if not (is_open(sys, u) and is_open(sys, v)):
        raise NotOpen("replay needs open neighbourhoods")
    if not (contains(sys, u, x) and contains(sys, v, y)):
        raise PointNotInU("neighbourhoods must contain the pair")
    if cert.kind == "in-R":
        return x, y
    if cert.kind == "orbit-family":
        for j in _nonzero_integers():
            z = act(sys, y, j)
            if contains(sys, u, z):
                return z, y
    if cert.kind == "diagonal-family":
        z = find_point(sys, u, v)
        return None if z is None else (z, z)
    if cert.kind == "separating-pair":
        return meets_relation(sys, u, v) is None
    raise ValueError(f"unknown certificate kind {cert.kind!r}")


def sym_bar_membership(sys: SymSystem, x: SymPoint, y: SymPoint) -> tuple[bool, Certificate]:
    """Decide whether ``(x, y)`` lies in the closure of ``R`` in ``X x X``."""
    _check_point(sys, x)
    _check_point(sys, y)
    if in_orbit_closure_relation(sys, x, y):
        return True, Certificate("in-R", "(x, y) in closure(R)", (x, y), f"{y} is already in the orbit closure of {x}")
    if sys.kind == "cofinite_with_f":
        if sys.rotating and not in_f(sys, y):
            return True, Certificate(
                "orbit-family",
                "(x, y) in closure(R) minus R",
                (x, y),
                f"orbit({y}) x {{{y}}} lies in R because orbit({y}) misses F and so is dense; "
                f"every neighbourhood of {x} excludes only finitely many points outside F, "
                f"so it meets the infinite orbit of {y}",
            )
        return True, Certificate(
            "diagonal-family",
            "(x, y) in closure(R) minus R",
            (x, y),
            "R contains the diagonal and any two nonempty open sets meet, "
            "so every neighbourhood pair contains a diagonal point",
        )
    if isinstance(x, LevelPoint) and isinstance(y, LevelPoint):
        u, v = finite(x), finite(y)
    elif isinstance(y, LevelPoint):
        u, v = cofinite(*(LevelPoint(y.n, k) for k in range(y.n))), finite(y)
    else:
        u, v = finite(x), cofinite(*(LevelPoint(x.n, k) for k in range(x.n)))
    cert = Certificate(
        "separating-pair",
        "(x, y) not in closure(R)",
        (x, y),
        "the open neighbourhoods U x V below contain the pair and miss R",
        {"U": describe(u), "V": describe(v)},
    )
    assert meets_relation(sys, u, v) is None
    return False, cert


def describe(s: SymSet) -> str:
    if isinstance(s, Empty):
        return "{}"
    if isinstance(s, Whole):
        return "X"
    if isinstance(s, Finite):
        return "{" + ", ".join(sorted(map(str, s.points))) + "}"
    if isinstance(s, Cofinite):
        return "X - {" + ", ".join(sorted(map(str, s.excluded))) + "}"
    if isinstance(s, FPlusFinite):
        return "F" + ("" if not s.extra else " + {" + ", ".join(sorted(map(str, s.extra))) + "}")
    if isinstance(s, CofiniteMinusF):
        return "X - F" + ("" if not s.excluded else " - {" + ", ".join(sorted(map(str, s.excluded))) + "}")
    if isinstance(s, Orbit):
        return f"orbit({s.base})"
    if isinstance(s, Level):
        return f"level {s.n}"
    return "{inf} + " + describe(s.part)


@dataclass(frozen=True)
class SyndeticResult:
    holds: bool
    gap: int
    bound: int
    compact_set: tuple[int, ...]
    missing: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"gap": self.gap, "bound": self.bound, "compact_set": list(self.compact_set), "missing": list(self.missing)}


def _excluded_points(s: SymSet) -> frozenset:
    if isinstance(s, (Cofinite, CofiniteMinusF)):
        return s.excluded
    return frozenset()


def sym_syndetic(sys: SymSystem, x: SymPoint, u: SymSet) -> SyndeticResult:
    """Return times of ``x`` to an open ``U``, with an explicit gap bound.

    ``missing`` lists the times in one period (or, for infinite orbits, all
    integer times) whose orbit point lies outside ``U``.
    """
    _check_point(sys, x)
    if not is_open(sys, u):
        raise NotOpen(f"{describe(u)} is not open in {sys.name}")
    if not contains(sys, u, x):
        raise PointNotInU(f"{x} is not in {describe(u)}")
    period = orbit_period(sys, x)
    if period is None:
        # Every open set containing a point of this orbit excludes only the
        # listed points (F is disjoint from or contains the whole orbit).
        missing = sorted(p.m - x.m for p in _excluded_points(u) if isinstance(p, RotPoint) and p.q == x.q)
        run = longest = 0
        prev = None
        for t in missing:
            run = run + 1 if prev is not None and t == prev + 1 else 1
            longest = max(longest, run)
            prev = t
        gap = longest + 1
        bound = 2 * max((abs(t) for t in missing), default=0) + 1
        k = tuple(range(gap))
        lo, hi = (missing[0] - gap, missing[-1] + gap) if missing else (0, 0)
        skip = set(missing)
        holds = all(any(m - j not in skip for j in k) for m in range(lo, hi + 1))
        return SyndeticResult(holds, gap, bound, k, tuple(missing))
    times = [t for t in range(period) if contains(sys, u, act(sys, x, t))]
    cyclic = times + [times[0] + period]
    gap = max(b - a for a, b in zip(cyclic, cyclic[1:]))
    k = tuple(range(gap))
    holds = len({(a + b) % period for a in k for b in times}) == period
    missing = tuple(t for t in range(period) if t not in times)
    return SyndeticResult(holds, gap, period, k, missing)


# Representatives of every point class, and sample neighbourhoods for the syndetic certificates.
def representatives(sys: SymSystem) -> list[SymPoint]:
    if sys.kind == "cofinite_with_f":
        return [RotPoint(0, 0), RotPoint(0, 3), RotPoint(Fraction(1, 2), 0), RotPoint(Fraction(1, 3), -2)]
    return [LevelPoint(2, 0), LevelPoint(3, 1), LevelPoint(5, 4), INFINITY]


def sample_neighbourhoods(sys: SymSystem, x: SymPoint) -> list[SymSet]:
    out: list[SymSet] = [Whole()]
    if sys.kind == "cofinite_with_f":
        near = sorted({act(sys, x, t) for t in (1, 2, 3, -5)} - {x}, key=str)
        far = RotPoint(Fraction(1, 7), 0)
        out.append(cofinite(*near, far))
        if not in_f(sys, x) and sys.with_f:
            out.append(CofiniteMinusF(frozenset(near)))
    elif isinstance(x, LevelPoint):
        out += [finite(x), Level(x.n)]
    else:
        out.append(cofinite(LevelPoint(2, 0), LevelPoint(3, 2)))
    return out


def _separate(sys: SymSystem, a: SymPoint, b: SymPoint) -> tuple[SymSet, SymSet] | None:
    """Disjoint open neighbourhoods of two points, if any exist."""
    if sys.kind == "cofinite_with_f":
        # Open sets are cofinite, possibly minus F; two nonempty ones always
        # share the infinitely many remaining points outside F.
        return None
    if isinstance(a, LevelPoint) and isinstance(b, LevelPoint):
        return finite(a), finite(b)
    lp = a if isinstance(a, LevelPoint) else b
    near, far = finite(lp), cofinite(lp)
    return (near, far) if a == lp else (far, near)


def _pairs(points: list[SymPoint]) -> list[tuple[SymPoint, SymPoint]]:
    return [(a, b) for a in points for b in points]


def sym_analyze(sys: SymSystem) -> Report:
    reps = representatives(sys)
    certs: list[Certificate] = []
    verdicts: dict[str, bool] = {}

    singletons_closed = all(is_closed(sys, finite(p)) for p in reps)
    verdicts["T1"] = singletons_closed
    certs.append(Certificate("t1", "every singleton is closed", (), "finite sets are closed in the closed-set lattice"))

    anchor = reps[0] if sys.kind == "cofinite_with_f" else INFINITY
    verdicts["compact"] = True
    certs.append(
        Certificate(
            "compactness",
            "every open cover has a finite subcover",
            (anchor,),
            f"any member of a cover containing {anchor} has finite complement; "
            "one more member per remaining point finishes the subcover",
        )
    )

    hausdorff = True
    for a, b in _pairs(reps):
        if a == b:
            continue
        sep = _separate(sys, a, b)
        if sep is None:
            hausdorff = False
            certs.append(
                Certificate(
                    "hausdorff-failure",
                    "two points without disjoint neighbourhoods",
                    (a, b),
                    "every nonempty open set is cofinite or cofinite minus F, and any two such sets meet",
                )
            )
            break
        u, v = sep
        assert contains(sys, u, a) and contains(sys, v, b) and is_open(sys, u) and is_open(sys, v)
    verdicts["Hausdorff"] = hausdorff

    flow_ok = True
    gaps = []
    for x in reps:
        for u in sample_neighbourhoods(sys, x):
            res = sym_syndetic(sys, x, u)
            flow_ok &= res.holds
            gaps.append({"point": str(x), "U": describe(u), **res.to_json()})
    verdicts["flow_pap"] = flow_ok
    certs.append(
        Certificate(
            "syndetic",
            "every return-time set N(x, U) is syndetic",
            (),
            "every neighbourhood of x contains all but finitely many points of its orbit"
            if sys.kind == "cofinite_with_f"
            else "every orbit is periodic",
            {"gaps": gaps},
        )
    )

    closures = {x: orbit_closure(sys, x) for x in reps}
    decomposition = True
    for x, y in _pairs(reps):
        if contains(sys, closures[x], y) and not contains(sys, closures[y], x):
            decomposition = False
            certs.append(
                Certificate(
                    "symmetry-failure",
                    "orbit closures do not partition the space",
                    (y, x),
                    f"{y} is in the orbit closure {describe(closures[x])} of {x} "
                    f"but {x} is not in the orbit closure {describe(closures[y])} of {y}",
                )
            )
            break
    verdicts["decomposition_pap"] = decomposition

    r_closed = True
    for x, y in _pairs(reps):
        in_bar, cert = sym_bar_membership(sys, x, y)
        if in_bar and not in_orbit_closure_relation(sys, x, y):
            r_closed = False
            certs.append(cert)
            break
    verdicts["r_closed"] = r_closed

    minimal = all(isinstance(c, Whole) for c in closures.values())
    verdicts["minimal"] = minimal
    if not minimal:
        x = next(p for p, c in closures.items() if not isinstance(c, Whole))
        certs.append(
            Certificate("density-failure", "some orbit is not dense", (x,), f"orbit closure of {x} is {describe(closures[x])}")
        )

    periods = [orbit_period(sys, x) for x in reps]
    pointwise_periodic = all(p is not None for p in periods)
    verdicts["pointwise_periodic"] = pointwise_periodic
    if sys.kind == "discrete_plus_infinity":
        # Level n has period n, so no single period serves every level.
        verdicts["periodic"] = False
        certs.append(
            Certificate(
                "unbounded-periods",
                "no global period",
                (),
                "for any candidate period p the level p + 1 point has period p + 1, which does not divide p",
                {"checked": [[p, str(LevelPoint(p + 1, 0))] for p in (1, 6, 60)]},
            )
        )
    else:
        verdicts["periodic"] = pointwise_periodic

    verdicts["quotient_Hausdorff"] = _orbit_class_space_hausdorff(sys, certs)

    data: dict = {
        "system": sys.name,
        "orbit_closures": {str(x): describe(c) for x, c in closures.items()},
    }
    if sys.kind == "cofinite_with_f" and sys.with_f:
        data["F_closed"] = is_closed(sys, FPlusFinite(frozenset()))
        data["F_proper"] = find_point(sys, CofiniteMinusF(frozenset())) is not None
    report = Report(verdicts, [], [], data)
    report.data["certificates"] = [c.to_json() for c in certs]
    return report


def _orbit_class_space_hausdorff(sys: SymSystem, certs: list[Certificate]) -> bool:
    """Orbit-class space: points with equal orbit closures are identified."""
    if sys.kind == "cofinite_with_f":
        # Saturated open sets are unions of classes; every nonempty open set
        # already meets every class not inside F, so two classes that are not
        # both inside F can never be separated.
        reps = representatives(sys)
        classes = {}
        for x in reps:
            classes.setdefault(describe(orbit_closure(sys, x)), x)
        if len(classes) == 1:
            return True
        a, b = list(classes.values())[:2]
        certs.append(
            Certificate(
                "quotient-hausdorff-failure",
                "orbit-class space is not Hausdorff",
                (a, b),
                "every nonempty saturated open set meets the class of every point outside F",
            )
        )
        return False
    certs.append(
        Certificate(
            "quotient-hausdorff",
            "orbit-class space is Hausdorff",
            (),
            "each level is a saturated open set; a level and its complement separate it from infinity",
        )
    )
    return True


def truncated_model(big_n: int) -> ActionSpec:
    """Finite shadow of the level model: levels ``2..big_n`` plus infinity (last index)."""
    perm = []
    start = 0
    for n in range(2, big_n + 1):
        perm += [start + (k + 1) % n for k in range(n)]
        start += n
    perm.append(start)
    return ActionSpec(discrete(start + 1), (tuple(perm),), "Z")


TRUNCATION_KEYS = ("decomposition_pap", "r_closed", "quotient_Hausdorff", "pointwise_periodic", "minimal", "T1", "Hausdorff")


def truncation_verdicts(big_n: int) -> dict:
    A = truncated_model(big_n)
    rep = analyze(A.space, orbit_relation(A))
    prof = periodicity_profile(A)
    return {
        "decomposition_pap": rep.verdicts["pap_decomposition"],
        "r_closed": rep.verdicts["r_closed"],
        "quotient_Hausdorff": rep.verdicts["quotient_hausdorff"],
        "pointwise_periodic": prof.pointwise_periodic,
        "minimal": rep.verdicts["minimal"],
        "T1": rep.data["separation"]["T1"],
        "Hausdorff": rep.data["separation"]["Hausdorff"],
        "max_order": prof.max_order,
    }


def sym_periodicity_profile(sys: SymSystem) -> dict:
    rep = sym_analyze(sys)
    return {
        "pointwise_periodic": rep.verdicts["pointwise_periodic"],
        "periodic": rep.verdicts["periodic"],
        "max_order": "inf" if not rep.verdicts["periodic"] else 1,
    }


SYSTEMS = {"ex002": ex002, "ex06": ex06, "cofinite-trivial": degenerate}
