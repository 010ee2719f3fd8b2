from fractions import Fraction
from itertools import product

import pytest

from orbitclosure import symspace as S
from orbitclosure.errors import NotOpen, PointNotInU, UnsupportedSetShape

ZERO = S.RotPoint(0, 0)
HALF = S.RotPoint(Fraction(1, 2), 0)
THIRD = S.RotPoint(Fraction(1, 3), 4)


def test_rotpoint_normalisation():
    assert S.RotPoint(Fraction(3, 2), 1) == S.RotPoint(Fraction(1, 2), 1)
    assert S.RotPoint(Fraction(-1, 3), 0).q == Fraction(2, 3)
    assert str(HALF) == "1/2+0a"
    assert str(S.LevelPoint(5, 2)) == "L5:2"
    with pytest.raises(ValueError):
        S.LevelPoint(3, 3)
    with pytest.raises(ValueError):
        S.LevelPoint(1, 0)


def test_ex002_orbit_closures():
    sys = S.ex002()
    assert S.orbit_closure(sys, HALF) == S.Whole()
    assert S.orbit_closure(sys, ZERO) == S.FPlusFinite(frozenset())
    assert S.sym_closure(sys, S.finite(HALF, THIRD)) == S.finite(HALF, THIRD)
    assert S.is_closed(sys, S.FPlusFinite(frozenset()))
    assert S.find_point(sys, S.CofiniteMinusF(frozenset())) is not None


def test_ex002_relation_membership():
    sys = S.ex002()
    assert not S.in_orbit_closure_relation(sys, ZERO, HALF)
    assert S.in_orbit_closure_relation(sys, HALF, ZERO)
    assert S.in_orbit_closure_relation(sys, ZERO, S.RotPoint(0, 7))
    ok, cert = S.sym_bar_membership(sys, ZERO, HALF)
    assert ok and cert.kind == "orbit-family"


def ex002_neighbourhoods(x):
    sys = S.ex002()
    out = []
    for exclude in ([], [S.RotPoint(x.q, x.m + 1), S.RotPoint(x.q, x.m - 2), HALF], [THIRD]):
        ex = frozenset(p for p in exclude if p != x)
        out.append(S.Cofinite(ex) if ex else S.Whole())
        if not S.in_f(sys, x):
            out.append(S.CofiniteMinusF(ex))
    return out


def test_ex002_positive_certificate_replays_on_neighbourhoods():
    sys = S.ex002()
    y = HALF
    ok, cert = S.sym_bar_membership(sys, ZERO, y)
    for u in ex002_neighbourhoods(ZERO):
        for v in ex002_neighbourhoods(y):
            a, b = S.replay_bar(sys, cert, ZERO, y, u, v)
            assert S.contains(sys, u, a) and S.contains(sys, v, b)
            assert S.in_orbit_closure_relation(sys, a, b)


def test_replay_rejects_bad_neighbourhoods():
    sys = S.ex002()
    _, cert = S.sym_bar_membership(sys, ZERO, HALF)
    with pytest.raises(NotOpen):
        S.replay_bar(sys, cert, ZERO, HALF, S.finite(ZERO), S.Whole())
    with pytest.raises(PointNotInU):
        S.replay_bar(sys, cert, ZERO, HALF, S.cofinite(ZERO), S.Whole())


def test_ex002_report():
    rep = S.sym_analyze(S.ex002())
    v = rep.verdicts
    assert v["T1"] and v["compact"] and not v["Hausdorff"]
    assert v["flow_pap"] and not v["decomposition_pap"] and not v["r_closed"] and not v["minimal"]
    assert rep.data["F_closed"] and rep.data["F_proper"]
    kinds = {c["kind"] for c in rep.data["certificates"]}
    assert {"hausdorff-failure", "syndetic", "symmetry-failure", "orbit-family"} <= kinds


def test_ex002_syndetic_gap_bounds():
    sys = S.ex002()
    y1, y2 = S.RotPoint(THIRD.q, THIRD.m + 3), S.RotPoint(THIRD.q, THIRD.m - 2)
    res = S.sym_syndetic(sys, THIRD, S.cofinite(y1, y2))
    assert res.holds
    assert res.missing == (-2, 3)
    assert res.gap <= res.bound == 2 * 3 + 1
    # Direct check: every integer in a window is k + n with k in K, n a return time.
    returns = [n for n in range(-20, 21) if n not in res.missing]
    for m in range(-15, 16):
        assert any(m - k in returns for k in res.compact_set)
    assert S.sym_syndetic(sys, THIRD, S.Whole()).gap == 1
    with pytest.raises(NotOpen):
        S.sym_syndetic(sys, THIRD, S.finite(THIRD))
    with pytest.raises(PointNotInU):
        S.sym_syndetic(sys, THIRD, S.cofinite(THIRD))


def test_ex06_syndetic_and_report():
    sys = S.ex06()
    x = S.LevelPoint(5, 1)
    res = S.sym_syndetic(sys, x, S.finite(x))
    assert res.holds and res.gap == 5 and res.bound == 5
    rep = S.sym_analyze(sys)
    v = rep.verdicts
    assert v["pointwise_periodic"] and not v["periodic"]
    assert v["r_closed"] and v["quotient_Hausdorff"] and v["decomposition_pap"]
    assert v["T1"] and v["compact"] and v["Hausdorff"]


LEVEL_POINTS = [S.LevelPoint(2, 0), S.LevelPoint(2, 1), S.LevelPoint(3, 1), S.LevelPoint(7, 6), S.INFINITY]


def test_ex06_bar_membership_case_analysis():
    sys = S.ex06()
    for x, y in product(LEVEL_POINTS, repeat=2):
        ok, cert = S.sym_bar_membership(sys, x, y)
        same_level = isinstance(x, S.LevelPoint) and isinstance(y, S.LevelPoint) and x.n == y.n
        assert ok == (same_level or x == y == S.INFINITY)
        assert ok == S.in_orbit_closure_relation(sys, x, y)
        if not ok:
            assert cert.kind == "separating-pair"


def test_ex06_separating_certificates_replay():
    sys = S.ex06()
    x, y = S.INFINITY, S.LevelPoint(4, 1)
    ok, cert = S.sym_bar_membership(sys, x, y)
    assert not ok
    u = S.cofinite(*(S.LevelPoint(4, k) for k in range(4)))
    v = S.finite(y)
    assert S.replay_bar(sys, cert, x, y, u, v) is True
    assert S.meets_relation(sys, S.Whole(), S.Whole()) == (S.INFINITY, S.INFINITY)


def test_degenerate_system_is_not_r_closed():
    sys = S.degenerate()
    rep = S.sym_analyze(sys)
    assert rep.verdicts["pointwise_periodic"] and rep.verdicts["periodic"]
    # Cofinite topology on an infinite set: any two nonempty opens meet, so the
    # closed diagonal would have to be everything.
    assert not rep.verdicts["r_closed"]
    ok, cert = S.sym_bar_membership(sys, ZERO, HALF)
    assert ok and cert.kind == "diagonal-family"
    assert not S.in_orbit_closure_relation(sys, ZERO, HALF)
    a, b = S.replay_bar(sys, cert, ZERO, HALF, S.cofinite(HALF), S.cofinite(ZERO))
    assert a == b


CLOSURE_SAMPLES_002 = [
    S.Empty(),
    S.Whole(),
    S.finite(HALF),
    S.finite(ZERO, THIRD),
    S.cofinite(HALF),
    S.FPlusFinite(frozenset()),
    S.FPlusFinite(frozenset([HALF])),
    S.CofiniteMinusF(frozenset()),
    S.Orbit(ZERO),
    S.Orbit(HALF),
]
CLOSURE_SAMPLES_06 = [
    S.Empty(),
    S.Whole(),
    S.finite(S.LevelPoint(3, 0)),
    S.finite(S.INFINITY),
    S.Level(4),
    S.Orbit(S.LevelPoint(5, 2)),
    S.cofinite(S.INFINITY),
    S.cofinite(S.LevelPoint(2, 0)),
    S.WithInfinity(S.Level(3)),
]


@pytest.mark.parametrize("sys,samples", [(S.ex002(), CLOSURE_SAMPLES_002), (S.ex06(), CLOSURE_SAMPLES_06)])
def test_sym_closure_idempotent_extensive_closed(sys, samples):
    probe = list(S.representatives(sys)) + ([ZERO, HALF, THIRD] if sys.kind == "cofinite_with_f" else LEVEL_POINTS)
    for s in samples:
        c = S.sym_closure(sys, s)
        assert S.is_closed(sys, c)
        assert S.sym_closure(sys, c) == c
        for p in probe:
            if S.contains(sys, s, p):
                assert S.contains(sys, c, p)


def test_sym_closure_monotone_on_samples():
    sys = S.ex002()
    pairs = [
        (S.finite(ZERO), S.FPlusFinite(frozenset())),
        (S.finite(HALF), S.cofinite(ZERO)),
        (S.Orbit(ZERO), S.FPlusFinite(frozenset([HALF]))),
    ]
    probe = [ZERO, HALF, THIRD, S.RotPoint(0, 5), S.RotPoint(Fraction(2, 7), 1)]
    for a, b in pairs:
        ca, cb = S.sym_closure(sys, a), S.sym_closure(sys, b)
        assert all(S.contains(sys, cb, p) for p in probe if S.contains(sys, ca, p))


def test_unsupported_shapes():
    with pytest.raises(UnsupportedSetShape):
        S.sym_closure(S.ex002(), S.Level(3))
    with pytest.raises(UnsupportedSetShape):
        S.sym_closure(S.ex06(), S.FPlusFinite(frozenset()))
    with pytest.raises(UnsupportedSetShape):
        S.contains(S.degenerate(), S.CofiniteMinusF(frozenset()), ZERO)


def test_action_is_a_homeomorphism_on_sample_shapes():
    for sys, samples in ((S.ex002(), CLOSURE_SAMPLES_002), (S.ex06(), CLOSURE_SAMPLES_06)):
        for s in samples:
            # Image of a shape under the generator has the same shape class.
            assert S.is_closed(sys, s) == S.is_closed(sys, _shift(sys, s))
            assert S.is_open(sys, s) == S.is_open(sys, _shift(sys, s))


def _shift(sys, s):
    step = lambda p: S.act(sys, p, 1)  # noqa: E731
    if isinstance(s, S.Finite):
        return S.Finite(frozenset(map(step, s.points)))
    if isinstance(s, S.Cofinite):
        return S.Cofinite(frozenset(map(step, s.excluded)))
    if isinstance(s, S.FPlusFinite):
        return S.FPlusFinite(frozenset(map(step, s.extra)))
    if isinstance(s, S.CofiniteMinusF):
        return S.CofiniteMinusF(frozenset(map(step, s.excluded)))
    if isinstance(s, S.Orbit):
        return S.Orbit(step(s.base))
    return s


@pytest.mark.parametrize("big_n", [5, 10, 20])
def test_truncation_matches_symbolic_verdicts(big_n):
    symbolic = S.sym_analyze(S.ex06()).verdicts
    finite = S.truncation_verdicts(big_n)
    for key in S.TRUNCATION_KEYS:
        assert finite[key] == symbolic[key], key


def test_truncated_orders_grow_without_bound():
    orders = [S.truncation_verdicts(n)["max_order"] for n in (5, 10, 20)]
    assert orders == [60, 2520, 232792560]
    assert S.sym_periodicity_profile(S.ex06()) == {"pointwise_periodic": True, "periodic": False, "max_order": "inf"}
