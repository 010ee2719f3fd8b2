import pytest
from hypothesis import given, settings

import oracles
from conftest import space_and_subset, spaces
from orbitclosure.errors import CapExceeded, EmptyCarrier, NotATopology
from orbitclosure.finspace import (
    FinSpace,
    all_topologies,
    build_space,
    closure,
    discrete,
    from_min_open,
    full,
    indiscrete,
    interior,
    mask,
    members,
    product,
    separation_profile,
    sierpinski,
    space_from_json,
    subspace,
)

CHAIN = [[2], [1, 2], [0, 1, 2]]


def chain():
    return build_space(3, CHAIN)


def test_sierpinski_min_opens():
    X = sierpinski()
    assert [members(u) for u in X.min_open] == [[0, 1], [1]]
    assert X.opens() == [0, 0b10, 0b11]
    assert [members(c) for c in X.closed_sets()] == [[], [0], [0, 1]]


def test_one_point_space():
    X = build_space(1, [[0]])
    assert X.min_open == (1,)


def test_chain_min_opens_match_definitional_intersection():
    X = chain()
    assert [members(u) for u in X.min_open] == [[0, 1, 2], [1, 2], [2]]
    opens = [mask(s) for s in CHAIN] + [0]
    for x in range(3):
        want = full(3)
        for u in opens:
            if (u >> x) & 1:
                want &= u
        assert X.min_open[x] == want


def test_build_space_reports_violating_pair():
    with pytest.raises(NotATopology) as info:
        build_space(3, [[0], [1], [0, 1, 2]])
    assert info.value.pair == ([0], [1])
    with pytest.raises(NotATopology, match="intersection"):
        build_space(3, [[0, 1], [1, 2], [0, 1, 2], [0, 1, 2]])


def test_build_space_requires_whole_space():
    with pytest.raises(NotATopology, match="whole space"):
        build_space(2, [[1]])


def test_min_open_invariants_enforced():
    with pytest.raises(NotATopology):
        from_min_open(2, [[1], [1]])
    with pytest.raises(NotATopology):
        from_min_open(3, [[0, 1], [1, 2], [2]])


def test_closure_examples():
    X = sierpinski()
    assert closure(X, 0b10) == 0b11
    assert closure(X, 0) == 0
    assert closure(chain(), 0b100) == 0b111


def test_interior_examples():
    X = sierpinski()
    assert interior(X, 0b10) == 0b10
    assert interior(X, 0b01) == 0
    assert interior(X, 0b11) == 0b11


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_topology_counts_match_brute_force_families(n, count):
    spaces_ = list(all_topologies(n))
    assert len(spaces_) == count
    assert len(set(spaces_)) == count
    fams = oracles.topology_families(n)
    assert len(fams) == count
    assert {frozenset(X.opens()) for X in spaces_} == set(fams)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(all_topologies(5))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_closure_and_interior_match_oracle_exhaustively(n):
    for fam in oracles.topology_families(n):
        X = build_space(n, [members(u) for u in fam if u])
        opens = sorted(fam)
        for s in range(1 << n):
            assert closure(X, s) == oracles.closure(opens, n, s)
            assert interior(X, s) == oracles.interior(opens, s)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_separation_profile_matches_oracle_exhaustively(n):
    for X in all_topologies(n):
        assert separation_profile(X).to_json() == oracles.separation(X.opens(), n)


@settings(max_examples=60, deadline=None)
@given(spaces(max_points=5))
def test_separation_profile_matches_oracle_random(X):
    assert separation_profile(X).to_json() == oracles.separation(oracles.open_family(X), X.n)


def test_separation_examples():
    s = separation_profile(sierpinski())
    assert (s.t0, s.t1, s.hausdorff) == (True, False, False)
    assert all(separation_profile(discrete(4)).to_json().values())
    assert not separation_profile(indiscrete(2)).t0


@settings(max_examples=200, deadline=None)
@given(space_and_subset())
def test_closure_laws(case):
    X, s = case
    c = closure(X, s)
    assert s & ~c == 0
    assert closure(X, c) == c
    assert interior(X, interior(X, s)) == interior(X, s)
    assert interior(X, s) == X.points & ~closure(X, X.points & ~s)
    assert X.is_closed(c) and X.is_open(interior(X, s))


@settings(max_examples=200, deadline=None)
@given(space_and_subset(), space_and_subset())
def test_closure_monotone(a, b):
    X, s = a
    t = s | (b[1] & X.points)
    assert closure(X, s) & ~closure(X, t) == 0


@settings(max_examples=100, deadline=None)
@given(spaces())
def test_opens_agree_with_unions_of_minimal_opens(X):
    assert X.opens() == oracles.open_family(X)


def test_sierpinski_square_closure_of_top_corner():
    XX = product(sierpinski(), sierpinski())
    assert XX.n == 4
    assert closure(XX, 1 << 3) == 0b1111
    opens = oracles.product_opens(sierpinski().opens(), sierpinski().opens(), 2)
    assert XX.opens() == opens


@settings(max_examples=40, deadline=None)
@given(spaces(max_points=3), spaces(max_points=3))
def test_product_matches_explicit_product_topology(X, Y):
    P = product(X, Y)
    assert P.opens() == oracles.product_opens(X.opens(), Y.opens(), Y.n)


def test_product_identity_and_discrete():
    X = chain()
    assert product(discrete(1), X) == X
    assert product(discrete(2), discrete(3)) == discrete(6)


def test_subspace_examples():
    X = sierpinski()
    assert subspace(X, 0b01)[0] == discrete(1)
    assert subspace(X, 0b10)[0] == discrete(1)
    sub, index = subspace(chain(), 0b011)
    assert index == (0, 1)
    # Relative opens of {0, 1} in the chain: traces {}, {1}, {0, 1}.
    traces = sorted({u & 0b011 for u in chain().opens()})
    assert sub.opens() == traces
    assert sub == sierpinski()
    with pytest.raises(EmptyCarrier):
        subspace(X, 0)


@settings(max_examples=100, deadline=None)
@given(space_and_subset())
def test_subspace_is_relative_topology(case):
    X, s = case
    if s == 0:
        return
    sub, index = subspace(X, s)
    relabel = {old: new for new, old in enumerate(index)}
    traces = sorted({mask(relabel[y] for y in members(u & s)) for u in X.opens()})
    assert sub.opens() == traces


def test_space_from_json():
    assert space_from_json({"points": 2, "opens": [[1], [0, 1]]}) == sierpinski()
    assert space_from_json({"points": 2, "min_open": [[0, 1], [1]]}) == sierpinski()
    with pytest.raises(KeyError):
        space_from_json({"opens": []})
    with pytest.raises(ValueError):
        space_from_json({"points": 2, "opens": [[0, 1]], "min_open": [[0], [1]]})


def test_finspace_is_hashable_and_immutable():
    X = sierpinski()
    assert X == FinSpace(2, (0b11, 0b10))
    with pytest.raises(AttributeError):
        X.n = 3
