import random

from hypothesis import strategies as st

from orbitclosure.finspace import random_space
from orbitclosure.relation import Relation, random_equivalence


@st.composite
def spaces(draw, max_points: int = 6):
    n = draw(st.integers(1, max_points))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_space(random.Random(seed), n)


@st.composite
def space_and_subset(draw, max_points: int = 6):
    X = draw(spaces(max_points))
    return X, draw(st.integers(0, (1 << X.n) - 1))


@st.composite
def space_and_relation(draw, max_points: int = 5):
    X = draw(spaces(max_points))
    rows = draw(st.lists(st.integers(0, (1 << X.n) - 1), min_size=X.n, max_size=X.n))
    return X, Relation(X.n, tuple(rows))


@st.composite
def space_and_equivalence(draw, max_points: int = 6):
    X = draw(spaces(max_points))
    seed = draw(st.integers(0, 2**32 - 1))
    return X, random_equivalence(random.Random(seed), X.n)
