import pytest
from hypothesis import given, strategies as st

from grobalg import LengthLeftLex, Quiver
from grobalg.order import EQUAL, GREATER, LESS
from grobalg.quiver import compose, Path


@pytest.fixture(scope="module")
def plane():
    q = Quiver(["o"], [("y", "o", "o"), ("x", "o", "o")])
    return q, LengthLeftLex(q, ["y", "x"])


def test_example52_ranking(plane):
    q, o = plane
    assert o.compare(q.path("y.x"), q.path("x.y")) == GREATER
    ranked = o.sorted(q.paths_of_length(2))
    assert [str(p) for p in ranked] == ["y.y", "y.x", "x.y", "x.x"]


def test_length_dominates(plane):
    q, o = plane
    assert o.compare(q.path("x.x.x"), q.path("y.y")) == GREATER
    assert o.compare(q.path("y"), q.trivial("o")) == GREATER


def test_reflexive(plane):
    q, o = plane
    p = q.path("y.x.y")
    assert o.compare(p, p) == EQUAL
    assert o.compare(q.path("x"), q.path("y")) == LESS


def test_example54_ranking(ex54):
    ranked = ex54.order.sorted(ex54.quiver.paths_of_length(2))
    assert [str(p) for p in ranked] == ["z.z", "z.y", "z.x", "y.z", "y.y", "y.x", "x.z", "x.y", "x.x"]


def test_vertex_precedence():
    q = Quiver(["1", "2"], [("a", "1", "2")])
    o = LengthLeftLex(q, vertex_precedence=["2", "1"])
    assert o.greater(q.trivial("2"), q.trivial("1"))
    assert LengthLeftLex(q).greater(q.trivial("1"), q.trivial("2"))


def test_bad_precedence():
    q = Quiver(["1"], [("a", "1", "1"), ("b", "1", "1")])
    with pytest.raises(ValueError):
        LengthLeftLex(q, ["a"])
    with pytest.raises(ValueError):
        LengthLeftLex(q, ["a", "a"])


# A two-vertex quiver with parallel arrows, loops and a back edge.
Q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "1"), ("d", "2", "2"), ("e", "1", "1")])
ORDERS = [LengthLeftLex(Q), LengthLeftLex(Q, ["d", "c", "e", "b", "a"], ["2", "1"])]


@st.composite
def walk(draw, start=None, max_len=5):
    v0 = v = start if start is not None else draw(st.sampled_from(Q.vertices))
    arrows = []
    for _ in range(draw(st.integers(0, max_len))):
        a = draw(st.sampled_from(Q.arrows_from(v)))
        arrows.append(a.name)
        v = a.target
    return Path(tuple(arrows), v0, v)


@given(st.sampled_from(ORDERS), walk(), walk(), walk())
def test_total_and_transitive(o, p, q, r):
    assert o.compare(p, q) == -o.compare(q, p)
    if o.compare(p, q) == EQUAL:
        assert p == q
    if o.greater(p, q) and o.greater(q, r):
        assert o.greater(p, r)


BY_ENDPOINTS: dict = {}
for _n in range(5):
    for _p in Q.paths_of_length(_n):
        BY_ENDPOINTS.setdefault((_p.source, _p.target), []).append(_p)


@st.composite
def parallel_pair(draw):
    group = draw(st.sampled_from([g for g in BY_ENDPOINTS.values() if len(g) > 1]))
    i, j = draw(st.lists(st.integers(0, len(group) - 1), min_size=2, max_size=2, unique=True))
    return group[i], group[j]


@given(st.sampled_from(ORDERS), parallel_pair(), st.data())
def test_admissible(o, pq, data):
    p, q = pq
    hi, lo = (p, q) if o.greater(p, q) else (q, p)
    r = data.draw(walk(start=p.target))
    s_end = data.draw(walk())
    assert o.greater(compose(hi, r), compose(lo, r))
    if s_end.target == p.source:
        assert o.greater(compose(s_end, hi), compose(s_end, lo))


@given(st.sampled_from(ORDERS), walk(), st.data())
def test_subpath_and_length(o, p, data):
    r = data.draw(walk(start=p.target, max_len=3))
    big = compose(p, r)
    assert o.key(big) >= o.key(p)
    q = data.draw(walk())
    if len(p) > len(q):
        assert o.greater(p, q)
