import pytest
from hypothesis import given, strategies as st

from grobalg.quiver import (compose, find_subpath_occurrences, is_parallel, Path, Quiver,
                            valid_identifier)


@pytest.fixture
def loops():
    return Quiver(["o"], [("y", "o", "o"), ("x", "o", "o")])


@pytest.fixture
def line():
    return Quiver(["u", "v", "w", "x"], [("a", "u", "v"), ("b", "v", "w"), ("c", "w", "x")])


def test_compose_chain(line):
    a, b = line.path("a"), line.path("b")
    assert compose(a, b) == line.path("a.b")
    assert a * b == line.path("a", "b")


def test_compose_with_trivial(line):
    a = line.path("a")
    assert compose(a, line.trivial("v")) == a
    assert compose(line.trivial("u"), a) == a


def test_compose_mismatch(line):
    assert compose(line.path("a"), line.path("c")) is None


def test_parallel(loops, ex51):
    assert is_parallel(loops.path("y"), loops.path("x"))
    p = loops.path("y.x")
    assert is_parallel(p, p)
    q = ex51.quiver
    assert is_parallel(q.path("a.f"), q.path("c.j"))
    assert not is_parallel(q.path("a"), q.path("b"))


def test_subpath_occurrences(loops):
    q = loops
    assert find_subpath_occurrences(q.path("x.y.x"), q.path("y.x")) == [(q.path("x"), q.trivial("o"))]
    assert find_subpath_occurrences(q.path("y.x.y.x"), q.path("y.x")) == [
        (q.trivial("o"), q.path("y.x")), (q.path("y.x"), q.trivial("o"))]
    assert find_subpath_occurrences(q.path("x.x"), q.path("y.x")) == []


def test_subpath_occurrence_endpoints(line):
    (pre, suf), = find_subpath_occurrences(line.path("a.b.c"), line.path("b"))
    assert pre == line.path("a") and suf == line.path("c")


def test_trivial_subpath_rejected(line):
    with pytest.raises(ValueError):
        find_subpath_occurrences(line.path("a"), line.trivial("u"))


def test_path_errors(line):
    with pytest.raises(ValueError, match="non-composable path"):
        line.path("a.c")
    with pytest.raises(KeyError, match="unknown arrow"):
        line.path("z")


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver(["u", "u"], [])
    with pytest.raises(ValueError):
        Quiver(["u"], [("a", "u", "nowhere")])
    with pytest.raises(ValueError):
        Quiver(["u"], [("a", "u", "u"), ("a", "u", "u")])


def test_paths_of_length(line, loops):
    assert {str(p) for p in line.paths_of_length(2)} == {"a.b", "b.c"}
    assert len(list(loops.paths_of_length(3))) == 8
    assert [str(p) for p in line.paths_of_length(0)] == ["e[u]", "e[v]", "e[w]", "e[x]"]


def test_identifiers():
    assert valid_identifier("a1") and valid_identifier("(a|w)") is False
    for bad in ["", "a.b", "a b", "a:b", "a-b", "a>b", "a#", "a=b", "a,b", "a[1]"]:
        assert not valid_identifier(bad)


words = st.lists(st.sampled_from("xyz"), min_size=0, max_size=6)


def _loop_path(w):
    return Path(tuple(w), "o", "o")


@given(words, words, words)
def test_compose_associative_and_additive(p, q, r):
    p, q, r = map(_loop_path, (p, q, r))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert len(compose(p, q)) == len(p) + len(q)


@given(words, st.lists(st.sampled_from("xyz"), min_size=1, max_size=3))
def test_occurrences_reconstruct(w, t):
    p, t = _loop_path(w), _loop_path(t)
    occ = find_subpath_occurrences(p, t)
    for pre, suf in occ:
        assert compose(compose(pre, t), suf) == p
    expected = sum(1 for i in range(len(w) - len(t.arrows) + 1) if tuple(w[i:i + len(t.arrows)]) == t.arrows)
    assert len(occ) == expected
    if w:
        assert find_subpath_occurrences(p, p) == [(Path.trivial("o"), Path.trivial("o"))]
