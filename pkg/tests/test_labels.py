import pytest
from hypothesis import given, strategies as st

from isocover.labels import Apex, Original, Subdiv, parse_label, sort_key, sorted_labels


def labels(depth=2):
    base = st.one_of(st.builds(Original, st.integers(0, 99)), st.builds(Apex, st.integers(1, 9)))
    if depth == 0:
        return base
    inner = labels(depth - 1)
    sub = st.builds(lambda u, v, i: Subdiv((u, v), i), inner, inner, st.integers(1, 7))
    return st.one_of(base, sub)


def test_string_forms():
    assert str(Original(7)) == "v7"
    assert str(Apex(2)) == "a2"
    assert str(Subdiv((Original(0), Original(5)), 3)) == "s(v0,v5,3)"


@given(labels())
def test_parse_roundtrip(x):
    assert parse_label(str(x)) == x


def test_order_originals_then_subdiv_then_apex():
    s = Subdiv((Original(0), Original(1)), 1)
    assert sorted_labels([Apex(1), s, Original(9)]) == [Original(9), s, Apex(1)]


@given(st.lists(labels(), max_size=20))
def test_order_is_total_and_deterministic(xs):
    a = sorted_labels(xs)
    b = sorted_labels(list(reversed(xs)))
    assert a == b
    keys = [sort_key(x) for x in a]
    assert keys == sorted(keys)


@pytest.mark.parametrize("bad", ["", "x1", "v", "v-1", "s(v0,v1)", "s(v0,v1,2", "a1b", "v01x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_label(bad)
