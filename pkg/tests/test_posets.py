from __future__ import annotations

import random

import pytest

from antichains.lattice import (
    InvalidInputError,
    PreconditionError,
    all_antichains,
    antichain,
    bottom,
    empty_set_antichain,
    leq,
    top,
)
from antichains.posets import (
    Interval,
    IntervalPoset,
    direct_join,
    graph_decompose,
    interval_graph,
    interval_of_poset,
    is_interval_poset,
    merge_block,
    poset_disjoint_union,
    poset_of_interval,
    reduce_common_subset,
    reduce_product_interval,
    strip_common,
)
from antichains.sizes import count_by_enumeration


def ac(n, *sets):
    return antichain(n, *sets)


def m(*elems):
    return sum(1 << (e - 1) for e in elems)


def poset_oracle(lo, hi):
    """Masks X with lo < lo ∨ {X} <= hi, straight from the definition."""
    n = lo.n
    out = set()
    for x in range(1 << n):
        j = lo | ac(n, [e + 1 for e in range(n) if x >> e & 1])
        if j != lo and leq(j, hi):
            out.add(x)
    return frozenset(out)


def filtered_size(iv):
    return sum(1 for x in all_antichains(iv.n) if x in iv)


def size(iv):
    return count_by_enumeration(iv.bottom, iv.top)


def test_interval_requires_order():
    with pytest.raises(PreconditionError):
        Interval(ac(2, {1}), ac(2, {2}))
    iv = Interval(bottom(2), top(2))
    assert ac(2, {1}) in iv
    assert str(Interval(ac(2, {1}), top(2))) == "{{1}} ; {{1,2}}"


def test_poset_examples():
    assert poset_of_interval(Interval(bottom(3), top(3))).members == frozenset(range(8))
    a = ac(3, {1, 2})
    assert poset_of_interval(Interval(a, a)).members == frozenset()
    assert poset_of_interval(Interval(ac(2, {2}), ac(2, {1, 2}))).members == {m(1), m(1, 2)}


def test_poset_matches_definition(a3):
    for lo in a3:
        for hi in a3:
            if leq(lo, hi):
                assert poset_of_interval(Interval(lo, hi)).members == poset_oracle(lo, hi)


def test_is_interval_poset_examples():
    assert is_interval_poset({m(1), m(1, 2)}, 2)
    assert not is_interval_poset({m(1), m(1, 2, 3)}, 3)
    assert is_interval_poset(set(), 3)


def test_convexity_matches_definition():
    n = 3
    for pick in range(1 << 8):
        s = {x for x in range(8) if pick >> x & 1}
        convex = all(
            z in s for x in s for y in s if x & y == x for z in range(8) if x & z == x and z & y == z
        )
        assert is_interval_poset(s, n) == convex


def test_interval_of_poset_examples():
    assert interval_of_poset(set(range(8)), 3) == Interval(bottom(3), top(3))
    assert interval_of_poset({m(1), m(1, 2)}, 2) == Interval(ac(2, {2}), ac(2, {1, 2}))
    assert interval_of_poset(set(), 2) == Interval(bottom(2), bottom(2))
    with pytest.raises(PreconditionError):
        interval_of_poset({m(1), m(1, 2, 3)}, 3)


def test_interval_of_poset_round_trip(a3):
    # every convex family comes from an interval, and the reconstructed interval reproduces it
    for lo in a3:
        for hi in a3:
            if leq(lo, hi) and lo != hi:
                p = poset_of_interval(Interval(lo, hi))
                iv = interval_of_poset(p)
                assert poset_of_interval(iv) == p
                assert size(iv) == size(Interval(lo, hi))


def test_disjoint_union():
    s1 = IntervalPoset(2, frozenset({m(1)}))
    s2 = IntervalPoset(2, frozenset({m(2)}))
    u = poset_disjoint_union(s1, s2)
    assert u.members == {m(1), m(2)}
    iv = interval_of_poset(u)
    # ∅ is not in the union, so the interval starts at {∅}
    assert iv == Interval(empty_set_antichain(2), ac(2, {1}, {2}))
    assert size(iv) == 4
    assert poset_disjoint_union(s1, IntervalPoset(2, frozenset())) == s1
    with pytest.raises(PreconditionError):
        poset_disjoint_union(s1, IntervalPoset(2, frozenset({m(1, 2)})))


def test_reductions():
    s = IntervalPoset(3, frozenset({m(1, 2), m(1, 2, 3)}))
    assert reduce_common_subset(s, m(1, 2)).members == {0, m(3)}
    assert reduce_common_subset(s, 0) == s
    with pytest.raises(PreconditionError):
        reduce_common_subset(s, m(3))
    assert merge_block(s, m(1, 2), 1).members == {m(1), m(1, 3)}
    assert merge_block(s, m(3), 3) == s
    with pytest.raises(PreconditionError):
        merge_block(IntervalPoset(3, frozenset({m(1), m(1, 2)})), m(1, 2), 1)


def test_reductions_preserve_size():
    rng = random.Random(5)
    acs = all_antichains(4)
    checked = 0
    while checked < 40:
        lo, hi = rng.choice(acs), rng.choice(acs)
        if not leq(lo, hi) or lo == hi:
            continue
        p = poset_of_interval(Interval(lo, hi))
        common = (1 << 4) - 1
        for x in p.members:
            common &= x
        if common:
            red = reduce_common_subset(p, common)
            assert size(interval_of_poset(red)) == size(Interval(lo, hi))
        checked += 1


def test_strip_common():
    a = ac(3, {1, 2})
    assert strip_common(Interval(a, a)).poset_word() == 0
    iv = Interval(ac(2, {1}, {2}), ac(2, {1, 2}))
    assert strip_common(iv) == iv
    iv = Interval(ac(3, {3}, {1}), ac(3, {3}, {1, 2}))
    s = strip_common(iv)
    assert s == Interval(ac(3, {1}), ac(3, {1, 2}))
    assert s.poset_word() == iv.poset_word()


def test_reduce_product_interval():
    lo, hi = reduce_product_interval(m(1), empty_set_antichain(3), ac(3, {2}, {3}))
    assert size(lo) == size(hi) == 4
    a, b = reduce_product_interval(m(1, 2), bottom(4), ac(4, {3, 4}))
    # [⊥, {{3,4}}] holds ⊥, {∅}, {{3}}, {{4}}, {{3},{4}}, {{3,4}}
    assert size(a) == size(b) == filtered_size(b) == 6
    same = ac(3, {2})
    a, b = reduce_product_interval(m(1), same, same)
    assert size(a) == size(b) == 1
    with pytest.raises(PreconditionError):
        reduce_product_interval(m(1), ac(3, {2}), ac(3, {3}))
    with pytest.raises(PreconditionError):
        reduce_product_interval(m(2), bottom(3), ac(3, {2}))


def test_interval_graph_examples():
    g = interval_graph(Interval(empty_set_antichain(2), ac(2, {1}, {2})))
    assert not g.edges
    g = interval_graph(Interval(bottom(3), ac(3, {1}, {2}, {3})))
    assert len(g.edges) == 3
    g = interval_graph(Interval(ac(3, {2}), ac(3, {1, 2}, {2, 3})))
    assert not g.edges


def test_graph_decompose_examples():
    iv = Interval(bottom(3), ac(3, {1, 2}, {2, 3}))
    assert graph_decompose(iv) == [iv]
    parts = graph_decompose(Interval(empty_set_antichain(2), ac(2, {1}, {2})))
    assert parts == [Interval(empty_set_antichain(2), ac(2, {1})), Interval(empty_set_antichain(2), ac(2, {2}))]
    assert [size(p) for p in parts] == [2, 2]
    iv = Interval(empty_set_antichain(4), ac(4, {1, 2}, {3, 4}))
    parts = graph_decompose(iv)
    assert len(parts) == 2
    assert [filtered_size(p) for p in parts] == [5, 5]
    assert size(parts[0]) * size(parts[1]) == size(iv) == filtered_size(iv) == 25


def test_decomposition_is_direct_join(a4):
    rng = random.Random(11)
    for _ in range(300):
        lo, hi = rng.choice(a4), rng.choice(a4)
        if not leq(lo, hi):
            lo, hi = lo & hi, lo | hi
        iv = Interval(lo, hi)
        parts = graph_decompose(iv)
        assert direct_join(parts, 4) == iv
        prod = 1
        for p in parts:
            prod *= size(p)
        assert prod == size(iv)


def test_universe_errors():
    with pytest.raises(InvalidInputError):
        is_interval_poset({1})
