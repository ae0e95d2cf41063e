from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antichains.lattice import (
    InvalidInputError,
    all_antichains,
    antichain,
    bottom,
    empty_set_antichain,
    leq,
    top,
)
from antichains.posets import Interval
from antichains.sizes import (
    SizeMemo,
    count_by_enumeration,
    enumerate_interval,
    interval_size,
    level_down,
    level_sets,
    level_up,
    size_from_poset_word,
    size_leveled,
)

from conftest import KNOWN


def ac(n, *sets):
    return antichain(n, *sets)


def m(*elems):
    return sum(1 << (e - 1) for e in elems)


def pairs_of_n(n):
    """Maximal sets of size at most two: the 2-subsets, or {{1}} when n = 1."""
    return ac(n, *[{i, j} for i in range(1, n + 1) for j in range(i, n + 1)])


def pair_interval_closed_form(n):
    # choose the nonempty singletons i, then any graph on them
    return sum(math.comb(n, i) * 2 ** math.comb(i, 2) for i in range(n + 1))


def ideals_oracle(members):
    """Down-closed subfamilies of a set family, by brute force over all subfamilies."""
    ms = sorted(members)
    count = 0
    for pick in range(1 << len(ms)):
        chosen = {x for i, x in enumerate(ms) if pick >> i & 1}
        if all(y in chosen for x in chosen for y in ms if y & x == y):
            count += 1
    return count


def test_level_examples():
    ls = level_sets(Interval(bottom(2), top(2)))
    assert ls.l0 == 0
    assert ls.members(0) == {0} and ls.members(1) == {m(1), m(2)} and ls.members(2) == {m(1, 2)}
    ls = level_sets(Interval(empty_set_antichain(3), pairs_of_n(3)))
    assert ls.l0 == 1 and len(ls.levels) == 2
    assert len(ls.members(1)) == 3 and len(ls.members(2)) == 3
    ls = level_sets(Interval(ac(2, {2}), ac(2, {1, 2})))
    assert ls.members(1) == {m(1)} and ls.members(2) == {m(1, 2)}
    with pytest.raises(InvalidInputError):
        level_sets(Interval(top(2), top(2)))


def test_level_up_down():
    ls = level_sets(Interval(bottom(2), top(2)))
    assert level_up({0}, ls, 0) == (1 << m(1)) | (1 << m(2))
    assert level_up(set(), ls, 0) == 0
    assert level_down({m(1, 2)}, ls, 2) == (1 << m(1)) | (1 << m(2))
    with pytest.raises(InvalidInputError):
        level_up({m(1)}, ls, 0)


def test_size_examples():
    assert size_leveled(bottom(3), top(3)) == KNOWN[3][0]
    a = ac(3, {1})
    assert size_leveled(a, a) == 1
    assert size_leveled(empty_set_antichain(3), pairs_of_n(3)) == 18 == pair_interval_closed_form(3)
    assert interval_size(ac(2, {1}), empty_set_antichain(2)) == 0
    assert size_leveled(ac(2, {1}), empty_set_antichain(2), "odd") == 0


def test_size_n6_full():
    assert interval_size(bottom(6), top(6)) == KNOWN[6][0]


def test_enumerate_examples():
    a = ac(2, {1})
    assert list(enumerate_interval(Interval(a, a))) == [a]
    assert len(list(enumerate_interval(Interval(bottom(2), top(2))))) == 6
    got = set(enumerate_interval(Interval(empty_set_antichain(2), ac(2, {1}, {2}))))
    assert got == {empty_set_antichain(2), ac(2, {1}), ac(2, {2}), ac(2, {1}, {2})}


def test_enumeration_against_filtering(a3):
    for lo in a3:
        for hi in a3:
            if leq(lo, hi):
                want = {x for x in a3 if leq(lo, x) and leq(x, hi)}
                got = list(enumerate_interval(Interval(lo, hi)))
                assert len(got) == len(set(got))
                assert set(got) == want


def test_sizes_match_ideal_count(a3):
    for lo in a3:
        for hi in a3:
            if leq(lo, hi):
                poset = {x for x in range(8) if (hi.down & ~lo.down) >> x & 1}
                expected = ideals_oracle(poset)
                for parity in ("even", "odd"):
                    assert size_leveled(lo, hi, parity) == expected
                assert interval_size(lo, hi) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_pair_interval(n):
    if n <= 4:
        assert count_by_enumeration(empty_set_antichain(n), pairs_of_n(n)) == pair_interval_closed_form(n)
    iv = Interval(empty_set_antichain(n), pairs_of_n(n))
    assert interval_size(iv) == pair_interval_closed_form(n)
    assert size_leveled(iv, parity="odd") == pair_interval_closed_form(n)


def test_memo_and_symmetry():
    memo = SizeMemo()
    rng = random.Random(3)
    acs = all_antichains(5)
    for _ in range(200):
        x, y = rng.choice(acs), rng.choice(acs)
        lo, hi = x & y, x | y
        assert interval_size(lo, hi, memo=memo) == size_leveled(lo, hi)
    assert memo.hits + memo.misses > 0
    assert "exact_entries" in memo.stats()
    memo.clear()
    assert not memo.exact and memo.hits == 0


def test_bad_parity():
    with pytest.raises(InvalidInputError):
        size_from_poset_word(0b11, 1, "middle")


A4 = all_antichains(4)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(A4), st.sampled_from(A4))
def test_random_pairs_a4(x, y):
    lo, hi = x & y, x | y
    e = count_by_enumeration(lo, hi)
    assert size_leveled(lo, hi, "even") == size_leveled(lo, hi, "odd") == interval_size(lo, hi) == e
