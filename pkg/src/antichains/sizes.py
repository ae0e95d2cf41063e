"""Exact interval sizes.

An element of ``[bottom, top]`` is ``bottom`` joined with a down-closed part
of the interval poset, so it decomposes uniquely into one set of masks per
level (masks of equal popcount).  Summing over the choices at every second
level and counting the free choices in between as powers of two gives the
two parity formulas implemented by :func:`size_leveled`.  The enumeration in
:func:`iter_interval_downsets` walks every level and serves as the oracle.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Literal

from .lattice import (
    CANONICAL_MAX_N,
    Antichain,
    InvalidInputError,
    _from_closed,
    canonical_word,
    down_table,
    dual_word,
    full_word,
    iter_bits,
    maximal_masks,
    shadow_table,
)
from .posets import Interval, component_masks

Parity = Literal["even", "odd"]

# posets with fewer members are summed directly; canonicalizing costs more
CANONICAL_MIN_MEMBERS = 12


@dataclass(frozen=True)
class LevelStructure:
    """Poset members grouped by popcount, starting at the smallest, ``l0``."""

    n: int
    l0: int
    levels: tuple[int, ...]

    def level(self, size: int) -> int:
        i = size - self.l0
        return self.levels[i] if 0 <= i < len(self.levels) else 0

    def members(self, size: int) -> frozenset[int]:
        return frozenset(iter_bits(self.level(size)))


def _levels_of_word(poset: int, n: int) -> tuple[int, tuple[int, ...]]:
    by_size = [0] * (n + 1)
    for m in iter_bits(poset):
        by_size[m.bit_count()] |= 1 << m
    used = [i for i, w in enumerate(by_size) if w]
    lo, hi = used[0], used[-1]
    return lo, tuple(by_size[lo : hi + 1])


def level_sets(iv: Interval) -> LevelStructure:
    poset = iv.poset_word()
    if not poset:
        raise InvalidInputError("the interval poset is empty (bottom == top)")
    l0, levels = _levels_of_word(poset, iv.n)
    return LevelStructure(iv.n, l0, levels)


def _as_word(chi) -> int:
    if isinstance(chi, int):
        return chi
    w = 0
    for m in chi:
        w |= 1 << m
    return w


def level_up(chi, structure: LevelStructure, size: int) -> int:
    """Masks one level up whose immediate subsets on this level all lie in ``chi``."""
    chi = _as_word(chi)
    here = structure.level(size)
    if chi & ~here:
        raise InvalidInputError(f"chi is not contained in level {size}")
    shadow = shadow_table(structure.n)
    out = 0
    for x in iter_bits(structure.level(size + 1)):
        if shadow[x] & here & ~chi == 0:
            out |= 1 << x
    return out


def level_down(chi, structure: LevelStructure, size: int) -> int:
    """Immediate subsets of members of ``chi`` that lie one level down."""
    chi = _as_word(chi)
    if chi & ~structure.level(size):
        raise InvalidInputError(f"chi is not contained in level {size}")
    shadow = shadow_table(structure.n)
    below = structure.level(size - 1)
    out = 0
    for x in iter_bits(chi):
        out |= shadow[x]
    return out & below


def _subsets(word: int) -> Iterator[int]:
    sub = word
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & word


class _LevelSum:
    """Evaluates one parity formula over a fixed level structure."""

    def __init__(self, levels: tuple[int, ...], n: int):
        self.levels = levels
        self.h = len(levels)
        self.shadow = shadow_table(n)
        self.cache: dict[tuple[int, int], int] = {}

    def plus(self, chi: int, i: int) -> int:
        if i + 1 >= self.h:
            return 0
        here = self.levels[i]
        shadow = self.shadow
        out = 0
        for x in iter_bits(self.levels[i + 1]):
            if shadow[x] & here & ~chi == 0:
                out |= 1 << x
        return out

    def minus(self, chi: int, i: int) -> int:
        if i == 0:
            return 0
        shadow = self.shadow
        out = 0
        for x in iter_bits(chi):
            out |= shadow[x]
        return out & self.levels[i - 1]

    def branch(self, i: int, free_below: int) -> int:
        """Sum over choices at branching level i, given the bound on level i-1."""
        key = (i, free_below)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        base = free_below.bit_count()
        if i >= self.h:
            total = 1 << base
        else:
            allowed = self.plus(free_below, i - 1) if i > 0 else self.levels[0]
            total = 0
            for chi in _subsets(allowed):
                exp = base - self.minus(chi, i).bit_count()
                if i + 1 < self.h:
                    total += self.branch(i + 2, self.plus(chi, i)) << exp
                else:
                    total += 1 << exp
        self.cache[key] = total
        return total

    def evaluate(self, parity: Parity) -> int:
        if parity == "even":
            return self.branch(0, 0)
        # odd: level 0 is free below the first branching level, bounded by all of it
        return self.branch(1, self.levels[0])


def _parity_cost(levels: tuple[int, ...], parity: Parity) -> int:
    start = 0 if parity == "even" else 1
    return sum(1 << levels[i].bit_count() for i in range(start, len(levels), 2))


def choose_parity(levels: tuple[int, ...]) -> Parity:
    """Parity whose branching levels have the smaller subset count (ties go to even)."""
    return "odd" if _parity_cost(levels, "odd") < _parity_cost(levels, "even") else "even"


def size_from_poset_word(poset: int, n: int, parity: Parity | None = None) -> int:
    """Number of down-closed subsets of the poset, via the parity formula."""
    if not poset:
        return 1
    _, levels = _levels_of_word(poset, n)
    if parity is None:
        parity = choose_parity(levels)
    if parity not in ("even", "odd"):
        raise InvalidInputError(f"parity must be 'even' or 'odd', got {parity!r}")
    return _LevelSum(levels, n).evaluate(parity)


def size_leveled(bottom: Antichain | Interval, top: Antichain | None = None, parity: Parity = "even") -> int:
    """Interval size by the even- or odd-level power-of-two sum.

    Accepts an :class:`Interval` or a ``(bottom, top)`` pair; a pair that is
    not ordered gives 0.
    """
    if isinstance(bottom, Interval):
        bottom, top = bottom.bottom, bottom.top
    if bottom.down & ~top.down:
        return 0
    return size_from_poset_word(top.down & ~bottom.down, top.n, parity)


def iter_interval_downsets(bottom_down: int, top_down: int, n: int) -> Iterator[int]:
    """Downset words of every element of the interval, by per-level choice."""
    if bottom_down & ~top_down:
        return
    poset = top_down & ~bottom_down
    if not poset:
        yield bottom_down
        return
    _, levels = _levels_of_word(poset, n)
    h = len(levels)
    shadow = shadow_table(n)

    def plus(chi: int, i: int) -> int:
        here = levels[i]
        out = 0
        for x in iter_bits(levels[i + 1]):
            if shadow[x] & here & ~chi == 0:
                out |= 1 << x
        return out

    def walk(i: int, allowed: int, acc: int) -> Iterator[int]:
        for chi in _subsets(allowed):
            if i + 1 < h:
                yield from walk(i + 1, plus(chi, i), acc | chi)
            else:
                yield acc | chi

    yield from walk(0, levels[0], bottom_down)


def enumerate_interval(iv: Interval) -> Iterator[Antichain]:
    """Every antichain of the interval exactly once."""
    n = iv.n
    for w in iter_interval_downsets(iv.bottom.down, iv.top.down, n):
        yield _from_closed(w, n)


def count_by_enumeration(bottom: Antichain, top: Antichain) -> int:
    return sum(1 for _ in iter_interval_downsets(bottom.down, top.down, bottom.n))


class SizeMemo:
    """Interval sizes keyed by poset word, with a second table keyed by canonical poset.

    Reads take no lock; inserts do.  A key always maps to the same value, so
    concurrent writers cannot disagree.
    """

    def __init__(self):
        self.exact: dict[tuple[int, int], int] = {}
        self.canonical: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def put(self, table: dict, key, value: int) -> None:
        with self._lock:
            table[key] = value

    def stats(self) -> str:
        return (
            f"hits={self.hits} misses={self.misses} "
            f"exact_entries={len(self.exact)} canonical_entries={len(self.canonical)}"
        )

    def clear(self) -> None:
        with self._lock:
            self.exact.clear()
            self.canonical.clear()
            self.hits = self.misses = 0


DEFAULT_MEMO = SizeMemo()


def size_of_words(bottom_down: int, top_down: int, n: int, memo: SizeMemo | None = None) -> int:
    """Dispatcher on downset words: decompose, dualize, memoize, then sum."""
    if bottom_down & ~top_down:
        return 0
    poset = top_down & ~bottom_down
    if not poset:
        return 1
    if memo is None:
        memo = DEFAULT_MEMO
    key = (n, poset)
    hit = memo.exact.get(key)
    if hit is not None:
        memo.hits += 1
        return hit
    memo.misses += 1

    comps = component_masks(maximal_masks(top_down, n), bottom_down)
    if len(comps) > 1:
        down = down_table(n)
        value = 1
        for comp in comps:
            nu = 0
            for m in comp:
                nu |= down[m]
            value *= size_of_words(bottom_down & nu, nu, n, memo)
    elif top_down == full_word(n) and bottom_down:
        # |[β, ⊤]| = |[⊥, dual β]|; upper intervals share entries with lower ones
        value = size_of_words(0, dual_word(bottom_down, n), n, memo)
    elif n <= CANONICAL_MAX_N and poset.bit_count() >= CANONICAL_MIN_MEMBERS:
        ckey = (n, canonical_word(poset, n)[0])
        value = memo.canonical.get(ckey)
        if value is None:
            value = size_from_poset_word(poset, n)
            memo.put(memo.canonical, ckey, value)
    else:
        value = size_from_poset_word(poset, n)
    memo.put(memo.exact, key, value)
    return value


def interval_size(bottom: Antichain | Interval, top: Antichain | None = None, memo: SizeMemo | None = None) -> int:
    """Size of ``[bottom, top]``; 0 when ``bottom`` is not below ``top``."""
    if isinstance(bottom, Interval):
        bottom, top = bottom.bottom, bottom.top
    if bottom.n != top.n:
        raise InvalidInputError("bottom and top live in different universes")
    return size_of_words(bottom.down, top.down, bottom.n, memo)
