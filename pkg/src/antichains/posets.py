"""Intervals of antichains and the inclusion posets that span them.

The poset underlying ``[bottom, top]`` is the set of masks X with
``{X} <= top`` and ``{X} not <= bottom``; every element of the interval is
``bottom`` joined with an antichain drawn from it.  Posets are handled as
mask-indexed words internally and exposed as frozensets of masks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .lattice import (
    Antichain,
    InvalidInputError,
    PreconditionError,
    _check_same,
    _from_closed,
    bottom as bottom_of,
    direct_product,
    down_table,
    immediate_subsets,
    iter_bits,
    join,
    join_all,
    leq,
    meet,
    normalize,
    shadow_table,
    span,
    up_table,
)


@dataclass(frozen=True)
class Interval:
    """``[bottom, top]`` with ``bottom <= top``."""

    bottom: Antichain
    top: Antichain

    def __post_init__(self):
        _check_same(self.bottom, self.top)
        if not leq(self.bottom, self.top):
            raise PreconditionError(f"bottom {self.bottom} is not below top {self.top}")

    @property
    def n(self) -> int:
        return self.bottom.n

    def poset_word(self) -> int:
        return self.top.down & ~self.bottom.down

    def __contains__(self, chi: Antichain) -> bool:
        return leq(self.bottom, chi) and leq(chi, self.top)

    def __str__(self) -> str:
        return f"{self.bottom} ; {self.top}"


def empty_interval(n: int) -> Interval:
    """The ``[⊥, ⊥]`` placeholder used in partition bookkeeping."""
    b = bottom_of(n)
    return Interval(b, b)


@dataclass(frozen=True)
class IntervalPoset:
    n: int
    members: frozenset[int]

    @classmethod
    def from_word(cls, word: int, n: int) -> IntervalPoset:
        return cls(n, frozenset(iter_bits(word)))

    @property
    def word(self) -> int:
        w = 0
        for m in self.members:
            w |= 1 << m
        return w

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class IntervalGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _poset(members: Iterable[int] | IntervalPoset, n: int | None = None) -> IntervalPoset:
    if isinstance(members, IntervalPoset):
        return members
    if n is None:
        raise InvalidInputError("universe size required for a plain mask collection")
    ms = frozenset(members)
    if any(not 0 <= m < 1 << n for m in ms):
        raise InvalidInputError(f"mask out of range for n={n}")
    return IntervalPoset(n, ms)


def poset_of_interval(iv: Interval) -> IntervalPoset:
    return IntervalPoset.from_word(iv.poset_word(), iv.n)


def closures(word: int, n: int) -> tuple[int, int]:
    """(down-closure, up-closure) of a set of masks given as a word."""
    down, up = down_table(n), up_table(n)
    d = u = 0
    for m in iter_bits(word):
        d |= down[m]
        u |= up[m]
    return d, u


def is_convex_word(word: int, n: int) -> bool:
    d, u = closures(word, n)
    return d & u == word


def is_interval_poset(s: Iterable[int] | IntervalPoset, n: int | None = None) -> bool:
    """True when every mask between two members is itself a member."""
    p = _poset(s, n)
    return is_convex_word(p.word, p.n)


def interval_of_poset(s: Iterable[int] | IntervalPoset, n: int | None = None) -> Interval:
    """The interval spanned by a convex poset; the empty poset maps to ``[⊥, ⊥]``."""
    p = _poset(s, n)
    word, n = p.word, p.n
    if not is_convex_word(word, n):
        raise PreconditionError("mask set is not convex, so it spans no interval")
    shadow = shadow_table(n)
    down = down_table(n)
    lo = hi = 0
    for x in iter_bits(word):
        hi |= down[x]
        for y in iter_bits(shadow[x] & ~word):
            lo |= down[y]
    return Interval(_from_closed(lo, n), _from_closed(hi, n))


def poset_disjoint_union(s1: IntervalPoset, s2: IntervalPoset) -> IntervalPoset:
    if s1.n != s2.n:
        raise InvalidInputError("posets live in different universes")
    for x in s1.members:
        for y in s2.members:
            if x & y == x or x & y == y:
                raise PreconditionError(f"masks {x} and {y} are comparable")
    return IntervalPoset(s1.n, s1.members | s2.members)


def reduce_common_subset(s: IntervalPoset, a: int) -> IntervalPoset:
    """Remove a set contained in every member."""
    if any(x & a != a for x in s.members):
        raise PreconditionError("not every member contains the given set")
    return IntervalPoset(s.n, frozenset(x & ~a for x in s.members))


def merge_block(s: IntervalPoset, a: int, element: int) -> IntervalPoset:
    """Collapse a block whose elements always occur together onto one element (1-based)."""
    bit = 1 << (element - 1)
    if not a & bit:
        raise PreconditionError(f"element {element} is not in the block")
    for x in s.members:
        if x & a and x & a != a:
            raise PreconditionError("a member meets the block without containing it")
    return IntervalPoset(s.n, frozenset((x & ~a) | bit if x & a == a and a else x for x in s.members))


def strip_common(iv: Interval) -> Interval:
    """Drop the members shared by bottom and top; the poset is unchanged."""
    shared = set(iv.bottom.sets) & set(iv.top.sets)
    n = iv.n
    b = normalize((m for m in iv.bottom.sets if m not in shared), n)
    t = normalize((m for m in iv.top.sets if m not in shared), n)
    return Interval(b, t)


def reduce_product_interval(a: int, chi_lo: Antichain, chi_hi: Antichain) -> tuple[Interval, Interval]:
    """Build ``[{A}⊗χ' ∨ A⁻⊗χ, {A}⊗χ]`` next to the isomorphic ``[χ', χ]``."""
    _check_same(chi_lo, chi_hi)
    n = chi_hi.n
    if a == 0:
        raise PreconditionError("the product reduction needs a nonempty set A")
    if not leq(chi_lo, chi_hi):
        raise PreconditionError("chi' must lie below chi")
    if a & span(chi_hi):
        raise PreconditionError("A must be disjoint from the span of chi")
    single = normalize([a], n)
    beta = direct_product(single, chi_hi)
    alpha = join(direct_product(single, chi_lo), direct_product(immediate_subsets(a, n), chi_hi))
    return Interval(alpha, beta), Interval(chi_lo, chi_hi)


def interval_graph(iv: Interval) -> IntervalGraph:
    verts = tuple(sorted(iv.top.sets))
    low = iv.bottom.down
    edges = set()
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if not low >> (x & y) & 1:
                edges.add((x, y))
    return IntervalGraph(verts, frozenset(edges))


def _find(parent: dict[int, int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def component_masks(top_sets: Iterable[int], low_word: int) -> list[list[int]]:
    """Connected components of the interval graph, each sorted, ordered by smallest mask."""
    verts = sorted(top_sets)
    parent = {v: v for v in verts}
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if not low_word >> (x & y) & 1:
                rx, ry = _find(parent, x), _find(parent, y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for v in verts:
        groups.setdefault(_find(parent, v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def graph_decompose(iv: Interval) -> list[Interval]:
    """One interval ``[bottom ∧ ν, ν]`` per connected component ν of the interval graph."""
    n = iv.n
    comps = component_masks(iv.top.sets, iv.bottom.down)
    if len(comps) <= 1:
        return [iv]
    out = []
    for comp in comps:
        nu = normalize(comp, n)
        out.append(Interval(meet(iv.bottom, nu), nu))
    return out


def direct_join(parts: Iterable[Interval], n: int) -> Interval:
    parts = list(parts)
    return Interval(join_all((p.bottom for p in parts), n), join_all((p.top for p in parts), n))
