"""Antichains of subsets of {1..n} and the lattice operators on them.

A subset is an n-bit mask (element i is bit i-1).  An antichain is stored as a
tuple of masks in strictly decreasing numeric order, so equality is plain
tuple equality.  The downset generated by an antichain is a 2**n-bit Python
int whose bit m is set when mask m lies below some member; most comparisons
reduce to bit operations on these words.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_N = 8
CANONICAL_MAX_N = 7


class LatticeError(ValueError):
    """Base class for errors raised by this package."""


class InvalidInputError(LatticeError):
    pass


class UniverseMismatchError(LatticeError):
    pass


class PreconditionError(LatticeError):
    pass


class UnsupportedSizeError(LatticeError):
    pass


@dataclass(frozen=True)
class Universe:
    """The ground set {1, ..., n}."""

    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise UnsupportedSizeError(f"universe size must be in [0, {MAX_N}], got {self.n}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_masks(self) -> int:
        return 1 << self.n

    def bottom(self) -> Antichain:
        return bottom(self.n)

    def top(self) -> Antichain:
        return top(self.n)

    def mask(self, elements: Iterable[int]) -> int:
        return set_to_mask(elements, self.n)


# -- per-n lookup tables ---------------------------------------------------


@lru_cache(maxsize=None)
def down_table(n: int) -> tuple[int, ...]:
    """``down_table(n)[m]``: word with the bits of every submask of m."""
    table = [0] * (1 << n)
    for m in range(1 << n):
        w = 1 << m
        for i in range(n):
            if m >> i & 1:
                w |= table[m ^ (1 << i)]
        table[m] = w
    return tuple(table)


@lru_cache(maxsize=None)
def up_table(n: int) -> tuple[int, ...]:
    """``up_table(n)[m]``: word with the bits of every supermask of m."""
    full = (1 << n) - 1
    table = [0] * (1 << n)
    for m in range(full, -1, -1):
        w = 1 << m
        for i in range(n):
            if not m >> i & 1:
                w |= table[m | (1 << i)]
        table[m] = w
    return tuple(table)


@lru_cache(maxsize=None)
def shadow_table(n: int) -> tuple[int, ...]:
    """``shadow_table(n)[m]``: word with the bits of the immediate submasks of m."""
    return tuple(
        sum(1 << (m ^ (1 << i)) for i in range(n) if m >> i & 1) for m in range(1 << n)
    )


@lru_cache(maxsize=None)
def level_words(n: int) -> tuple[int, ...]:
    """``level_words(n)[l]``: word with the bits of all masks of popcount l."""
    words = [0] * (n + 1)
    for m in range(1 << n):
        words[m.bit_count()] |= 1 << m
    return tuple(words)


def full_word(n: int) -> int:
    return (1 << (1 << n)) - 1


def iter_bits(word: int) -> Iterator[int]:
    """Indices of the set bits of ``word``, ascending."""
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


def maximal_masks(word: int, n: int) -> tuple[int, ...]:
    """Inclusion-maximal masks among the bits of ``word``, descending."""
    up = up_table(n)
    out = []
    for m in iter_bits(word):
        if word & up[m] == 1 << m:
            out.append(m)
    out.reverse()
    return tuple(out)


def downset_of_masks(masks: Iterable[int], n: int) -> int:
    down = down_table(n)
    w = 0
    for m in masks:
        w |= down[m]
    return w


def is_downward_closed(word: int, n: int) -> bool:
    shadow = shadow_table(n)
    for m in iter_bits(word):
        if shadow[m] & ~word:
            return False
    return True


# -- the antichain value ---------------------------------------------------


@dataclass(frozen=True)
class Antichain:
    """A normalized antichain over ``{1..n}``.

    Construct through :func:`normalize`, :func:`from_downset` or
    :func:`parse`; the constructor only validates.
    """

    n: int
    sets: tuple[int, ...]
    down: int = field(init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise UnsupportedSizeError(f"universe size must be in [0, {MAX_N}], got {self.n}")
        limit = 1 << self.n
        prev = limit
        for m in self.sets:
            if not 0 <= m < limit:
                raise InvalidInputError(f"mask {m} out of range for n={self.n}")
            if m >= prev:
                raise InvalidInputError("antichain members must be strictly decreasing")
            prev = m
        w = downset_of_masks(self.sets, self.n)
        for m in self.sets:
            # a member strictly below another member shows up in its downset
            if w & up_table(self.n)[m] != 1 << m:
                raise InvalidInputError(f"{format_antichain(self)} is not an antichain")
        object.__setattr__(self, "down", w)

    @classmethod
    def _trusted(cls, n: int, sets: tuple[int, ...], down: int) -> Antichain:
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "sets", sets)
        object.__setattr__(obj, "down", down)
        return obj

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __contains__(self, mask: object) -> bool:
        return mask in self.sets

    def __le__(self, other: Antichain) -> bool:
        return leq(self, other)

    def __ge__(self, other: Antichain) -> bool:
        return leq(other, self)

    def __lt__(self, other: Antichain) -> bool:
        return self != other and leq(self, other)

    def __gt__(self, other: Antichain) -> bool:
        return self != other and leq(other, self)

    def __or__(self, other: Antichain) -> Antichain:
        return join(self, other)

    def __and__(self, other: Antichain) -> Antichain:
        return meet(self, other)

    def __str__(self) -> str:
        return format_antichain(self)

    def is_bottom(self) -> bool:
        return not self.sets


def from_downset(word: int, n: int) -> Antichain:
    """The antichain of maximal elements of a downward-closed word."""
    if not 0 <= word <= full_word(n):
        raise InvalidInputError("downset word has bits outside the universe")
    if not is_downward_closed(word, n):
        raise InvalidInputError("word is not downward closed")
    return Antichain._trusted(n, maximal_masks(word, n), word)


def _from_closed(word: int, n: int) -> Antichain:
    return Antichain._trusted(n, maximal_masks(word, n), word)


def to_downset(a: Antichain) -> int:
    return a.down


def bottom(n: int) -> Antichain:
    return Antichain._trusted(n, (), 0)


def top(n: int) -> Antichain:
    full = (1 << n) - 1
    return Antichain._trusted(n, (full,), full_word(n))


def empty_set_antichain(n: int) -> Antichain:
    """The antichain ``{∅}``, distinct from bottom."""
    return Antichain._trusted(n, (0,), 1)


def set_to_mask(elements: Iterable[int], n: int) -> int:
    m = 0
    for e in elements:
        if not 1 <= e <= n:
            raise InvalidInputError(f"element {e} outside universe 1..{n}")
        m |= 1 << (e - 1)
    return m


def mask_to_set(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in iter_bits(mask))


def _check_same(a: Antichain, b: Antichain) -> None:
    if a.n != b.n:
        raise UniverseMismatchError(f"universe mismatch: n={a.n} vs n={b.n}")


# -- lattice operators -----------------------------------------------------


def normalize(sets: Iterable[int], n: int) -> Antichain:
    """Keep only the inclusion-maximal masks (the max-operator)."""
    limit = 1 << n
    down = down_table(n)
    w = 0
    for m in sets:
        if not 0 <= m < limit:
            raise InvalidInputError(f"mask {m} out of range for n={n}")
        w |= down[m]
    return _from_closed(w, n)


def antichain(n: int, *members: Iterable[int]) -> Antichain:
    """Build a normalized antichain from element collections, e.g. ``antichain(3, {1, 2}, {3})``."""
    return normalize((set_to_mask(s, n) for s in members), n)


def leq(a: Antichain, b: Antichain) -> bool:
    _check_same(a, b)
    return a.down & ~b.down == 0


def join(a: Antichain, b: Antichain) -> Antichain:
    _check_same(a, b)
    return _from_closed(a.down | b.down, a.n)


def meet(a: Antichain, b: Antichain) -> Antichain:
    _check_same(a, b)
    return _from_closed(a.down & b.down, a.n)


def join_all(items: Iterable[Antichain], n: int) -> Antichain:
    w = 0
    for a in items:
        w |= a.down
    return _from_closed(w, n)


def meet_all(items: Iterable[Antichain], n: int) -> Antichain:
    w = full_word(n)
    for a in items:
        w &= a.down
    return _from_closed(w, n)


def span(a: Antichain) -> int:
    m = 0
    for s in a.sets:
        m |= s
    return m


def direct_product(a: Antichain, b: Antichain) -> Antichain:
    _check_same(a, b)
    if span(a) & span(b):
        raise PreconditionError("direct product needs antichains with disjoint spans")
    return normalize((x | y for x in a.sets for y in b.sets), a.n)


def immediate_subsets(x: int, n: int) -> Antichain:
    """``X⁻``; the empty set has no immediate subsets."""
    return _from_closed(downset_of_masks((x ^ (1 << i) for i in iter_bits(x)), n), n)


def lower(a: Antichain) -> Antichain:
    """``α⁻``: join of the immediate-subset antichains of the members."""
    shadow = shadow_table(a.n)
    down = down_table(a.n)
    w = 0
    for x in a.sets:
        for y in iter_bits(shadow[x]):
            w |= down[y]
    return _from_closed(w, a.n)


def upper(a: Antichain) -> Antichain:
    """``α⁺``: join of all ``{X}`` whose immediate subsets are dominated by ``a``."""
    shadow = shadow_table(a.n)
    ok = [x for x in range(1 << a.n) if shadow[x] & ~a.down == 0]
    return normalize(ok, a.n)


def check_nondominating(chi: Antichain) -> Antichain:
    """Largest antichain that dominates no member of ``chi``.

    Per member A the answer is ``{N \\ {a} : a in A}``; joins of the input
    turn into meets of the answers, and the empty antichain maps to top.
    """
    n = chi.n
    full = (1 << n) - 1
    down = down_table(n)
    w = full_word(n)
    for x in chi.sets:
        part = 0
        for i in iter_bits(x):
            part |= down[full ^ (1 << i)]
        w &= part
    return _from_closed(w, n)


def interval_hom(alpha: Antichain, beta: Antichain, chi: Antichain) -> Antichain:
    """The lattice homomorphism onto ``[alpha, beta]``: ``alpha ∨ (chi ∧ beta)``."""
    _check_same(alpha, beta)
    _check_same(alpha, chi)
    if not leq(alpha, beta):
        raise PreconditionError("interval_hom requires alpha <= beta")
    return _from_closed(alpha.down | (chi.down & beta.down), alpha.n)


def dual_word(word: int, n: int) -> int:
    """Downset word of the dual: ``{X : N \\ X not in word}``."""
    width = 1 << n
    rev = int(format(word, f"0{width}b")[::-1], 2)
    return full_word(n) ^ rev


def dual(a: Antichain) -> Antichain:
    """Order-reversing involution on the lattice."""
    return _from_closed(dual_word(a.down, a.n), a.n)


# -- enumeration -----------------------------------------------------------


@lru_cache(maxsize=None)
def all_downsets(n: int) -> tuple[int, ...]:
    """Downset words of every antichain over ``{1..n}``, ascending; ``n <= 5``.

    A downset over n elements splits into the part without element n and the
    part with it (shifted down); the second must be contained in the first.
    """
    if n > 5:
        raise UnsupportedSizeError("all_downsets is limited to n <= 5; use downset_array for n = 6")
    if n == 0:
        return (0, 1)
    prev = all_downsets(n - 1)
    shift = 1 << (n - 1)
    out = [d0 | (d1 << shift) for d0 in prev for d1 in prev if d1 & ~d0 == 0]
    out.sort()
    return tuple(out)


def downset_array(n: int):
    """All downset words for ``n <= 6`` as a sorted numpy uint64 array."""
    import numpy as np

    if n <= 5:
        return np.array(all_downsets(n), dtype=np.uint64)
    if n != 6:
        raise UnsupportedSizeError("downset_array supports n <= 6")
    prev = np.array(all_downsets(5), dtype=np.uint64)
    chunks = []
    for d0 in prev:
        d1 = prev[(prev & ~d0) == 0]
        chunks.append(d0 | (d1 << np.uint64(32)))
    out = np.concatenate(chunks)
    out.sort()
    return out


def all_antichains(n: int) -> list[Antichain]:
    return [_from_closed(w, n) for w in all_downsets(n)]


# -- relabeling and canonical forms ---------------------------------------


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    """Relabel ``mask`` by ``perm`` (element i+1 goes to ``perm[i]``, 1-based)."""
    out = 0
    for i in iter_bits(mask):
        out |= 1 << (perm[i] - 1)
    return out


def relabel(a: Antichain, perm: Sequence[int]) -> Antichain:
    if sorted(perm) != list(range(1, a.n + 1)):
        raise InvalidInputError(f"{perm!r} is not a permutation of 1..{a.n}")
    return normalize((permute_mask(m, perm) for m in a.sets), a.n)


def permute_word(word: int, n: int, perm: Sequence[int]) -> int:
    out = 0
    for m in iter_bits(word):
        out |= 1 << permute_mask(m, perm)
    return out


@lru_cache(maxsize=None)
def _swap_plan(n: int) -> tuple[tuple[int, int], ...]:
    """Delta-swap steps walking through all n! coordinate permutations.

    Heap's algorithm changes the permutation by one transposition per step.
    Swapping coordinates i < j on a mask-indexed word moves every bit whose
    mask has i set and j clear up by ``2**j - 2**i`` and vice versa.
    """
    swaps = []
    c = [0] * n
    k = 1
    while k < n:
        if c[k] < k:
            i, j = (0, k) if k % 2 == 0 else (c[k], k)
            lo, hi = min(i, j), max(i, j)
            select = 0
            for m in range(1 << n):
                if m >> lo & 1 and not m >> hi & 1:
                    select |= 1 << m
            swaps.append(((1 << hi) - (1 << lo), select))
            c[k] += 1
            k = 1
        else:
            c[k] = 0
            k += 1
    return tuple(swaps)


def orbit_words(word: int, n: int) -> Iterator[int]:
    """The word under each of the n! relabelings (with repeats), identity first."""
    yield word
    for shift, select in _swap_plan(n):
        moved = ((word & select) << shift) | ((word >> shift) & select)
        word = (word & ~(select | (select << shift))) | moved
        yield word


def canonical_word(word: int, n: int) -> tuple[int, int]:
    """``(minimum over relabelings, stabilizer size)`` for a mask-indexed word."""
    if n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"canonical forms are limited to n <= {CANONICAL_MAX_N}")
    best = word
    fixed = 0
    for w in orbit_words(word, n):
        if w < best:
            best = w
        if w == word:
            fixed += 1
    return best, fixed


@dataclass(frozen=True)
class CanonicalForm:
    representative: Antichain
    orbit_size: int


def canonicalize(a: Antichain) -> CanonicalForm:
    """Relabeling with the numerically smallest downset word, plus orbit size."""
    best, fixed = canonical_word(a.down, a.n)
    return CanonicalForm(_from_closed(best, a.n), math.factorial(a.n) // fixed)


def canonical_classes(n: int) -> list[CanonicalForm]:
    """One canonical form per permutation class of antichains over ``{1..n}``; ``n <= 5``."""
    seen: dict[int, int] = {}
    for w in all_downsets(n):
        best, fixed = canonical_word(w, n)
        if best not in seen:
            seen[best] = math.factorial(n) // fixed
    return [CanonicalForm(_from_closed(w, n), size) for w, size in sorted(seen.items())]


# -- text form -------------------------------------------------------------


def format_antichain(a: Antichain) -> str:
    return "{" + ",".join("{" + ",".join(map(str, mask_to_set(m))) + "}" for m in a.sets) + "}"


def parse(text: str, n: int, *, normalize_input: bool = False) -> Antichain:
    """Parse ``{{1,2},{3}}``-style text; ``{}`` is bottom and ``{{}}`` is ``{∅}``."""
    s = "".join(text.split())
    if len(s) < 2 or s[0] != "{" or s[-1] != "}":
        raise InvalidInputError(f"cannot parse antichain {text!r}")
    body = s[1:-1]
    masks = []
    pos = 0
    while pos < len(body):
        if body[pos] != "{":
            raise InvalidInputError(f"expected '{{' at offset {pos + 1} in {text!r}")
        end = body.find("}", pos)
        if end < 0:
            raise InvalidInputError(f"unterminated set in {text!r}")
        inner = body[pos + 1 : end]
        elems = []
        if inner:
            for tok in inner.split(","):
                if not tok.isdigit():
                    raise InvalidInputError(f"bad element {tok!r} in {text!r}")
                elems.append(int(tok))
        masks.append(set_to_mask(elems, n))
        pos = end + 1
        if pos < len(body):
            if body[pos] != ",":
                raise InvalidInputError(f"expected ',' at offset {pos + 1} in {text!r}")
            pos += 1
            if pos == len(body):
                raise InvalidInputError(f"trailing ',' in {text!r}")
    result = normalize(masks, n)
    if not normalize_input and len(result.sets) != len(masks):
        raise InvalidInputError(f"{text!r} is not an antichain (pass normalize_input=True to reduce it)")
    return result
