"""Partitions of the lattice (or of an interval) into disjoint intervals."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .lattice import (
    Antichain,
    InvalidInputError,
    PreconditionError,
    _from_closed,
    all_downsets,
    bottom,
    check_nondominating,
    direct_product,
    join,
    leq,
    meet,
    normalize,
    top,
)
from .posets import Interval, empty_interval
from .sizes import SizeMemo, interval_size, iter_interval_downsets

log = logging.getLogger(__name__)


@dataclass
class IntervalPartition:
    """``parts`` should cover ``parent`` disjointly; ``parent`` is ``[⊥, ⊤]`` for the whole lattice."""

    parent: Interval
    parts: list[Interval]
    dropped_empty: int = 0

    def sizes(self, memo: SizeMemo | None = None) -> list[int]:
        return [interval_size(p, memo=memo) for p in self.parts]

    def dump(self) -> str:
        return "".join(f"{p.bottom} ; {p.top}\n" for p in self.parts)


@dataclass
class PartitionCheck:
    ok: bool
    witness: Antichain | None = None
    detail: str = ""
    covered: int = field(default=0, repr=False)

    def __bool__(self) -> bool:
        return self.ok


def _sub_antichains(alpha: Antichain):
    """Sub-antichains of ``alpha`` in subset-of-member-list order (bit j picks member j)."""
    members = alpha.sets
    for pick in range(1 << len(members)):
        yield tuple(m for j, m in enumerate(members) if pick >> j & 1)


def lnd_partition(alpha: Antichain) -> IntervalPartition:
    """``[χ, check(α \\ χ)]`` for every χ ⊆ α."""
    n = alpha.n
    parts = []
    for chosen in _sub_antichains(alpha):
        rest = tuple(m for m in alpha.sets if m not in chosen)
        parts.append(Interval(normalize(chosen, n), check_nondominating(normalize(rest, n))))
    return IntervalPartition(Interval(bottom(n), top(n)), parts)


def lnd_partition_interval(alpha_p: Antichain, iv: Interval) -> IntervalPartition:
    """``[bottom ∨ χ, top ∧ check(α' \\ χ)]`` for χ ⊆ α', empty parts dropped."""
    if alpha_p not in iv:
        raise PreconditionError(f"{alpha_p} does not lie in [{iv}]")
    n = alpha_p.n
    parts = []
    dropped = 0
    for chosen in _sub_antichains(alpha_p):
        rest = normalize((m for m in alpha_p.sets if m not in chosen), n)
        lo = join(iv.bottom, normalize(chosen, n))
        hi = meet(iv.top, check_nondominating(rest))
        if leq(lo, hi):
            parts.append(Interval(lo, hi))
        else:
            dropped += 1
    if dropped:
        log.debug("lnd_partition_interval: dropped %d empty parts", dropped)
    return IntervalPartition(iv, parts, dropped)


def product_partition(n1: int, n2: int, n: int) -> IntervalPartition:
    """``{[⊥,⊥]}`` plus ``[α1 ∨ α2, α1 ⊗ α2]`` over nonempty α1 on ``n1``, α2 on ``n2``.

    ``n1`` and ``n2`` are masks splitting ``{1..n}`` into two nonempty blocks.
    """
    full = (1 << n) - 1
    if not n1 or not n2 or n1 & n2 or n1 | n2 != full:
        raise PreconditionError("n1 and n2 must be nonempty, disjoint and cover the universe")
    a1 = [_from_closed(w, n) for w in _downsets_within(n1, n) if w]
    a2 = [_from_closed(w, n) for w in _downsets_within(n2, n) if w]
    parts = [empty_interval(n)]
    for x in a1:
        for y in a2:
            parts.append(Interval(join(x, y), direct_product(x, y)))
    return IntervalPartition(Interval(bottom(n), top(n)), parts)


def _downsets_within(block: int, n: int) -> list[int]:
    """Downset words (in the n-universe) of every antichain whose span lies in ``block``."""
    elems = [i for i in range(n) if block >> i & 1]
    k = len(elems)
    out = []
    for w in all_downsets(k):
        mapped = 0
        m = w
        while m:
            low = m & -m
            small = low.bit_length() - 1
            big = 0
            for j, e in enumerate(elems):
                if small >> j & 1:
                    big |= 1 << e
            mapped |= 1 << big
            m ^= low
        out.append(mapped)
    return out


def size_splits(n: int) -> list[tuple[int, int]]:
    """One block split ``(n1, n2)`` per size ``1 <= |n1| <= n/2``, taking the first elements."""
    full = (1 << n) - 1
    return [((1 << k) - 1, full ^ ((1 << k) - 1)) for k in range(1, n // 2 + 1)]


def all_splits(n: int) -> list[tuple[int, int]]:
    full = (1 << n) - 1
    out = []
    for k in range(1, n):
        for combo in combinations(range(n), k):
            m = sum(1 << i for i in combo)
            if m & 1:  # unordered: keep the block holding element 1 first
                out.append((m, full ^ m))
    return out


def verify_partition(p: IntervalPartition, mode: str = "full", memo: SizeMemo | None = None) -> PartitionCheck:
    """Check a partition: every parent element in exactly one part, or (``mode="size"``) sizes add up."""
    parent = p.parent
    n = parent.n
    if mode == "size":
        total = sum(interval_size(part, memo=memo) for part in p.parts)
        expected = interval_size(parent, memo=memo)
        return PartitionCheck(total == expected, None, f"sum of part sizes {total}, parent size {expected}")
    if mode != "full":
        raise InvalidInputError(f"unknown mode {mode!r}")
    if n > 5:
        raise InvalidInputError("full verification enumerates the parent; use n <= 5 or mode='size'")
    covered = 0
    for w in iter_interval_downsets(parent.bottom.down, parent.top.down, n):
        hits = 0
        for part in p.parts:
            if part.bottom.down & ~w == 0 and w & ~part.top.down == 0:
                hits += 1
        if hits != 1:
            return PartitionCheck(False, _from_closed(w, n), f"element lies in {hits} parts")
        covered += 1
    for part in p.parts:
        if not (leq(parent.bottom, part.bottom) and leq(part.top, parent.top)):
            return PartitionCheck(False, part.bottom, f"part [{part}] leaves the parent")
    return PartitionCheck(True, None, f"{covered} elements covered once", covered)
