"""Dedekind numbers and the derived sequences B (basic intervals), C (connected
antichains) and D (distinguishing antichains), with the recursions linking them.

All arithmetic is on Python ints.  Columns are plain lists indexed by n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .lattice import (
    InvalidInputError,
    UnsupportedSizeError,
    _from_closed,
    all_downsets,
    normalize,
    top,
)
from .posets import Interval

# (part size k, multiplicity m), k strictly decreasing
MultisetExpansion = tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise InvalidInputError(f"stirling2 needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    if n == k:
        return 1
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise InvalidInputError(f"parts {list(parts)} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def _check_column(values: Sequence[int | None], name: str) -> None:
    for i, v in enumerate(values):
        if v is None:
            raise InvalidInputError(f"row {i} of column {name} is missing")


def b_from_a(a: Sequence[int]) -> list[int]:
    """``B_n = A_n - sum_{k<n} C(n,k) B_k``."""
    _check_column(a, "A")
    b: list[int] = []
    for n, an in enumerate(a):
        b.append(an - sum(math.comb(n, k) * b[k] for k in range(n)))
    return b


def a_from_b(b: Sequence[int]) -> list[int]:
    _check_column(b, "B")
    return [sum(math.comb(n, k) * b[k] for k in range(n + 1)) for n in range(len(b))]


def d_from_b(b: Sequence[int]) -> list[int]:
    """``D_n = B_n - sum_{1<=k<n} S(n,k) D_k`` with ``D_0 = B_0``."""
    _check_column(b, "B")
    d: list[int] = []
    for n, bn in enumerate(b):
        if n == 0:
            d.append(bn)  # D_{0,0} = {⊥, {∅}}
            continue
        # S(n, 0) = 0 for n > 0, so D_0 never contributes here
        d.append(bn - sum(stirling2(n, k) * d[k] for k in range(1, n)))
    return d


def b_from_d(d: Sequence[int]) -> list[int]:
    _check_column(d, "D")
    return [sum(stirling2(n, k) * d[k] for k in range(n + 1)) for n in range(len(d))]


def a_from_d(d: Sequence[int]) -> list[int]:
    """``A_n = sum_k S(n+1, k+1) D_k``."""
    _check_column(d, "D")
    return [sum(stirling2(n + 1, k + 1) * d[k] for k in range(n + 1)) for n in range(len(d))]


def expansions(n: int) -> Iterator[MultisetExpansion]:
    """Every way of writing n as a sum of distinct part sizes with multiplicities."""
    if n < 1:
        raise InvalidInputError("expansions are defined for n >= 1")

    def rec(rest: int, max_k: int) -> Iterator[MultisetExpansion]:
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, max_k), 0, -1):
            for m in range(rest // k, 0, -1):
                for tail in rec(rest - m * k, k - 1):
                    yield ((k, m),) + tail

    yield from rec(n, n)


def set_partitions_of_type(n: int, expansion: MultisetExpansion) -> int:
    """Set partitions of an n-set with m blocks of size k for each (k, m)."""
    if sum(k * m for k, m in expansion) != n:
        raise InvalidInputError(f"{expansion} is not an expansion of {n}")
    parts = [k for k, m in expansion for _ in range(m)]
    count = multinomial(n, parts)
    for _, m in expansion:
        count //= math.factorial(m)
    return count


def _expansion_term(n: int, expansion: MultisetExpansion, c: Sequence[int]) -> int:
    term = set_partitions_of_type(n, expansion)
    for k, m in expansion:
        term *= c[k] ** m
    return term


def _solve_connected(totals: Sequence[int], c0: int) -> list[int]:
    c = [c0]
    for n in range(1, len(totals)):
        rest = sum(_expansion_term(n, e, c) for e in expansions(n) if e != ((n, 1),))
        c.append(totals[n] - rest)
    return c


def c_from_b(b: Sequence[int]) -> list[int]:
    """Connected counts: subtract every multi-component expansion from ``B_n``; ``C_0 = 2``."""
    _check_column(b, "B")
    return _solve_connected(b, 2)


def b_via_connected(c: Sequence[int]) -> list[int]:
    _check_column(c, "C")
    out = [c[0]]
    for n in range(1, len(c)):
        out.append(sum(_expansion_term(n, e, c) for e in expansions(n)))
    return out


def edge_covering_count(n: int) -> int:
    """Graphs on n labeled vertices with no isolated vertex, by inclusion-exclusion."""
    return sum((-1) ** j * math.comb(n, j) * 2 ** math.comb(n - j, 2) for j in range(n + 1))


def connected_graph_counts(max_n: int) -> list[int]:
    """Connected labeled graphs on n vertices for n = 0..max_n.

    The recursion runs on edge coverings, where a lone vertex is not covered;
    entries 0 and 1 are the one-vertex-or-fewer graphs, connected by convention.
    """
    covers = [edge_covering_count(n) for n in range(max_n + 1)]
    conn = _solve_connected(covers, covers[0] if covers else 1)
    return [1 if n <= 1 else conn[n] for n in range(max_n + 1)]


def connected_graphs_bruteforce(n: int) -> int:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if n <= 1:
        return 1
    count = 0
    for pick in range(1 << len(pairs)):
        reach = 1
        grew = True
        while grew:
            grew = False
            for e, (i, j) in enumerate(pairs):
                if pick >> e & 1 and (reach >> i & 1) != (reach >> j & 1):
                    reach |= 1 << i | 1 << j
                    grew = True
        count += reach == (1 << n) - 1
    return count


# -- basic intervals and direct classification -----------------------------


def singletons(n: int):
    return normalize((1 << i for i in range(n)), n)


def basic_interval(n: int) -> Interval:
    """``[{{1},...,{n}}, ⊤]``."""
    return Interval(singletons(n), top(n))


def basic_downsets(n: int) -> list[int]:
    if n > 5:
        raise UnsupportedSizeError("direct enumeration of basic intervals is limited to n <= 5")
    need = singletons(n).down
    return [w for w in all_downsets(n) if w & need == need]


def _membership_signatures(sets: Sequence[int], n: int) -> list[int]:
    return [sum(1 << j for j, s in enumerate(sets) if s >> i & 1) for i in range(n)]


def never_separated_blocks(sets: Sequence[int], n: int) -> int:
    """Size of the finest partition whose blocks no member of the antichain splits."""
    return len(set(_membership_signatures(sets, n)))


def distinguishing_classification(n: int) -> list[int]:
    """``counts[k]``: antichains of the basic interval whose never-separated partition has k blocks."""
    counts = [0] * (n + 1)
    for w in basic_downsets(n):
        counts[never_separated_blocks(_from_closed(w, n).sets, n)] += 1
    return counts


def distinguishing_count_direct(n: int) -> int:
    return distinguishing_classification(n)[n]


def connected_components_of(sets: Sequence[int], n: int) -> int:
    """Components of the graph on elements joined when they share a member."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in sets:
        elems = [i for i in range(n) if s >> i & 1]
        for e in elems[1:]:
            ra, rb = find(elems[0]), find(e)
            if ra != rb:
                parent[ra] = rb
    return len({find(i) for i in range(n)})


def connected_count_direct(n: int) -> int:
    if n == 0:
        return len(basic_downsets(0))
    return sum(
        1 for w in basic_downsets(n) if connected_components_of(_from_closed(w, n).sets, n) == 1
    )


# -- the table ---------------------------------------------------------------


@dataclass(frozen=True)
class SequenceTable:
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    @classmethod
    def from_a(cls, a: Sequence[int]) -> SequenceTable:
        b = b_from_a(a)
        return cls(tuple(a), tuple(b), tuple(c_from_b(b)), tuple(d_from_b(b)))

    @property
    def max_n(self) -> int:
        return len(self.a) - 1

    def rows(self) -> list[tuple[int, int, int, int, int]]:
        return [(n, self.a[n], self.b[n], self.c[n], self.d[n]) for n in range(len(self.a))]

    def consistent(self) -> bool:
        """Every row satisfies the three recursions."""
        return (
            list(self.b) == b_from_a(self.a)
            and list(self.d) == d_from_b(self.b)
            and list(self.c) == c_from_b(self.b)
            and list(self.a) == a_from_d(self.d)
            and list(self.b) == b_via_connected(self.c)
        )
