"""Independent routes to the Dedekind numbers and the sequence table."""
from __future__ import annotations

import math
from typing import Callable

from .lattice import InvalidInputError, UnsupportedSizeError, all_downsets
from .pcoeff import dedekind_pcoeff
from .sequences import (
    SequenceTable,
    a_from_b,
    a_from_d,
    b_via_connected,
    basic_interval,
    c_from_b,
    d_from_b,
)
from .sizes import interval_size

METHODS = ("enumerate", "bn", "stirling", "connected", "pcoeff")

# largest n each method handles in reasonable time; pcoeff n = 8 is the long run
MAX_N = {"enumerate": 5, "bn": 6, "stirling": 6, "connected": 6, "pcoeff": 8}
LONG_RUN_N = 8


def feasible(n: int, method: str, k: int = 2) -> bool:
    if method not in MAX_N or n < 0 or n > MAX_N[method]:
        return False
    if method == "pcoeff":
        return k >= 2 and n - k >= 0 and (k == 2 or n - k <= 2)
    return True


def basic_column(n: int) -> list[int]:
    """``|B_k|`` for k = 0..n from interval sizes of the basic intervals."""
    return [interval_size(basic_interval(k)) for k in range(n + 1)]


def dedekind(
    n: int,
    method: str = "pcoeff",
    *,
    k: int = 2,
    threads: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> int:
    """``|A_n|`` by the named method.

    ``enumerate`` counts downsets; ``bn`` sums binomially weighted basic
    interval sizes; ``stirling`` and ``connected`` route those sizes through
    the distinguishing and connected-antichain recursions; ``pcoeff`` uses
    the P-coefficient expansion from dimension ``n - k``.
    """
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if not feasible(n, method, k):
        raise UnsupportedSizeError(f"method {method!r} cannot compute n={n}" + (f" with k={k}" if method == "pcoeff" else ""))
    if method == "enumerate":
        return len(all_downsets(n))
    if method == "pcoeff":
        return dedekind_pcoeff(n - k, k, threads=threads, progress=progress)
    b = basic_column(n)
    if method == "bn":
        return sum(math.comb(n, i) * b[i] for i in range(n + 1))
    if method == "stirling":
        return a_from_d(d_from_b(b))[n]
    return a_from_b(b_via_connected(c_from_b(b)))[n]


def table_a_column(
    max_n: int, *, threads: int = 1, progress: Callable[[int, int], None] | None = None
) -> list[int]:
    """A by enumeration for n <= 5 and by the k = 2 expansion above that."""
    if not 0 <= max_n <= LONG_RUN_N:
        raise UnsupportedSizeError(f"table rows run from 0 to {LONG_RUN_N}")
    a = []
    for n in range(max_n + 1):
        if n <= 5:
            a.append(dedekind(n, "enumerate"))
        else:
            a.append(dedekind(n, "pcoeff", threads=threads, progress=progress))
    return a


def sequence_table(max_n: int, *, threads: int = 1, progress: Callable[[int, int], None] | None = None) -> SequenceTable:
    return SequenceTable.from_a(table_a_column(max_n, threads=threads, progress=progress))
