"""Coordinate decomposition of antichains and the P-coefficient expansion of
Dedekind numbers.

Splitting off k coordinates writes every antichain over n + k elements as an
order-reversing map from subsets of the k new coordinates to antichains over
the first n.  Fixing the meet of the singleton coordinates (α) and the join
of the co-singleton ones (β) leaves ``P(n, k, α, β)`` choices for the middle,
which gives

    |A_{n+k}| = sum over α <= β of |[⊥, α]| * P(n, k, α, β) * |[β, ⊤]|.

For k = 2 the coefficient is ``2**c`` with c the number of graph components
counted by :func:`pcoeff_k2`.
"""
from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .lattice import (
    Antichain,
    InvalidInputError,
    PreconditionError,
    UnsupportedSizeError,
    _check_same,
    _from_closed,
    all_downsets,
    canonical_word,
    dual_word,
    full_word,
    maximal_masks,
    normalize,
)
from .sizes import SizeMemo, iter_interval_downsets, size_of_words

log = logging.getLogger(__name__)

BRUTEFORCE_BUDGET = 5 * 10**7


@dataclass(frozen=True)
class CoordinateDecomposition:
    """``coords[P]`` for each P ⊆ ``n1``; every coordinate avoids the elements of ``n1``."""

    n: int
    n1: int
    coords: dict[int, Antichain]

    def is_order_reversing(self) -> bool:
        for p, a in self.coords.items():
            for q, b in self.coords.items():
                if p & q == p and b.down & ~a.down:
                    return False
        return True


def _submasks(mask: int) -> list[int]:
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    out.reverse()
    return out


def decompose(chi: Antichain, n1: int) -> CoordinateDecomposition:
    """``coords[P] = max{X \\ n1 : X in chi, P ⊆ X}``."""
    n = chi.n
    full = (1 << n) - 1
    if n1 & ~full or n1 == full:
        raise PreconditionError("n1 must be a proper subset of the universe")
    coords = {}
    for p in _submasks(n1):
        coords[p] = normalize((x & ~n1 for x in chi.sets if x & p == p), n)
    return CoordinateDecomposition(n, n1, coords)


def recompose(d: CoordinateDecomposition) -> Antichain:
    """Join of ``coords[P] ⊗ {P}`` over all P."""
    return normalize((y | p for p, a in d.coords.items() for y in a.sets), d.n)


# -- P-coefficients ----------------------------------------------------------


def pcoeff_bruteforce(n: int, k: int, rho1: Antichain, rho2: Antichain) -> int:
    """Count order-reversing tuples on the k-cube with the prescribed endpoints, meet and join.

    Coordinates range over all of ``A_n``; each one is checked against the
    already-assigned smaller and larger coordinates as it is placed.
    """
    _check_same(rho1, rho2)
    if rho1.n != n:
        raise InvalidInputError(f"rho antichains live in n={rho1.n}, not n={n}")
    if k < 0:
        raise InvalidInputError("k must be nonnegative")
    if k == 0:
        return int(rho1 == rho2)
    if n > 5:
        raise UnsupportedSizeError("brute-force P-coefficients enumerate A_n; n <= 5")
    space = all_downsets(n)
    free = (1 << k) - 2
    if len(space) ** free > BRUTEFORCE_BUDGET:
        raise UnsupportedSizeError(
            f"brute force over {len(space)}^{free} tuples exceeds the budget; use k = 2 or smaller n"
        )
    K = (1 << k) - 1
    value: dict[int, int] = {0: rho2.down, K: rho1.down}
    if rho1.down & ~rho2.down:
        return 0
    order = sorted(range(1, K), key=lambda p: (p.bit_count(), p))
    top_w = full_word(n)

    def fits(p: int, w: int) -> bool:
        for q, v in value.items():
            if q & p == q and w & ~v:  # q ⊆ p needs chi_q >= chi_p
                return False
            if q & p == p and v & ~w:  # p ⊆ q needs chi_p >= chi_q
                return False
        return True

    def finish() -> bool:
        lo = top_w
        hi = 0
        for i in range(k):
            lo &= value[K ^ (1 << i)]
            hi |= value[1 << i]
        return lo == rho1.down and hi == rho2.down

    def place(idx: int) -> int:
        if idx == len(order):
            return int(finish())
        p = order[idx]
        total = 0
        for w in space:
            if fits(p, w):
                value[p] = w
                total += place(idx + 1)
                del value[p]
        return total

    return place(0)


def k2_components(alpha_down: int, beta_sets: Iterable[int]) -> int:
    """Components of the interval graph of ``[α, β]`` once members of β below α are removed."""
    verts = [x for x in beta_sets if not alpha_down >> x & 1]
    parent = list(range(len(verts)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    comps = len(verts)
    for i in range(len(verts)):
        xi = verts[i]
        for j in range(i + 1, len(verts)):
            if not alpha_down >> (xi & verts[j]) & 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
                    comps -= 1
    return comps


def pcoeff_k2(rho1: Antichain, rho2: Antichain) -> int:
    """``2**c`` for ``rho1 <= rho2``, else 0."""
    _check_same(rho1, rho2)
    if rho1.down & ~rho2.down:
        return 0
    return 1 << k2_components(rho1.down, rho2.sets)


class _K2Block:
    """Precomputed pair structure of one β for the hot loop over α."""

    __slots__ = ("verts", "pairs")

    def __init__(self, beta_sets: tuple[int, ...]):
        self.verts = beta_sets
        self.pairs = [
            (i, j, beta_sets[i] & beta_sets[j])
            for i in range(len(beta_sets))
            for j in range(i + 1, len(beta_sets))
        ]

    def components(self, alpha_down: int) -> int:
        verts = self.verts
        parent = list(range(len(verts)))
        comps = 0
        for i, x in enumerate(verts):
            if alpha_down >> x & 1:
                parent[i] = -1
            else:
                comps += 1
        for i, j, meet_ij in self.pairs:
            if alpha_down >> meet_ij & 1 or parent[i] < 0 or parent[j] < 0:
                continue
            while parent[i] != i:
                i = parent[i]
            while parent[j] != j:
                j = parent[j]
            if i != j:
                parent[i] = j
                comps -= 1
        return comps


# -- the Dedekind expansion --------------------------------------------------


@dataclass(frozen=True)
class WorkUnit:
    beta_down: int
    weight: int


# per-process state, filled before the hot loop
_STATE: dict = {}


def _init_state(n: int, lower_sizes: dict[int, int] | None) -> None:
    _STATE["n"] = n
    _STATE["lower"] = lower_sizes if lower_sizes is not None else {}
    _STATE["memo"] = SizeMemo()


def _lower_size(alpha_down: int) -> int:
    lower = _STATE["lower"]
    v = lower.get(alpha_down)
    if v is None:
        v = size_of_words(0, alpha_down, _STATE["n"], _STATE["memo"])
        lower[alpha_down] = v
    return v


def _k2_unit(unit: WorkUnit) -> int:
    """``weight * |[β, ⊤]| * sum over α <= β of |[⊥, α]| * 2**c``."""
    n = _STATE["n"]
    block = _K2Block(maximal_masks(unit.beta_down, n))
    inner = 0
    for alpha_down in iter_interval_downsets(0, unit.beta_down, n):
        inner += _lower_size(alpha_down) << block.components(alpha_down)
    upper = size_of_words(0, dual_word(unit.beta_down, n), n, _STATE["memo"])
    return unit.weight * upper * inner


def _bruteforce_unit(unit: WorkUnit, k: int) -> int:
    n = _STATE["n"]
    beta = _from_closed(unit.beta_down, n)
    inner = 0
    for alpha_down in iter_interval_downsets(0, unit.beta_down, n):
        p = pcoeff_bruteforce(n, k, _from_closed(alpha_down, n), beta)
        if p:
            inner += _lower_size(alpha_down) * p
    upper = size_of_words(0, dual_word(unit.beta_down, n), n, _STATE["memo"])
    return unit.weight * upper * inner


def work_units(n: int, symmetry: bool = True) -> list[WorkUnit]:
    """One unit per β; with ``symmetry`` only canonical β, weighted by orbit size."""
    if n > 5:
        raise UnsupportedSizeError("work units for n >= 6 need the compiled kernel; see dedekind_pcoeff")
    if not symmetry:
        return [WorkUnit(w, 1) for w in all_downsets(n)]
    reps: dict[int, int] = {}
    for w in all_downsets(n):
        best, fixed = canonical_word(w, n)
        if best not in reps:
            reps[best] = math.factorial(n) // fixed
    return [WorkUnit(w, size) for w, size in sorted(reps.items())]


def prewarm_lower_sizes(n: int, units: Iterable[WorkUnit], memo: SizeMemo | None = None) -> dict[int, int]:
    """``|[⊥, α]|`` for every α below some unit's β, keyed by downset word."""
    memo = memo if memo is not None else SizeMemo()
    out: dict[int, int] = {}
    for u in units:
        for a in iter_interval_downsets(0, u.beta_down, n):
            if a not in out:
                out[a] = size_of_words(0, a, n, memo)
    return out


def default_threads() -> int:
    env = os.environ.get("ANTICHAIN_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InvalidInputError(f"ANTICHAIN_THREADS must be an integer, got {env!r}") from None
        if value < 1:
            raise InvalidInputError("ANTICHAIN_THREADS must be >= 1")
        return value
    return 1


def dedekind_pcoeff(
    n: int,
    k: int = 2,
    *,
    threads: int = 1,
    symmetry: bool = True,
    progress: Callable[[int, int], None] | None = None,
) -> int:
    """``|A_{n+k}|`` from sizes of intervals in ``A_n`` and P-coefficients.

    ``k = 2`` uses the component formula; other k use the brute-force
    coefficient and are limited to tiny n.  The sum runs over work units
    (one per β), in worker processes when ``threads > 1``; the total is an
    exact integer sum and does not depend on scheduling.
    """
    if k < 2:
        raise InvalidInputError("the expansion needs k >= 2")
    if threads < 1:
        raise InvalidInputError("threads must be >= 1")
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    if n >= 6:
        if k != 2:
            raise UnsupportedSizeError("only k = 2 is supported for n = 6")
        from .kernel import dedekind_pcoeff_n6

        return dedekind_pcoeff_n6(threads=threads, progress=progress)
    if k != 2:
        # raises for infeasible (n, k) before any work starts
        pcoeff_bruteforce(n, k, _from_closed(0, n), _from_closed(0, n))

    units = work_units(n, symmetry)
    lower = prewarm_lower_sizes(n, units)
    if k == 2:
        job: Callable = _k2_unit
        args: list = [units]
    else:
        job = _bruteforce_unit
        args = [units, [k] * len(units)]

    total = 0
    done = 0
    if threads == 1:
        _init_state(n, lower)
        for value in map(job, *args):
            total += value
            done += 1
            if progress:
                progress(done, len(units))
        return total

    with ProcessPoolExecutor(max_workers=threads, initializer=_init_state, initargs=(n, lower)) as pool:
        # chunksize 1: units are very uneven, so hand them out one at a time
        for value in pool.map(job, *args, chunksize=1):
            total += value
            done += 1
            if progress:
                progress(done, len(units))
    return total


def dedekind_pcoeff_reference(n: int, k: int = 2) -> int:
    """The same sum over every pair α <= β, without work units or memo pre-warming."""
    if n > 3:
        raise UnsupportedSizeError("the unreduced reference sum is meant for n <= 3")
    memo = SizeMemo()
    total = 0
    space = all_downsets(n)
    for b in space:
        beta = _from_closed(b, n)
        upper = size_of_words(b, full_word(n), n, memo)
        for a in space:
            if a & ~b:
                continue
            alpha = _from_closed(a, n)
            coeff = pcoeff_k2(alpha, beta) if k == 2 else pcoeff_bruteforce(n, k, alpha, beta)
            total += size_of_words(0, a, n, memo) * coeff * upper
    return total

