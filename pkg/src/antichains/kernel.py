"""Compiled k = 2 expansion for downsets that fit one machine word (n <= 6).

The pure-Python loop in :mod:`antichains.pcoeff` handles n <= 5.  For n = 6
the sum has roughly 10**11 terms, so the inner loop over α runs in numba.
Every α is read from the sorted array of all downsets, which also gives the
index of its lower-interval size without a lookup.
"""
from __future__ import annotations

import logging
import math
import time
from typing import Callable

import numba
import numpy as np

from .lattice import _swap_plan, downset_array, dual_word, maximal_masks
from .sizes import SizeMemo, size_of_words

log = logging.getLogger(__name__)

U64 = np.uint64


@numba.njit(cache=True)
def _canonical_words(words, shifts, selects):
    out = np.empty_like(words)
    for idx in range(words.shape[0]):
        w = words[idx]
        best = w
        for s in range(shifts.shape[0]):
            sh = shifts[s]
            sel = selects[s]
            moved = ((w & sel) << sh) | ((w >> sh) & sel)
            w = (w & ~(sel | (sel << sh))) | moved
            if w < best:
                best = w
        out[idx] = best
    return out


def canonical_words_array(words: np.ndarray, n: int) -> np.ndarray:
    """Smallest relabeling of each downset word, vectorized over an array."""
    plan = _swap_plan(n)
    shifts = np.array([s for s, _ in plan], dtype=U64)
    selects = np.array([sel for _, sel in plan], dtype=U64)
    return _canonical_words(words.astype(U64), shifts, selects)


@numba.njit(cache=True)
def _components(alpha, verts, nv, pi, pj, pm, npairs):
    parent = np.empty(nv, dtype=np.int64)
    comps = 0
    one = U64(1)
    for i in range(nv):
        if (alpha >> verts[i]) & one:
            parent[i] = -1
        else:
            parent[i] = i
            comps += 1
    for p in range(npairs):
        a = pi[p]
        b = pj[p]
        if parent[a] < 0 or parent[b] < 0:
            continue
        if (alpha >> pm[p]) & one:
            continue
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        if a != b:
            parent[a] = b
            comps -= 1
    return comps


@numba.njit(parallel=True, cache=True)
def _unit_sums(downsets, lower, betas, verts, nverts, pi, pj, pm, npairs, out_hi, out_lo):
    for u in numba.prange(betas.shape[0]):
        not_beta = ~betas[u]
        hi = U64(0)
        lo = U64(0)
        for idx in range(downsets.shape[0]):
            d = downsets[idx]
            if d & not_beta:
                continue
            c = _components(d, verts[u], nverts[u], pi[u], pj[u], pm[u], npairs[u])
            x = lower[idx] << U64(c)
            nxt = lo + x
            if nxt < lo:
                hi += U64(1)
            lo = nxt
        out_hi[u] = hi
        out_lo[u] = lo


def _pack_units(betas: list[int], n: int):
    width = max(1, math.comb(n, n // 2))
    npair_max = max(1, width * (width - 1) // 2)
    m = len(betas)
    verts = np.zeros((m, width), dtype=U64)
    nverts = np.zeros(m, dtype=np.int64)
    pi = np.zeros((m, npair_max), dtype=np.int64)
    pj = np.zeros((m, npair_max), dtype=np.int64)
    pm = np.zeros((m, npair_max), dtype=U64)
    npairs = np.zeros(m, dtype=np.int64)
    for u, b in enumerate(betas):
        vs = maximal_masks(b, n)
        nverts[u] = len(vs)
        verts[u, : len(vs)] = vs
        p = 0
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                pi[u, p], pj[u, p], pm[u, p] = i, j, vs[i] & vs[j]
                p += 1
        npairs[u] = p
    return verts, nverts, pi, pj, pm, npairs


def lower_sizes_array(downsets: np.ndarray, n: int, memo: SizeMemo | None = None):
    """``|[⊥, α]|`` for each downset, plus the canonical words and orbit counts.

    Sizes come from the interval-size dispatcher, one call per canonical class.
    """
    memo = memo if memo is not None else SizeMemo()
    canon = canonical_words_array(downsets, n)
    classes, inverse, counts = np.unique(canon, return_inverse=True, return_counts=True)
    class_sizes = np.array([size_of_words(0, int(w), n, memo) for w in classes], dtype=U64)
    return class_sizes[inverse], classes, counts


def dedekind_pcoeff_compiled(
    n: int,
    *,
    threads: int = 1,
    progress: Callable[[int, int], None] | None = None,
    batch: int = 64,
    max_units: int | None = None,
) -> int:
    """``|A_{n+2}|`` by the k = 2 expansion over canonical β, compiled inner loop.

    ``max_units`` truncates the unit list (for timing samples); the result
    is then a partial sum, not a Dedekind number.
    """
    if not 0 <= n <= 6:
        raise ValueError("the compiled kernel handles 0 <= n <= 6")
    numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
    t0 = time.perf_counter()
    downsets = downset_array(n).astype(U64)
    lower, classes, counts = lower_sizes_array(downsets, n)
    log.info("n=%d: %d downsets, %d classes, prep %.1fs", n, len(downsets), len(classes), time.perf_counter() - t0)

    betas = [int(w) for w in classes]
    weights = [int(c) for c in counts]
    if max_units is not None:
        betas, weights = betas[:max_units], weights[:max_units]
    dual_idx = np.searchsorted(downsets, np.array([dual_word(b, n) for b in betas], dtype=U64))
    uppers = [int(lower[i]) for i in dual_idx]

    total = 0
    for start in range(0, len(betas), batch):
        chunk = betas[start : start + batch]
        packed = _pack_units(chunk, n)
        hi = np.zeros(len(chunk), dtype=U64)
        lo = np.zeros(len(chunk), dtype=U64)
        _unit_sums(downsets, lower, np.array(chunk, dtype=U64), *packed, hi, lo)
        for u in range(len(chunk)):
            inner = (int(hi[u]) << 64) | int(lo[u])
            total += weights[start + u] * uppers[start + u] * inner
        if progress:
            progress(min(start + batch, len(betas)), len(betas))
    return total


def dedekind_pcoeff_n6(*, threads: int = 1, progress: Callable[[int, int], None] | None = None) -> int:
    return dedekind_pcoeff_compiled(6, threads=threads, progress=progress)
