"""
Counting the elements of an interval
====================================

Interval sizes computed three ways: by enumeration and by the even and odd
level sums over the interval poset.
"""

import math

from antichains.lattice import antichain, bottom, empty_set_antichain, top
from antichains.posets import Interval, graph_decompose, poset_of_interval
from antichains.sizes import count_by_enumeration, interval_size, level_sets, size_leveled

n = 4
lo = empty_set_antichain(n)
hi = antichain(n, *[{i, j} for i in range(1, n + 1) for j in range(i + 1, n + 1)])
iv = Interval(lo, hi)

# the poset spanning the interval: every singleton and every pair
print("poset members:", sorted(poset_of_interval(iv).members))
print("levels by size:", [bin(w).count("1") for w in level_sets(iv).levels])

even = size_leveled(iv, parity="even")
odd = size_leveled(iv, parity="odd")
enum = count_by_enumeration(lo, hi)
print(f"even sum {even}, odd sum {odd}, enumeration {enum}")

# the same number counts labeled graphs on at most n vertices
print("closed form:", sum(math.comb(n, i) * 2 ** math.comb(i, 2) for i in range(n + 1)))

# an interval whose graph falls apart is a product of smaller ones
iv2 = Interval(lo, antichain(n, {1, 2}, {3, 4}))
parts = graph_decompose(iv2)
print(iv2, "->", [str(p) for p in parts], "sizes", [interval_size(p) for p in parts])

# the whole lattice on six elements
print("|A_6| =", interval_size(bottom(6), top(6)))
