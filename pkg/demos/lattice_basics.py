"""
Antichains, downsets and the lattice operations
===============================================

A tour of the basic objects over a three-element universe.
"""

from antichains.lattice import (
    all_antichains,
    antichain,
    canonical_classes,
    canonicalize,
    check_nondominating,
    dual,
    parse,
)

# an antichain is a family of subsets, none inside another; sets are 1-based
a = antichain(3, {1, 2}, {2, 3})
b = parse("{{1},{3}}", 3)
print("a =", a, " b =", b)

# join keeps the maximal sets of the union, meet the maximal pairwise intersections
print("a | b =", a | b)
print("a & b =", a & b)
print("b <= a ?", b <= a)

# every antichain is stored as the downset it generates, one bit per subset
print("downset word of a:", bin(a.down))

# the largest antichain that dominates no member of a
print("check(a) =", check_nondominating(a))

# dual is an order-reversing involution
print("dual(a) =", dual(a), " dual(dual(a)) == a:", dual(dual(a)) == a)

# there are 20 antichains over three elements, 10 up to relabeling
print(len(all_antichains(3)), "antichains,", len(canonical_classes(3)), "classes")
cf = canonicalize(antichain(3, {3}))
print("canonical form of {{3}}:", cf.representative, "orbit size", cf.orbit_size)
