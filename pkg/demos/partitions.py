"""
Splitting the lattice into intervals
====================================

Two ways to cut the lattice of antichains into disjoint intervals, each
checked element by element.
"""

from antichains.lattice import antichain
from antichains.partitions import lnd_partition, product_partition, verify_partition

# one interval for every sub-antichain of alpha
alpha = antichain(3, {1, 2}, {3})
p = lnd_partition(alpha)
print(p.dump(), end="")
print("sizes", p.sizes(), "sum", sum(p.sizes()))
print("disjoint cover:", bool(verify_partition(p)))

# split the universe {1,2,3,4} into {1,2} and {3,4}
q = product_partition(0b0011, 0b1100, 4)
print(len(q.parts), "parts, sizes sum to", sum(q.sizes()))
print("disjoint cover:", bool(verify_partition(q)))
