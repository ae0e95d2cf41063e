"""
Dedekind numbers and related sequences
======================================

The counts of all antichains (A), antichains of the basic interval (B),
connected ones (C) and distinguishing ones (D), linked by binomial,
Stirling and graph-expansion recursions.
"""

from antichains.dedekind import dedekind, sequence_table
from antichains.sequences import connected_graph_counts, distinguishing_count_direct

table = sequence_table(7)
for n, a, b, c, d in table.rows():
    print(f"{n}  {a:>16}  {b:>16}  {c:>16}  {d:>16}")
print("recursions consistent:", table.consistent())

# D by direct classification for small n
print("D_4 directly:", distinguishing_count_direct(4))

# several independent routes to |A_6|
for method in ("bn", "stirling", "connected", "pcoeff"):
    print(method, dedekind(6, method))

# the same expansion machinery counts connected labeled graphs
print("connected graphs:", connected_graph_counts(8))
