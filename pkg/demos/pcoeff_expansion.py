"""
Dedekind numbers two dimensions up
==================================

|A_{n+2}| as a sum over pairs alpha <= beta in A_n of
|[bottom, alpha]| * P(alpha, beta) * |[beta, top]|, where the coefficient
P is a power of two from a component count.
"""

import time

from antichains.lattice import all_antichains, antichain, bottom, leq, top
from antichains.pcoeff import dedekind_pcoeff, pcoeff_bruteforce, pcoeff_k2
from antichains.sizes import interval_size

# the six terms for n = 1
total = 0
for a in all_antichains(1):
    for b in all_antichains(1):
        if leq(a, b):
            term = interval_size(bottom(1), a) * pcoeff_k2(a, b) * interval_size(b, top(1))
            print(f"alpha={a!s:6} beta={b!s:6} term={term}")
            total += term
print("sum =", total)

# the component formula agrees with counting tuples directly
rho1, rho2 = antichain(2, {1}), antichain(2, {1}, {2})
print("P =", pcoeff_k2(rho1, rho2), "by formula,", pcoeff_bruteforce(2, 2, rho1, rho2), "by counting")

# with symmetry reduction over relabelings of beta
for n in range(6):
    t0 = time.perf_counter()
    print(f"|A_{n + 2}| = {dedekind_pcoeff(n, 2)}  ({time.perf_counter() - t0:.2f}s)")
