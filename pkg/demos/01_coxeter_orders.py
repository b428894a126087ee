"""
Orders of truncated braid groups
================================

B_n(d) is the braid group on n strands with every half twist s_i forced to
have order d.  Coxeter found that B_n(d) is finite only for n = 2, d = 2 and
five exceptional pairs, with order (f/2)^(n-1) n! where f is the number of
faces of the regular {n, d} tiling of the sphere.

This script compares that formula with a direct Todd-Coxeter enumeration.
"""

import time

from truncbraid import (braid_presentation, coxeter_order_formula, enumerate_cosets,
                        face_count, group_order)

# %% The presentations ---------------------------------------------------------
# Generators s1, ..., s_{n-1}; braid relations, far commutation, and s_i^d.
print(braid_presentation(3, 4))
print(braid_presentation(4, 3))

# %% The five exceptional pairs ------------------------------------------------
print(f"\n{'n':>2} {'d':>2} {'f':>3} {'formula':>8} {'enumerated':>10} {'cosets defined':>15} {'time':>7}")
for n, d in [(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)]:
    start = time.perf_counter()
    res = enumerate_cosets(braid_presentation(n, d))
    elapsed = time.perf_counter() - start
    print(f"{n:>2} {d:>2} {face_count(n, d):>3} {coxeter_order_formula(n, d):>8} "
          f"{res.index:>10} {res.stats.total_defined:>15} {elapsed:>6.2f}s")

# %% The two infinite families of finite groups ----------------------------------
# n = 2: a cyclic group of order d, and f(2, d) = d bigons.
print("\nB_2(d):", [group_order(braid_presentation(2, d)) for d in range(2, 8)])
# d = 2: the symmetric group, and f(n, 2) = 2 hemispheres.
print("B_n(2):", [group_order(braid_presentation(n, 2)) for n in range(2, 7)])

# %% An infinite case -------------------------------------------------------------
# {5, 4} tiles the hyperbolic plane, so f(5, 4) is infinite.  Enumeration can only
# report that it ran out of room.
res = enumerate_cosets(braid_presentation(5, 4), cap=20_000)
print("\nB_5(4) with a cap of 20000 cosets: complete =", res.complete,
      "| formula:", coxeter_order_formula(5, 4))
