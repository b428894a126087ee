"""
The full twist and the triangle group
=====================================

In B_3 the full twist (s1 s2)^3 is central.  In B_3(d) it has order f(3, d)/2,
and the quotient by it is the rotation group Δ(2, 3, d) of order 3 f(3, d).
Multiplying the two gives Coxeter's formula for three strands.
"""

from truncbraid import (braid_presentation, branched_cover_check, element_order,
                        enumerate_cosets, face_count, full_twist_word, group_order,
                        parse_word, perm_rep, synthesize_tiling, triangle_presentation,
                        word_image)
from truncbraid.cosets import perm_order

twist = full_twist_word(3)

for d in range(2, 6):
    b3 = braid_presentation(3, d)
    order_twist = element_order(b3, twist)         # checked two independent ways
    tri = group_order(triangle_presentation(2, 3, d))
    quads = branched_cover_check(synthesize_tiling(3, d))
    quotient = enumerate_cosets(b3, [twist]).index
    print(f"d={d}: ord(twist)={order_twist} (f/2={face_count(3, d) // 2}), "
          f"|Δ(2,3,{d})|={tri} = [B3:<twist>]={quotient} = 3F={quads}, "
          f"|B3({d})|={group_order(b3)} = {order_twist}*{tri}")

# %% Both spellings of the full twist act identically ------------------------------
rep = perm_rep(enumerate_cosets(braid_presentation(3, 4)))
a = word_image(rep, parse_word("(s1 s2)^3"))
b = word_image(rep, parse_word("(s1 s2 s1)^2"))
print("\n(s1 s2)^3 == (s1 s2 s1)^2 in B3(4):", a == b, "| order", perm_order(a))
