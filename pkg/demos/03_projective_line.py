"""
The projective line over GF(q)
==============================

U is the additive group of GF(q) and tau is inversion. Every nonzero
element is special, and the little projective group is PSL_2(q).
"""

from zmoufang import build_projective_line

for q in (4, 8, 16):
    M = build_projective_line(q)
    H = M.hua_subgroup()
    print(f"q={q:>2}  points={M.npoints:>2}  |H|={H.order:>2}  specials={len(M.specials):>2}  |G|={M.group_order()}")

# mu_a in M(F_8); the Hua map tau mu_a multiplies by a^2
M = build_projective_line(8)
print(M.mu(3).cycles())
print(M.hua(3).images[:8], [M.U.spec.mul(x, M.U.spec.mul(3, 3)) for x in range(8)])
