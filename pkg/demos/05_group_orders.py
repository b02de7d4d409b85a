"""
Orders of little projective groups
==================================

Small groups are closed by breadth-first search; MSuz(32) goes through a
Schreier-Sims stabiliser chain.
"""

import time

from zmoufang import build_projective_line, build_suzuki
from zmoufang.perm import group_order, parse_permutations

for label, M, strategy in [
    ("M(F_4)", build_projective_line(4), "naive"),
    ("M(F_8)", build_projective_line(8), "naive"),
    ("MSuz(8)", build_suzuki(8), "naive"),
    ("MSuz(32)", build_suzuki(32), "schreier"),
]:
    t0 = time.perf_counter()
    n = M.group_order(strategy)
    print(f"{label:<9} {strategy:<9} {n:>9}  ({time.perf_counter() - t0:.2f}s)")

# the chain for MSuz(32): orbit sizes along the base inf, 0, 1, ...
M = build_suzuki(32)
print(M.stabilizer_chain.base[:3], M.stabilizer_chain.orbit_sizes())

# exported generators close to the same group
header, gens = parse_permutations(build_suzuki(8).export_generators())
print(header, len(gens), group_order(gens, "schreier", base=(64, 0, 1)))
