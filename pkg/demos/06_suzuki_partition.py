"""
Partitioning the Suzuki 2-group
===============================

U splits into Z(U), ~Z(U)^#, -~Z(U)^# and the elements -~(0,s^(1+theta)) + ~(0,t^(1+theta)).
"""

from collections import Counter

from zmoufang import build_suzuki, partition_classify, partition_sizes, recompose

M = build_suzuki(8)
U = M.U
print(partition_sizes(M))

cls = partition_classify(M, U.element(6, 2))
print(cls.tag.value, cls.decomposition, U.format(recompose(M, *cls.decomposition)))

# the mixed class as an (s, t) grid: every ordered pair s != t occurs once
pairs = Counter(partition_classify(M, x).decomposition for x in range(U.size))
pairs.pop(None)
print(len(pairs), max(pairs.values()), all(s != t for s, t in pairs))

print(partition_sizes(build_suzuki(32)))
