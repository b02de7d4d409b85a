"""
The Suzuki 2-group A(3, theta)
==============================

Pairs (a, b) over GF(8) with (a, b) + (c, d) = (a + c, b + d + a c^theta).
"""

from zmoufang import FieldSpec, RootGroup

U = RootGroup.suzuki(FieldSpec.tits_field(3))
x, y = U.element(2, 3), U.element(4, 5)

# the group is not commutative
print(x + y, y + x)

# negation and doubling
print(-x, x * 2)

# centre = involutions + 0, exponent 4
print(len(U.center), len(U.involutions), U.exponent)

# h_lambda: (a, b) -> (lambda a, lambda^(1+theta) b) is an automorphism
print(U.format(U.h_lambda(2, U.index(3, 1))))
