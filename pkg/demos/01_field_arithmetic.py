"""
Arithmetic in GF(2^n)
=====================

Elements are bit patterns of polynomials modulo the smallest irreducible
polynomial of degree n.
"""

from zmoufang import FieldSpec

# GF(8) with the Tits automorphism x -> x^4
f = FieldSpec.tits_field(3)
print(f.to_dict())

# multiplication table, rows and columns indexed 0..7
print(f.mul_table)

# 2 * 5 = 1, so 2 and 5 are inverse to each other
print("2*5 =", f.mul(2, 5), " 1/6 =", f.inv(6))

# theta applied twice is squaring
print([f.theta(f.theta(x)) == f.mul(x, x) for x in f.elements()])

# the element-level wrapper reads like ordinary algebra
a, b = f.element(2), f.element(3)
print(a * b + a.theta(), (a / b).inverse())
