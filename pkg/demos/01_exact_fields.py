"""Exact coefficient arithmetic in cyclotomic-rational fields.

Everything in this toolkit happens over Q(zeta_n): rationals with an adjoined
root of unity, represented on the power basis modulo the cyclotomic
polynomial.  No floating point is involved anywhere, so every identity check
in the other demos is an exact yes/no answer.
"""

from coquasi import FieldSpec, primitive_root

# Plain rationals: n = 1
Q = FieldSpec(1)
print("1/2 + 1/3 =", Q.scalar("1/2") + Q.scalar("1/3"))

# The third root of unity
F3 = FieldSpec(3)
q = primitive_root(F3)
print("q =", q)
print("q^3 =", q ** 3)
print("1 + q + q^2 =", F3.one + q + q * q)
print("q^{-1} =", q.inverse(), " (equals q^2)")

# The fourth root: i
F4 = FieldSpec(4)
i = primitive_root(F4)
print("i^2 =", i * i)

# Text encoding: the letter z denotes the adjoined root
x = F3.parse("2 - 3/2*z")
print("parsed:", x, "| round trip equal:", F3.parse(F3.format(x)) == x)

# Inverses are computed by the extended Euclidean algorithm mod the
# cyclotomic polynomial, so they are exact fractions too
y = F3.scalar(2) + q
print(f"({y})^(-1) =", y.inverse(), "| product:", y * y.inverse())
