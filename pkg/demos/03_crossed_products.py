"""Crossed products: from finite cleft data to multiplication tables.

A crossed system over a coquasi host is an associative algebra with a weak
action and a cocycle whose law involves the inverse reassociator.  For the
dim-2 and dim-3 hosts the whole system collapses to a finite package of
endomorphism and unit data, checked by a short list of conditions, and the
crossed product comes with an explicit generator table.
"""

from coquasi import FieldSpec, Space, Algebra, linalg, builtin
from coquasi.catalog import H2Datum, H3Datum, check_h2_datum, check_h3_datum, h2_table, h3_table
from coquasi.crossed import build_crossed_product, heisenberg_double, base_field_obstruction
from coquasi.comodule import check_comodule_algebra, coinvariants

Q = FieldSpec(1)

# ---- the dim-2 case: B = Q[t]/(t^2 - 1), F(t) = -t, cocycle value t ----------
mult = linalg.obj_zeros((2, 2, 2), Q)
mult[0, 0, 0] = Q.one; mult[0, 1, 1] = Q.one
mult[1, 0, 1] = Q.one; mult[1, 1, 0] = Q.one
B = Algebra(Space(("1", "t")), mult, linalg.obj_array([1, 0], Q))
datum = H2Datum(B, linalg.obj_array([[1, 0], [0, -1]], Q), linalg.obj_array([0, 1], Q))
res = check_h2_datum(datum)
print("dim-2 datum passes:", res.ok)

prod = build_crossed_product(res.system)
print("crossed product:", prod.underlying.space.labels)
print("comodule-algebra axioms:", check_comodule_algebra(prod.underlying).ok)
print("coinvariants dimension:", coinvariants(prod.underlying).algebra.dim)
print("\ngenerator table (a = 1#x, b = -c^{-1} a):")
print(h2_table(datum).render())

# ---- the dim-3 case over Q(zeta_3) -------------------------------------------
F3 = FieldSpec(3)
q = F3.root()
mult3 = linalg.obj_zeros((3, 3, 3), F3)
for i in range(3):
    for j in range(3):
        mult3[i, j, (i + j) % 3] = F3.one
B3 = Algebra(Space(("1", "s", "s2")), mult3, linalg.obj_array([1, 0, 0], F3))
F = linalg.obj_zeros((3, 3), F3)
F[0, 0] = F3.one; F[1, 1] = q; F[2, 2] = q * q
G = linalg.mat_mul(F, F)
v2 = linalg.obj_zeros(3, F3); v2[0] = q
datum3 = H3Datum(B3, F, G,
                 linalg.obj_array([0, 1, 0], F3), linalg.obj_array([0, 0, 1], F3),
                 linalg.obj_array([1, 0, 0], F3), v2)
print("\ndim-3 datum passes:", check_h3_datum(datum3).ok)
print("four-generator table:")
print(h3_table(datum3).render())

# ---- the Heisenberg-style double on the convolution dual ---------------------
for name in ("H2", "H3"):
    hd = heisenberg_double(builtin(name))
    print(f"\nconvolution-dual crossed product over {name}: dim {hd.underlying.dim},",
          "axioms:", check_comodule_algebra(hd.underlying).ok)

# ---- and the negative result: no crossed product of the base field -----------
for name in ("H2", "H3"):
    ob = base_field_obstruction(builtin(name))
    print(f"\n{name}: {ob.message()}")
