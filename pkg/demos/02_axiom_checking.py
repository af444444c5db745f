"""Checking the defining identities of coquasi-Hopf structure constants.

The two built-in nontrivial structures live on the group coalgebras of C2 and
C3; their multiplication is the group one, but associativity in their comodule
categories is controlled by a nontrivial reassociator functional.  The checker
evaluates every identity on every basis tuple and reports all failures with
witnesses, which is the main debugging loop when entering structure constants
by hand.
"""

from coquasi import Functional, builtin, check_coquasi_hopf, linalg
from coquasi.structures import CoquasiHopf

for name in ("H2", "H3"):
    H = builtin(name)
    rep = check_coquasi_hopf(H)
    print(f"{name}: dim {H.dim} over Q(zeta_{H.field().n}) ->", rep.summary())

C3 = builtin("group_Cn", n=3)
print("C3 group algebra ->", check_coquasi_hopf(C3).summary())

# Corrupt a single structure constant and watch the 3-cocycle law fail with a
# witness tuple
H2 = builtin("H2")
bad_omega = H2.omega.values.copy()
bad_omega[1, 1, 1] = H2.field().scalar(2)
bad = CoquasiHopf(H2.coalgebra, H2.mult, H2.unit,
                  Functional((H2.space,) * 3, bad_omega),
                  H2.antipode, H2.alpha, H2.beta, omega_inv=H2.omega_inv)
print("\nafter setting the top reassociator entry to 2:")
rep = check_coquasi_hopf(bad)
for f in rep.failures[:4]:
    print(" ", f)
print(f"  ... {len(rep.failures)} failures in total")

# The reassociator of the dim-3 structure, printed as a table
H3 = builtin("H3")
print("\nreassociator of the dim-3 structure (nontrivial entries):")
labels = H3.space.labels
for idx, v in linalg.nonzero_items(H3.omega.values):
    if v != H3.field().one:
        print("  omega(%s, %s, %s) = %s" % (labels[idx[0]], labels[idx[1]], labels[idx[2]], v))
