"""Module structures over a crossed system and their trivialization.

A module here carries three interacting structures: an honest action of the
coefficient algebra, a host coaction, and a cocycle-twisted host action.
These are the same as relative modules over the crossed product, and when the
cocycle is invertible the whole category trivializes: the coinvariant
projection splits every module as (coinvariants) x (host).
"""

from coquasi import linalg
from coquasi.comodule import module_coinvariants
from coquasi.crossed import build_crossed_product, sigma_inverse
from coquasi.hopf_modules import (check_hopf_module, check_projection,
                                  equivalence_maps, free_hopf_module,
                                  from_relative_hopf, projection_pi,
                                  to_relative_hopf)

from demos_common import h2_fixture_system, h3_fixture_system

for make, name in ((h2_fixture_system, "dim-2"), (h3_fixture_system, "dim-3")):
    cs = sigma_inverse(make())
    prod = build_crossed_product(cs)
    M = free_hopf_module(cs)
    print(f"== {name} fixture: free module of dimension {M.dim} ==")
    print("module axioms:", check_hopf_module(M).summary())

    N = to_relative_hopf(M, prod)
    back = from_relative_hopf(N, cs)
    print("relative-module round trip is the identity on tensors:",
          linalg.is_zero(back.r_action - M.r_action)
          and linalg.is_zero(back.h_action - M.h_action))

    pi = projection_pi(M)
    print("projection properties:", check_projection(M).summary())
    coin = module_coinvariants(M.coaction, cs.host)
    print("coinvariants dimension:", len(coin),
          "| dim M = dim coinvariants x dim host:",
          M.dim == len(coin) * cs.host.dim)

    em = equivalence_maps(M)
    print("equivalence with plain modules (both composites identity):",
          em.report.ok)
    print()
