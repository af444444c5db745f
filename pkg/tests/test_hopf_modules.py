"""Module structures over a crossed system: the free module, the relative
module functors, the coinvariant projection, and the equivalence maps."""

import pytest

from coquasi import (check_hopf_module, check_projection, check_relative_hopf_module,
                     equivalence_maps, free_hopf_module, from_relative_hopf,
                     linalg, projection_pi, to_relative_hopf)
from coquasi.comodule import module_coinvariants
from coquasi.errors import MissingSigmaInverse
from coquasi.crossed import sigma_inverse
from coquasi.hopf_modules import CoquasiHopfModule, check_free_module_unit_maps


@pytest.fixture(scope="module")
def h2_module(h2_system):
    return free_hopf_module(sigma_inverse(h2_system))


@pytest.fixture(scope="module")
def h3_module(h3_system):
    return free_hopf_module(sigma_inverse(h3_system))


def test_free_modules_pass(h2_module, h3_module):
    for M in (h2_module, h3_module):
        rep = check_hopf_module(M)
        assert rep.ok, rep.summary()


def test_corrupted_circle_action_fails(h2_module, field1):
    h_action = h2_module.h_action.copy()
    h_action[1, 1] = h_action[1, 1] + h2_module.basis_vec(0)
    bad = CoquasiHopfModule(h2_module.space, h2_module.r_action,
                            h2_module.coaction, h_action, h2_module.system)
    rep = check_hopf_module(bad)
    assert not rep.ok
    assert any(f.identity == "circle-twisted-associativity" and f.witness
               for f in rep.failures)


def test_to_relative_is_right_regular_action(h2_module, h2_product):
    # on the free module the induced action over the crossed product is right
    # multiplication of the product on itself
    N = to_relative_hopf(h2_module, h2_product)
    rep = check_relative_hopf_module(N)
    assert rep.ok, rep.summary()
    A = h2_product.underlying
    for i in range(A.dim):
        for j in range(A.dim):
            assert linalg.is_zero(N.action[i, j] - A.mult[i, j])


def test_relative_round_trip(h3_module, h3_product):
    N = to_relative_hopf(h3_module, h3_product)
    back = from_relative_hopf(N, h3_module.system)
    assert linalg.is_zero(back.r_action - h3_module.r_action)
    assert linalg.is_zero(back.h_action - h3_module.h_action)
    assert linalg.is_zero(back.coaction - h3_module.coaction)


def test_restriction_recovers_both_actions(h2_module, h2_product):
    N = to_relative_hopf(h2_module, h2_product)
    cs = h2_module.system
    dh = cs.host.dim
    for i in range(h2_module.dim):
        for r in range(cs.R.dim):
            assert linalg.is_zero(N.action[i, r * dh + 0] - h2_module.r_action[i, r])
        for a in range(dh):
            assert linalg.is_zero(N.action[i, a] - h2_module.h_action[i, a])


def test_projection_properties(h2_module, h3_module):
    for M in (h2_module, h3_module):
        rep = check_projection(M)
        assert rep.ok, rep.summary()


def test_projection_fixes_coinvariants(h2_module):
    pi = projection_pi(h2_module)
    for m in module_coinvariants(h2_module.coaction, h2_module.system.host):
        assert linalg.is_zero(linalg.mat_vec(pi, m) - m)


def test_projection_image_lies_in_coinvariants(h3_module, field3):
    pi = projection_pi(h3_module)
    H = h3_module.system.host
    coin = module_coinvariants(h3_module.coaction, H)
    for i in range(h3_module.dim):
        coords = linalg.coords_in_span(coin, pi[:, i], field3)
        assert coords is not None


def test_equivalence_maps_identities(h2_module, h3_module):
    for M in (h2_module, h3_module):
        em = equivalence_maps(M)
        assert em.report.ok, em.report.summary()
        assert M.dim == len(em.coin_basis) * M.system.host.dim


def test_equivalence_needs_sigma_inverse(h2_system):
    from coquasi.crossed import CrossedSystem
    stripped = CrossedSystem(h2_system.R, h2_system.host, h2_system.weak_action,
                             h2_system.sigma)
    M = free_hopf_module(stripped)
    with pytest.raises(MissingSigmaInverse):
        equivalence_maps(M)


def test_unit_counit_maps(h2_system, h3_system):
    for cs in (h2_system, h3_system):
        rep = check_free_module_unit_maps(sigma_inverse(cs))
        assert rep.ok, rep.summary()


def test_freeness_dimension(h2_module, h3_module):
    for M in (h2_module, h3_module):
        coin = module_coinvariants(M.coaction, M.system.host)
        assert M.dim == len(coin) * M.system.host.dim
