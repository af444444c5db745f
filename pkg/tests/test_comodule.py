"""Comodule algebras, coinvariants, twist deformation, relative modules, and
the canonical Galois map."""

from coquasi import (Algebra, ComoduleAlgebra, Space, Twist,
                     check_comodule_algebra, check_relative_hopf_module,
                     coinvariants, galois_can, linalg, relative_hom_dimension,
                     twist_comodule_algebra)
from coquasi.comodule import RelativeHopfModule, module_coinvariants
from coquasi.catalog import builtin

from conftest import basis_of


def regular_comodule_algebra(H):
    """H over itself with the comultiplication as coaction (host must be an
    ordinary bialgebra for this to satisfy plain associativity)."""
    return ComoduleAlgebra(H.space, H.mult.copy(), H.unit.copy(),
                           H.comult.copy(), H)


def trivial_coaction_algebra(H, alg):
    f = H.field()
    coaction = linalg.obj_zeros((alg.dim, alg.dim, H.dim), f)
    for i in range(alg.dim):
        for h, u in enumerate(H.unit):
            if u:
                coaction[i, i, h] = u
    return ComoduleAlgebra(alg.space, alg.mult.copy(), alg.unit.copy(), coaction, H)


def test_regular_coaction_passes(C2):
    A = regular_comodule_algebra(C2)
    assert check_comodule_algebra(A).ok


def test_crossed_product_passes(h2_product, h3_product):
    assert check_comodule_algebra(h2_product.underlying).ok
    assert check_comodule_algebra(h3_product.underlying).ok


def test_corrupted_entry_fails_with_witness(h2_product, field1):
    A = h2_product.underlying
    mult = A.mult.copy()
    mult[1, 1, 2] = mult[1, 1, 2] + field1.one
    bad = ComoduleAlgebra(A.space, mult, A.unit, A.coaction, A.host)
    rep = check_comodule_algebra(bad)
    assert not rep.ok
    assert any(f.identity in ("twisted-associativity", "multiplication-colinear")
               and f.witness for f in rep.failures)


def test_coinvariants_of_crossed_product(h2_product, field1):
    coin = coinvariants(h2_product.underlying)
    assert coin.algebra.dim == 2
    # spanned by the coefficient algebra at the unit grade
    for b in coin.basis:
        assert not b[1] and not b[3]


def test_coinvariants_trivial_coaction(C2, field1):
    alg = Algebra(Space(("1", "u")), linalg.obj_array(
        [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], field1), linalg.obj_array([1, 0], field1))
    A = trivial_coaction_algebra(C2, alg)
    assert check_comodule_algebra(A).ok
    assert coinvariants(A).algebra.dim == 2


def test_coinvariants_regular_coaction(C2):
    A = regular_comodule_algebra(C2)
    coin = coinvariants(A)
    assert coin.algebra.dim == 1


def test_coinvariants_of_nonassociative_regular_comodule(H2):
    # the coinvariant solver only reads the coaction, so it applies to the
    # host itself with its comultiplication as coaction, where the grouplike
    # system pins everything to the span of the unit
    A = regular_comodule_algebra(H2)
    coin = coinvariants(A)
    assert coin.algebra.dim == 1
    assert linalg.coords_in_span(coin.basis, A.unit, A.field()) is not None


def test_twist_trivial_fixes(h2_product):
    A = h2_product.underlying
    tw = Twist.trivial(A.host)
    out = twist_comodule_algebra(A, tw)
    assert linalg.is_zero(out.mult - A.mult)


def test_twisted_group_algebra_square(C2, field1):
    # the sign twist turns the group algebra into the rank-1 Clifford pattern
    A = regular_comodule_algebra(C2)
    tw = Twist.from_values(C2, linalg.obj_array([[1, 1], [1, -1]], field1))
    out = twist_comodule_algebra(A, tw)
    assert check_comodule_algebra(out).ok
    x = basis_of(out.space, "x", field1)
    assert linalg.is_zero(out.mul(x, x) + out.unit)


def test_twist_untwist_round_trip(h2_product, field1):
    A = h2_product.underlying
    tw = Twist.from_values(A.host, linalg.obj_array([[1, 1], [1, -1]], field1))
    out = twist_comodule_algebra(A, tw)
    assert check_comodule_algebra(out).ok
    back = twist_comodule_algebra(out, tw.inverse())
    assert linalg.is_zero(back.mult - A.mult)


def test_clifford_builtin_passes():
    for n in (1, 2):
        A = builtin("group_C2n_twisted", n=n)
        assert check_comodule_algebra(A).ok
        assert A.dim == 2 ** n
        f = A.field()
        for i in range(1, n + 1):
            e = basis_of(A.space, f"e{i}", f)
            assert linalg.is_zero(A.mul(e, e) + A.unit)


# -- the Galois map ---------------------------------------------------------------


def test_galois_bijective_on_fixtures(galois_h2, galois_h3):
    for g in (galois_h2, galois_h3):
        assert g.bijective
        assert g.report.ok, g.report.summary()


def test_galois_translation_product_values(galois_h3, h3_product, field3):
    # sum_j l_j(h) r_j(h) = alpha(h) 1 with trivial alpha on the host
    A = h3_product.underlying
    for h, rep_h in enumerate(galois_h3.inverse.representatives):
        acc = linalg.obj_zeros(A.dim, field3)
        for (i, j), v in linalg.nonzero_items(rep_h):
            acc = acc + v * A.mult[i, j]
        assert linalg.is_zero(acc - A.host.alpha.values[h] * A.unit)


def test_galois_not_bijective_trivial_coaction(C2, field1):
    alg = Algebra(Space(("1",)), linalg.obj_array([[[1]]], field1),
                  linalg.obj_array([1], field1))
    A = trivial_coaction_algebra(C2, alg)
    g = galois_can(A)
    assert not g.bijective


def test_can_inverse_composition(galois_h2, field1):
    mat = galois_h2.matrix
    inv = linalg.invert(mat, field1)
    assert linalg.is_zero(linalg.mat_mul(mat, inv) - linalg.obj_eye(mat.shape[0], field1))
    assert linalg.is_zero(linalg.mat_mul(inv, mat) - linalg.obj_eye(mat.shape[0], field1))


# -- relative modules ----------------------------------------------------------------


def regular_relative_module(A):
    f = A.field()
    d = A.dim
    action = linalg.obj_zeros((d, d, d), f)
    for i in range(d):
        for j in range(d):
            action[i, j] = A.mult[i, j]
    return RelativeHopfModule(A.space, action, A.coaction.copy(), A)


def test_regular_relative_module(h2_product):
    M = regular_relative_module(h2_product.underlying)
    assert check_relative_hopf_module(M).ok


def test_relative_hom_dimension_matches_coinvariants(h2_product, h3_product):
    for prod in (h2_product, h3_product):
        A = prod.underlying
        M = regular_relative_module(A)
        dim_hom = relative_hom_dimension(A, M)
        dim_coin = len(module_coinvariants(M.coaction, A.host))
        assert dim_hom == dim_coin
        assert dim_coin == prod.system.R.dim
