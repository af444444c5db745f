"""Spaces, Sweedler evaluation, convolution arithmetic and its inversion."""

import random

import numpy as np
import pytest

from coquasi import (Algebra, Coalgebra, FieldSpec, Functional, Space, linalg,
                     apply_functional, check_algebra, check_coalgebra,
                     convolution_inverse, convolution_product, sweedler)
from coquasi.errors import ArityMismatch, NotInvertible
from coquasi.linear import (convolution_unit, convolve_functionals,
                            functional_convolution_inverse, functional_unit,
                            scalar_algebra, tensor_power_coalgebra)

from conftest import basis_of


def test_coalgebra_and_algebra_checks(C2):
    assert check_coalgebra(C2.coalgebra).ok
    assert check_algebra(Algebra(C2.space, C2.mult, C2.unit)).ok


def test_sweedler_grouplike(C2, field1):
    x = basis_of(C2.space, "x", field1)
    t = sweedler(C2.coalgebra, x, 3)
    items = list(linalg.nonzero_items(t))
    assert items == [((1, 1, 1), field1.one)]


def test_sweedler_one_leg_is_identity(H3, field3):
    v = linalg.obj_array([2, -1, 3], field3)
    assert linalg.is_zero(sweedler(H3.coalgebra, v, 1) - v)


def test_sweedler_on_powers(H3, field3):
    x2 = basis_of(H3.space, "x2", field3)
    t = sweedler(H3.coalgebra, x2, 2)
    assert list(linalg.nonzero_items(t)) == [((2, 2), field3.one)]


def test_sweedler_association_independent():
    # non-grouplike coalgebra: matrix coalgebra spans; oracle expands the
    # last leg instead of the first
    F = FieldSpec(1)
    sp = Space(("e11", "e12", "e21", "e22"))
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    comult = linalg.obj_zeros((4, 4, 4), F)
    counit = linalg.obj_zeros(4, F)
    for (i, j), a in idx.items():
        counit[a] = F.one if i == j else F.zero
        for k in (1, 2):
            comult[a, idx[(i, k)], idx[(k, j)]] = F.one
    C = Coalgebra(sp, comult, counit)
    assert check_coalgebra(C).ok

    rng = random.Random(5)
    v = linalg.obj_array([rng.randint(-3, 3) for _ in range(4)], F)
    left = sweedler(C, v, 3)

    # oracle: apply comultiplication to the last leg of the two-leg expansion
    two = sweedler(C, v, 2)
    right = linalg.obj_zeros((4, 4, 4), F)
    for (a, b), w in linalg.nonzero_items(two):
        for (c, d), u in linalg.nonzero_items(comult[b]):
            right[a, c, d] = right[a, c, d] + w * u
    assert linalg.is_zero(left - right)


def test_convolution_unit_property(H2, field1):
    # phi = unit o counit is the convolution unit
    alg = Algebra(H2.space, H2.mult, H2.unit)
    unit_map = convolution_unit(H2.coalgebra, alg)
    rng = random.Random(11)
    psi = linalg.obj_array([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)], field1)
    assert linalg.is_zero(convolution_product(unit_map, psi, H2.coalgebra, alg) - psi)
    assert linalg.is_zero(convolution_product(psi, unit_map, H2.coalgebra, alg) - psi)


def test_dual_delta_functionals_multiply_pointwise(H2, field1):
    # oracle: expand the convolution on the grouplike basis by hand
    from coquasi.crossed import dual_convolution_algebra
    dual = dual_convolution_algebra(H2)
    for i in range(2):
        for j in range(2):
            expected = linalg.obj_zeros(2, field1)
            if i == j:
                expected[i] = field1.one
            assert linalg.is_zero(dual.mul(dual.basis_vec(i), dual.basis_vec(j)) - expected)


def test_omega_convolution_inverse_on_h3(H3, field3):
    cos = (H3.coalgebra,) * 3
    unit = functional_unit((H3.space,) * 3, cos, None, field3)
    prod = convolve_functionals(H3.omega, H3.omega_inv, cos)
    assert linalg.is_zero(prod.values - unit.values)
    prod = convolve_functionals(H3.omega_inv, H3.omega, cos)
    assert linalg.is_zero(prod.values - unit.values)


def test_convolution_inverse_oracle_pointwise(H2, field1):
    # on a grouplike basis convolution is pointwise, so inversion is entrywise;
    # cross-check the linear solve against that oracle
    inv = functional_convolution_inverse(H2.omega, (H2.coalgebra,) * 3)
    for idx, v in np.ndenumerate(H2.omega.values):
        assert inv.values[idx] == v.inverse()
    assert inv.values[1, 1, 1] == field1.scalar(-1)


def test_convolution_inverse_unit_self_inverse(H2, field1):
    cos = (H2.coalgebra,) * 2
    unit = functional_unit((H2.space,) * 2, cos, None, field1)
    inv = functional_convolution_inverse(unit, cos)
    assert linalg.is_zero(inv.values - unit.values)


def test_convolution_inverse_zero_map(H2, field1):
    zero = Functional((H2.space,) * 2, linalg.obj_zeros((2, 2), field1))
    with pytest.raises(NotInvertible):
        functional_convolution_inverse(zero, (H2.coalgebra,) * 2)
    alg = Algebra(H2.space, H2.mult, H2.unit)
    with pytest.raises(NotInvertible):
        convolution_inverse(linalg.obj_zeros((2, 2), field1), H2.coalgebra, alg)


def test_convolution_two_sided_requirement():
    # in a commutative setting one-sided and two-sided agree; sanity only
    F = FieldSpec(1)
    sp = Space(("1", "x"))
    comult = linalg.obj_zeros((2, 2, 2), F)
    comult[0, 0, 0] = F.one
    comult[1, 1, 1] = F.one
    counit = linalg.obj_array([1, 1], F)
    C = Coalgebra(sp, comult, counit)
    alg = scalar_algebra(F)
    phi = linalg.obj_array([[2, -3]], F)
    inv = convolution_inverse(phi, C, alg)
    assert inv[0, 0] == F.scalar("1/2") and inv[0, 1] == F.scalar("-1/3")


def test_apply_functional_values(H3, H2, field3, field1):
    x = basis_of(H3.space, "x", field3)
    x2 = basis_of(H3.space, "x2", field3)
    one = basis_of(H3.space, "1", field3)
    q = field3.root()
    t = np.zeros((3, 3, 3), dtype=object)
    t.fill(field3.zero)

    def pure(u, v, w):
        out = linalg.obj_zeros((3, 3, 3), field3)
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                for k, c in enumerate(w):
                    out[i, j, k] = a * b * c
        return out

    assert apply_functional(H3.omega, pure(x, x2, x)) == q.inverse()
    assert apply_functional(H3.omega, pure(x, one, x2)) == field3.one
    alpha2 = H2.alpha
    assert apply_functional(alpha2, basis_of(H2.space, "x", field1)) == field1.scalar(-1)


def test_apply_functional_arity_mismatch(H2, field1):
    with pytest.raises(ArityMismatch):
        apply_functional(H2.omega, linalg.obj_zeros((2, 2), field1))


def test_tensor_power_coalgebra(H3):
    tp = tensor_power_coalgebra(H3.coalgebra, 2)
    assert tp.dim == 9
    assert check_coalgebra(tp).ok


def test_convolution_associative_random(H3, field3):
    # Hom(C, A) is associative whenever A is; random functionals into a
    # noncommutative algebra
    rng = random.Random(3)
    sp = Space(("1", "u"))
    mult = linalg.obj_zeros((2, 2, 2), field3)
    mult[0, 0, 0] = field3.one
    mult[0, 1, 1] = field3.one
    mult[1, 0, 1] = field3.one
    # u*u = 0: the dual numbers
    unit = linalg.obj_array([1, 0], field3)
    A = Algebra(sp, mult, unit)
    assert check_algebra(A).ok

    def rand_map():
        return linalg.obj_array([[rng.randint(-2, 2) for _ in range(3)] for _ in range(2)], field3)

    for _ in range(8):
        f, g, h = rand_map(), rand_map(), rand_map()
        lhs = convolution_product(convolution_product(f, g, H3.coalgebra, A), h, H3.coalgebra, A)
        rhs = convolution_product(f, convolution_product(g, h, H3.coalgebra, A), H3.coalgebra, A)
        assert linalg.is_zero(lhs - rhs)
