"""Builtin structures, the finite cleft-datum condition lists, multiplication
tables, and data equivalence."""

import pytest

from coquasi import (Algebra, FieldSpec, Space, builtin, check_coquasi_hopf,
                     check_crossed_system, check_h2_datum, check_h3_datum,
                     data_equivalent, h2_table, h3_table, linalg)
from coquasi.catalog import H2Datum, H3Datum, datum_to_system
from coquasi.errors import InvalidDatum, UnknownName



def test_builtin_names():
    assert builtin("H2").dim == 2
    assert builtin("H3").dim == 3
    assert builtin("group_Cn", n=5).dim == 5
    with pytest.raises(UnknownName):
        builtin("nonsense")
    with pytest.raises(UnknownName):
        builtin("H3", field=FieldSpec(4))


def test_builtin_fields():
    H = builtin("H2", field=FieldSpec(3))
    assert H.field().n == 3
    assert check_coquasi_hopf(H).ok


def test_h2_structure_constants(H2, field1):
    # the reassociator is -1 on the top triple and 1 elsewhere; the antipode is
    # the identity; only the alpha corrector is nontrivial
    assert H2.omega.values[1, 1, 1] == field1.scalar(-1)
    for idx, v in [((0, 0, 0), 1), ((1, 1, 0), 1), ((0, 1, 1), 1)]:
        assert H2.omega.values[idx] == field1.scalar(v)
    assert linalg.is_zero(H2.antipode - linalg.obj_eye(2, field1))
    assert H2.alpha.values[1] == field1.scalar(-1)
    assert H2.beta.values[1] == field1.one


def test_h3_structure_constants(H3, field3):
    q = field3.root()
    qi = q.inverse()
    expected = {(1, 2, 1): qi, (2, 1, 1): qi, (2, 2, 1): qi,
                (1, 2, 2): q, (2, 1, 2): q, (2, 2, 2): q}
    for idx in ((0, 0, 0), (1, 1, 1), (1, 1, 2), (2, 2, 0)):
        assert H3.omega.values[idx] == field3.one
    for idx, v in expected.items():
        assert H3.omega.values[idx] == v
    # cyclic-inverse antipode, trivial alpha, root-valued beta
    assert H3.antipode[2, 1] == field3.one and H3.antipode[1, 2] == field3.one
    assert all(H3.alpha.values[i] == field3.one for i in range(3))
    assert H3.beta.values[1] == q and H3.beta.values[2] == qi


def test_h2_datum_passes(h2_datum):
    res = check_h2_datum(h2_datum)
    assert res.ok
    assert res.system.sigma_inv is not None


def test_h2_datum_field_extension(field1):
    # the Gaussian field as a rational algebra, conjugation, and the imaginary
    # unit form a valid datum
    sp = Space(("1", "i"))
    mult = linalg.obj_zeros((2, 2, 2), field1)
    mult[0, 0, 0] = field1.one
    mult[0, 1, 1] = field1.one
    mult[1, 0, 1] = field1.one
    mult[1, 1, 0] = field1.scalar(-1)
    B = Algebra(sp, mult, linalg.obj_array([1, 0], field1))
    F = linalg.obj_array([[1, 0], [0, -1]], field1)
    c = linalg.obj_array([0, 1], field1)
    res = check_h2_datum(H2Datum(B, F, c))
    assert res.ok


def quaternion_algebra(field):
    sp = Space(("1", "i", "j", "k"))
    mult = linalg.obj_zeros((4, 4, 4), field)
    one = field.one
    table = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    for (a, b), (t, s) in table.items():
        mult[a, b, t] = field.scalar(s)
    return Algebra(sp, mult, linalg.obj_array([1, 0, 0, 0], field))


def test_no_h2_datum_on_quaternions(field1):
    # central simple coefficient algebras admit no datum; the checker rejects
    # a family of natural candidates (inner automorphisms by units, any unit c)
    B = quaternion_algebra(field1)
    from coquasi.linear import check_algebra
    assert check_algebra(B).ok
    units = [B.basis_vec(i) for i in range(4)]
    units.append(linalg.obj_array([1, 1, 0, 0], field1))

    def inner(u):
        ui = B.inverse_of(u)
        F = linalg.obj_zeros((4, 4), field1)
        for i in range(4):
            F[:, i] = B.mul(B.mul(u, B.basis_vec(i)), ui)
        return F

    candidates = [linalg.obj_eye(4, field1)] + [inner(u) for u in units]
    for F in candidates:
        for c in units:
            assert not check_h2_datum(H2Datum(B, F, c)).ok


def test_h2_datum_mutations_agree_with_general_checker(h2_datum, field1):
    # the finite condition list and the crossed-system checker reject together
    bad_f = H2Datum(h2_datum.B, linalg.obj_array([[1, 0], [0, 1]], field1), h2_datum.c)
    res = check_h2_datum(bad_f)
    assert not res.ok
    assert not check_crossed_system(datum_to_system(bad_f)).ok
    assert not any(f.identity == "datum-crossed-system-agreement"
                   for f in res.report.failures)
    bad_c = H2Datum(h2_datum.B, h2_datum.F, linalg.obj_array([1, 0], field1))
    res = check_h2_datum(bad_c)
    assert not res.ok
    assert not check_crossed_system(datum_to_system(bad_c)).ok


def test_h3_datum_passes(h3_datum):
    res = check_h3_datum(h3_datum)
    assert res.ok


def test_h3_datum_mutation(h3_datum, field3):
    bad = H3Datum(h3_datum.B, h3_datum.F, h3_datum.G, h3_datum.u1, h3_datum.u2,
                  h3_datum.v1, field3.scalar(2) * h3_datum.v2)
    res = check_h3_datum(bad)
    assert not res.ok
    assert not check_crossed_system(datum_to_system(bad)).ok
    assert not any(f.identity == "datum-crossed-system-agreement"
                   for f in res.report.failures)


# -- tables ---------------------------------------------------------------------


def test_h2_table_cells(h2_datum, field1):
    table = h2_table(h2_datum)
    B = h2_datum.B
    t = linalg.obj_array([0, 1], field1)
    one = B.unit
    expected = {
        ("a", "a"): (t, "1"),
        ("a", "b"): (one, "1"),
        ("b", "a"): (-one, "1"),
        ("b", "b"): (-t, "1"),
    }
    for key, (coeff, grade) in expected.items():
        cell = table.cells[key]
        assert linalg.is_zero(cell.scalar * cell.coeff - coeff), key
        assert cell.h_label == grade, key


def _h3_symbolic_expected(d, field):
    """The sixteen cells, written through the datum's units: row times column.

    Two cells printed inconsistently in the source classification are fixed by
    the defining relations: the (d, a) cell carries grade x^2 (forced by
    colinearity) and the (d, c) cell carries the inverse root (forced by the
    relation dc * q = v1^{-1}).
    """
    B = d.B
    q = field.root()
    qi = q.inverse()

    def inv(u):
        return B.inverse_of(u)

    u1, u2, v1, v2 = d.u1, d.u2, d.v1, d.v2
    return {
        ("a", "a"): (u1, "x2"),
        ("a", "b"): (v1, "1"),
        ("a", "c"): (qi * B.unit, "1"),
        ("a", "d"): (inv(u2), "x2"),
        ("b", "a"): (v2, "1"),
        ("b", "b"): (u2, "x"),
        ("b", "c"): (qi * inv(u1), "x"),
        ("b", "d"): (q * B.unit, "1"),
        ("c", "a"): (B.unit, "1"),
        ("c", "b"): (B.mul(inv(v2), u2), "x"),
        ("c", "c"): (qi * B.mul(inv(v2), inv(u1)), "x"),
        ("c", "d"): (q * inv(v2), "1"),
        ("d", "a"): (B.mul(inv(v1), u1), "x2"),
        ("d", "b"): (B.unit, "1"),
        ("d", "c"): (qi * inv(v1), "1"),
        ("d", "d"): (B.mul(inv(v1), inv(u2)), "x2"),
    }


def test_h3_table_all_sixteen_cells(h3_datum, field3):
    table = h3_table(h3_datum)
    expected = _h3_symbolic_expected(h3_datum, field3)
    matches = 0
    for key, (coeff, grade) in expected.items():
        cell = table.cells[key]
        assert cell.h_label == grade, key
        assert linalg.is_zero(cell.scalar * cell.coeff - coeff), key
        matches += 1
    assert matches == 16


def test_h3_table_colinear_grades(h3_datum):
    # the generator grades force the grade of every product
    table = h3_table(h3_datum)
    grade = {"a": 1, "b": 2, "c": 2, "d": 1}
    names = {0: "1", 1: "x", 2: "x2"}
    for (r, c), cell in table.cells.items():
        assert cell.h_label == names[(grade[r] + grade[c]) % 3]


def test_table_rendering(h2_datum):
    text = h2_table(h2_datum).render()
    assert "a" in text and "#" in text
    js = h2_table(h2_datum).to_json()
    assert set(js["cells"]) == {"a.a", "a.b", "b.a", "b.b"}


def test_table_requires_valid_datum(h2_datum, field1):
    bad = H2Datum(h2_datum.B, linalg.obj_array([[1, 0], [0, 1]], field1), h2_datum.c)
    with pytest.raises(InvalidDatum):
        h2_table(bad)


# -- data equivalence --------------------------------------------------------------


def test_data_equivalent_self(h2_datum, field1):
    res = data_equivalent(h2_datum, h2_datum)
    assert res
    assert linalg.is_zero(res.witnesses["s"] - h2_datum.B.unit)


def test_data_equivalent_sign(h2_datum, field1):
    other = H2Datum(h2_datum.B, h2_datum.F, -h2_datum.c)
    res = data_equivalent(h2_datum, other)
    assert res
    s = res.witnesses["s"]
    # s must satisfy s^{-1} F(s^{-1}) c = -c
    B = h2_datum.B
    si = B.inverse_of(s)
    val = B.mul(B.mul(si, linalg.mat_vec(h2_datum.F, si)), h2_datum.c)
    assert linalg.is_zero(val + h2_datum.c)


def test_data_equivalent_h3_deformation(h3_datum, h3_system, field3):
    from coquasi.crossed import deform_by_a, witness_from_values, equivalent_crossed_products
    q = field3.root()
    am = linalg.obj_zeros((3, 3), field3)
    am[:, 0] = h3_datum.B.unit
    am[:, 1] = linalg.obj_array([0, 1, 0], field3)   # a(x) = s
    am[:, 2] = q * h3_datum.B.unit                   # a(x^2) = q
    w = witness_from_values(h3_system, am)
    deformed = deform_by_a(h3_system, w)
    assert check_crossed_system(deformed).ok
    got = equivalent_crossed_products(h3_system, deformed)
    assert got
    assert deform_by_a(h3_system, got).tensors_equal(deformed)
