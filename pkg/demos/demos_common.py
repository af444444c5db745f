"""Shared fixture builder for the demo scripts."""

from coquasi import Algebra, FieldSpec, Space, linalg
from coquasi.catalog import H2Datum, H3Datum, check_h2_datum, check_h3_datum


def h2_fixture_system():
    Q = FieldSpec(1)
    mult = linalg.obj_zeros((2, 2, 2), Q)
    mult[0, 0, 0] = Q.one
    mult[0, 1, 1] = Q.one
    mult[1, 0, 1] = Q.one
    mult[1, 1, 0] = Q.one
    B = Algebra(Space(("1", "t")), mult, linalg.obj_array([1, 0], Q))
    datum = H2Datum(B, linalg.obj_array([[1, 0], [0, -1]], Q),
                    linalg.obj_array([0, 1], Q))
    return check_h2_datum(datum).system


def h3_fixture_system():
    F3 = FieldSpec(3)
    q = F3.root()
    mult = linalg.obj_zeros((3, 3, 3), F3)
    for i in range(3):
        for j in range(3):
            mult[i, j, (i + j) % 3] = F3.one
    B = Algebra(Space(("1", "s", "s2")), mult, linalg.obj_array([1, 0, 0], F3))
    F = linalg.obj_zeros((3, 3), F3)
    F[0, 0] = F3.one
    F[1, 1] = q
    F[2, 2] = q * q
    G = linalg.mat_mul(F, F)
    v2 = linalg.obj_zeros(3, F3)
    v2[0] = q
    datum = H3Datum(B, F, G,
                    linalg.obj_array([0, 1, 0], F3), linalg.obj_array([0, 0, 1], F3),
                    linalg.obj_array([1, 0, 0], F3), v2)
    return check_h3_datum(datum).system
