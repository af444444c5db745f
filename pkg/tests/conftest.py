"""Shared fixtures: the two low-dimensional hosts, their cleft data, and the
crossed products they generate.  Expensive objects are session-scoped; all
structures are immutable, so sharing is safe."""

import pytest

from coquasi import FieldSpec, Algebra, Space, linalg
from coquasi.catalog import H2Datum, H3Datum, builtin, check_h2_datum, check_h3_datum
from coquasi.crossed import build_crossed_product


@pytest.fixture(scope="session")
def field1():
    return FieldSpec(1)


@pytest.fixture(scope="session")
def field3():
    return FieldSpec(3)


@pytest.fixture(scope="session")
def H2():
    return builtin("H2")


@pytest.fixture(scope="session")
def H3():
    return builtin("H3")


@pytest.fixture(scope="session")
def C2():
    return builtin("group_Cn", n=2)


@pytest.fixture(scope="session")
def C3():
    return builtin("group_Cn", n=3)


def make_cyclic_algebra(field, n, gen_label):
    labels = tuple("1" if k == 0 else (gen_label if k == 1 else f"{gen_label}{k}")
                   for k in range(n))
    mult = linalg.obj_zeros((n, n, n), field)
    for i in range(n):
        for j in range(n):
            mult[i, j, (i + j) % n] = field.one
    unit = linalg.obj_zeros(n, field)
    unit[0] = field.one
    return Algebra(Space(labels), mult, unit)


@pytest.fixture(scope="session")
def h2_datum(field1):
    B = make_cyclic_algebra(field1, 2, "t")
    F = linalg.obj_array([[1, 0], [0, -1]], field1)
    c = linalg.obj_array([0, 1], field1)
    return H2Datum(B, F, c)


@pytest.fixture(scope="session")
def h2_system(h2_datum):
    res = check_h2_datum(h2_datum)
    assert res.ok
    return res.system


@pytest.fixture(scope="session")
def h2_product(h2_system):
    return build_crossed_product(h2_system)


@pytest.fixture(scope="session")
def h3_datum(field3):
    q = field3.root()
    B = make_cyclic_algebra(field3, 3, "s")
    F = linalg.obj_zeros((3, 3), field3)
    F[0, 0] = field3.one
    F[1, 1] = q
    F[2, 2] = q * q
    G = linalg.mat_mul(F, F)
    u1 = linalg.obj_array([0, 1, 0], field3)
    u2 = linalg.obj_array([0, 0, 1], field3)
    v1 = linalg.obj_array([1, 0, 0], field3)
    v2 = linalg.obj_zeros(3, field3)
    v2[0] = q
    return H3Datum(B, F, G, u1, u2, v1, v2)


@pytest.fixture(scope="session")
def h3_system(h3_datum):
    res = check_h3_datum(h3_datum)
    assert res.ok
    return res.system


@pytest.fixture(scope="session")
def h3_product(h3_system):
    return build_crossed_product(h3_system)


@pytest.fixture(scope="session")
def morita_h2(h2_product):
    from coquasi.cleft import build_morita
    return build_morita(h2_product.underlying)


@pytest.fixture(scope="session")
def morita_h3(h3_product):
    from coquasi.cleft import build_morita
    return build_morita(h3_product.underlying)


@pytest.fixture(scope="session")
def galois_h2(h2_product):
    from coquasi.comodule import galois_can
    return galois_can(h2_product.underlying)


@pytest.fixture(scope="session")
def galois_h3(h3_product):
    from coquasi.comodule import galois_can
    return galois_can(h3_product.underlying)


def basis_of(space_obj, label, field):
    v = linalg.obj_zeros(space_obj.dim, field)
    v[space_obj.labels.index(label)] = field.one
    return v


@pytest.fixture(scope="session")
def H4(field1):
    """The smallest noncommutative, non-cocommutative Hopf algebra: generators
    g, x with g^2 = 1, x^2 = 0, xg = -gx, the grouplike g and the (1, g)-skew
    primitive x.  An ordinary Hopf algebra, but its comultiplication is not
    diagonal, so it drives every Sweedler code path that the grouplike
    fixtures cannot."""
    from coquasi.linear import Coalgebra, Functional
    from coquasi.structures import CoquasiHopf

    F = field1
    sp = Space(("1", "g", "x", "gx"))
    one, g, x, gx = 0, 1, 2, 3
    mult = linalg.obj_zeros((4, 4, 4), F)
    for i in range(4):
        mult[one, i, i] = F.one
        if i != one:
            mult[i, one, i] = F.one
    mult[g, g, one] = F.one
    mult[g, x, gx] = F.one
    mult[g, gx, x] = F.one
    mult[x, g, gx] = F.scalar(-1)
    mult[gx, g, x] = F.scalar(-1)
    unit = linalg.obj_zeros(4, F)
    unit[one] = F.one
    comult = linalg.obj_zeros((4, 4, 4), F)
    comult[one, one, one] = F.one
    comult[g, g, g] = F.one
    comult[x, x, one] = F.one
    comult[x, g, x] = F.one
    comult[gx, gx, g] = F.one
    comult[gx, one, gx] = F.one
    counit = linalg.obj_zeros(4, F)
    counit[one] = F.one
    counit[g] = F.one
    om = linalg.obj_zeros((4, 4, 4), F)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                om[i, j, k] = counit[i] * counit[j] * counit[k]
    S = linalg.obj_zeros((4, 4), F)
    S[one, one] = F.one
    S[g, g] = F.one
    S[gx, x] = F.scalar(-1)   # S(x) = -gx
    S[x, gx] = F.one          # S(gx) = x
    return CoquasiHopf(Coalgebra(sp, comult, counit), mult, unit,
                       Functional((sp,) * 3, om), S,
                       Functional((sp,), counit.copy()),
                       Functional((sp,), counit.copy()),
                       omega_inv=Functional((sp,) * 3, om.copy()))
