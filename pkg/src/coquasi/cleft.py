"""Cleaving systems, the equivalence with crossed products carrying an
invertible cocycle (both directions), and the Morita context of the four Hom
spaces with its connecting maps.

Hom-space elements are stored as (dim A x dim H) matrices of values; every Hom
space gets an explicit basis by solving its colinearity condition, after which
all products and actions become finite structure tensors over those bases and
every axiom is an exhaustive basis check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .comodule import ComoduleAlgebra, Coinvariants, coinvariants
from .crossed import (CrossedProduct, CrossedSystem, build_crossed_product,
                      check_crossed_system)
from .cyclotomic import FieldSpec, Scalar
from .errors import InvalidCleaving, MissingSigmaInverse
from .linear import Functional, convolution_inverse
from .report import Report
from .structures import CoquasiHopf
from .linear import convolve_functionals, functional_unit


class CleavingSystem:
    """A colinear map gamma with partner delta satisfying the cleft identities."""

    def __init__(self, A: ComoduleAlgebra, gamma: np.ndarray, delta: np.ndarray):
        if gamma.shape != (A.dim, A.host.dim) or delta.shape != (A.dim, A.host.dim):
            raise ValueError("gamma/delta shape mismatch")
        self.A = A
        self.gamma = gamma
        self.delta = delta

    def field(self) -> FieldSpec:
        return self.A.field()

    @classmethod
    def normalized(cls, A: ComoduleAlgebra, gamma: np.ndarray, delta: np.ndarray) -> "CleavingSystem":
        """Rescale so the cleaving map sends 1 to 1 (replacement by
        gamma(h) gamma(1)^{-1} and gamma(1) delta(h))."""
        f = A.field()
        H = A.host
        g1 = linalg.obj_zeros(A.dim, f)
        for a, c in enumerate(H.unit):
            if c:
                g1 = g1 + c * gamma[:, a]
        if linalg.is_zero(g1 - A.unit):
            return cls(A, gamma, delta)
        inv = A.as_algebra().inverse_of(g1)
        if inv is None:
            raise InvalidCleaving("gamma(1) is not invertible")
        new_gamma = linalg.obj_zeros(gamma.shape, f)
        new_delta = linalg.obj_zeros(delta.shape, f)
        for h in range(H.dim):
            new_gamma[:, h] = A.mul(gamma[:, h], inv)
            new_delta[:, h] = A.mul(g1, delta[:, h])
        return cls(A, new_gamma, new_delta)

    def gamma_at(self, h_vec: np.ndarray) -> np.ndarray:
        return linalg.mat_vec(self.gamma, h_vec)

    def delta_at(self, h_vec: np.ndarray) -> np.ndarray:
        return linalg.mat_vec(self.delta, h_vec)


def check_cleaving(cs: CleavingSystem) -> Report:
    """Colinearity of gamma, the antipode-twisted coaction of delta, the two
    convolution identities, and invertibility of gamma(1) in the coinvariants."""
    rep = Report()
    A = cs.A
    H = A.host
    if not isinstance(H, CoquasiHopf):
        rep.fail("host-antipode", (), "cleaving needs an antipode on the host")
        return rep
    f = A.field()
    d, dh = A.dim, H.dim
    lab = H.space.labels
    S = H.antipode
    al = H.alpha.values
    be = H.beta.values

    for h in range(dh):
        # rho(gamma(h)) = gamma(h1) (x) h2
        lhs = linalg.obj_zeros((d, dh), f)
        for t, c in enumerate(cs.gamma[:, h]):
            if c:
                for (b, i), v in linalg.nonzero_items(A.coaction[t]):
                    lhs[b, i] = lhs[b, i] + c * v
        rhs = linalg.obj_zeros((d, dh), f)
        for (h1, h2), v in H.sweedler_terms(h, 2):
            for t, c in enumerate(cs.gamma[:, h1]):
                if c:
                    rhs[t, h2] = rhs[t, h2] + v * c
        if not linalg.is_zero(lhs - rhs):
            rep.fail("cleaving-colinear", (lab[h],))

        # rho(delta(h)) = delta(h2) (x) S(h1)
        lhs = linalg.obj_zeros((d, dh), f)
        for t, c in enumerate(cs.delta[:, h]):
            if c:
                for (b, i), v in linalg.nonzero_items(A.coaction[t]):
                    lhs[b, i] = lhs[b, i] + c * v
        rhs = linalg.obj_zeros((d, dh), f)
        for (h1, h2), v in H.sweedler_terms(h, 2):
            for s1, c1 in enumerate(S[:, h1]):
                if c1:
                    for t, c in enumerate(cs.delta[:, h2]):
                        if c:
                            rhs[t, s1] = rhs[t, s1] + v * c1 * c
        if not linalg.is_zero(lhs - rhs):
            rep.fail("cleaving-partner-coaction", (lab[h],))

        # delta(h1) gamma(h2) = alpha(h) 1
        acc = linalg.obj_zeros(d, f)
        for (h1, h2), v in H.sweedler_terms(h, 2):
            acc = acc + v * A.mul(cs.delta[:, h1], cs.gamma[:, h2])
        if not linalg.is_zero(acc - al[h] * A.unit):
            rep.fail("cleaving-delta-gamma", (lab[h],))

        # gamma(h1) beta(h2) delta(h3) = eps(h) 1
        acc = linalg.obj_zeros(d, f)
        for (h1, h2, h3), v in H.sweedler_terms(h, 3):
            w = v * be[h2]
            if w:
                acc = acc + w * A.mul(cs.gamma[:, h1], cs.delta[:, h3])
        if not linalg.is_zero(acc - H.counit[h] * A.unit):
            rep.fail("cleaving-gamma-beta-delta", (lab[h],))

    g1 = cs.gamma_at(H.unit)
    coin = coinvariants(A)
    coords = coin.coords(g1)
    if coords is None:
        rep.fail("cleaving-unit-coinvariant", ("1",))
    else:
        if coin.algebra.inverse_of(coords) is None:
            rep.fail("cleaving-unit-invertible", ("1",))
    return rep


# -- cleft -> crossed ----------------------------------------------------------


def cleft_to_crossed(cs: CleavingSystem) -> CrossedSystem:
    """Recover the weak action and the (invertible) cocycle from a cleaving
    system; the normal-basis map b (x) h -> b gamma(h) is verified to be an
    isomorphism of comodule algebras onto A."""
    rep = check_cleaving(cs)
    if not rep.ok:
        raise InvalidCleaving(rep.summary())
    A = cs.A
    H: CoquasiHopf = A.host.with_twist_f()
    fw, fw_inv = H.twist_f
    f = A.field()
    d, dh = A.dim, H.dim
    S = H.antipode
    be = H.beta.values
    coin = coinvariants(A)
    B = coin.algebra
    db = B.dim

    def to_b(vec: np.ndarray, what: str) -> np.ndarray:
        coords = coin.coords(vec)
        if coords is None:
            raise InvalidCleaving(f"{what} does not land in the coinvariants")
        return coords

    # h . b = beta(h2) [gamma(h1) b] delta(h3)
    action = linalg.obj_zeros((dh, db, db), f)
    for h in range(dh):
        for r in range(db):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2, h3), v in H.sweedler_terms(h, 3):
                w = v * be[h2]
                if w:
                    acc = acc + w * A.mul(A.mul(cs.gamma[:, h1], coin.basis[r]),
                                          cs.delta[:, h3])
            action[h, r] = to_b(acc, "weak action value")

    # sigma(h, g) = beta(h2 g2) [gamma(h1) gamma(g1)] delta(h3 g3)
    sigma = linalg.obj_zeros((dh, dh, db), f)
    for h in range(dh):
        for g in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2, h3), vh in H.sweedler_terms(h, 3):
                for (g1, g2, g3), vg in H.sweedler_terms(g, 3):
                    beta_mid = _beta_of_product(H, h2, g2)
                    coef = vh * vg * beta_mid
                    if not coef:
                        continue
                    gg = A.mul(cs.gamma[:, h1], cs.gamma[:, g1])
                    dlt = _delta_of_product(cs, H, h3, g3)
                    acc = acc + coef * A.mul(gg, dlt)
            sigma[h, g] = to_b(acc, "cocycle value")

    # sigma_inv(h, g) = beta(h2 g2) gamma(h1 g1) f_inv(h3, g3) [delta(g4) delta(h4)]
    sigma_inv = linalg.obj_zeros((dh, dh, db), f)
    for h in range(dh):
        for g in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2, h3, h4), vh in H.sweedler_terms(h, 4):
                for (g1, g2, g3, g4), vg in H.sweedler_terms(g, 4):
                    coef = vh * vg * _beta_of_product(H, h2, g2) * fw_inv.values[h3, g3]
                    if not coef:
                        continue
                    gam = cs.gamma_at(H.mult[h1, g1])
                    dd = A.mul(cs.delta[:, g4], cs.delta[:, h4])
                    acc = acc + coef * A.mul(gam, dd)
            sigma_inv[h, g] = to_b(acc, "cocycle inverse value")

    out = CrossedSystem(B, H, action,
                        Functional((H.space,) * 2, sigma, B),
                        Functional((H.space,) * 2, sigma_inv, B))
    # the two one-sided products must give the convolution unit
    cos = (H.coalgebra,) * 2
    unit2 = functional_unit((H.space,) * 2, cos, B, f)
    if not linalg.is_zero(convolve_functionals(out.sigma, out.sigma_inv, cos).values
                          - unit2.values):
        raise InvalidCleaving("recovered cocycle inverse fails on the right")
    if not linalg.is_zero(convolve_functionals(out.sigma_inv, out.sigma, cos).values
                          - unit2.values):
        raise InvalidCleaving("recovered cocycle inverse fails on the left")
    crep = check_crossed_system(out)
    if not crep.ok:
        raise InvalidCleaving("recovered system fails: " + crep.summary())
    nrep = verify_normal_basis_map(cs, out, coin)
    if not nrep.ok:
        raise InvalidCleaving("normal-basis map fails: " + nrep.summary())
    return out


def _beta_of_product(H: CoquasiHopf, i: int, j: int) -> Scalar:
    f = H.field()
    acc = f.zero
    for t, c in enumerate(H.mult[i, j]):
        if c:
            acc = acc + c * H.beta.values[t]
    return acc


def _delta_of_product(cs: CleavingSystem, H: CoquasiHopf, i: int, j: int) -> np.ndarray:
    return cs.delta_at(H.mult[i, j])


def verify_normal_basis_map(cs: CleavingSystem, crossed: CrossedSystem,
                            coin: Coinvariants) -> Report:
    """nu(b (x) h) = b gamma(h) is a bijective colinear algebra map from the
    crossed product onto A, with inverse a -> beta(a1) [a0 delta(a2)] (x) a3."""
    rep = Report()
    A = cs.A
    H = crossed.host
    f = A.field()
    d, dh, db = A.dim, H.dim, coin.algebra.dim
    prod = build_crossed_product(crossed, validate=False)
    P = prod.underlying

    nu = linalg.obj_zeros((d, db * dh), f)
    for r in range(db):
        for h in range(dh):
            nu[:, r * dh + h] = A.mul(coin.basis[r], cs.gamma[:, h])
    if linalg.rank(nu, f) != d or db * dh != d:
        rep.fail("normal-basis-bijective", ())
        return rep
    for u in range(db * dh):
        for v in range(db * dh):
            lhs = linalg.mat_vec(nu, P.mult[u, v])
            rhs = A.mul(nu[:, u], nu[:, v])
            if not linalg.is_zero(lhs - rhs):
                rep.fail("normal-basis-multiplicative",
                         (P.space.labels[u], P.space.labels[v]))
    for u in range(db * dh):
        lhs = linalg.obj_zeros((d, dh), f)
        for t, c in enumerate(nu[:, u]):
            if c:
                for (b, i), w in linalg.nonzero_items(A.coaction[t]):
                    lhs[b, i] = lhs[b, i] + c * w
        rhs = linalg.obj_zeros((d, dh), f)
        for (b, i), w in linalg.nonzero_items(P.coaction[u]):
            for t, c in enumerate(nu[:, b]):
                if c:
                    rhs[t, i] = rhs[t, i] + w * c
        if not linalg.is_zero(lhs - rhs):
            rep.fail("normal-basis-colinear", (P.space.labels[u],))

    # explicit inverse: a -> beta(a1) [a0 delta(a2)] (x) a3; the left factor is
    # coinvariant only after summing the legs within each output grade
    be = H.beta.values
    nu_inv = linalg.obj_zeros((db * dh, d), f)
    for a_idx in range(d):
        graded = linalg.obj_zeros((d, dh), f)
        for (a0, a1, a2, a3), va in A.coact_terms(a_idx, 3):
            coef = va * be[a1]
            if coef:
                graded[:, a3] = graded[:, a3] + coef * A.mul(A.basis_vec(a0),
                                                             cs.delta[:, a2])
        for a3 in range(dh):
            coords = coin.coords(graded[:, a3])
            if coords is None:
                rep.fail("normal-basis-inverse-coinvariant", (A.space.labels[a_idx],))
                continue
            for r, c in enumerate(coords):
                if c:
                    nu_inv[r * dh + a3, a_idx] = nu_inv[r * dh + a3, a_idx] + c
    if not linalg.is_zero(linalg.mat_mul(nu, nu_inv) - linalg.obj_eye(d, f)):
        rep.fail("normal-basis-inverse-right", ())
    if not linalg.is_zero(linalg.mat_mul(nu_inv, nu) - linalg.obj_eye(db * dh, f)):
        rep.fail("normal-basis-inverse-left", ())
    return rep


# -- crossed -> cleft ----------------------------------------------------------


def crossed_to_cleft(cp: CrossedProduct) -> CleavingSystem:
    """gamma(h) = 1 # h; delta(h) = alpha(h3) sigma_inv(S(h2), h4) # S(h1)."""
    cs = cp.system
    if cs.sigma_inv is None:
        raise MissingSigmaInverse("attach the cocycle inverse first")
    H = cs.host
    if not isinstance(H, CoquasiHopf):
        raise InvalidCleaving("cleaving needs an antipode on the host")
    A = cp.underlying
    f = A.field()
    dh, dr = H.dim, cs.R.dim
    S = H.antipode
    al = H.alpha.values

    gamma = linalg.obj_zeros((A.dim, dh), f)
    for h in range(dh):
        for t, c in enumerate(cs.R.unit):
            if c:
                gamma[t * dh + h, h] = c
    delta = linalg.obj_zeros((A.dim, dh), f)
    for h in range(dh):
        for (h1, h2, h3, h4), v in H.sweedler_terms(h, 4):
            coef = v * al[h3]
            if not coef:
                continue
            rvec = cs.sigma_at(S[:, h2], H.basis_vec(h4), inverse=True)
            for s1, c1 in enumerate(S[:, h1]):
                if not c1:
                    continue
                for t, c in enumerate(rvec):
                    if c:
                        delta[t * dh + s1, h] = delta[t * dh + s1, h] + coef * c1 * c
    out = CleavingSystem(A, gamma, delta)
    rep = check_cleaving(out)
    if not rep.ok:
        raise InvalidCleaving(rep.summary())
    return out


def change_cleaving(cs: CleavingSystem, a_map: np.ndarray) -> CleavingSystem:
    """New system gamma'(h) = a_inv(h1) gamma(h2), delta'(h) = delta(h1) a(h2)
    for a convolution-invertible coinvariant-valued map given by its values in
    A coordinates."""
    A = cs.A
    H = A.host
    f = A.field()
    a_inv = convolution_inverse(a_map, H.coalgebra, A.as_algebra())
    d, dh = A.dim, H.dim
    gamma = linalg.obj_zeros((d, dh), f)
    delta = linalg.obj_zeros((d, dh), f)
    for h in range(dh):
        for (h1, h2), v in H.sweedler_terms(h, 2):
            gamma[:, h] = gamma[:, h] + v * A.mul(a_inv[:, h1], cs.gamma[:, h2])
            delta[:, h] = delta[:, h] + v * A.mul(cs.delta[:, h1], a_map[:, h2])
    return CleavingSystem(A, gamma, delta)


def extract_cleaving_witness(cs: CleavingSystem, cs2: CleavingSystem) -> np.ndarray:
    """The connecting map a(h) = gamma'(h1) beta(h2) delta(h3) between two
    cleaving systems on the same comodule algebra."""
    A = cs.A
    H: CoquasiHopf = A.host
    f = A.field()
    be = H.beta.values
    out = linalg.obj_zeros((A.dim, H.dim), f)
    for h in range(H.dim):
        for (h1, h2, h3), v in H.sweedler_terms(h, 3):
            w = v * be[h2]
            if w:
                out[:, h] = out[:, h] + w * A.mul(cs2.gamma[:, h1], cs.delta[:, h3])
    return out


# -- the coalgebra with the adjoint coaction ------------------------------------


@dataclass
class AdjointCoalgebra:
    """H with the right adjoint coaction h -> h2 (x) S(h1) h3, the deformed
    comultiplication, and counit alpha: a coalgebra inside the comodule
    category."""

    host: CoquasiHopf
    coaction: np.ndarray   # (d, d, d): h -> h^[0] (x) h^[1]
    comult: np.ndarray     # (d, d, d)
    counit: np.ndarray     # (d,)


def adjoint_coalgebra(H: CoquasiHopf) -> AdjointCoalgebra:
    f = H.field()
    d = H.dim
    S = H.antipode
    be = H.beta.values
    om = H.omega.values
    om_inv = H.omega_inv.values

    coaction = linalg.obj_zeros((d, d, d), f)
    for h in range(d):
        for (l1, l2, l3), v in H.sweedler_terms(h, 3):
            for s1, c1 in enumerate(S[:, l1]):
                if c1:
                    for t, c in enumerate(H.mult[s1, l3]):
                        if c:
                            coaction[h, l2, t] = coaction[h, l2, t] + v * c1 * c

    comult = linalg.obj_zeros((d, d, d), f)
    for h in range(d):
        for (l1, l2, l3, l4, l5, l6, l7, l8, l9, l10), v in H.sweedler_terms(h, 10):
            coef = v * be[l6]
            if not coef:
                continue
            # omega(S(l2) l4, S(l8), l10)
            first = f.zero
            for s2, c2 in enumerate(S[:, l2]):
                if not c2:
                    continue
                for t, c in enumerate(H.mult[s2, l4]):
                    if not c:
                        continue
                    for s8, c8 in enumerate(S[:, l8]):
                        if c8:
                            first = first + c2 * c * c8 * om[t, s8, l10]
            if not first:
                continue
            # omega_inv(S(l1), l5, S(l7))
            second = f.zero
            for s1, c1 in enumerate(S[:, l1]):
                if not c1:
                    continue
                for s7, c7 in enumerate(S[:, l7]):
                    if c7:
                        second = second + c1 * c7 * om_inv[s1, l5, s7]
            if not second:
                continue
            comult[h, l3, l9] = comult[h, l3, l9] + coef * first * second
    return AdjointCoalgebra(H, coaction, comult, H.alpha.values.copy())


def check_adjoint_coalgebra(adj: AdjointCoalgebra) -> Report:
    """Comodule axioms of the adjoint coaction; coassociativity of the deformed
    comultiplication up to the reassociator of the comodule category; counit
    laws with alpha."""
    rep = Report()
    H = adj.host
    f = H.field()
    d = H.dim
    lab = H.space.labels

    for h in range(d):
        lhs = linalg.obj_zeros((d, d, d), f)
        for (b, i), v in linalg.nonzero_items(adj.coaction[h]):
            for (c, j), w in linalg.nonzero_items(adj.coaction[b]):
                lhs[c, j, i] = lhs[c, j, i] + v * w
        rhs = linalg.obj_zeros((d, d, d), f)
        for (b, i), v in linalg.nonzero_items(adj.coaction[h]):
            for (i1, i2), w in linalg.nonzero_items(H.comult[i]):
                rhs[b, i1, i2] = rhs[b, i1, i2] + v * w
        if not linalg.is_zero(lhs - rhs):
            rep.fail("adjoint-coaction-coassociativity", (lab[h],))
        vec = linalg.obj_zeros(d, f)
        for (b, i), v in linalg.nonzero_items(adj.coaction[h]):
            vec[b] = vec[b] + v * H.counit[i]
        unit_h = linalg.obj_zeros(d, f)
        unit_h[h] = f.one
        if not linalg.is_zero(vec - unit_h):
            rep.fail("adjoint-coaction-counit", (lab[h],))

    om = H.omega.values
    for h in range(d):
        t1 = linalg.obj_zeros((d, d, d), f)
        for (a, c), v in linalg.nonzero_items(adj.comult[h]):
            for (x, y), w in linalg.nonzero_items(adj.comult[a]):
                t1[x, y, c] = t1[x, y, c] + v * w
        phi_t1 = linalg.obj_zeros((d, d, d), f)
        for (a, b, c), v in linalg.nonzero_items(t1):
            for (a0, i), va in linalg.nonzero_items(adj.coaction[a]):
                for (b0, j), vb in linalg.nonzero_items(adj.coaction[b]):
                    for (c0, k), vc in linalg.nonzero_items(adj.coaction[c]):
                        w = v * va * vb * vc * om[i, j, k]
                        if w:
                            phi_t1[a0, b0, c0] = phi_t1[a0, b0, c0] + w
        t2 = linalg.obj_zeros((d, d, d), f)
        for (a, c), v in linalg.nonzero_items(adj.comult[h]):
            for (x, y), w in linalg.nonzero_items(adj.comult[c]):
                t2[a, x, y] = t2[a, x, y] + v * w
        if not linalg.is_zero(phi_t1 - t2):
            rep.fail("adjoint-comult-coassociativity", (lab[h],))

        lvec = linalg.obj_zeros(d, f)
        rvec = linalg.obj_zeros(d, f)
        for (a, c), v in linalg.nonzero_items(adj.comult[h]):
            lvec[c] = lvec[c] + v * adj.counit[a]
            rvec[a] = rvec[a] + v * adj.counit[c]
        unit_h = linalg.obj_zeros(d, f)
        unit_h[h] = f.one
        if not linalg.is_zero(lvec - unit_h):
            rep.fail("adjoint-counit-left", (lab[h],))
        if not linalg.is_zero(rvec - unit_h):
            rep.fail("adjoint-counit-right", (lab[h],))
    return rep


# -- the Morita context ----------------------------------------------------------


@dataclass
class HomSpace:
    """A Hom space with an explicit basis of value matrices (dim A x dim H)."""

    name: str
    basis: list[np.ndarray]
    field: FieldSpec

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, mat: np.ndarray):
        return linalg.coords_in_span([b.reshape(-1) for b in self.basis],
                                     mat.reshape(-1), self.field)


@dataclass
class MoritaContext:
    A: ComoduleAlgebra
    coin: Coinvariants
    adjoint: AdjointCoalgebra
    ring1: HomSpace          # colinear maps out of the adjoint coalgebra
    ring2: HomSpace          # all maps into the coinvariants
    bimod_p: HomSpace        # colinear maps out of H
    bimod_q: HomSpace        # colinear maps out of the antipode-twisted H
    ring1_unit: np.ndarray
    ring2_unit: np.ndarray
    star: object             # raw bilinear maps on value matrices
    conv2: object
    act_p_left: object
    act_p_right: object
    act_q_left: object
    act_q_right: object
    pairing: object
    bracket: object


def _hom_basis_colinear(A: ComoduleAlgebra, coaction_h: np.ndarray, name: str) -> list[np.ndarray]:
    """Basis of maps phi: H -> A with rho_A(phi(h)) = phi(h^[0]) (x) h^[1],
    where the H-side coaction is given as a (d, d, dh) tensor."""
    f = A.field()
    d, dh = A.dim, A.host.dim
    n = d * dh

    def flat(t, h):
        return h * d + t

    rows = []
    for h in range(dh):
        block = linalg.obj_zeros((d, dh, n), f)
        for t in range(d):
            for (b, i), v in linalg.nonzero_items(A.coaction[t]):
                block[b, i, flat(t, h)] = block[b, i, flat(t, h)] + v
        for (a, i), v in linalg.nonzero_items(coaction_h[h]):
            for t in range(d):
                block[t, i, flat(t, a)] = block[t, i, flat(t, a)] - v
        for t in range(d):
            for i in range(dh):
                rows.append(block[t, i])
    basis_flat = linalg.nullspace(np.stack(rows, axis=0), f)
    out = []
    for v in basis_flat:
        mat = linalg.obj_zeros((d, dh), f)
        for h in range(dh):
            for t in range(d):
                mat[t, h] = v[flat(t, h)]
        out.append(mat)
    return out


def build_morita(A: ComoduleAlgebra) -> MoritaContext:
    """Solve the four Hom-space bases and assemble every action, product, and
    connecting map of the context."""
    H = A.host
    if not isinstance(H, CoquasiHopf):
        raise InvalidCleaving("the Morita context needs an antipode on the host")
    f = A.field()
    d, dh = A.dim, H.dim
    S = H.antipode
    al = H.alpha.values
    be = H.beta.values
    om = H.omega.values
    om_inv = H.omega_inv.values
    coin = coinvariants(A)
    adj = adjoint_coalgebra(H)

    # H-side coactions as (dh, dh, dh) tensors
    diag = H.comult.copy()
    twisted = linalg.obj_zeros((dh, dh, dh), f)
    for h in range(dh):
        for (h1, h2), v in H.sweedler_terms(h, 2):
            for s1, c1 in enumerate(S[:, h1]):
                if c1:
                    twisted[h, h2, s1] = twisted[h, h2, s1] + v * c1

    p_basis = _hom_basis_colinear(A, diag, "translation")
    q_basis = _hom_basis_colinear(A, twisted, "antipode-twisted")
    s_basis = _hom_basis_colinear(A, adj.coaction, "adjoint")
    r_basis = []
    for k in range(coin.algebra.dim):
        for h in range(dh):
            mat = linalg.obj_zeros((d, dh), f)
            mat[:, h] = coin.basis[k]
            r_basis.append(mat)

    ring1 = HomSpace("adjoint-hom", s_basis, f)
    ring2 = HomSpace("coinvariant-hom", r_basis, f)
    bimod_p = HomSpace("translation-hom", p_basis, f)
    bimod_q = HomSpace("twisted-hom", q_basis, f)

    ring1_unit = linalg.obj_zeros((d, dh), f)
    for h in range(dh):
        ring1_unit[:, h] = al[h] * A.unit
    ring2_unit = linalg.obj_zeros((d, dh), f)
    for h in range(dh):
        ring2_unit[:, h] = H.counit[h] * A.unit

    def star(s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
        out = linalg.obj_zeros((d, dh), f)
        for h in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (a, b), v in linalg.nonzero_items(adj.comult[h]):
                acc = acc + v * A.mul(s1[:, a], s2[:, b])
            out[:, h] = acc
        return out

    def conv2(r1: np.ndarray, r2: np.ndarray) -> np.ndarray:
        out = linalg.obj_zeros((d, dh), f)
        for h in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2), v in H.sweedler_terms(h, 2):
                acc = acc + v * A.mul(r1[:, h1], r2[:, h2])
            out[:, h] = acc
        return out

    def act_p_left(r: np.ndarray, p: np.ndarray) -> np.ndarray:
        return conv2(r, p)

    def act_p_right(p: np.ndarray, s: np.ndarray) -> np.ndarray:
        # (p s)(h) = p(h1) s(h5) beta(h3) omega(h2, S(h4), h6)
        out = linalg.obj_zeros((d, dh), f)
        for h in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2, h3, h4, h5, h6), v in H.sweedler_terms(h, 6):
                coef = v * be[h3]
                if not coef:
                    continue
                for s4, c4 in enumerate(S[:, h4]):
                    if c4:
                        w = coef * c4 * om[h2, s4, h6]
                        if w:
                            acc = acc + w * A.mul(p[:, h1], s[:, h5])
            out[:, h] = acc
        return out

    def act_q_left(s: np.ndarray, q: np.ndarray) -> np.ndarray:
        # (s q)(h) = s(h2) q(h6) beta(h4) omega_inv(S(h1), h3, S(h5))
        out = linalg.obj_zeros((d, dh), f)
        for h in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2, h3, h4, h5, h6), v in H.sweedler_terms(h, 6):
                coef = v * be[h4]
                if not coef:
                    continue
                for s1, c1 in enumerate(S[:, h1]):
                    if not c1:
                        continue
                    for s5, c5 in enumerate(S[:, h5]):
                        if c5:
                            w = coef * c1 * c5 * om_inv[s1, h3, s5]
                            if w:
                                acc = acc + w * A.mul(s[:, h2], q[:, h6])
            out[:, h] = acc
        return out

    def act_q_right(q: np.ndarray, r: np.ndarray) -> np.ndarray:
        return conv2(q, r)

    def pairing(p: np.ndarray, q: np.ndarray) -> np.ndarray:
        # (p, q)(h) = p(h1) beta(h2) q(h3)
        out = linalg.obj_zeros((d, dh), f)
        for h in range(dh):
            acc = linalg.obj_zeros(d, f)
            for (h1, h2, h3), v in H.sweedler_terms(h, 3):
                w = v * be[h2]
                if w:
                    acc = acc + w * A.mul(p[:, h1], q[:, h3])
            out[:, h] = acc
        return out

    def bracket(q: np.ndarray, p: np.ndarray) -> np.ndarray:
        return conv2(q, p)

    return MoritaContext(A, coin, adj, ring1, ring2, bimod_p, bimod_q,
                         ring1_unit, ring2_unit, star, conv2,
                         act_p_left, act_p_right, act_q_left, act_q_right,
                         pairing, bracket)


def check_morita(ctx: MoritaContext) -> Report:
    """Ring axioms, bimodule axioms, balancedness/bilinearity of the two
    connecting maps, and the two mixed associativity laws, exhaustively on the
    computed bases."""
    rep = Report()
    f = ctx.ring1.field

    def coords_table(op, left: HomSpace, right: HomSpace, target: HomSpace, tag: str):
        table = {}
        for i, x in enumerate(left.basis):
            for j, y in enumerate(right.basis):
                c = target.coords(op(x, y))
                if c is None:
                    rep.fail(f"{tag}-closure", (f"{left.name}[{i}]", f"{right.name}[{j}]"))
                    c = linalg.obj_zeros(target.dim, f)
                table[i, j] = c
        return table

    r1, r2, P, Q = ctx.ring1, ctx.ring2, ctx.bimod_p, ctx.bimod_q
    star_t = coords_table(ctx.star, r1, r1, r1, "ring1")
    conv_t = coords_table(ctx.conv2, r2, r2, r2, "ring2")
    pl_t = coords_table(ctx.act_p_left, r2, P, P, "module-p-left")
    pr_t = coords_table(ctx.act_p_right, P, r1, P, "module-p-right")
    ql_t = coords_table(ctx.act_q_left, r1, Q, Q, "module-q-left")
    qr_t = coords_table(ctx.act_q_right, Q, r2, Q, "module-q-right")
    pair_t = coords_table(ctx.pairing, P, Q, r2, "pairing")
    brk_t = coords_table(ctx.bracket, Q, P, r1, "bracket")
    if not rep.ok:
        return rep

    u1 = ctx.ring1.coords(ctx.ring1_unit)
    u2 = ctx.ring2.coords(ctx.ring2_unit)
    if u1 is None:
        rep.fail("ring1-unit-member", ())
        return rep
    if u2 is None:
        rep.fail("ring2-unit-member", ())
        return rep

    def mix(first, second, i, j, k):
        """coords of second(first(i,j), k) given coordinate tables."""
        out = linalg.obj_zeros(len(next(iter(second.values()))), f)
        for t, c in enumerate(first[i, j]):
            if c:
                out = out + c * second[t, k]
        return out

    def mix_right(first, second, i, j, k):
        """coords of second(i, first(j,k))."""
        out = linalg.obj_zeros(len(next(iter(second.values()))), f)
        for t, c in enumerate(first[j, k]):
            if c:
                out = out + c * second[i, t]
        return out

    def vec_apply(table, coords_left, j):
        out = linalg.obj_zeros(len(next(iter(table.values()))), f)
        for t, c in enumerate(coords_left):
            if c:
                out = out + c * table[t, j]
        return out

    def vec_apply_r(table, i, coords_right):
        out = linalg.obj_zeros(len(next(iter(table.values()))), f)
        for t, c in enumerate(coords_right):
            if c:
                out = out + c * table[i, t]
        return out

    # ring associativity and units
    for i in range(r1.dim):
        for j in range(r1.dim):
            for k in range(r1.dim):
                if not linalg.is_zero(mix(star_t, star_t, i, j, k)
                                      - mix_right(star_t, star_t, i, j, k)):
                    rep.fail("ring1-associativity", (str(i), str(j), str(k)))
    for i in range(r1.dim):
        ei = linalg.obj_zeros(r1.dim, f)
        ei[i] = f.one
        if not linalg.is_zero(vec_apply(star_t, u1, i) - ei):
            rep.fail("ring1-unit-left", (str(i),))
        if not linalg.is_zero(vec_apply_r(star_t, i, u1) - ei):
            rep.fail("ring1-unit-right", (str(i),))
    for i in range(r2.dim):
        for j in range(r2.dim):
            for k in range(r2.dim):
                if not linalg.is_zero(mix(conv_t, conv_t, i, j, k)
                                      - mix_right(conv_t, conv_t, i, j, k)):
                    rep.fail("ring2-associativity", (str(i), str(j), str(k)))
    for i in range(r2.dim):
        ei = linalg.obj_zeros(r2.dim, f)
        ei[i] = f.one
        if not linalg.is_zero(vec_apply(conv_t, u2, i) - ei):
            rep.fail("ring2-unit-left", (str(i),))
        if not linalg.is_zero(vec_apply_r(conv_t, i, u2) - ei):
            rep.fail("ring2-unit-right", (str(i),))

    # bimodule axioms for P
    for i in range(r2.dim):
        for j in range(r2.dim):
            for k in range(P.dim):
                if not linalg.is_zero(mix(conv_t, pl_t, i, j, k)
                                      - mix_right(pl_t, pl_t, i, j, k)):
                    rep.fail("module-p-left-associativity", (str(i), str(j), str(k)))
    for i in range(P.dim):
        for j in range(r1.dim):
            for k in range(r1.dim):
                lhs = mix(pr_t, pr_t, i, j, k)
                rhs = vec_apply_r(pr_t, i, star_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("module-p-right-associativity", (str(i), str(j), str(k)))
    for i in range(r2.dim):
        for j in range(P.dim):
            for k in range(r1.dim):
                lhs = mix(pl_t, pr_t, i, j, k)
                rhs = vec_apply_r(pl_t, i, pr_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("module-p-compatibility", (str(i), str(j), str(k)))
    for i in range(P.dim):
        ei = linalg.obj_zeros(P.dim, f)
        ei[i] = f.one
        if not linalg.is_zero(vec_apply(pl_t, u2, i) - ei):
            rep.fail("module-p-unit-left", (str(i),))
        if not linalg.is_zero(vec_apply_r(pr_t, i, u1) - ei):
            rep.fail("module-p-unit-right", (str(i),))

    # bimodule axioms for Q
    for i in range(r1.dim):
        for j in range(r1.dim):
            for k in range(Q.dim):
                if not linalg.is_zero(mix(star_t, ql_t, i, j, k)
                                      - mix_right(ql_t, ql_t, i, j, k)):
                    rep.fail("module-q-left-associativity", (str(i), str(j), str(k)))
    for i in range(Q.dim):
        for j in range(r2.dim):
            for k in range(r2.dim):
                lhs = mix(qr_t, qr_t, i, j, k)
                rhs = vec_apply_r(qr_t, i, conv_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("module-q-right-associativity", (str(i), str(j), str(k)))
    for i in range(r1.dim):
        for j in range(Q.dim):
            for k in range(r2.dim):
                lhs = mix(ql_t, qr_t, i, j, k)
                rhs = vec_apply_r(ql_t, i, qr_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("module-q-compatibility", (str(i), str(j), str(k)))
    for i in range(Q.dim):
        ei = linalg.obj_zeros(Q.dim, f)
        ei[i] = f.one
        if not linalg.is_zero(vec_apply(ql_t, u1, i) - ei):
            rep.fail("module-q-unit-left", (str(i),))
        if not linalg.is_zero(vec_apply_r(qr_t, i, u2) - ei):
            rep.fail("module-q-unit-right", (str(i),))

    # pairing: ring1-balanced, ring2-bilinear
    for i in range(P.dim):
        for j in range(r1.dim):
            for k in range(Q.dim):
                lhs = mix(pr_t, pair_t, i, j, k)
                rhs = vec_apply_r(pair_t, i, ql_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("pairing-balanced", (str(i), str(j), str(k)))
    for i in range(r2.dim):
        for j in range(P.dim):
            for k in range(Q.dim):
                lhs = mix(pl_t, pair_t, i, j, k)
                rhs = vec_apply_r(conv_t, i, pair_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("pairing-left-linear", (str(i), str(j), str(k)))
    for i in range(P.dim):
        for j in range(Q.dim):
            for k in range(r2.dim):
                lhs = vec_apply(conv_t, pair_t[i, j], k)
                rhs = vec_apply_r(pair_t, i, qr_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("pairing-right-linear", (str(i), str(j), str(k)))

    # bracket: ring2-balanced, ring1-bilinear
    for i in range(Q.dim):
        for j in range(r2.dim):
            for k in range(P.dim):
                lhs = mix(qr_t, brk_t, i, j, k)
                rhs = vec_apply_r(brk_t, i, pl_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("bracket-balanced", (str(i), str(j), str(k)))
    for i in range(r1.dim):
        for j in range(Q.dim):
            for k in range(P.dim):
                lhs = mix(ql_t, brk_t, i, j, k)
                rhs = vec_apply_r(star_t, i, brk_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("bracket-left-linear", (str(i), str(j), str(k)))
    for i in range(Q.dim):
        for j in range(P.dim):
            for k in range(r1.dim):
                lhs = vec_apply(star_t, brk_t[i, j], k)
                rhs = vec_apply_r(brk_t, i, pr_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("bracket-right-linear", (str(i), str(j), str(k)))

    # mixed associativity: (p, q) p' = p [q, p'] and [q, p] q' = q (p, q')
    for i in range(P.dim):
        for j in range(Q.dim):
            for k in range(P.dim):
                lhs = mix(pair_t, pl_t, i, j, k)
                rhs = vec_apply_r(pr_t, i, brk_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("mixed-associativity-pairing", (str(i), str(j), str(k)))
    for i in range(Q.dim):
        for j in range(P.dim):
            for k in range(Q.dim):
                lhs = mix(brk_t, ql_t, i, j, k)
                rhs = vec_apply_r(qr_t, i, pair_t[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("mixed-associativity-bracket", (str(i), str(j), str(k)))
    return rep


@dataclass
class StrictnessResult:
    verdict: str           # "Strict" | "SurjectiveBracketOnly" | "Neither"
    bracket_family: list[tuple[np.ndarray, np.ndarray]] | None   # (q, p) pairs
    pairing_family: list[tuple[np.ndarray, np.ndarray]] | None   # (p, q) pairs
    report: Report


def morita_strictness(ctx: MoritaContext) -> StrictnessResult:
    """Decide surjectivity of the two connecting maps by exact linear algebra
    on their images; extract finite families hitting the two units, and
    cross-check the splitting maps they generate."""
    rep = Report()
    f = ctx.ring1.field
    P, Q, r1, r2 = ctx.bimod_p, ctx.bimod_q, ctx.ring1, ctx.ring2

    def family_hitting(op, left: HomSpace, right: HomSpace, target: HomSpace,
                       unit_mat: np.ndarray):
        images = []
        pairs = []
        for i, x in enumerate(left.basis):
            for j, y in enumerate(right.basis):
                c = target.coords(op(x, y))
                if c is None:
                    return None, False
                images.append(c)
                pairs.append((x, y))
        unit_c = target.coords(unit_mat)
        if unit_c is None:
            return None, False
        mat = np.stack(images, axis=1)
        sol = linalg.solve(mat, unit_c, f)
        if sol is None:
            return None, False
        family = []
        for coef, (x, y) in zip(sol, pairs):
            if coef:
                family.append((coef * x, y))
        return family, True

    brk_family, brk_onto = family_hitting(ctx.bracket, Q, P, r1, ctx.ring1_unit)
    pair_family, pair_onto = family_hitting(ctx.pairing, P, Q, r2, ctx.ring2_unit)

    if brk_onto:
        # splitting cross-check: sum_i xi_i(zeta_i(a)) = a on all of A
        A = ctx.A
        H = A.host
        d, dh = A.dim, H.dim
        be = H.beta.values
        total = linalg.obj_zeros((d, d), f)
        for (qm, pm) in brk_family:
            for a_idx in range(d):
                acc = linalg.obj_zeros(d, f)
                for (a0, a1, a2, a3), va in A.coact_terms(a_idx, 3):
                    coef = va * be[a1]
                    if not coef:
                        continue
                    zeta = A.mul(A.basis_vec(a0), qm[:, a2])
                    acc = acc + coef * A.mul(zeta, pm[:, a3])
                total[:, a_idx] = total[:, a_idx] + acc
        if not linalg.is_zero(total - linalg.obj_eye(d, f)):
            rep.fail("splitting-identity", ())

    if brk_onto and pair_onto:
        verdict = "Strict"
    elif brk_onto:
        verdict = "SurjectiveBracketOnly"
    else:
        verdict = "Neither"
    return StrictnessResult(verdict,
                            brk_family if brk_onto else None,
                            pair_family if pair_onto else None,
                            rep)
