"""Modules carrying simultaneously an action of the coefficient algebra, a
host coaction, and a cocycle-twisted host action; the passage to relative
modules over the crossed product; the coinvariant projection; and the
equivalence with plain modules over the coefficient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .comodule import RelativeHopfModule, module_coinvariants
from .crossed import CrossedProduct, CrossedSystem, build_crossed_product
from .cyclotomic import FieldSpec
from .errors import MissingSigmaInverse
from .linear import Space
from .report import Report
from .structures import CoquasiHopf


class CoquasiHopfModule:
    """A module-with-coaction over a crossed system: an honest action of R, a
    host coaction, and the twisted host action."""

    def __init__(self, space: Space, r_action: np.ndarray, coaction: np.ndarray,
                 h_action: np.ndarray, system: CrossedSystem):
        d = space.dim
        dr, dh = system.R.dim, system.host.dim
        if r_action.shape != (d, dr, d):
            raise ValueError("module action shape mismatch")
        if coaction.shape != (d, d, dh):
            raise ValueError("module coaction shape mismatch")
        if h_action.shape != (d, dh, d):
            raise ValueError("twisted action shape mismatch")
        self.space = space
        self.r_action = r_action
        self.coaction = coaction
        self.h_action = h_action
        self.system = system

    @property
    def dim(self) -> int:
        return self.space.dim

    def field(self) -> FieldSpec:
        return self.system.field()

    def basis_vec(self, i: int) -> np.ndarray:
        v = linalg.obj_zeros(self.dim, self.field())
        v[i] = self.field().one
        return v

    def act_r(self, m: np.ndarray, r: np.ndarray) -> np.ndarray:
        f = self.field()
        out = linalg.obj_zeros(self.dim, f)
        for i, c in enumerate(m):
            if not c:
                continue
            for j, b in enumerate(r):
                if b:
                    out = out + (c * b) * self.r_action[i, j]
        return out

    def act_h(self, m: np.ndarray, h: np.ndarray) -> np.ndarray:
        f = self.field()
        out = linalg.obj_zeros(self.dim, f)
        for i, c in enumerate(m):
            if not c:
                continue
            for a, b in enumerate(h):
                if b:
                    out = out + (c * b) * self.h_action[i, a]
        return out

    def coact_terms(self, i: int, legs: int):
        """((m0, h1, ..., hk), coeff) sparse iterated coaction terms."""
        if legs == 1:
            return [((b, h), v) for (b, h), v in linalg.nonzero_items(self.coaction[i])]
        out = []
        for idx, v in self.coact_terms(i, legs - 1):
            b, rest = idx[0], idx[1:]
            for (c, j), w in linalg.nonzero_items(self.coaction[b]):
                out.append(((c, j) + rest, v * w))
        return out


def free_hopf_module(cs: CrossedSystem) -> CoquasiHopfModule:
    """R (x) H with translation action, diagonal coaction, and the twisted
    action through the cocycle."""
    f = cs.field()
    H, R = cs.host, cs.R
    dh, dr = H.dim, R.dim
    d = dr * dh
    sig = cs.sigma.values

    def flat(r, h):
        return r * dh + h

    labels = tuple(f"{rl}⊗{hl}" for rl in R.space.labels for hl in H.space.labels)
    sp = Space(labels)
    r_action = linalg.obj_zeros((d, dr, d), f)
    for n in range(dr):
        for a in range(dh):
            for j in range(dr):
                acc = linalg.obj_zeros(d, f)
                for (h1, h2), vh in H.sweedler_terms(a, 2):
                    rvec = R.mul(R.basis_vec(n), cs.weak_action[h1, j])
                    for t, c in enumerate(rvec):
                        if c:
                            acc[flat(t, h2)] = acc[flat(t, h2)] + vh * c
                r_action[flat(n, a), j] = acc
    coaction = linalg.obj_zeros((d, d, dh), f)
    for n in range(dr):
        for a in range(dh):
            for (a1, a2), v in linalg.nonzero_items(H.comult[a]):
                coaction[flat(n, a), flat(n, a1), a2] = v
    h_action = linalg.obj_zeros((d, dh, d), f)
    for n in range(dr):
        for a in range(dh):
            for b in range(dh):
                acc = linalg.obj_zeros(d, f)
                for (h1, h2), vh in H.sweedler_terms(a, 2):
                    for (g1, g2), vg in H.sweedler_terms(b, 2):
                        rvec = R.mul(R.basis_vec(n), sig[h1, g1])
                        hvec = H.mult[h2, g2]
                        for t, c in enumerate(rvec):
                            if not c:
                                continue
                            for s, w in enumerate(hvec):
                                if w:
                                    acc[flat(t, s)] = acc[flat(t, s)] + vh * vg * c * w
                h_action[flat(n, a), b] = acc
    return CoquasiHopfModule(sp, r_action, coaction, h_action, cs)


def check_hopf_module(M: CoquasiHopfModule) -> Report:
    """All defining identities: the plain module laws over R, coaction axioms,
    compatibility of the coaction with both actions, the exchange law, the
    cocycle-twisted associativity of the host action, and unitality."""
    rep = Report()
    cs = M.system
    H, R = cs.host, cs.R
    f = M.field()
    d, dr, dh = M.dim, R.dim, H.dim
    lab = M.space.labels
    labr = R.space.labels
    labh = H.space.labels
    om = H.omega.values
    sig = cs.sigma.values

    for i in range(d):
        if not linalg.is_zero(M.act_r(M.basis_vec(i), R.unit) - M.basis_vec(i)):
            rep.fail("module-unit", (lab[i],))
        if not linalg.is_zero(M.act_h(M.basis_vec(i), H.unit) - M.basis_vec(i)):
            rep.fail("circle-unit", (lab[i],))

    for i in range(d):
        for r in range(dr):
            for s in range(dr):
                lhs = M.act_r(M.r_action[i, r], R.basis_vec(s))
                rhs = M.act_r(M.basis_vec(i), R.mult[r, s])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("module-associativity", (lab[i], labr[r], labr[s]))

    # coaction axioms
    for i in range(d):
        lhs = linalg.obj_zeros((d, dh, dh), f)
        for (b, h), v in linalg.nonzero_items(M.coaction[i]):
            for (c, j), w in linalg.nonzero_items(M.coaction[b]):
                lhs[c, j, h] = lhs[c, j, h] + v * w
        rhs = linalg.obj_zeros((d, dh, dh), f)
        for (b, h), v in linalg.nonzero_items(M.coaction[i]):
            for (h1, h2), w in linalg.nonzero_items(H.comult[h]):
                rhs[b, h1, h2] = rhs[b, h1, h2] + v * w
        if not linalg.is_zero(lhs - rhs):
            rep.fail("coaction-coassociativity", (lab[i],))
        vec = linalg.obj_zeros(d, f)
        for (b, h), v in linalg.nonzero_items(M.coaction[i]):
            vec[b] = vec[b] + v * H.counit[h]
        if not linalg.is_zero(vec - M.basis_vec(i)):
            rep.fail("coaction-counit", (lab[i],))

    # rho(m r) = m0 r (x) m1
    for i in range(d):
        for r in range(dr):
            lhs = linalg.obj_zeros((d, dh), f)
            for t, c in enumerate(M.r_action[i, r]):
                if c:
                    for (b, h), v in linalg.nonzero_items(M.coaction[t]):
                        lhs[b, h] = lhs[b, h] + c * v
            rhs = linalg.obj_zeros((d, dh), f)
            for (m0, m1), v in M.coact_terms(i, 1):
                for t, c in enumerate(M.r_action[m0, r]):
                    if c:
                        rhs[t, m1] = rhs[t, m1] + v * c
            if not linalg.is_zero(lhs - rhs):
                rep.fail("module-colinear", (lab[i], labr[r]))

    # rho(m o h) = m0 o h1 (x) m1 h2
    for i in range(d):
        for a in range(dh):
            lhs = linalg.obj_zeros((d, dh), f)
            for t, c in enumerate(M.h_action[i, a]):
                if c:
                    for (b, h), v in linalg.nonzero_items(M.coaction[t]):
                        lhs[b, h] = lhs[b, h] + c * v
            rhs = linalg.obj_zeros((d, dh), f)
            for (m0, m1), vm in M.coact_terms(i, 1):
                for (h1, h2), vh in H.sweedler_terms(a, 2):
                    vec = M.h_action[m0, h1]
                    hv = H.mult[m1, h2]
                    for t, c in enumerate(vec):
                        if not c:
                            continue
                        for s, w in enumerate(hv):
                            if w:
                                rhs[t, s] = rhs[t, s] + vm * vh * c * w
            if not linalg.is_zero(lhs - rhs):
                rep.fail("circle-colinear", (lab[i], labh[a]))

    # (m o h) r = [m (h1 . r)] o h2
    for i in range(d):
        for a in range(dh):
            for r in range(dr):
                lhs = M.act_r(M.h_action[i, a], R.basis_vec(r))
                rhs = linalg.obj_zeros(d, f)
                for (h1, h2), vh in H.sweedler_terms(a, 2):
                    moved = M.act_r(M.basis_vec(i), cs.weak_action[h1, r])
                    rhs = rhs + vh * M.act_h(moved, H.basis_vec(h2))
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("circle-action-exchange", (lab[i], labh[a], labr[r]))

    # (m o h) o g = [m0 sigma(h1, g1)] o (h2 g2) omega(m1, h3, g3)
    for i in range(d):
        for a in range(dh):
            for b in range(dh):
                lhs = M.act_h(M.h_action[i, a], H.basis_vec(b))
                rhs = linalg.obj_zeros(d, f)
                for (m0, m1), vm in M.coact_terms(i, 1):
                    for (h1, h2, h3), vh in H.sweedler_terms(a, 3):
                        for (g1, g2, g3), vg in H.sweedler_terms(b, 3):
                            coef = vm * vh * vg * om[m1, h3, g3]
                            if not coef:
                                continue
                            moved = M.act_r(M.basis_vec(m0), sig[h1, g1])
                            rhs = rhs + coef * M.act_h(moved, H.mult[h2, g2])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("circle-twisted-associativity", (lab[i], labh[a], labh[b]))
    return rep


# -- passage to relative modules over the crossed product ------------------------


def to_relative_hopf(M: CoquasiHopfModule, cp: CrossedProduct | None = None) -> RelativeHopfModule:
    """m * (r # h) = (m r) o h over the crossed product of the provenance."""
    cs = M.system
    if cp is None:
        cp = build_crossed_product(cs, validate=False)
    A = cp.underlying
    f = M.field()
    d = M.dim
    dh, dr = cs.host.dim, cs.R.dim
    action = linalg.obj_zeros((d, A.dim, d), f)
    for i in range(d):
        for r in range(dr):
            for a in range(dh):
                moved = M.act_r(M.basis_vec(i), cs.R.basis_vec(r))
                action[i, r * dh + a] = M.act_h(moved, cs.host.basis_vec(a))
    return RelativeHopfModule(M.space, action, M.coaction.copy(), A)


def from_relative_hopf(N: RelativeHopfModule, cs: CrossedSystem) -> CoquasiHopfModule:
    """Restrict a module over the crossed product along r # 1 and 1 # h."""
    f = cs.field()
    H, R = cs.host, cs.R
    dh, dr = H.dim, R.dim
    d = N.dim
    one_idx = [i for i, c in enumerate(H.unit) if c][0]
    r_action = linalg.obj_zeros((d, dr, d), f)
    h_action = linalg.obj_zeros((d, dh, d), f)
    for i in range(d):
        for r in range(dr):
            r_action[i, r] = N.action[i, r * dh + one_idx]
        for a in range(dh):
            acc = linalg.obj_zeros(d, f)
            for t, c in enumerate(R.unit):
                if c:
                    acc = acc + c * N.action[i, t * dh + a]
            h_action[i, a] = acc
    return CoquasiHopfModule(N.space, r_action, N.coaction.copy(), h_action, cs)


# -- the coinvariant projection ---------------------------------------------------


def projection_pi(M: CoquasiHopfModule) -> np.ndarray:
    """Pi(m) = beta(m1) (m0 o S(m2)), as a matrix on M."""
    cs = M.system
    H = cs.host
    if not isinstance(H, CoquasiHopf):
        raise ValueError("the projection needs an antipode on the host")
    f = M.field()
    d = M.dim
    S = H.antipode
    be = H.beta.values
    out = linalg.obj_zeros((d, d), f)
    for i in range(d):
        acc = linalg.obj_zeros(d, f)
        for (m0, m1, m2), v in M.coact_terms(i, 2):
            coef = v * be[m1]
            if coef:
                acc = acc + coef * M.act_h(M.basis_vec(m0), S[:, m2])
        out[:, i] = acc
    return out


def check_projection(M: CoquasiHopfModule) -> Report:
    """Idempotence, coinvariance of the image, the module-action exchange law,
    and that the image is exactly the coinvariant subspace."""
    rep = Report()
    cs = M.system
    H: CoquasiHopf = cs.host
    f = M.field()
    d = M.dim
    lab = M.space.labels
    S = H.antipode
    pi = projection_pi(M)

    if not linalg.is_zero(linalg.mat_mul(pi, pi) - pi):
        rep.fail("projection-idempotent", ())
    for i in range(d):
        img = pi[:, i]
        coact = linalg.obj_zeros((d, H.dim), f)
        for t, c in enumerate(img):
            if c:
                for (b, h), v in linalg.nonzero_items(M.coaction[t]):
                    coact[b, h] = coact[b, h] + c * v
        expect = linalg.obj_zeros((d, H.dim), f)
        for t, c in enumerate(img):
            if c:
                for h, u in enumerate(H.unit):
                    if u:
                        expect[t, h] = c * u
        if not linalg.is_zero(coact - expect):
            rep.fail("projection-coinvariant", (lab[i],))
    # Pi(m) r = Pi(m0 (S(m1) . r))
    for i in range(d):
        for r in range(cs.R.dim):
            lhs = M.act_r(pi[:, i], cs.R.basis_vec(r))
            rhs = linalg.obj_zeros(d, f)
            for (m0, m1), v in M.coact_terms(i, 1):
                moved = M.act_r(M.basis_vec(m0), cs.act_vec(S[:, m1], cs.R.basis_vec(r)))
                rhs = rhs + v * linalg.mat_vec(pi, moved)
            if not linalg.is_zero(lhs - rhs):
                rep.fail("projection-action-exchange", (lab[i], cs.R.space.labels[r]))
    coin = module_coinvariants(M.coaction, H)
    img_rank = linalg.span_dim([pi[:, i] for i in range(d)], f)
    both = [pi[:, i] for i in range(d)] + coin
    if img_rank != len(coin) or linalg.span_dim(both, f) != len(coin):
        rep.fail("projection-image", ())
    return rep


# -- the equivalence with plain modules -------------------------------------------


@dataclass
class EquivalenceMaps:
    coin_basis: list[np.ndarray]
    eps_matrix: np.ndarray     # (dim M, dim coin * dim H)
    kappa_matrix: np.ndarray   # (dim coin * dim H, dim M)
    report: Report


def equivalence_maps(M: CoquasiHopfModule) -> EquivalenceMaps:
    """The two mutually inverse maps between the module and its coinvariants
    tensored with the host; both composites are verified to be identities."""
    cs = M.system
    if cs.sigma_inv is None:
        raise MissingSigmaInverse("attach the cocycle inverse first")
    H: CoquasiHopf = cs.host
    f = M.field()
    d = M.dim
    dh = H.dim
    S = H.antipode
    al = H.alpha.values
    coin = module_coinvariants(M.coaction, H)
    nc = len(coin)
    pi = projection_pi(M)

    eps = linalg.obj_zeros((d, nc * dh), f)
    for j, mvec in enumerate(coin):
        for a in range(dh):
            eps[:, j * dh + a] = M.act_h(mvec, H.basis_vec(a))

    rep = Report()
    kappa = linalg.obj_zeros((nc * dh, d), f)
    for i in range(d):
        acc = linalg.obj_zeros((d, dh), f)
        for (m0, m1, m2, m3, m4), v in M.coact_terms(i, 4):
            coef = v * al[m2]
            if not coef:
                continue
            rv = cs.sigma_at(S[:, m1], H.basis_vec(m3), inverse=True)
            moved = linalg.mat_vec(pi, M.act_r(M.basis_vec(m0), rv))
            for t, c in enumerate(moved):
                if c:
                    acc[t, m4] = acc[t, m4] + coef * c
        for a in range(dh):
            coords = linalg.coords_in_span(coin, acc[:, a], f)
            if coords is None:
                rep.fail("equivalence-image-coinvariant", (M.space.labels[i],))
                continue
            for j, c in enumerate(coords):
                kappa[j * dh + a, i] = c

    if not linalg.is_zero(linalg.mat_mul(eps, kappa) - linalg.obj_eye(d, f)):
        rep.fail("equivalence-section", ())
    if not linalg.is_zero(linalg.mat_mul(kappa, eps) - linalg.obj_eye(nc * dh, f)):
        rep.fail("equivalence-retraction", ())
    return EquivalenceMaps(coin, eps, kappa, rep)


def check_free_module_unit_maps(cs: CrossedSystem) -> Report:
    """For the rank-one free module: n -> n (x) 1 into the coinvariants of
    R (x) H and its counit-evaluation partner are mutually inverse, and the
    adjunction triangles hold."""
    rep = Report()
    f = cs.field()
    H, R = cs.host, cs.R
    dh, dr = H.dim, R.dim
    M = free_hopf_module(cs)
    coin = module_coinvariants(M.coaction, H)
    one_idx = [i for i, c in enumerate(H.unit) if c][0]

    # u: R -> coinvariants, r -> r (x) 1
    u = linalg.obj_zeros((len(coin), dr), f)
    for r in range(dr):
        vec = linalg.obj_zeros(M.dim, f)
        vec[r * dh + one_idx] = f.one
        coords = linalg.coords_in_span(coin, vec, f)
        if coords is None:
            rep.fail("unit-map-image", (R.space.labels[r],))
            return rep
        u[:, r] = coords
    # v: coinvariants -> R, sum n_i (x) h_i -> sum n_i eps(h_i)
    v = linalg.obj_zeros((dr, len(coin)), f)
    for j, mvec in enumerate(coin):
        for r in range(dr):
            acc = f.zero
            for a in range(dh):
                acc = acc + mvec[r * dh + a] * H.counit[a]
            v[r, j] = acc
    if not linalg.is_zero(linalg.mat_mul(v, u) - linalg.obj_eye(dr, f)):
        rep.fail("unit-map-retraction", ())
    if not linalg.is_zero(linalg.mat_mul(u, v) - linalg.obj_eye(len(coin), f)):
        rep.fail("unit-map-section", ())

    # triangle: eps_{N (x) H} (u_N (x) id) = id on R (x) H
    tri = linalg.obj_zeros((M.dim, M.dim), f)
    for r in range(dr):
        for a in range(dh):
            vec = linalg.obj_zeros(M.dim, f)
            vec[r * dh + one_idx] = f.one
            tri[:, r * dh + a] = M.act_h(vec, H.basis_vec(a))
    if not linalg.is_zero(tri - linalg.obj_eye(M.dim, f)):
        rep.fail("triangle-free", ())
    # triangle: eps_M restricted to coinvariants at grade 1 is the inclusion
    for j, mvec in enumerate(coin):
        if not linalg.is_zero(M.act_h(mvec, H.unit) - mvec):
            rep.fail("triangle-coinvariant", (str(j),))
    return rep
