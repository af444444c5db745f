"""Finite-dimensional spaces, coalgebras, algebras, functionals, and the
convolution calculus they support.

Conventions for structure tensors (all numpy object arrays of Scalar):

* comult[i, a, b]  = coefficient of e_a (x) e_b in Delta(e_i)
* mult[i, j, k]    = coefficient of e_k in e_i * e_j
* linear map M     : matrix of shape (target_dim, source_dim)
* functional arity k, valued in an algebra R: array (d1, ..., dk, dim R);
  scalar-valued functionals drop the trailing axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .cyclotomic import FieldSpec, Scalar
from .errors import ArityMismatch, NotInvertible
from .report import Report


@dataclass(frozen=True)
class Space:
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def tensor(self, other: "Space") -> "Space":
        return Space(tuple(f"{a}⊗{b}" for a in self.labels for b in other.labels))

    def dual(self) -> "Space":
        return Space(tuple(f"{l}*" for l in self.labels))

    def format(self, vec: np.ndarray) -> str:
        terms = []
        for i, c in enumerate(vec):
            if not c:
                continue
            cs = repr(c)
            if cs == "1":
                terms.append(self.labels[i])
            elif cs == "-1":
                terms.append(f"-{self.labels[i]}")
            else:
                pref = f"({cs})" if ("+" in cs or " - " in cs) else cs
                terms.append(f"{pref}·{self.labels[i]}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def space(*labels: str) -> Space:
    return Space(tuple(labels))


class LinMap:
    """A linear map stored as a dense target x source matrix."""

    def __init__(self, source: Space, target: Space, matrix: np.ndarray):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError("matrix shape does not match source/target")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, vec: np.ndarray) -> np.ndarray:
        return linalg.mat_vec(self.matrix, vec)

    def compose(self, other: "LinMap") -> "LinMap":
        return LinMap(other.source, self.target, linalg.mat_mul(self.matrix, other.matrix))

    @classmethod
    def identity(cls, sp: Space, field: FieldSpec) -> "LinMap":
        return cls(sp, sp, linalg.obj_eye(sp.dim, field))


class Coalgebra:
    """A coassociative counital coalgebra given by structure constants."""

    def __init__(self, space: Space, comult: np.ndarray, counit: np.ndarray):
        d = space.dim
        if comult.shape != (d, d, d) or counit.shape != (d,):
            raise ValueError("comult/counit shape mismatch")
        self.space = space
        self.comult = comult
        self.counit = counit
        self._terms_cache: dict[tuple[int, int], list[tuple[tuple[int, ...], Scalar]]] = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    def field(self) -> FieldSpec:
        return self.counit[0].spec

    def comult_terms(self, i: int) -> list[tuple[int, int, Scalar]]:
        return [(a, b, v) for (a, b), v in linalg.nonzero_items(self.comult[i])]

    def sweedler_terms(self, i: int, k: int) -> list[tuple[tuple[int, ...], Scalar]]:
        """Sparse Sweedler legs of a basis element: [(index tuple, coeff)]."""
        if k < 1:
            raise ValueError("need at least one leg")
        key = (i, k)
        cached = self._terms_cache.get(key)
        if cached is not None:
            return cached
        if k == 1:
            out = [((i,), self.field().one)]
        else:
            out = []
            for a, b, v in self.comult_terms(i):
                for rest, w in self.sweedler_terms(b, k - 1):
                    out.append(((a,) + rest, v * w))
        self._terms_cache[key] = out
        return out

    def sweedler_vec_terms(self, vec: np.ndarray, k: int):
        for i, c in enumerate(vec):
            if not c:
                continue
            for idx, v in self.sweedler_terms(i, k):
                yield idx, c * v

    def is_grouplike_basis(self) -> bool:
        """True when every basis element is grouplike (diagonal comult)."""
        f = self.field()
        for i in range(self.dim):
            for (a, b), v in linalg.nonzero_items(self.comult[i]):
                if a != i or b != i or v != f.one:
                    return False
            if self.counit[i] != f.one:
                return False
        return True


def sweedler(c: Coalgebra, element: np.ndarray, legs: int) -> np.ndarray:
    """Iterated comultiplication of an element as a dense rank-`legs` tensor."""
    field = c.field()
    out = linalg.obj_zeros((c.dim,) * legs, field)
    for idx, v in c.sweedler_vec_terms(element, legs):
        out[idx] = out[idx] + v
    return out


def check_coalgebra(c: Coalgebra) -> Report:
    rep = Report()
    f = c.field()
    d = c.dim
    lab = c.space.labels
    for i in range(d):
        # coassociativity via both leg expansions
        left = linalg.obj_zeros((d, d, d), f)
        for (a, b), v in linalg.nonzero_items(c.comult[i]):
            for (x, y), w in linalg.nonzero_items(c.comult[a]):
                left[x, y, b] = left[x, y, b] + v * w
        right = linalg.obj_zeros((d, d, d), f)
        for (a, b), v in linalg.nonzero_items(c.comult[i]):
            for (x, y), w in linalg.nonzero_items(c.comult[b]):
                right[a, x, y] = right[a, x, y] + v * w
        if not linalg.is_zero(left - right):
            rep.fail("coassociativity", (lab[i],))
        lvec = linalg.obj_zeros(d, f)
        rvec = linalg.obj_zeros(d, f)
        for (a, b), v in linalg.nonzero_items(c.comult[i]):
            lvec[b] = lvec[b] + v * c.counit[a]
            rvec[a] = rvec[a] + v * c.counit[b]
        unit_i = linalg.obj_zeros(d, f)
        unit_i[i] = f.one
        if not linalg.is_zero(lvec - unit_i):
            rep.fail("counit-left", (lab[i],))
        if not linalg.is_zero(rvec - unit_i):
            rep.fail("counit-right", (lab[i],))
    return rep


def tensor_power_coalgebra(c: Coalgebra, k: int) -> Coalgebra:
    """The k-fold tensor-product coalgebra with interleaved comultiplication."""
    f = c.field()
    d = c.dim
    sp = c.space
    for _ in range(k - 1):
        sp = sp.tensor(c.space)
    dim = d ** k
    comult = linalg.obj_zeros((dim, dim, dim), f)
    counit = linalg.obj_zeros(dim, f)
    for idx in np.ndindex(*(d,) * k):
        flat = _flatten_index(idx, d)
        val = f.one
        for i in idx:
            val = val * c.counit[i]
        counit[flat] = val
        # product over legs of Delta(e_{i_j}); accumulate sparse combinations
        combos: list[tuple[tuple[int, ...], tuple[int, ...], Scalar]] = [((), (), f.one)]
        for i in idx:
            new = []
            for a_part, b_part, v in combos:
                for a, b, w in c.comult_terms(i):
                    new.append((a_part + (a,), b_part + (b,), v * w))
            combos = new
        for a_part, b_part, v in combos:
            comult[flat, _flatten_index(a_part, d), _flatten_index(b_part, d)] = (
                comult[flat, _flatten_index(a_part, d), _flatten_index(b_part, d)] + v)
    return Coalgebra(sp, comult, counit)


def _flatten_index(idx: tuple[int, ...], d: int) -> int:
    out = 0
    for i in idx:
        out = out * d + i
    return out


class Algebra:
    """An associative unital algebra given by structure constants."""

    def __init__(self, space: Space, mult: np.ndarray, unit: np.ndarray):
        d = space.dim
        if mult.shape != (d, d, d) or unit.shape != (d,):
            raise ValueError("mult/unit shape mismatch")
        self.space = space
        self.mult = mult
        self.unit = unit

    @property
    def dim(self) -> int:
        return self.space.dim

    def field(self) -> FieldSpec:
        return self.unit[0].spec

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        f = self.field()
        out = linalg.obj_zeros(self.dim, f)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    out = out + (a * b) * self.mult[i, j]
        return out

    def basis_vec(self, i: int) -> np.ndarray:
        v = linalg.obj_zeros(self.dim, self.field())
        v[i] = self.field().one
        return v

    def inverse_of(self, x: np.ndarray):
        """Two-sided inverse of x, or None."""
        f = self.field()
        d = self.dim
        left = linalg.obj_zeros((d, d), f)   # left[t, s]: coeff of e_t in x * e_s
        right = linalg.obj_zeros((d, d), f)
        for i, a in enumerate(x):
            if not a:
                continue
            for s in range(d):
                for t in range(d):
                    left[t, s] = left[t, s] + a * self.mult[i, s, t]
                    right[t, s] = right[t, s] + a * self.mult[s, i, t]
        y = linalg.solve(left, self.unit, f)
        if y is None:
            return None
        z = linalg.solve(right, self.unit, f)
        if z is None:
            return None
        if not linalg.is_zero(y - z):
            return None
        return y


def check_algebra(a: Algebra) -> Report:
    rep = Report()
    f = a.field()
    lab = a.space.labels
    d = a.dim
    for i in range(d):
        ei = a.basis_vec(i)
        if not linalg.is_zero(a.mul(a.unit, ei) - ei):
            rep.fail("unit-left", (lab[i],))
        if not linalg.is_zero(a.mul(ei, a.unit) - ei):
            rep.fail("unit-right", (lab[i],))
    for i in range(d):
        for j in range(d):
            ij = a.mult[i, j]
            for k in range(d):
                lhs = a.mul(ij, a.basis_vec(k))
                rhs = a.mul(a.basis_vec(i), a.mult[j, k])
                if not linalg.is_zero(lhs - rhs):
                    rep.fail("associativity", (lab[i], lab[j], lab[k]))
    return rep


def scalar_algebra(field: FieldSpec) -> Algebra:
    sp = space("1")
    mult = linalg.obj_zeros((1, 1, 1), field)
    mult[0, 0, 0] = field.one
    unit = linalg.obj_zeros(1, field)
    unit[0] = field.one
    return Algebra(sp, mult, unit)


class Functional:
    """A multilinear functional on a tensor power, optionally valued in an algebra.

    Scalar-valued: values shape (d1, ..., dk).  Algebra-valued: trailing axis
    of length dim(target).
    """

    def __init__(self, spaces: tuple[Space, ...], values: np.ndarray, target: Algebra | None = None):
        dims = tuple(sp.dim for sp in spaces)
        expect = dims + ((target.dim,) if target is not None else ())
        if values.shape != expect:
            raise ArityMismatch(f"functional values shape {values.shape}, expected {expect}")
        self.spaces = spaces
        self.values = values
        self.target = target

    @property
    def arity(self) -> int:
        return len(self.spaces)

    def field(self) -> FieldSpec:
        return self.values.flat[0].spec

    def __call__(self, *indices: int):
        return self.values[indices]

    def scalar_at(self, *indices: int) -> Scalar:
        if self.target is not None:
            raise ArityMismatch("algebra-valued functional has no scalar values")
        return self.values[indices]


def apply_functional(f: Functional, tensor: np.ndarray):
    """Contract an element of the tensor-power space against the functional."""
    dims = tuple(sp.dim for sp in f.spaces)
    if tensor.shape != dims:
        raise ArityMismatch(f"tensor shape {tensor.shape}, functional expects {dims}")
    fld = f.field()
    if f.target is None:
        out = fld.zero
        for idx, v in linalg.nonzero_items(tensor):
            out = out + v * f.values[idx]
        return out
    out = linalg.obj_zeros(f.target.dim, fld)
    for idx, v in linalg.nonzero_items(tensor):
        out = out + v * f.values[idx]
    return out


def functional_unit(c_spaces: tuple[Space, ...], coalgebras: tuple[Coalgebra, ...],
                    target: Algebra | None, field: FieldSpec) -> Functional:
    """The convolution unit (counit tensor unit of the target) as a Functional."""
    dims = tuple(sp.dim for sp in c_spaces)
    if target is None:
        vals = linalg.obj_zeros(dims, field)
        for idx in np.ndindex(*dims):
            v = field.one
            for c, i in zip(coalgebras, idx):
                v = v * c.counit[i]
            vals[idx] = v
        return Functional(c_spaces, vals, None)
    vals = linalg.obj_zeros(dims + (target.dim,), field)
    for idx in np.ndindex(*dims):
        v = field.one
        for c, i in zip(coalgebras, idx):
            v = v * c.counit[i]
        for t, u in enumerate(target.unit):
            if u:
                vals[idx + (t,)] = v * u
    return Functional(c_spaces, vals, target)


def convolve_functionals(phi: Functional, psi: Functional,
                         coalgebras: tuple[Coalgebra, ...]) -> Functional:
    """Convolution product legwise: (phi * psi)(h...) = phi(h..._1) psi(h..._2)."""
    if phi.spaces != psi.spaces or phi.arity != len(coalgebras):
        raise ArityMismatch("convolution operands do not match")
    f = phi.field()
    dims = tuple(sp.dim for sp in phi.spaces)
    target = phi.target if phi.target is not None else psi.target
    if phi.target is not psi.target and not (phi.target is None and psi.target is None):
        raise ArityMismatch("mixed-target convolution unsupported; lift scalars first")
    shape = dims + ((target.dim,) if target is not None else ())
    vals = linalg.obj_zeros(shape, f)
    for idx in np.ndindex(*dims):
        combos: list[tuple[tuple[int, ...], tuple[int, ...], Scalar]] = [((), (), f.one)]
        for c, i in zip(coalgebras, idx):
            new = []
            for a_part, b_part, v in combos:
                for a, b, w in c.comult_terms(i):
                    new.append((a_part + (a,), b_part + (b,), v * w))
            combos = new
        if target is None:
            acc = f.zero
            for a_part, b_part, v in combos:
                acc = acc + v * phi.values[a_part] * psi.values[b_part]
            vals[idx] = acc
        else:
            acc = linalg.obj_zeros(target.dim, f)
            for a_part, b_part, v in combos:
                acc = acc + v * target.mul(phi.values[a_part], psi.values[b_part])
            for t in range(target.dim):
                vals[idx + (t,)] = acc[t]
    return Functional(phi.spaces, vals, target)


def functional_convolution_inverse(phi: Functional, coalgebras: tuple[Coalgebra, ...]) -> Functional:
    """Two-sided convolution inverse of a functional, by exact linear solve.

    Both one-sided systems must be solvable with equal solutions, otherwise
    NotInvertible is raised with a diagnostic.
    """
    f = phi.field()
    dims = tuple(sp.dim for sp in phi.spaces)
    target = phi.target
    tdim = target.dim if target is not None else 1
    ncoef = int(np.prod(dims)) * tdim

    def phi_vec(idx):
        if target is None:
            v = linalg.obj_zeros(1, f)
            v[0] = phi.values[idx]
            return v
        return phi.values[idx]

    mult = target.mult if target is not None else scalar_algebra(f).mult
    unit = target.unit if target is not None else scalar_algebra(f).unit

    right = linalg.obj_zeros((ncoef, ncoef), f)
    left = linalg.obj_zeros((ncoef, ncoef), f)
    rhs = linalg.obj_zeros(ncoef, f)
    for idx in np.ndindex(*dims):
        combos: list[tuple[tuple[int, ...], tuple[int, ...], Scalar]] = [((), (), f.one)]
        for c, i in zip(coalgebras, idx):
            new = []
            for a_part, b_part, v in combos:
                for a, b, w in c.comult_terms(i):
                    new.append((a_part + (a,), b_part + (b,), v * w))
            combos = new
        eps = f.one
        for c, i in zip(coalgebras, idx):
            eps = eps * c.counit[i]
        for t in range(tdim):
            row = _flat_multi(idx, dims) * tdim + t
            rhs[row] = eps * unit[t]
        row_base = _flat_multi(idx, dims) * tdim
        for a_part, b_part, v in combos:
            pa = phi_vec(a_part)
            pb = phi_vec(b_part)
            col_b = _flat_multi(b_part, dims) * tdim
            col_a = _flat_multi(a_part, dims) * tdim
            for r in range(tdim):
                for s in range(tdim):
                    # right system: phi * psi = unit; unknown psi[b_part, s]
                    if pa[r]:
                        for t in range(tdim):
                            if mult[r, s, t]:
                                right[row_base + t, col_b + s] = (
                                    right[row_base + t, col_b + s] + v * pa[r] * mult[r, s, t])
                    # left system: psi * phi = unit; unknown psi[a_part, s]
                    if pb[r]:
                        for t in range(tdim):
                            if mult[s, r, t]:
                                left[row_base + t, col_a + s] = (
                                    left[row_base + t, col_a + s] + v * pb[r] * mult[s, r, t])
    x_right = linalg.solve(right, rhs, f)
    x_left = linalg.solve(left, rhs, f)
    if x_right is None and x_left is None:
        raise NotInvertible("neither one-sided convolution inverse exists")
    if x_right is None:
        raise NotInvertible("left inverse exists but no right inverse")
    if x_left is None:
        raise NotInvertible("right inverse exists but no left inverse")
    if not linalg.is_zero(x_right - x_left):
        raise NotInvertible("one-sided inverses exist but differ")
    shape = dims + ((tdim,) if target is not None else ())
    vals = x_right.reshape(shape)
    return Functional(phi.spaces, vals, target)


def _flat_multi(idx: tuple[int, ...], dims: tuple[int, ...]) -> int:
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out


# -- convolution on plain linear maps C -> A ---------------------------------

def convolution_product(phi: np.ndarray, psi: np.ndarray, c: Coalgebra, a: Algebra) -> np.ndarray:
    """(phi psi)(h) = phi(h_1) psi(h_2), with maps as target x source matrices."""
    f = a.field()
    out = linalg.obj_zeros((a.dim, c.dim), f)
    for i in range(c.dim):
        acc = linalg.obj_zeros(a.dim, f)
        for x, y, v in c.comult_terms(i):
            acc = acc + v * a.mul(phi[:, x], psi[:, y])
        out[:, i] = acc
    return out


def convolution_unit(c: Coalgebra, a: Algebra) -> np.ndarray:
    f = a.field()
    out = linalg.obj_zeros((a.dim, c.dim), f)
    for i in range(c.dim):
        out[:, i] = c.counit[i] * a.unit
    return out


def convolution_inverse(phi: np.ndarray, c: Coalgebra, a: Algebra) -> np.ndarray:
    """Two-sided convolution inverse of a map C -> A; NotInvertible otherwise."""
    f = a.field()
    n = a.dim * c.dim

    def flat(s, i):
        return i * a.dim + s

    right = linalg.obj_zeros((n, n), f)
    left = linalg.obj_zeros((n, n), f)
    rhs = linalg.obj_zeros(n, f)
    for i in range(c.dim):
        for t in range(a.dim):
            rhs[flat(t, i)] = c.counit[i] * a.unit[t]
        for x, y, v in c.comult_terms(i):
            for r in range(a.dim):
                pr = phi[r, x]
                ql = phi[r, y]
                for s in range(a.dim):
                    for t in range(a.dim):
                        if pr and a.mult[r, s, t]:
                            right[flat(t, i), flat(s, y)] = (
                                right[flat(t, i), flat(s, y)] + v * pr * a.mult[r, s, t])
                        if ql and a.mult[s, r, t]:
                            left[flat(t, i), flat(s, x)] = (
                                left[flat(t, i), flat(s, x)] + v * ql * a.mult[s, r, t])
    xr = linalg.solve(right, rhs, f)
    xl = linalg.solve(left, rhs, f)
    if xr is None and xl is None:
        raise NotInvertible("neither one-sided convolution inverse exists")
    if xr is None:
        raise NotInvertible("left inverse exists but no right inverse")
    if xl is None:
        raise NotInvertible("right inverse exists but no left inverse")
    if not linalg.is_zero(xr - xl):
        raise NotInvertible("one-sided inverses exist but differ")
    out = linalg.obj_zeros((a.dim, c.dim), f)
    for i in range(c.dim):
        for s in range(a.dim):
            out[s, i] = xr[flat(s, i)]
    return out
