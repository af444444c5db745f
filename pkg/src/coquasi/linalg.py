"""Exact dense linear algebra over a cyclotomic field.

Matrices and tensors are numpy object arrays holding Scalar entries; every
routine here is plain fraction-exact Gauss-Jordan, no pivThresholds, no
floating point anywhere.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import FieldSpec, Scalar


def obj_zeros(shape, field: FieldSpec) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(field.zero)
    return arr


def obj_eye(n: int, field: FieldSpec) -> np.ndarray:
    arr = obj_zeros((n, n), field)
    for i in range(n):
        arr[i, i] = field.one
    return arr


def obj_array(nested, field: FieldSpec) -> np.ndarray:
    """Build an object array from nested lists of things coercible to Scalar."""
    def conv(x):
        if isinstance(x, (list, tuple)):
            return [conv(y) for y in x]
        return field.scalar(x)
    data = conv(nested)
    arr = np.empty(_shape_of(data), dtype=object)
    _fill(arr, data, ())
    return arr


def _shape_of(data):
    shape = []
    cur = data
    while isinstance(cur, list):
        shape.append(len(cur))
        cur = cur[0]
    return tuple(shape)


def _fill(arr, data, idx):
    if isinstance(data, list):
        for i, d in enumerate(data):
            _fill(arr, d, idx + (i,))
    else:
        arr[idx] = data


def nonzero_items(tensor: np.ndarray):
    for idx, v in np.ndenumerate(tensor):
        if v:
            yield idx, v


def is_zero(tensor: np.ndarray) -> bool:
    return not any(bool(v) for v in tensor.flat)


def mat_vec(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.dot(m, v)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.dot(a, b)


def rref(mat: np.ndarray, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    m = mat.copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = None
        for i in range(r, rows):
            if m[i, c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        inv = m[r, c].inverse()
        for j in range(c, cols):
            m[r, j] = m[r, j] * inv
        for i in range(rows):
            if i != r and m[i, c]:
                f = m[i, c]
                for j in range(c, cols):
                    m[i, j] = m[i, j] - f * m[r, j]
                m[i, c] = field.zero
        pivots.append(c)
        r += 1
    return m, pivots


def rank(mat: np.ndarray, field: FieldSpec) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, field)[1])


def solve(a: np.ndarray, b: np.ndarray, field: FieldSpec):
    """One solution x of a @ x = b, or None if inconsistent.

    b may be a vector or a matrix of stacked right-hand columns.
    """
    vec = b.ndim == 1
    rhs = b.reshape(-1, 1) if vec else b
    rows, cols = a.shape
    aug = np.concatenate([a, rhs], axis=1)
    red, pivots = rref(aug, field)
    for c in pivots:
        if c >= cols:
            return None
    x = obj_zeros((cols, rhs.shape[1]), field)
    for r, c in enumerate(pivots):
        for k in range(rhs.shape[1]):
            x[c, k] = red[r, cols + k]
    return x.reshape(-1) if vec else x


def nullspace(a: np.ndarray, field: FieldSpec) -> list[np.ndarray]:
    """Basis of the right kernel of a."""
    rows, cols = a.shape
    if rows == 0:
        return [_unit_vec(cols, i, field) for i in range(cols)]
    red, pivots = rref(a, field)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = obj_zeros(cols, field)
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = -red[r, f]
        basis.append(v)
    return basis


def _unit_vec(n: int, i: int, field: FieldSpec) -> np.ndarray:
    v = obj_zeros(n, field)
    v[i] = field.one
    return v


def invert(a: np.ndarray, field: FieldSpec):
    """Inverse of a square matrix, or None if singular."""
    n, m = a.shape
    if n != m:
        return None
    x = solve(a, obj_eye(n, field), field)
    if x is None:
        return None
    if rank(a, field) < n:
        return None
    return x


def solve_affine(a: np.ndarray, b: np.ndarray, field: FieldSpec):
    """All solutions of a @ x = b as (particular, kernel basis), or None."""
    x0 = solve(a, b, field)
    if x0 is None:
        return None
    return x0, nullspace(a, field)


def coords_in_span(basis: list[np.ndarray], v: np.ndarray, field: FieldSpec):
    """Coordinates of v in the given basis, or None if v is outside the span."""
    if not basis:
        return None if any(bool(x) for x in v.flat) else obj_zeros(0, field)
    mat = np.stack([b.reshape(-1) for b in basis], axis=1)
    return solve(mat, v.reshape(-1), field)


def span_dim(vectors: list[np.ndarray], field: FieldSpec) -> int:
    if not vectors:
        return 0
    mat = np.stack([v.reshape(-1) for v in vectors], axis=0)
    return rank(mat, field)


def independent_subset(vectors: list[np.ndarray], field: FieldSpec) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily from the front."""
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        trial = [vectors[j] for j in chosen] + [v]
        if span_dim(trial, field) == len(trial):
            chosen.append(i)
    return chosen
