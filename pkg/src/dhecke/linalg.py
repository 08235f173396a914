"""Tiny exact linear algebra over a FieldSpec: rank, RREF, null spaces.

Matrices are tuples of row tuples of Scalars; vectors are tuples of Scalars.
Everything here is desk-scale (n <= a few dozen), so plain Gaussian
elimination is plenty.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import FieldSpec, Scalar

Vector = tuple[Scalar, ...]
Matrix = tuple[Vector, ...]


def zero_vector(fs: FieldSpec, n: int) -> Vector:
    return (fs.zero,) * n


def basis_vector(fs: FieldSpec, n: int, i: int) -> Vector:
    """Unit coefficient vector for v_i (1-indexed)."""
    if not 1 <= i <= n:
        raise ValueError(f"basis index {i} out of range 1..{n}")
    return tuple(fs.one if k == i - 1 else fs.zero for k in range(n))


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return not any(v)


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [inv * x for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[0])


def nullspace(fs: FieldSpec, rows: Sequence[Sequence[Scalar]], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0} for the ncols-column matrix A."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [fs.zero] * ncols
        x[f] = fs.one
        for ri, pc in enumerate(pivots):
            x[pc] = -red[ri][f]
        basis.append(tuple(x))
    return basis


def same_subspace(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    ra = rank(a)
    rb = rank(b)
    if ra != rb:
        return False
    return rank(list(a) + list(b)) == ra
