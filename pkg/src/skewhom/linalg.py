"""Small dense vectors and matrices over backend scalars.

Vectors are tuples of scalars, matrices are tuples of row tuples; both are
immutable values and every operation is pure.  Dimensions are dynamic and
checked at call time.  Elimination uses exact division with first-nonzero
pivoting: exact backends need no stability pivoting, and a zero-divisor pivot
in a degenerate quadratic ring surfaces as the underlying backend error.

Also home to the two wedge products used by the concrete constructions: the
ordinary 3D cross product and the rank-3 wedge on R^4 defined by the formal
determinant whose symbolic first row carries the sign pattern
``(e1, -e2, e3, e4)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import DimensionError, SingularMatrixError
from .scalars import QuadExt, ScalarBackend

Scalar = Union[Fraction, QuadExt, float, int]
Vec = tuple
Mat = tuple

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vec(entries: Iterable[Scalar]) -> Vec:
    return tuple(entries)


def mat(rows: Iterable[Iterable[Scalar]]) -> Mat:
    return tuple(tuple(row) for row in rows)


def zero_vec(n: int) -> Vec:
    return (_ZERO,) * n


def basis_vec(n: int, i: int) -> Vec:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vec_scale(c: Scalar, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def _zero_test(backend: Optional[ScalarBackend]) -> Callable[[Scalar], bool]:
    if backend is None:
        return lambda x: (not x) if isinstance(x, QuadExt) else x == 0
    return backend.is_zero


def vec_is_zero(u: Vec, backend: Optional[ScalarBackend] = None) -> bool:
    iszero = _zero_test(backend)
    return all(iszero(a) for a in u)


def vec_eq(u: Vec, v: Vec, backend: Optional[ScalarBackend] = None) -> bool:
    return vec_is_zero(vec_sub(u, v), backend)


def identity(n: int) -> Mat:
    return tuple(basis_vec(n, i) for i in range(n))


def zero_mat(rows: int, cols: int) -> Mat:
    return (zero_vec(cols),) * rows


def matrix_unit(n: int, p: int, q: int) -> Mat:
    return tuple(
        tuple(_ONE if (i, j) == (p, q) else _ZERO for j in range(n)) for i in range(n)
    )


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_add(a: Mat, b: Mat) -> Mat:
    _check_same_shape(a, b)
    return tuple(vec_add(ra, rb) for ra, rb in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    _check_same_shape(a, b)
    return tuple(vec_sub(ra, rb) for ra, rb in zip(a, b))


def mat_neg(a: Mat) -> Mat:
    return tuple(vec_neg(row) for row in a)


def mat_scale(c: Scalar, a: Mat) -> Mat:
    return tuple(vec_scale(c, row) for row in a)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if not a or not b or len(a[0]) != len(b):
        raise DimensionError(
            f"cannot multiply {_shape(a)} by {_shape(b)}"
        )
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), _ZERO) for col in bt) for row in a
    )


def mat_vec(a: Mat, x: Vec) -> Vec:
    if not a or len(a[0]) != len(x):
        raise DimensionError(f"cannot apply {_shape(a)} to a vector of length {len(x)}")
    return tuple(sum((c * v for c, v in zip(row, x)), _ZERO) for row in a)


def mat_col(a: Mat, j: int) -> Vec:
    return tuple(row[j] for row in a)


def mat_is_zero(a: Mat, backend: Optional[ScalarBackend] = None) -> bool:
    return all(vec_is_zero(row, backend) for row in a)


def mat_eq(a: Mat, b: Mat, backend: Optional[ScalarBackend] = None) -> bool:
    if _shape(a) != _shape(b):
        return False
    return mat_is_zero(mat_sub(a, b), backend)


def flatten(a: Mat) -> Vec:
    """Row-major entries of a matrix as one vector."""
    return tuple(x for row in a for x in row)


def unflatten(v: Vec, rows: int, cols: int) -> Mat:
    if len(v) != rows * cols:
        raise DimensionError(f"cannot reshape length {len(v)} into {rows}x{cols}")
    return tuple(tuple(v[i * cols + j] for j in range(cols)) for i in range(rows))


def _shape(a: Mat) -> tuple:
    return (len(a), len(a[0]) if a else 0)


def _check_same_shape(a: Mat, b: Mat) -> None:
    if _shape(a) != _shape(b):
        raise DimensionError(f"shapes {_shape(a)} and {_shape(b)} differ")


def _square_dim(a: Mat) -> int:
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError(f"matrix of shape {_shape(a)} is not square")
    return n


def det(a: Mat, backend: Optional[ScalarBackend] = None) -> Scalar:
    """Determinant by exact elimination with first-nonzero pivoting."""
    n = _square_dim(a)
    iszero = _zero_test(backend)
    rows = [list(row) for row in a]
    flip = False
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not iszero(rows[r][col])), None)
        if pivot_row is None:
            return _ZERO
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            flip = not flip
        pivot = rows[col][col]
        for r in range(col + 1, n):
            if iszero(rows[r][col]):
                continue
            factor = rows[r][col] / pivot
            rows[r] = [rows[r][c] - factor * rows[col][c] for c in range(n)]
    out = _ONE
    for i in range(n):
        out = out * rows[i][i]
    return -out if flip else out


def mat_inv(a: Mat, backend: Optional[ScalarBackend] = None) -> Mat:
    """Exact inverse via Gauss-Jordan; raises :class:`SingularMatrixError`."""
    n = _square_dim(a)
    iszero = _zero_test(backend)
    rows = [list(row) + list(basis_vec(n, i)) for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not iszero(rows[r][col])), None)
        if pivot_row is None:
            raise SingularMatrixError(f"matrix has no inverse (pivot column {col})")
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        rows[col] = [x / pivot for x in rows[col]]
        for r in range(n):
            if r == col or iszero(rows[r][col]):
                continue
            factor = rows[r][col]
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


@lru_cache(maxsize=None)
def _mat_pow_cached(a: Mat, exponent: int, backend: Optional[ScalarBackend]) -> Mat:
    if exponent == 0:
        return identity(len(a))
    if exponent < 0:
        return _mat_pow_cached(mat_inv(a, backend), -exponent, backend)
    half = _mat_pow_cached(a, exponent // 2, backend)
    out = mat_mul(half, half)
    if exponent % 2:
        out = mat_mul(out, a)
    return out


def mat_pow(a: Mat, exponent: int, backend: Optional[ScalarBackend] = None) -> Mat:
    """Integer matrix power; negative exponents invert once and cache."""
    _square_dim(a)
    return _mat_pow_cached(mat(a), int(exponent), backend)


def cross3(u: Vec, v: Vec) -> Vec:
    if len(u) != 3 or len(v) != 3:
        raise DimensionError("cross product needs two vectors of length 3")
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _det3(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def wedge3(u: Vec, v: Vec, w: Vec) -> Vec:
    """Ternary wedge of three vectors in R^4.

    Formal expansion of the 4x4 determinant with symbolic first row
    ``(e1, -e2, e3, e4)`` and data rows ``u, v, w``; the sign pattern of that
    row is part of the product's definition, so this is NOT the Euclidean 4D
    cross product.
    """
    for x in (u, v, w):
        if len(x) != 4:
            raise DimensionError("ternary wedge needs three vectors of length 4")

    def minor(col: int) -> Scalar:
        cols = [c for c in range(4) if c != col]
        return _det3(tuple(tuple(row[c] for c in cols) for row in (u, v, w)))

    return (minor(0), minor(1), minor(2), -minor(3))
