"""Dense brute-force reference routines for differential testing.

Nothing here knows the matrix is tridiagonal beyond :func:`to_dense`.
Object arrays of :class:`~fractions.Fraction` are handled exactly
(fraction-free Bareiss for determinants, Gauss-Jordan for inverses);
float64 arrays use partial pivoting. The float routines accept an
optional :class:`~tridkit.scalars.FlopCounter` that is charged for every
scalar operation the vectorized row updates perform.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .errors import IndexOutOfRange, SingularMatrixError

__all__ = ["to_dense", "dense_determinant", "dense_inverse", "submatrix_minor", "identity"]

# A DenseMatrix is a square 2-D numpy array: dtype object for exact entries,
# float64 otherwise.


def _is_exact_array(M):
    return M.dtype == object


def to_dense(A):
    """Full ``n x n`` array of a :class:`~tridkit.core.TridiagonalMatrix`."""
    n = A.n
    if A.mode == "rational":
        M = np.empty((n, n), dtype=object)
        M[...] = Fraction(0)
        conv = Fraction
    else:
        M = np.zeros((n, n), dtype=np.float64)
        conv = float
    for i in range(n):
        M[i, i] = conv(A.d[i])
    for i in range(n - 1):
        M[i, i + 1] = conv(A.a[i])
        M[i + 1, i] = conv(A.b[i])
    return M


def identity(n, exact=False):
    if not exact:
        return np.eye(n)
    M = np.empty((n, n), dtype=object)
    M[...] = Fraction(0)
    for i in range(n):
        M[i, i] = Fraction(1)
    return M


def _check_square(M):
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {M.shape}")


def dense_determinant(M, counter=None):
    """Determinant of a square array.

    Exact entries: each row is scaled to integers and the result of Bareiss
    elimination is divided by the scale factors. Floats: Gaussian
    elimination with partial pivoting.
    """
    M = np.asarray(M)
    _check_square(M)
    if _is_exact_array(M):
        return _bareiss_det(M)
    return _float_det(M, counter)


def _bareiss_det(M):
    n = M.shape[0]
    rows = []
    scale = Fraction(1)
    for i in range(n):
        row = [Fraction(x) for x in M[i]]
        den = lcm(*(x.denominator for x in row))
        rows.append([int(x * den) for x in row])
        scale *= den
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def _float_det(M, counter):
    A = np.array(M, dtype=np.float64)
    n = A.shape[0]
    det = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(A[k:, k])))
        if A[piv, k] == 0.0:
            return 0.0
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            det = -det
        if k + 1 < n:
            factors = A[k + 1 :, k] / A[k, k]
            A[k + 1 :, k + 1 :] -= np.outer(factors, A[k, k + 1 :])
            if counter is not None:
                m = n - k - 1
                counter.add(m + 2 * m * m)
        det *= A[k, k]
        if counter is not None:
            counter.add(1)
    return det


def dense_inverse(M, counter=None):
    """Gauss-Jordan inverse of a square array.

    Raises
    ------
    SingularMatrixError
        When no nonzero pivot exists in some column.
    """
    M = np.asarray(M)
    _check_square(M)
    if _is_exact_array(M):
        return _exact_inverse(M)
    return _float_inverse(M, counter)


def _exact_inverse(M):
    n = M.shape[0]
    aug = [[Fraction(x) for x in M[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular matrix")
        aug[k], aug[piv] = aug[piv], aug[k]
        pivot = aug[k][k]
        rk = [x / pivot for x in aug[k]]
        aug[k] = rk
        for i in range(n):
            if i == k:
                continue
            factor = aug[i][k]
            if factor != 0:
                aug[i] = [x - factor * y for x, y in zip(aug[i], rk)]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        out[i, :] = aug[i][n:]
    return out


def _float_inverse(M, counter):
    n = M.shape[0]
    aug = np.hstack([np.array(M, dtype=np.float64), np.eye(n)])
    width = 2 * n
    for k in range(n):
        piv = k + int(np.argmax(np.abs(aug[k:, k])))
        if aug[piv, k] == 0.0:
            raise SingularMatrixError("singular matrix")
        if piv != k:
            aug[[k, piv]] = aug[[piv, k]]
        aug[k] /= aug[k, k]
        others = np.arange(n) != k
        aug[others] -= np.outer(aug[others, k], aug[k])
        if counter is not None:
            counter.add(width + 2 * (n - 1) * width)
    return aug[:, n:].copy()


def submatrix_minor(M, lo, hi):
    """Determinant of the principal block with rows/columns ``lo..hi`` (1-based)."""
    M = np.asarray(M)
    n = M.shape[0]
    if not (1 <= lo <= hi <= n):
        raise IndexOutOfRange(f"block {lo}..{hi} outside 1..{n}")
    return dense_determinant(M[lo - 1 : hi, lo - 1 : hi])
