"""Explicit inverses of tridiagonal matrices.

For a nonsingular tridiagonal ``A`` with minor tables ``f``, ``g`` and
``p_r = -a_r``, ``q_r = -b_r``::

    alpha_ii = f_{i-1} g_{i+1} / f_n
    alpha_ij = f_{i-1} g_{j+1} / f_n * p_i ... p_{j-1}      (i < j)
    alpha_ij = f_{j-1} g_{i+1} / f_n * q_j ... q_{i-1}      (i > j)

:func:`invert` evaluates this in O(n^2) from the breakdown-free minor
tables. The remaining entry points are independent formulations kept for
cross-checking: a single-entry evaluator, the pivot-ratio recurrence
(:func:`invert_huang`, not breakdown-free), the Kronecker-delta sum form
(:func:`inverse_entry_kumar`) and the Hadamard split ``R o S``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import leading_minors, minor_tables, trailing_minors
from .errors import BreakdownEncountered, DimensionMismatch, IndexOutOfRange, SingularMatrixError
from .scalars import coerce, is_exact

__all__ = [
    "InverseMatrix",
    "SignedOffdiagonals",
    "HadamardFactors",
    "invert",
    "inverse_entry",
    "invert_huang",
    "inverse_entry_kumar",
    "hadamard_factors",
    "hadamard_recombine",
    "zero_structure",
    "is_singular",
]


@dataclass(frozen=True, eq=False)
class InverseMatrix:
    """Dense inverse ``alpha`` (row-major, 0-based) with ``delta = det(A)``.

    ``alpha`` has dtype ``object`` (Fractions) in rational mode and
    ``float64`` otherwise; in scaled mode the entries are formed in scaled
    arithmetic and converted to double at the end.
    """

    n: int
    alpha: np.ndarray
    delta: object

    def __getitem__(self, ij):
        return self.alpha[ij]

    def entry(self, i, j):
        """``alpha_ij`` with 1-based indices."""
        return self.alpha[i - 1, j - 1]

    def __eq__(self, other):
        if not isinstance(other, InverseMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.all(self.alpha == other.alpha))

    def tolist(self):
        return self.alpha.tolist()


class _SegmentedProducts:
    """O(1) range products over a sequence that may contain zeros.

    The sequence is cut at its zeros; within each zero-free run a prefix
    product is kept, so a query is one lookup for zero detection and at
    most one division.
    """

    def __init__(self, values, one):
        self.values = tuple(values)
        self.one = one
        m = len(self.values)
        self._prefix = [None] * m
        self._start = [0] * m
        # _next_zero[k]: smallest index >= k holding a zero, m if none
        self._next_zero = [m] * (m + 1)
        run, start = one, 0
        for k, v in enumerate(self.values):
            if v == 0:
                run, start = one, k + 1
                self._prefix[k] = None
            else:
                run = v if k == start else run * v
                self._prefix[k] = run
            self._start[k] = start
        for k in range(m - 1, -1, -1):
            self._next_zero[k] = k if self.values[k] == 0 else self._next_zero[k + 1]

    def product(self, lo, hi):
        """Product of entries ``lo..hi`` (1-based, inclusive); 1 if empty."""
        if lo > hi:
            return self.one
        if lo < 1 or hi > len(self.values):
            raise IndexOutOfRange(f"range {lo}..{hi} outside 1..{len(self.values)}")
        lo0, hi0 = lo - 1, hi - 1
        if self._next_zero[lo0] <= hi0:
            return self.values[self._next_zero[lo0]]
        total = self._prefix[hi0]
        if lo0 > self._start[hi0]:
            total = total / self._prefix[lo0 - 1]
        return total


@dataclass(frozen=True, eq=False)
class SignedOffdiagonals:
    """``p_r = -a_r`` and ``q_r = -b_r`` with O(1) range products."""

    p: tuple
    q: tuple
    _p_tab: _SegmentedProducts
    _q_tab: _SegmentedProducts

    @classmethod
    def from_matrix(cls, A):
        one = coerce(1, A.mode)
        p = tuple(-x for x in A.a)
        q = tuple(-x for x in A.b)
        return cls(p, q, _SegmentedProducts(p, one), _SegmentedProducts(q, one))

    def range_p(self, lo, hi):
        """``p_lo * ... * p_hi``; 1 when ``lo > hi``."""
        return self._p_tab.product(lo, hi)

    def range_q(self, lo, hi):
        """``q_lo * ... * q_hi``; 1 when ``lo > hi``."""
        return self._q_tab.product(lo, hi)


@dataclass(frozen=True, eq=False)
class HadamardFactors:
    """``R`` (symmetric minor ratios) and ``S`` (off-diagonal products).

    The inverse is the elementwise product ``R * S``.
    """

    R: np.ndarray
    S: np.ndarray
    delta: object
    mode: str = "double"


def _grid(n):
    return np.empty((n, n), dtype=object)


def _finish(grid, mode):
    if mode == "rational":
        return grid
    return np.array([[float(x) for x in row] for row in grid], dtype=np.float64).reshape(grid.shape)


def singular_threshold(f, tol=None):
    """Float-mode singularity bound ``tol * max_i |f_i|``.

    Default ``tol`` is ``n * 2**-52``.
    """
    n = len(f) - 1
    if tol is None:
        tol = n * 2.0**-52
    return tol * max(abs(x) for x in f)


def is_singular(f, singular_tol=None):
    """Zero test for the determinant ``f[-1]`` given the leading minors ``f``."""
    fn = f[-1]
    if is_exact(fn):
        return fn == 0
    if fn == 0:
        return True
    return abs(fn) <= singular_threshold(f, singular_tol)


def _plain_floats(A):
    return A.mode == "double" and all(type(x) is float for x in A.d)


def invert(A, tol=0.0, singular_tol=None):
    """Inverse of a tridiagonal matrix in Theta(n^2) operations.

    Parameters
    ----------
    A : TridiagonalMatrix
    tol : float, optional
        Breakdown threshold for the minor passes (see
        :func:`~tridkit.core.leading_minors`).
    singular_tol : float, optional
        Float modes declare the matrix singular when
        ``|f_n| <= singular_tol * max_i |f_i|``; defaults to ``n * 2**-52``.
        Rational mode tests ``f_n == 0``.

    Returns
    -------
    InverseMatrix

    Raises
    ------
    SingularMatrixError
        If the determinant is (numerically) zero.
    """
    lead = leading_minors(A, tol)
    f = lead.f
    if is_singular(f, singular_tol):
        raise SingularMatrixError(f"singular matrix (det = {f[-1]})")
    g = trailing_minors(A, tol).g
    p = [-x for x in A.a]
    q = [-x for x in A.b]
    if _plain_floats(A):
        alpha = _fill_numpy(f, g, p, q)
    else:
        alpha = _finish(_fill(f, g, p, q), A.mode)
    return InverseMatrix(A.n, alpha, f[-1])


def _fill(f, g, p, q):
    """Row-wise (upper) and column-wise (lower) running-product fill."""
    n = len(f) - 1
    fn = f[n]
    alpha = _grid(n)
    # g[k] holds g_{k+1}, so g_{j+1} is g[j]
    for i in range(1, n + 1):
        fi = f[i - 1]
        alpha[i - 1, i - 1] = fi * g[i] / fn
        run = None
        for j in range(i + 1, n + 1):
            run = p[i - 1] if run is None else run * p[j - 2]
            alpha[i - 1, j - 1] = fi * g[j] / fn * run
    for j in range(1, n + 1):
        fj = f[j - 1]
        run = None
        for i in range(j + 1, n + 1):
            run = q[j - 1] if run is None else run * q[i - 2]
            alpha[i - 1, j - 1] = fj * g[i] / fn * run
    return alpha


def _fill_numpy(f, g, p, q):
    # Same operation order as _fill, so results are bitwise identical.
    n = len(f) - 1
    f = np.asarray(f, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    fn = f[n]
    alpha = np.empty((n, n), dtype=np.float64)
    for i in range(1, n + 1):
        fi = f[i - 1]
        alpha[i - 1, i - 1] = fi * g[i] / fn
        if i < n:
            run = np.cumprod(p[i - 1 : n - 1])
            alpha[i - 1, i:] = fi * g[i + 1 : n + 1] / fn * run
            runq = np.cumprod(q[i - 1 : n - 1])
            alpha[i:, i - 1] = fi * g[i + 1 : n + 1] / fn * runq
    return alpha


def inverse_entry(tables, offdiag, delta, i, j):
    """Single entry ``alpha_ij`` (1-based) in O(1) from precomputed tables."""
    n = tables.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"({i}, {j}) outside a {n}x{n} inverse")
    if delta == 0:
        raise SingularMatrixError("delta must be nonzero")
    f, gi = tables.f, tables.gi
    if i == j:
        return f[i - 1] * gi(i + 1) / delta
    if i < j:
        return f[i - 1] * gi(j + 1) / delta * offdiag.range_p(i, j - 1)
    return f[j - 1] * gi(i + 1) / delta * offdiag.range_q(j, i - 1)


def invert_huang(A, tol=0.0):
    """Inverse from the pivot ratios ``y_i = a_i / c_i`` and ``v_i = b_i / e_{i+1}``.

    ``alpha_ii = 1 / (c_i - d_i + e_i)``, then ``alpha_ij = -y_i alpha_{i+1,j}``
    above and ``alpha_ij = -v_{i-1} alpha_{i-1,j}`` below the diagonal.
    Needs every ``c_i`` and ``e_i`` nonzero; intended as a diagnostic
    cross-check for :func:`invert`, never as its fallback.

    Raises
    ------
    BreakdownEncountered
        If some pivot ``c_i`` or ``e_i`` is zero under the breakdown test.
    """
    tables = minor_tables(A, tol)
    n = A.n
    if not tables.all_c_nonzero():
        raise BreakdownEncountered("c", tables.f_switch)
    if not tables.all_e_nonzero():
        raise BreakdownEncountered("e", tables.g_switch)
    c, e, d = tables.c, tables.e, A.d
    y = [A.a[k] / c[k] for k in range(n - 1)]
    v = [A.b[k] / e[k + 1] for k in range(n - 1)]
    alpha = _grid(n)
    for j in range(n):
        alpha[j, j] = 1 / (c[j] - d[j] + e[j])
        for i in range(j - 1, -1, -1):
            alpha[i, j] = -y[i] * alpha[i + 1, j]
        for i in range(j + 1, n):
            alpha[i, j] = -v[i - 1] * alpha[i - 1, j]
    return InverseMatrix(n, _finish(alpha, A.mode), tables.det)


def inverse_entry_kumar(tables, offdiag, delta, i, j):
    """``alpha_ij`` from the Kronecker-delta sum form, evaluated literally.

    ``[g_{j+1} sum_{k<j} d_ik f_{k-1} P(k, j-1) + d_ij f_{j-1} g_{j+1}
    + f_{j-1} sum_{k>j} d_ik g_{k+1} Q(j, k-1)] / f_n`` where ``P`` and ``Q``
    are plain products of ``p`` and ``q``. Every term is formed, so this
    costs O(n) per entry and shares nothing with :func:`inverse_entry`.
    """
    n = tables.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"({i}, {j}) outside a {n}x{n} inverse")
    if delta == 0:
        raise SingularMatrixError("delta must be nonzero")
    f, gi = tables.f, tables.gi
    p, q = offdiag.p, offdiag.q
    zero = 0 * delta
    one = zero + 1

    def kron(x, y):
        return one if x == y else zero

    upper = zero
    prod = one
    for k in range(j - 1, 0, -1):  # prod = p_k * ... * p_{j-1}
        prod = prod * p[k - 1]
        upper = upper + kron(i, k) * f[k - 1] * prod
    lower = zero
    prod = one
    for k in range(j + 1, n + 1):  # prod = q_j * ... * q_{k-1}
        prod = prod * q[k - 2]
        lower = lower + kron(i, k) * gi(k + 1) * prod
    total = gi(j + 1) * upper + kron(i, j) * f[j - 1] * gi(j + 1) + f[j - 1] * lower
    return total / delta


def hadamard_factors(A, tol=0.0, singular_tol=None):
    """Split the inverse as ``R o S``.

    ``r_ij = r_ji = f_{min(i,j)-1} g_{max(i,j)+1} / delta`` and ``S`` holds
    1 on the diagonal, ``p_i ... p_{j-1}`` above and ``q_j ... q_{i-1}``
    below it.
    """
    tables = minor_tables(A, tol)
    f, g = tables.f, tables.g
    if is_singular(f, singular_tol):
        raise SingularMatrixError(f"singular matrix (det = {f[-1]})")
    n, delta = A.n, f[-1]
    one = coerce(1, A.mode)
    R = _grid(n)
    S = _grid(n)
    for i in range(n):
        S[i, i] = one
        R[i, i] = f[i] * g[i + 1] / delta
        run_p = run_q = one
        for j in range(i + 1, n):
            R[i, j] = R[j, i] = f[i] * g[j + 1] / delta
            run_p = run_p * -A.a[j - 1]
            run_q = run_q * -A.b[j - 1]
            S[i, j] = run_p
            S[j, i] = run_q
    if A.mode == "double":
        R, S = _finish(R, "double"), _finish(S, "double")
    # scaled mode keeps ScaledFloat entries: products of p, q may leave double range
    return HadamardFactors(R, S, delta, A.mode)


def hadamard_recombine(factors):
    """Elementwise product ``R * S`` as an :class:`InverseMatrix`."""
    R, S = factors.R, factors.S
    if R.shape != S.shape or R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise DimensionMismatch(f"R has shape {R.shape}, S has shape {S.shape}")
    n = R.shape[0]
    grid = _grid(n)
    for i in range(n):
        for j in range(n):
            grid[i, j] = R[i, j] * S[i, j]
    return InverseMatrix(n, _finish(grid, factors.mode), factors.delta)


def zero_structure(A, tables):
    """Mask of inverse entries that are forced to be zero.

    * ``a_k = 0``: rows ``1..k`` x columns ``k+1..n``.
    * ``b_k = 0``: rows ``k+1..n`` x columns ``1..k``.
    * ``f_k = 0`` (``k < n``): row and column ``k+1`` from index ``k+1`` on.
    * ``g_k = 0`` (``k > 1``): row and column ``k-1`` up to index ``k-1``.
    """
    n = A.n
    mask = np.zeros((n, n), dtype=bool)
    for k in range(1, n):
        if A.a[k - 1] == 0:
            mask[:k, k:] = True
        if A.b[k - 1] == 0:
            mask[k:, :k] = True
        if tables.f[k] == 0:
            mask[k, k:] = True
            mask[k:, k] = True
    for k in range(2, n + 1):
        if tables.gi(k) == 0:
            mask[k - 2, : k - 1] = True
            mask[: k - 1, k - 2] = True
    return mask
