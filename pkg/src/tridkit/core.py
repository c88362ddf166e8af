"""Tridiagonal matrices, principal-minor tables and determinants.

Band convention (1-based, as usually written)::

    [ d1  a1              ]
    [ b1  d2  a2          ]
    [     b2  d3  ...     ]
    [          ...    an-1]
    [            bn-1  dn ]

``f_i`` is the leading principal minor of order ``i`` and ``g_i`` the
trailing principal minor starting at row ``i``. Both are computed by a
hybrid scheme: the continued-fraction pivots ``c_i`` (or ``e_i``) are used
while they are nonzero, and the division-free three-term recurrence takes
over from the first zero pivot onward, so no input can trigger a division
by zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import NotSymmetricError
from .scalars import check_mode, coerce, default_mode, is_exact

__all__ = [
    "TridiagonalMatrix",
    "MinorTables",
    "LeadingMinors",
    "TrailingMinors",
    "Sufficiency",
    "leading_minors",
    "trailing_minors",
    "minor_tables",
    "determinant",
    "is_nonsingular_sufficient",
    "is_positive_definite_symmetric",
    "is_centrosymmetric",
]


@dataclass(frozen=True)
class TridiagonalMatrix:
    """A tridiagonal matrix stored by its three bands.

    Parameters
    ----------
    d : sequence
        Main diagonal ``d_1..d_n``.
    a : sequence
        Superdiagonal ``a_1..a_{n-1}``.
    b : sequence
        Subdiagonal ``b_1..b_{n-1}``.
    mode : {'double', 'rational', 'scaled'}, optional
        Scalar mode; every entry is converted on construction. Defaults to
        ``$TRIDKIT_MODE`` or ``'double'``.
    """

    d: tuple
    a: tuple = ()
    b: tuple = ()
    mode: str = field(default_factory=default_mode)

    def __post_init__(self):
        mode = check_mode(self.mode)
        d = tuple(coerce(x, mode) for x in self.d)
        a = tuple(coerce(x, mode) for x in self.a)
        b = tuple(coerce(x, mode) for x in self.b)
        if len(d) < 1:
            raise ValueError("a tridiagonal matrix needs n >= 1")
        if len(a) != len(d) - 1 or len(b) != len(d) - 1:
            raise ValueError(
                f"band lengths a={len(a)}, b={len(b)} do not match n-1={len(d) - 1}"
            )
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self):
        return len(self.d)

    def astype(self, mode):
        """Same bands converted to another scalar mode."""
        return TridiagonalMatrix(self.d, self.a, self.b, mode=mode)

    def entry(self, i, j):
        """Entry ``t_ij`` with 1-based indices."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"({i}, {j}) outside a {n}x{n} matrix")
        if i == j:
            return self.d[i - 1]
        if j == i + 1:
            return self.a[i - 1]
        if i == j + 1:
            return self.b[j - 1]
        return coerce(0, self.mode)

    def is_symmetric(self):
        return all(x == y for x, y in zip(self.a, self.b))


@dataclass(frozen=True)
class LeadingMinors:
    """Output of :func:`leading_minors`.

    ``f[i]`` is ``f_i`` for ``i = 0..n``; ``c[i-1]`` is ``c_i`` for
    ``i = 1..switch``. ``breakdown`` is True when ``c_switch`` failed the
    zero test.
    """

    f: tuple
    c: tuple
    switch: int
    breakdown: bool


@dataclass(frozen=True)
class TrailingMinors:
    """Output of :func:`trailing_minors`.

    ``g[i-1]`` is ``g_i`` for ``i = 1..n+1``; ``e`` holds
    ``e_switch..e_n`` in index order.
    """

    g: tuple
    e: tuple
    switch: int
    breakdown: bool


@dataclass(frozen=True)
class MinorTables:
    """The pivot vectors ``c``, ``e`` and minor vectors ``f``, ``g``.

    Storage is 0-based: ``f[i] = f_i`` (i = 0..n), ``g[i-1] = g_i``
    (i = 1..n+1), ``c[i-1] = c_i`` (i = 1..f_switch) and
    ``e[i-g_switch] = e_i`` (i = g_switch..n).
    """

    f: tuple
    g: tuple
    c: tuple
    e: tuple
    f_switch: int
    g_switch: int
    c_breakdown: bool = False
    e_breakdown: bool = False

    @property
    def n(self):
        return len(self.f) - 1

    @property
    def det(self):
        return self.f[-1]

    def fi(self, i):
        """``f_i`` for ``0 <= i <= n``."""
        return self.f[i]

    def gi(self, i):
        """``g_i`` for ``1 <= i <= n+1``."""
        return self.g[i - 1]

    def all_c_nonzero(self):
        return self.f_switch == self.n and not self.c_breakdown

    def all_e_nonzero(self):
        return self.g_switch == 1 and not self.e_breakdown


def _breaks_down(x, tol, scale):
    if is_exact(x) or not tol:
        return x == 0
    return abs(x) <= tol * scale


def leading_minors(A, tol=0.0):
    """Leading principal minors ``f_0..f_n`` of ``A``.

    Pivots ``c_m = d_m - a_{m-1} b_{m-1} / c_{m-1}`` and ``f_m = c_m f_{m-1}``
    are used until the first pivot that is zero (in float modes: no larger
    than ``tol`` times ``|d_m| + |a_{m-1} b_{m-1} / c_{m-1}|``). From there
    on ``f_k = d_k f_{k-1} - a_{k-1} b_{k-1} f_{k-2}``.

    Parameters
    ----------
    A : TridiagonalMatrix
    tol : float, optional
        Relative breakdown threshold for float modes. 0 reproduces the exact
        zero test; ``2**-40`` is a robust choice. Ignored in rational mode.

    Returns
    -------
    LeadingMinors
    """
    n, d, a, b = A.n, A.d, A.a, A.b
    one = coerce(1, A.mode)
    f = [one, d[0]]
    c = [d[0]]
    m = 1
    scale = abs(d[0]) if tol else None
    broke = _breaks_down(c[0], tol, scale)
    while m <= n - 1 and not broke:
        m += 1
        t = a[m - 2] * b[m - 2] / c[m - 2]
        cm = d[m - 1] - t
        c.append(cm)
        f.append(cm * f[m - 1])
        if tol:
            scale = abs(d[m - 1]) + abs(t)
        broke = _breaks_down(cm, tol, scale)
    for k in range(m + 1, n + 1):
        f.append(d[k - 1] * f[k - 1] - a[k - 2] * b[k - 2] * f[k - 2])
    return LeadingMinors(tuple(f), tuple(c), m, broke)


def trailing_minors(A, tol=0.0):
    """Trailing principal minors ``g_1..g_{n+1}`` of ``A``.

    Mirror image of :func:`leading_minors`: ``e_m = d_m - a_m b_m / e_{m+1}``
    and ``g_m = e_m g_{m+1}`` running upward from ``m = n`` until the first
    zero pivot, then ``g_k = d_k g_{k+1} - a_k b_k g_{k+2}`` down to ``k = 1``.
    """
    n, d, a, b = A.n, A.d, A.a, A.b
    one = coerce(1, A.mode)
    g = [None] * (n + 2)  # g[k] = g_k, slot 0 unused
    g[n + 1] = one
    g[n] = d[n - 1]
    e = {n: d[n - 1]}
    m = n
    scale = abs(d[n - 1]) if tol else None
    broke = _breaks_down(e[n], tol, scale)
    while m >= 2 and not broke:
        m -= 1
        t = a[m - 1] * b[m - 1] / e[m + 1]
        em = d[m - 1] - t
        e[m] = em
        g[m] = em * g[m + 1]
        if tol:
            scale = abs(d[m - 1]) + abs(t)
        broke = _breaks_down(em, tol, scale)
    for k in range(m - 1, 0, -1):
        g[k] = d[k - 1] * g[k + 1] - a[k - 1] * b[k - 1] * g[k + 2]
    return TrailingMinors(tuple(g[1:]), tuple(e[k] for k in range(m, n + 1)), m, broke)


def minor_tables(A, tol=0.0):
    """Run both hybrid passes and bundle the results."""
    lead = leading_minors(A, tol)
    trail = trailing_minors(A, tol)
    return MinorTables(
        f=lead.f,
        g=trail.g,
        c=lead.c,
        e=trail.e,
        f_switch=lead.switch,
        g_switch=trail.switch,
        c_breakdown=lead.breakdown,
        e_breakdown=trail.breakdown,
    )


def determinant(A, tol=0.0, verify=False, rtol=1e-10):
    """Determinant ``f_n`` of a tridiagonal matrix in O(n).

    With ``verify=True`` the trailing pass is run as well and ``g_1`` must
    agree with ``f_n``: exactly in rational mode, otherwise within
    ``rtol * max(1, |f_n|)``. Disagreement raises :class:`AssertionError`.
    """
    fn = leading_minors(A, tol).f[-1]
    if verify:
        g1 = trailing_minors(A, tol).g[0]
        if is_exact(fn):
            ok = fn == g1
        else:
            ok = abs(fn - g1) <= rtol * max(abs(fn), 1.0)
        if not ok:
            raise AssertionError(f"f_n = {fn} disagrees with g_1 = {g1}")
    return fn


class Sufficiency(enum.Enum):
    """Which sufficient nonsingularity condition holds, if any."""

    ALL_C_NONZERO = "AllCNonzero"
    ALL_E_NONZERO = "AllENonzero"
    INCONCLUSIVE = "Inconclusive"


def is_nonsingular_sufficient(A, tol=0.0):
    """Check the sufficient conditions "all ``c_i != 0``" / "all ``e_i != 0``".

    ``INCONCLUSIVE`` does not mean singular: ``d = [1, 1, 1]``,
    ``a = b = [1, 1]`` has ``c_2 = e_2 = 0`` and determinant -1.
    """
    tables = minor_tables(A, tol)
    if tables.all_c_nonzero():
        return Sufficiency.ALL_C_NONZERO
    if tables.all_e_nonzero():
        return Sufficiency.ALL_E_NONZERO
    return Sufficiency.INCONCLUSIVE


def is_positive_definite_symmetric(A):
    """True iff the symmetric matrix ``A`` is positive definite (all ``c_i > 0``)."""
    if not A.is_symmetric():
        raise NotSymmetricError("positive-definiteness test needs a == b")
    lead = leading_minors(A)
    return len(lead.c) == A.n and all(ci > 0 for ci in lead.c)


def is_centrosymmetric(A):
    """True iff ``A`` equals its 180-degree rotation ``J A J``.

    Band-level test: ``d_i = d_{n+1-i}`` and ``a_i = b_{n-i}``.
    """
    n = A.n
    if any(A.d[i] != A.d[n - 1 - i] for i in range(n)):
        return False
    return all(A.a[i] == A.b[n - 2 - i] for i in range(n - 1))
