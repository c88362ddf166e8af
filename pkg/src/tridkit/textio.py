"""Band text format.

::

    # Comments start with '#'
    4                # n
    25 13 5 1        # d_1 .. d_n
    -9 -4 -1         # a_1 .. a_{n-1}  (superdiagonal)
    -9 -4 -1         # b_1 .. b_{n-1}  (subdiagonal)

Lines that hold only a comment are ignored; blank lines are positional, so
for ``n = 1`` lines 3 and 4 are blank or absent. Scalars may be integers,
decimals or ``p/q`` rationals (``m*2^e`` is also accepted in scaled mode).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import TridiagonalMatrix
from .errors import DimensionError, ParseError
from .scalars import default_mode, format_scalar, parse_scalar

__all__ = ["TridiagFile", "parse_tridiag", "format_tridiag", "read_tridiag", "format_grid"]


@dataclass(frozen=True)
class TridiagFile:
    matrix: TridiagonalMatrix
    path: str | None
    mode: str


def _tokens(line):
    """Yield ``(column, text)`` for whitespace-separated tokens (1-based column)."""
    col = 0
    for part in line.split():
        col = line.index(part, col)
        yield col + 1, part
        col += len(part)


def parse_tridiag(text, mode=None):
    """Parse band text into a :class:`~tridkit.core.TridiagonalMatrix`.

    Raises
    ------
    ParseError
        Malformed structure or an unparseable scalar (carries line/column).
    DimensionError
        A band length disagrees with ``n``.
    """
    mode = mode or default_mode()
    rows = []  # (line number, content without comment)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, hashmark, _ = raw.partition("#")
        if hashmark and not body.strip():
            continue
        rows.append((lineno, body))
    # trailing blank lines carry no information
    while rows and not rows[-1][1].strip() and len(rows) > 4:
        rows.pop()
    if not rows or not rows[0][1].strip():
        raise ParseError("missing matrix order on the first line", line=rows[0][0] if rows else 1)
    if len(rows) > 4:
        lineno, _ = rows[4]
        raise ParseError("unexpected content after the subdiagonal line", line=lineno, column=1)

    lineno, body = rows[0]
    toks = list(_tokens(body))
    if len(toks) != 1:
        raise ParseError("first line must hold exactly one integer n", line=lineno, column=1)
    col, tok = toks[0]
    try:
        n = int(tok)
    except ValueError:
        raise ParseError(f"order {tok!r} is not an integer", line=lineno, column=col) from None
    if n < 1:
        raise ParseError(f"order must be >= 1, got {n}", line=lineno, column=col)

    bands = []
    for slot, (label, expected) in enumerate((("diagonal", n), ("superdiagonal", n - 1), ("subdiagonal", n - 1)), 1):
        if slot < len(rows):
            lineno, body = rows[slot]
        else:
            lineno, body = (rows[-1][0] + slot - len(rows) + 1), ""
        values = []
        for col, tok in _tokens(body):
            try:
                values.append(parse_scalar(tok, mode))
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno, column=col) from None
        if len(values) != expected:
            raise DimensionError(
                f"{label} has {len(values)} values, expected {expected}", line=lineno
            )
        bands.append(values)
    d, a, b = bands
    return TridiagonalMatrix(d, a, b, mode=mode)


def read_tridiag(path, mode=None):
    """Read a band file from disk."""
    mode = mode or default_mode()
    text = Path(path).read_text()
    return TridiagFile(parse_tridiag(text, mode), str(path), mode)


def format_tridiag(A):
    """Band text for ``A`` that :func:`parse_tridiag` reads back exactly."""

    def line(values):
        return " ".join(format_scalar(x, A.mode) for x in values)

    return f"{A.n}\n{line(A.d)}\n{line(A.a)}\n{line(A.b)}\n"


def format_grid(grid, mode, sep=" ", digits=17):
    """Rows of a dense matrix, one line each."""
    grid = np.asarray(grid)
    fmt_digits = None if mode == "rational" else digits
    return "\n".join(
        sep.join(format_scalar(x, mode, fmt_digits) for x in row)
        for row in grid
    )
