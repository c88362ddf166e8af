"""Scalar modes and flop instrumentation.

Three arithmetic modes are supported:

``double``
    Plain IEEE 754 binary64 (Python ``float``).
``rational``
    Exact arithmetic with :class:`fractions.Fraction`.
``scaled``
    :class:`ScaledFloat`, a float significand in ``[1, 2)`` paired with an
    unbounded integer base-2 exponent. Products of many minors stay finite.

:class:`Counted` wraps a float or :class:`ScaledFloat` and reports every
``+ - * /`` to a shared :class:`FlopCounter`. Conversions leave it intact.
"""

from __future__ import annotations

import math
import os
import re
import sys
from fractions import Fraction
from numbers import Rational

MODES = ("double", "rational", "scaled")
DEFAULT_MODE = "double"

_SCALED_TOKEN = re.compile(r"^\s*([^*\s]+)\s*\*\s*2\s*\^\s*([+-]?\d+)\s*$")


def default_mode():
    """Scalar mode taken from ``TRIDKIT_MODE``, falling back to ``double``."""
    mode = os.environ.get("TRIDKIT_MODE", DEFAULT_MODE).strip().lower()
    return check_mode(mode)


def check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"unknown scalar mode {mode!r}; expected one of {MODES}")
    return mode


class ScaledFloat:
    """Float significand with an unbounded binary exponent.

    The value is ``sig * 2**exp`` with ``1 <= |sig| < 2`` (or ``sig == 0``
    and ``exp == 0``). Every arithmetic result is renormalized.
    """

    __slots__ = ("sig", "exp")

    def __init__(self, sig=0.0, exp=0):
        sig = float(sig)
        if not math.isfinite(sig):
            raise ValueError(f"non-finite significand {sig!r}")
        if sig == 0.0:
            self.sig, self.exp = 0.0, 0
            return
        m, e = math.frexp(sig)  # m in [0.5, 1)
        self.sig = m * 2.0
        self.exp = int(exp) + e - 1

    @classmethod
    def from_value(cls, x):
        if isinstance(x, ScaledFloat):
            return x
        if isinstance(x, Counted):
            return cls.from_value(x.value)
        if isinstance(x, float):
            return cls(x, 0)
        if isinstance(x, (int, Rational)):
            x = Fraction(x)
            if x == 0:
                return cls()
            k = abs(x.numerator).bit_length() - x.denominator.bit_length()
            scaled = x / (Fraction(2) ** k)
            return cls(float(scaled), k)
        if isinstance(x, str):
            return parse_scalar(x, "scaled")
        return cls(float(x), 0)

    # -- conversions -----------------------------------------------------
    def __float__(self):
        try:
            return math.ldexp(self.sig, self.exp)
        except OverflowError:
            return math.copysign(math.inf, self.sig)

    def __bool__(self):
        return self.sig != 0.0

    def __repr__(self):
        return f"ScaledFloat({self.sig!r}, {self.exp})"

    def __str__(self):
        return format_scalar(self, "scaled")

    def to_fraction(self):
        return Fraction(self.sig) * Fraction(2) ** self.exp

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, ScaledFloat):
            return other
        if isinstance(other, (int, float, Fraction)):
            return ScaledFloat.from_value(other)
        # Counted operands handle the reflected operation themselves
        return NotImplemented

    def __neg__(self):
        out = object.__new__(ScaledFloat)
        out.sig, out.exp = -self.sig, self.exp
        return out

    def __pos__(self):
        return self

    def __abs__(self):
        out = object.__new__(ScaledFloat)
        out.sig, out.exp = abs(self.sig), self.exp
        return out

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScaledFloat(self.sig * other.sig, self.exp + other.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.sig == 0.0:
            raise ZeroDivisionError("ScaledFloat division by zero")
        return ScaledFloat(self.sig / other.sig, self.exp - other.exp)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.sig == 0.0:
            return other
        if other.sig == 0.0:
            return self
        hi, lo = (self, other) if self.exp >= other.exp else (other, self)
        shift = lo.exp - hi.exp
        if shift < -1100:
            return hi
        return ScaledFloat(hi.sig + math.ldexp(lo.sig, shift), hi.exp)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    # -- comparisons -----------------------------------------------------
    def _cmp(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        diff = self - other
        return (diff.sig > 0) - (diff.sig < 0)

    def __eq__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __hash__(self):
        return hash((self.sig, self.exp))


class FlopCounter:
    """Tally of scalar floating-point operations."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, k=1):
        self.count += k

    def reset(self):
        self.count = 0

    def __repr__(self):
        return f"FlopCounter(count={self.count})"


class Counted:
    """A float or :class:`ScaledFloat` that reports each ``+ - * /`` to a
    :class:`FlopCounter`.

    Negation, ``abs`` and comparisons are free.
    """

    __slots__ = ("value", "counter")

    def __init__(self, value, counter):
        self.value = value if isinstance(value, ScaledFloat) else float(value)
        self.counter = counter

    def _unwrap(self, other):
        if isinstance(other, Counted):
            return other.value
        if isinstance(other, ScaledFloat):
            return other
        if isinstance(other, (int, float)):
            return float(other)
        return None

    def _op(self, other, fn):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        self.counter.count += 1
        return Counted(fn(self.value, v), self.counter)

    def __add__(self, other):
        return self._op(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._op(other, lambda x, y: y + x)

    def __sub__(self, other):
        return self._op(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._op(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._op(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._op(other, lambda x, y: y * x)

    def __truediv__(self, other):
        return self._op(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._op(other, lambda x, y: y / x)

    def __neg__(self):
        return Counted(-self.value, self.counter)

    def __abs__(self):
        return Counted(abs(self.value), self.counter)

    def __float__(self):
        return float(self.value)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        v = self._unwrap(other)
        return NotImplemented if v is None else self.value == v

    def __lt__(self, other):
        v = self._unwrap(other)
        return NotImplemented if v is None else self.value < v

    def __le__(self, other):
        v = self._unwrap(other)
        return NotImplemented if v is None else self.value <= v

    def __gt__(self, other):
        v = self._unwrap(other)
        return NotImplemented if v is None else self.value > v

    def __ge__(self, other):
        v = self._unwrap(other)
        return NotImplemented if v is None else self.value >= v

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Counted({self.value!r})"


def is_exact(x):
    """True for rational-mode scalars, whose zero test ignores tolerances."""
    return isinstance(x, (int, Fraction))


def coerce(x, mode):
    """Convert ``x`` into a scalar of ``mode``.

    Scalars already of the target kind pass through unchanged (this keeps
    :class:`Counted` values intact in ``double`` mode).
    """
    if isinstance(x, str):
        return parse_scalar(x, mode)
    if isinstance(x, Counted):
        return x
    if mode == "double":
        if isinstance(x, float):
            return x
        return float(x)
    if mode == "rational":
        if isinstance(x, Fraction):
            return x
        if isinstance(x, ScaledFloat):
            return x.to_fraction()
        if isinstance(x, float):
            if not math.isfinite(x):
                raise ValueError(f"cannot represent {x!r} exactly")
            return Fraction(x)
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        raise TypeError(f"cannot convert {type(x).__name__} to a rational")
    if mode == "scaled":
        return ScaledFloat.from_value(x)
    raise ValueError(f"unknown scalar mode {mode!r}")


def to_float(x):
    return float(x)


def parse_scalar(token, mode):
    """Parse one text token into a scalar of ``mode``.

    Accepts integers, decimals (``1.5e-3``), rationals (``p/q``) and, in
    scaled mode, ``m*2^e``. Raises :class:`ValueError` otherwise.
    """
    token = token.strip()
    if mode == "scaled":
        m = _SCALED_TOKEN.match(token)
        if m:
            sig = parse_scalar(m.group(1), "double")
            return ScaledFloat(1.0, 0) * ScaledFloat.from_value(sig) * ScaledFloat(1.0, int(m.group(2)))
    try:
        if mode == "double" and "/" not in token:
            value = float(token)
            if not math.isfinite(value):
                raise ValueError(token)
            return value
        frac = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"unparseable scalar {token!r}") from None
    if mode == "rational":
        return frac
    if mode == "double":
        return float(frac)
    if mode == "scaled":
        return ScaledFloat.from_value(frac)
    raise ValueError(f"unknown scalar mode {mode!r}")


def format_scalar(x, mode, digits=None):
    """Render a scalar so that :func:`parse_scalar` recovers it exactly.

    ``digits`` switches double output to ``%.{digits}g`` (17 is still
    round-trip safe).
    """
    if mode == "rational":
        return str(Fraction(x))
    if mode == "scaled":
        x = ScaledFloat.from_value(x)
        f = float(x)
        # subnormal reprs carry fewer than 53 bits, so they would not round-trip
        normal = f == 0.0 or abs(f) >= sys.float_info.min
        if math.isfinite(f) and normal and (f != 0.0 or x.sig == 0.0) and ScaledFloat.from_value(f) == x:
            return _format_float(f, digits)
        return f"{x.sig!r}*2^{x.exp}"
    return _format_float(float(x), digits)


def _format_float(f, digits):
    if digits is None:
        return repr(f)
    return format(f, f".{digits}g")
