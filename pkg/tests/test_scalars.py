import math
from fractions import Fraction

import pytest
from hypothesis import example, given
from hypothesis import strategies as st

from tridkit.scalars import (
    Counted,
    FlopCounter,
    ScaledFloat,
    coerce,
    default_mode,
    format_scalar,
    is_exact,
    parse_scalar,
)

small_fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=64)
dyadic = st.builds(lambda m, e: Fraction(m) * Fraction(2) ** e,
                   st.integers(-2**20, 2**20), st.integers(-30, 30))


def test_normalization():
    x = ScaledFloat(12.0, 3)
    assert (x.sig, x.exp) == (1.5, 6)
    assert float(x) == 96.0
    z = ScaledFloat(0.0, 17)
    assert (z.sig, z.exp) == (0.0, 0) and not z
    assert ScaledFloat(-0.75).sig == -1.5


def test_range_beyond_double():
    big = ScaledFloat(1.0, 5000)
    assert math.isinf(float(big))
    assert (big * big).exp == 10000
    assert float(big / big) == 1.0
    assert (big - big) == 0


@given(dyadic, dyadic)
def test_ops_exact_on_dyadics(x, y):
    X, Y = ScaledFloat.from_value(x), ScaledFloat.from_value(y)
    assert (X * Y).to_fraction() == x * y
    bound = max(abs(x), abs(y)) * Fraction(1, 2**52)
    assert abs((X + Y).to_fraction() - (x + y)) <= bound
    assert abs((X - (-Y)).to_fraction() - (x + y)) <= bound
    assert (X < Y) == (x < y)
    assert (X == Y) == (x == y)


@given(small_fractions, small_fractions)
def test_division_close_to_exact(x, y):
    if y == 0:
        return
    q = ScaledFloat.from_value(x) / ScaledFloat.from_value(y)
    assert float(q) == pytest.approx(float(x / y), rel=1e-14, abs=1e-300)


def test_mixed_operands():
    x = ScaledFloat.from_value(3)
    assert float(2 - x) == -1.0
    assert float(6 / x) == 2.0
    assert float(x + 0.5) == 3.5
    assert abs(ScaledFloat(-2.0)) == 2


def test_counted_charges_arithmetic_only():
    counter = FlopCounter()
    x, y = Counted(3.0, counter), Counted(4.0, counter)
    z = (x * y + 1.0) / y - x
    assert counter.count == 4
    _ = -z, abs(z), z < x, z == x, float(z)
    assert counter.count == 4
    counter.reset()
    assert counter.count == 0
    w = Counted(ScaledFloat(1.0, 3000), counter) * Counted(ScaledFloat(1.0, 3000), counter)
    assert counter.count == 1
    assert ScaledFloat.from_value(w).exp == 6000


def test_is_exact_and_coerce():
    assert is_exact(Fraction(1, 3)) and is_exact(4)
    assert not is_exact(0.5) and not is_exact(ScaledFloat(0.5))
    assert coerce(1, "rational") == Fraction(1)
    assert coerce(0.5, "rational") == Fraction(1, 2)
    assert coerce(Fraction(1, 4), "double") == 0.25
    assert coerce("3/4", "scaled").to_fraction() == Fraction(3, 4)
    with pytest.raises(ValueError):
        coerce(math.inf, "rational")


@pytest.mark.parametrize("token, mode, value", [
    ("7", "double", 7.0),
    ("-1.5e-3", "double", -1.5e-3),
    ("1/3", "rational", Fraction(1, 3)),
    ("0.1", "rational", Fraction(1, 10)),
    ("1/4", "double", 0.25),
])
def test_parse_scalar(token, mode, value):
    assert parse_scalar(token, mode) == value


def test_parse_scaled_exponent_form():
    x = parse_scalar("1.5*2^4000", "scaled")
    assert (x.sig, x.exp) == (1.5, 4000)


@pytest.mark.parametrize("token", ["abc", "1/0", "inf", "nan", "1e999", ""])
def test_parse_rejects(token):
    with pytest.raises(ValueError):
        parse_scalar(token, "double")


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_round_trip_double(x):
    assert parse_scalar(format_scalar(x, "double"), "double") == x
    assert parse_scalar(format_scalar(x, "double", 17), "double") == x


@given(small_fractions)
def test_format_round_trip_rational(x):
    assert parse_scalar(format_scalar(x, "rational"), "rational") == x


@example(1.0, -1024)
@given(st.floats(min_value=0.5, max_value=2.0), st.integers(-5000, 5000))
def test_format_round_trip_scaled(sig, exp):
    x = ScaledFloat(sig, exp)
    assert parse_scalar(format_scalar(x, "scaled"), "scaled") == x


def test_default_mode_env(monkeypatch):
    monkeypatch.delenv("TRIDKIT_MODE", raising=False)
    assert default_mode() == "double"
    monkeypatch.setenv("TRIDKIT_MODE", "rational")
    assert default_mode() == "rational"
    monkeypatch.setenv("TRIDKIT_MODE", "quad")
    with pytest.raises(ValueError):
        default_mode()
