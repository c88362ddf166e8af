"""Exception types raised by tridkit."""


class TridkitError(Exception):
    pass


class SingularMatrixError(TridkitError, ArithmeticError):
    """The determinant is zero, so no inverse exists."""


class BreakdownEncountered(TridkitError, ArithmeticError):
    """A zero pivot ``c_i`` or ``e_i`` stopped a division-based formula."""

    def __init__(self, which, index):
        super().__init__(f"breakdown: {which}_{index} is zero")
        self.which = which
        self.index = index


class NotSymmetricError(TridkitError, ValueError):
    pass


class DimensionMismatch(TridkitError, ValueError):
    pass


class IndexOutOfRange(TridkitError, IndexError):
    pass


class ParseError(TridkitError, ValueError):
    """Malformed band text. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class DimensionError(ParseError):
    """Band lengths disagree with the declared order."""
