"""Exceptions raised by the series algebra and the exact scalar helpers."""


class DivisionByZero(ZeroDivisionError):
    pass


class NotInvertible(ArithmeticError):
    """The series has no known nonzero coefficient to divide by."""


class CoefficientUnknown(LookupError):
    """Requested exponent lies outside the window of known coefficients."""


class NotAPowerSeries(ValueError):
    """A Laurent series with a nonzero negative-exponent part was used
    where a genuine power series is required."""


class IndexOutOfWindow(IndexError):
    pass
