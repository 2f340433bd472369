"""Truncated formal power series and Laurent series over the rationals.

Precision is tracked explicitly. A :class:`Series` of order ``N`` knows the
coefficients of ``t^0 .. t^(N-1)``. A :class:`LaurentSeries` knows every
coefficient with exponent below ``prec``; it is stored as ``t^val`` times a
list whose first entry is nonzero, and the zero series is the empty list with
``val == prec``.

Every operation returns only coefficients that are fully determined by the
known coefficients of its inputs. Dividing by a series of valuation ``v``
therefore costs ``v`` orders of absolute precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import CoefficientUnknown, NotAPowerSeries, NotInvertible
from .exact import factorial

__all__ = [
    "Series",
    "LaurentSeries",
    "series_invert",
    "series_div",
    "series_pow",
    "series_derivative",
    "exp_ct",
    "log1m",
    "egf_coefficient",
]

Scalar = Union[int, Fraction]
_ZERO = Fraction(0)


def _cauchy(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    """First ``n`` coefficients of the product of two coefficient lists."""
    out = []
    la, lb = len(a), len(b)
    for k in range(n):
        acc = _ZERO
        for i in range(max(0, k - lb + 1), min(k, la - 1) + 1):
            ai = a[i]
            if ai:
                bj = b[k - i]
                if bj:
                    acc += ai * bj
        out.append(acc)
    return out


def _reciprocal(a: Sequence[Fraction], n: int) -> list[Fraction]:
    """First ``n`` coefficients of 1/a, assuming a[0] != 0."""
    inv0 = 1 / Fraction(a[0])
    out = [inv0]
    la = len(a)
    for k in range(1, n):
        acc = _ZERO
        for i in range(1, min(k, la - 1) + 1):
            ai = a[i]
            if ai:
                acc += ai * out[k - i]
        out.append(-acc * inv0)
    return out


def _term(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    power = "t" if e == 1 else f"t^{e}"
    return f"{c}*{power}"


class Series:
    """Power series in t known up to (but excluding) ``t^order``.

    Trailing zeros are kept: ``order`` is precision, not degree.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> Series:
        return cls([c] + [0] * (order - 1)) if order > 0 else cls([])

    @classmethod
    def monomial(cls, e: int, order: int, c: Scalar = 1) -> Series:
        coeffs = [_ZERO] * order
        if e < order:
            coeffs[e] = Fraction(c)
        return cls(coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i < self.order:
            raise CoefficientUnknown(f"t^{i} outside known window [0, {self.order})")
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise CoefficientUnknown(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[:order])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(self.coeffs[i] + other.coeffs[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(c * other for c in self.coeffs)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(_cauchy(self.coeffs, other.coeffs, n))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        # Strong equality: same window and same coefficients.
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Series", self.coeffs))

    def agrees_with(self, other: Series) -> bool:
        """Equality on the common known window."""
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_laurent(self) -> LaurentSeries:
        return LaurentSeries(self.coeffs, 0)

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        terms = [_term(c, i) for i, c in enumerate(self.coeffs) if c]
        terms.append(f"O(t^{self.order})")
        return " + ".join(terms)


class LaurentSeries:
    """``t^val * (c0 + c1 t + ...)`` with ``c0 != 0``, known below ``t^prec``."""

    __slots__ = ("val", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], val: int = 0):
        cs = [Fraction(c) for c in coeffs]
        k = 0
        while k < len(cs) and not cs[k]:
            k += 1
        self.val: int = val + k
        self.coeffs: tuple[Fraction, ...] = tuple(cs[k:])

    @classmethod
    def zero(cls, prec: int) -> LaurentSeries:
        return cls((), prec)

    @classmethod
    def constant(cls, c: Scalar, prec: int) -> LaurentSeries:
        if prec <= 0:
            return cls.zero(prec)
        return cls([c] + [0] * (prec - 1), 0)

    @property
    def prec(self) -> int:
        return self.val + len(self.coeffs)

    @property
    def rel_prec(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int) -> Fraction:
        if e >= self.prec:
            raise CoefficientUnknown(f"t^{e} outside known window (< t^{self.prec})")
        if e < self.val:
            return _ZERO
        return self.coeffs[e - self.val]

    def truncate(self, prec: int) -> LaurentSeries:
        if prec > self.prec:
            raise CoefficientUnknown(f"cannot extend precision {self.prec} to {prec}")
        if prec <= self.val:
            return LaurentSeries.zero(prec)
        return LaurentSeries(self.coeffs[: prec - self.val], self.val)

    def _window(self, lo: int, hi: int) -> list[Fraction]:
        return [self.coefficient(e) for e in range(lo, hi)]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, max(self.prec, 1))
        elif isinstance(other, Series):
            other = other.to_laurent()
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        hi = min(self.prec, other.prec)
        lo = min(self.val, other.val, hi)
        a, b = self._window(lo, hi), other._window(lo, hi)
        return LaurentSeries((x + y for x, y in zip(a, b)), lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries((-c for c in self.coeffs), self.val)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Series, LaurentSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentSeries.zero(self.prec)
            return LaurentSeries((c * other for c in self.coeffs), self.val)
        if isinstance(other, Series):
            other = other.to_laurent()
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # For the zero series val == prec, so this covers that case too.
        prec = min(self.prec + other.val, other.prec + self.val)
        val = self.val + other.val
        n = max(prec - val, 0)
        return LaurentSeries(_cauchy(self.coeffs, other.coeffs, n), min(val, prec))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(other, self)

    def __pow__(self, k: int) -> LaurentSeries:
        return series_pow(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("LaurentSeries", self.val, self.coeffs))

    def agrees_with(self, other) -> bool:
        """Equality on the common known window."""
        if isinstance(other, Series):
            other = other.to_laurent()
        hi = min(self.prec, other.prec)
        lo = min(self.val, other.val, hi)
        return self._window(lo, hi) == other._window(lo, hi)

    def derivative(self) -> LaurentSeries:
        return LaurentSeries(
            ((self.val + i) * c for i, c in enumerate(self.coeffs)), self.val - 1
        ) if self.coeffs else LaurentSeries.zero(self.prec - 1)

    def to_series(self, order: int | None = None) -> Series:
        """Convert to a power series; fails if a negative power survives."""
        if self.coeffs and self.val < 0:
            raise NotAPowerSeries(f"nonzero coefficient at t^{self.val}")
        n = self.prec if order is None else order
        if n > self.prec:
            raise CoefficientUnknown(f"order {n} exceeds known precision {self.prec}")
        return Series(self.coefficient(e) for e in range(max(n, 0)))

    def __repr__(self) -> str:
        return (
            f"LaurentSeries([{', '.join(str(c) for c in self.coeffs)}], val={self.val})"
        )

    def __str__(self) -> str:
        terms = [_term(c, self.val + i) for i, c in enumerate(self.coeffs) if c]
        terms.append(f"O(t^{self.prec})")
        return " + ".join(terms)


AnySeries = Union[Series, LaurentSeries]


def _as_laurent(a) -> LaurentSeries:
    if isinstance(a, LaurentSeries):
        return a
    if isinstance(a, Series):
        return a.to_laurent()
    raise TypeError(f"expected a series, got {type(a).__name__}")


def series_invert(a: AnySeries) -> LaurentSeries:
    """Multiplicative inverse; valuation ``-val(a)``, same relative precision."""
    a = _as_laurent(a)
    if a.is_zero():
        raise NotInvertible(f"no known nonzero coefficient below t^{a.prec}")
    return LaurentSeries(_reciprocal(a.coeffs, a.rel_prec), -a.val)


def series_div(a, b) -> LaurentSeries:
    if isinstance(a, (int, Fraction)):
        b = _as_laurent(b)
        a = LaurentSeries.constant(a, b.rel_prec)
    return _as_laurent(a) * series_invert(b)


def series_pow(a, k: int):
    if k < 0:
        raise ValueError("negative exponent; use series_invert")
    if isinstance(a, Series):
        result = Series.constant(1, a.order)
    else:
        result = LaurentSeries.constant(1, a.rel_prec)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def series_derivative(a):
    if isinstance(a, LaurentSeries):
        return a.derivative()
    return Series(i * c for i, c in enumerate(a.coeffs) if i)


def exp_ct(a: Scalar, order: int) -> Series:
    """e^(a t) truncated to ``order`` coefficients."""
    a = Fraction(a)
    coeffs = []
    c = Fraction(1)
    for n in range(order):
        coeffs.append(c)
        c = c * a / (n + 1)
    return Series(coeffs)


def log1m(order: int) -> Series:
    """log(1 - t) = -sum t^k / k, truncated to ``order`` coefficients."""
    return Series([0] + [Fraction(-1, k) for k in range(1, order)]) if order else Series([])


def egf_coefficient(a: AnySeries, n: int) -> Fraction:
    """``n! [t^n] a``: recovers the n-th term of an exponential generating function."""
    if isinstance(a, LaurentSeries):
        if a.coeffs and a.val < 0:
            raise NotAPowerSeries(f"nonzero coefficient at t^{a.val}")
        return a.coefficient(n) * factorial(n)
    return a[n] * factorial(n)
