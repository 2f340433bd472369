"""Series in z whose coefficients are Laurent series in t.

The z-outer nesting matters: ``e^t (1 - z) - 1`` has z^0 coefficient
``e^t - 1``, which is a unit among Laurent series in t, so the whole
denominator of the generating function can be inverted z-adically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IndexOutOfWindow, NotInvertible
from .series import LaurentSeries, Series, exp_ct, log1m, series_invert

__all__ = [
    "BivariateSeries",
    "bv_add",
    "bv_mul",
    "bv_scale",
    "bv_invert",
    "bv_dt",
    "bv_dz",
    "z_coefficient",
    "build_G",
]


class BivariateSeries:
    """``sum_p zcoeffs[p](t) z^p`` known for ``p < zorder`` and below ``t^torder``.

    All coefficients are cut to one shared t-window, the narrowest among them
    unless a smaller ``torder`` is requested.
    """

    __slots__ = ("zcoeffs", "torder")

    def __init__(self, zcoeffs: Iterable[LaurentSeries | Series], torder: int | None = None):
        cs = [c.to_laurent() if isinstance(c, Series) else c for c in zcoeffs]
        if torder is None:
            if not cs:
                raise ValueError("torder is required for an empty bivariate series")
            torder = min(c.prec for c in cs)
        elif cs and torder > min(c.prec for c in cs):
            raise ValueError(f"requested torder {torder} exceeds known t-precision")
        self.torder: int = torder
        self.zcoeffs: tuple[LaurentSeries, ...] = tuple(c.truncate(torder) for c in cs)

    @property
    def zorder(self) -> int:
        return len(self.zcoeffs)

    @classmethod
    def from_constants(cls, values: Sequence, torder: int) -> BivariateSeries:
        """A t-independent series ``sum values[p] z^p``."""
        return cls([LaurentSeries.constant(v, torder) for v in values], torder)

    @classmethod
    def one(cls, zorder: int, torder: int) -> BivariateSeries:
        return cls.from_constants([1] + [0] * (zorder - 1), torder)

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        n = min(self.zorder, other.zorder)
        return BivariateSeries(
            [self.zcoeffs[p] + other.zcoeffs[p] for p in range(n)],
            min(self.torder, other.torder),
        )

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries([-c for c in self.zcoeffs], self.torder)

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariateSeries([c * other for c in self.zcoeffs], self.torder)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self.zorder, other.zorder)
        out = []
        for p in range(n):
            acc = self.zcoeffs[0] * other.zcoeffs[p]
            for i in range(1, p + 1):
                acc = acc + self.zcoeffs[i] * other.zcoeffs[p - i]
            out.append(acc)
        if not out:
            return BivariateSeries([], min(self.torder, other.torder))
        return BivariateSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.torder == other.torder and self.zcoeffs == other.zcoeffs

    def __hash__(self) -> int:
        return hash(("BivariateSeries", self.torder, self.zcoeffs))

    def agrees_with(self, other: BivariateSeries) -> bool:
        """Equality on the common window in both variables."""
        n = min(self.zorder, other.zorder)
        hi = min(self.torder, other.torder)
        return all(
            self.zcoeffs[p].truncate(hi) == other.zcoeffs[p].truncate(hi) for p in range(n)
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.zcoeffs)

    def __repr__(self) -> str:
        return f"BivariateSeries(zorder={self.zorder}, torder={self.torder})"

    def __str__(self) -> str:
        lines = [f"z^{p}: {c}" for p, c in enumerate(self.zcoeffs)]
        lines.append(f"O(z^{self.zorder})")
        return "\n".join(lines)


def bv_add(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a + b


def bv_mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a * b


def bv_scale(a: BivariateSeries, c) -> BivariateSeries:
    return a * Fraction(c)


def bv_invert(a: BivariateSeries) -> BivariateSeries:
    """Inverse by the z-adic recursion b_n = -b_0 * sum_{k=1}^{n} a_k b_{n-k}."""
    if not a.zcoeffs:
        return a
    a0 = a.zcoeffs[0]
    if a0.is_zero():
        raise NotInvertible("z^0 coefficient is zero on its known window")
    b0 = series_invert(a0)
    out = [b0]
    for n in range(1, a.zorder):
        acc = a.zcoeffs[1] * out[n - 1]
        for k in range(2, n + 1):
            acc = acc + a.zcoeffs[k] * out[n - k]
        out.append(-(b0 * acc))
    return BivariateSeries(out)


def bv_dt(a: BivariateSeries) -> BivariateSeries:
    return BivariateSeries([c.derivative() for c in a.zcoeffs], a.torder - 1)


def bv_dz(a: BivariateSeries) -> BivariateSeries:
    return BivariateSeries(
        [a.zcoeffs[p + 1] * (p + 1) for p in range(a.zorder - 1)], a.torder
    )


def z_coefficient(a: BivariateSeries, p: int) -> LaurentSeries:
    if not 0 <= p < a.zorder:
        raise IndexOutOfWindow(f"z^{p} outside known window [0, {a.zorder})")
    return a.zcoeffs[p]


def build_G(zorder: int, torder: int) -> BivariateSeries:
    """(t + log(1 - z)) / (e^t (1 - z) - 1), cut to ``z^zorder`` and ``t^torder``.

    The z^k coefficient of the inverted denominator has t-valuation -(k+1)
    and loses one more order per z-step; cutting that inverse to a shared
    window costs one order more, so the inputs carry ``torder + zorder + 1``
    terms.
    """
    if zorder < 1 or torder < 2:
        raise ValueError("build_G needs zorder >= 1 and torder >= 2")
    m = torder + zorder + 1
    et = exp_ct(1, m)
    denom = BivariateSeries(
        [et - 1, -et] + [LaurentSeries.zero(m)] * (zorder - 2), m
    ) if zorder >= 2 else BivariateSeries([et - 1], m)
    t = Series.monomial(1, m)
    log_z = log1m(zorder)
    numer = BivariateSeries(
        [t] + [LaurentSeries.constant(log_z[p], m) for p in range(1, zorder)], m
    )
    g = numer * bv_invert(denom)
    assert g.torder >= torder, f"precision budget short: {g.torder} < {torder}"
    g = BivariateSeries(g.zcoeffs, torder)
    for p, c in enumerate(g.zcoeffs):
        assert c.is_zero() or c.val >= 0, f"negative t-valuation survived at z^{p}"
    return g
