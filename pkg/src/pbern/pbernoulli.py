"""p-Bernoulli numbers B_{n,p} by four independent routes.

``f_p(t) = sum_n B_{n,p} t^n / n!`` is produced by

* the two-index recurrence ``B_{n+1,p} = p B_{n,p} - (p+1)^2/(p+2) B_{n,p+1}``
  seeded with ``B_{0,p} = 1``;
* the harmonic-number closed form (``Route.THEOREM1``);
* the alternative closed form with ``1/k`` weights (``Route.COROLLARY1``);
* extraction ``f_p = (p+1) [z^p] G(z,t)`` from the bivariate generating
  function ``G = (t + log(1-z)) / (e^t (1-z) - 1)`` (``Route.BIVARIATE``).

The ordinary Bernoulli numbers come from :func:`bernoulli_oracle`, which
does not touch the series code at all.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .bivariate import build_G, z_coefficient
from .exact import binomial, factorial, harmonic
from .series import LaurentSeries, Series, egf_coefficient, exp_ct, series_invert

__all__ = [
    "Route",
    "PBernoulliTable",
    "bernoulli_oracle",
    "table_by_recurrence",
    "f_p_theorem1",
    "f_p_corollary",
    "f_p_bivariate",
    "f_series",
    "build_table",
]


class Route(enum.Enum):
    RECURRENCE = "recurrence"
    THEOREM1 = "theorem1"
    COROLLARY1 = "corollary"
    BIVARIATE = "bivariate"


@dataclass(frozen=True)
class PBernoulliTable:
    nmax: int
    pmax: int
    route: Route
    values: dict[tuple[int, int], Fraction] = field(repr=False)

    def __post_init__(self):
        missing = [
            (n, p)
            for n in range(self.nmax + 1)
            for p in range(self.pmax + 1)
            if (n, p) not in self.values
        ]
        if missing:
            raise ValueError(f"table is missing entries, first {missing[0]}")

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.values[key]

    def entries(self):
        """``(n, p, value)`` sorted by ``(n, p)``."""
        for n in range(self.nmax + 1):
            for p in range(self.pmax + 1):
                yield n, p, self.values[n, p]

    @classmethod
    def from_series(cls, fs: list[Series], nmax: int, route: Route) -> PBernoulliTable:
        values = {
            (n, p): egf_coefficient(f, n) for p, f in enumerate(fs) for n in range(nmax + 1)
        }
        return cls(nmax, len(fs) - 1, route, values)


def bernoulli_oracle(nmax: int) -> list[Fraction]:
    """B_0 .. B_nmax from sum_{k=0}^{n} C(n+1, k) B_k = 0 (B_1 = -1/2)."""
    bs: list[Fraction] = []
    for n in range(nmax + 1):
        if n == 0:
            bs.append(Fraction(1))
            continue
        s = sum(binomial(n + 1, k) * bs[k] for k in range(n))
        bs.append(-s / (n + 1))
    return bs


def table_by_recurrence(nmax: int, pmax: int) -> PBernoulliTable:
    # Row n+1 at column p needs column p+1 of row n, so the seed row is
    # nmax columns wider than the requested rectangle.
    width = pmax + nmax
    row = [Fraction(1)] * (width + 1)
    values = {(0, p): row[p] for p in range(pmax + 1)}
    for n in range(nmax):
        width -= 1
        row = [
            p * row[p] - Fraction((p + 1) ** 2, p + 2) * row[p + 1]
            for p in range(width + 1)
        ]
        for p in range(pmax + 1):
            values[n + 1, p] = row[p]
    return PBernoulliTable(nmax, pmax, Route.RECURRENCE, values)


def _work_order(p: int, torder: int) -> int:
    # (e^t - 1)^(p+1) in a denominator has valuation p+1; one more order is
    # lost to the relative precision of e^t - 1 itself.
    return torder + p + 2


class _Powers:
    """Negative powers of ``e^t - 1`` and positive powers of ``e^t`` at one order."""

    def __init__(self, order: int):
        self.order = order
        self.exp = exp_ct(1, order)
        self.inv = series_invert(self.exp - 1)
        self._inv_pows = [LaurentSeries.constant(1, self.inv.rel_prec), self.inv]
        self._exp_pows = [Series.constant(1, order), self.exp]
        self._ratios: dict[int, LaurentSeries] = {}

    def inv_pow(self, k: int) -> LaurentSeries:
        """(e^t - 1)^(-k)."""
        while len(self._inv_pows) <= k:
            self._inv_pows.append(self._inv_pows[-1] * self.inv)
        return self._inv_pows[k]

    def exp_pow(self, k: int) -> Series:
        """e^(k t)."""
        while len(self._exp_pows) <= k:
            self._exp_pows.append(exp_ct(len(self._exp_pows), self.order))
        return self._exp_pows[k]

    def ratio(self, j: int) -> LaurentSeries:
        """e^(j t) / (e^t - 1)^(j+1)."""
        if j not in self._ratios:
            self._ratios[j] = self.inv_pow(j + 1) * self.exp_pow(j)
        return self._ratios[j]


def _finish(f: LaurentSeries, torder: int, what: str) -> Series:
    assert f.prec >= torder, f"{what}: precision {f.prec} < requested {torder}"
    assert f.is_zero() or f.val >= 0, f"{what}: negative valuation {f.val} survived"
    return f.to_series(torder)


def f_p_theorem1(p: int, torder: int, _powers: _Powers | None = None) -> Series:
    """(p+1) e^{pt} (t - H_p) / (e^t-1)^{p+1} + (p+1) sum_{k=1}^{p} C(p,k) H_k / (e^t-1)^{k+1}"""
    pw = _powers or _Powers(_work_order(p, torder))
    t = Series.monomial(1, pw.order)
    f = pw.ratio(p) * (t - harmonic(p))
    for k in range(1, p + 1):
        f = f + pw.inv_pow(k + 1) * (binomial(p, k) * harmonic(k))
    return _finish(f * (p + 1), torder, f"theorem1 p={p}")


def f_p_corollary(p: int, torder: int, _powers: _Powers | None = None) -> Series:
    """(p+1) t e^{pt} / (e^t-1)^{p+1} - (p+1) sum_{k=1}^{p} (1/k) e^{(p-k)t} / (e^t-1)^{p-k+1}"""
    pw = _powers or _Powers(_work_order(p, torder))
    t = Series.monomial(1, pw.order)
    f = pw.ratio(p) * t
    for k in range(1, p + 1):
        f = f - pw.ratio(p - k) * Fraction(1, k)
    return _finish(f * (p + 1), torder, f"corollary p={p}")


def f_p_bivariate(pmax: int, torder: int) -> list[Series]:
    """f_0 .. f_pmax as (p+1) times the z^p coefficient of G(z, t)."""
    g = build_G(pmax + 1, max(torder, 2))
    return [
        _finish(z_coefficient(g, p) * (p + 1), torder, f"bivariate p={p}")
        for p in range(pmax + 1)
    ]


def f_series(route: Route, pmax: int, torder: int) -> list[Series]:
    """f_0 .. f_pmax truncated to ``torder`` coefficients, computed by ``route``."""
    if route is Route.RECURRENCE:
        table = table_by_recurrence(max(torder - 1, 0), pmax)
        return [
            Series(table[n, p] / factorial(n) for n in range(torder))
            for p in range(pmax + 1)
        ]
    if route is Route.BIVARIATE:
        return f_p_bivariate(pmax, torder)
    fn = f_p_theorem1 if route is Route.THEOREM1 else f_p_corollary
    pw = _Powers(_work_order(pmax, torder))
    return [fn(p, torder, pw) for p in range(pmax + 1)]


def build_table(route: Route, nmax: int, pmax: int) -> PBernoulliTable:
    if route is Route.RECURRENCE:
        return table_by_recurrence(nmax, pmax)
    return PBernoulliTable.from_series(f_series(route, pmax, nmax + 1), nmax, route)
