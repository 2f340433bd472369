"""Exact checks of the recurrences, the PDE and the polynomial identities.

Every check compares exact rationals or exact polynomials; a failure is
recorded with the case identifier and both sides in canonical text form.
Identities with denominators ``(x-1)^m`` are multiplied through by the
largest such power, so each check for fixed p is a polynomial equality.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bivariate import BivariateSeries, build_G, bv_dt, bv_dz
from .exact import binomial, harmonic
from .pbernoulli import PBernoulliTable, Route, bernoulli_oracle, build_table, f_series
from .polynomial import Polynomial
from .series import LaurentSeries, Series, series_derivative

__all__ = [
    "VerificationReport",
    "verify_diff_recurrence",
    "check_diff_recurrence",
    "verify_pde",
    "pde_residual",
    "verify_identity_binomial_harmonic",
    "verify_identity_laurent",
    "verify_identity_collapse",
    "cross_validate",
    "compare_tables",
]


@dataclass
class VerificationReport:
    suite: str
    cases_run: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, got) -> bool:
        self.cases_run += 1
        if expected == got:
            return True
        self.failures.append((case, str(expected), str(got)))
        return False

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status} ({self.cases_run} cases, {len(self.failures)} failures)"]
        for case, expected, got in self.failures[:20]:
            lines.append(f"  {case}: expected {expected}, got {got}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)


# -- differential recurrence -------------------------------------------------


def check_diff_recurrence(fs: list[Series], suite: str = "diffrec") -> VerificationReport:
    """f_p' = p f_p - (p+1)^2/(p+2) f_{p+1} for every p with f_{p+1} available."""
    report = VerificationReport(suite)
    for p in range(len(fs) - 1):
        lhs = series_derivative(fs[p])
        rhs = fs[p] * p - fs[p + 1] * Fraction((p + 1) ** 2, p + 2)
        n = min(lhs.order, rhs.order)
        report.check(f"p={p}", rhs.truncate(n), lhs.truncate(n))
    return report


def verify_diff_recurrence(pmax: int, torder: int, route: Route) -> VerificationReport:
    fs = f_series(route, pmax + 1, torder)
    return check_diff_recurrence(fs, f"diffrec[{route.value}]")


# -- PDE and boundary values -------------------------------------------------


def pde_residual(g: BivariateSeries) -> BivariateSeries:
    """G_t + (1 - z) G_z."""
    one_minus_z = BivariateSeries.from_constants([1, -1] + [0] * g.zorder, g.torder)
    return bv_dt(g) + one_minus_z * bv_dz(g)


def verify_pde(zorder: int, torder: int, g: BivariateSeries | None = None) -> VerificationReport:
    g = build_G(zorder, torder) if g is None else g
    report = VerificationReport("pde")
    residual = pde_residual(g)
    for p, c in enumerate(residual.zcoeffs):
        report.check(f"residual z^{p}", LaurentSeries.zero(c.prec), c)
    for p, c in enumerate(g.zcoeffs):
        report.check(f"G(z,0) z^{p}", Fraction(1, p + 1), c.coefficient(0))
    bern = bernoulli_oracle(g.torder - 1)
    bern_egf = Series(b / math.factorial(n) for n, b in enumerate(bern))
    report.check("G(0,t)", bern_egf, g.zcoeffs[0].to_series(g.torder))
    return report


# -- binomial-harmonic identity ----------------------------------------------


def binomial_harmonic_lhs(n: int, j: int) -> Fraction:
    """sum_{k=j}^{n-1} C(k, j) / (n - k), summed over a common denominator."""
    den = math.lcm(*range(1, n - j + 1))
    return Fraction(sum(binomial(k, j) * (den // (n - k)) for k in range(j, n)), den)


def binomial_harmonic_rhs(n: int, j: int) -> Fraction:
    return binomial(n, j) * (harmonic(n) - harmonic(j))


def verify_identity_binomial_harmonic(nmax: int) -> VerificationReport:
    report = VerificationReport("binomial-harmonic")
    for n in range(1, nmax + 1):
        for j in range(n):
            report.check(f"n={n},j={j}", binomial_harmonic_rhs(n, j), binomial_harmonic_lhs(n, j))
    return report


# -- identities in x, denominators cleared -----------------------------------


@functools.lru_cache(maxsize=None)
def _xm1_pow(k: int) -> Polynomial:
    """(x - 1)^k by repeated multiplication."""
    if k == 0:
        return Polynomial([1])
    return _xm1_pow(k - 1) * Polynomial([-1, 1])


def _lincomb(terms) -> Polynomial:
    """sum c * P over (c, P) pairs, where every P has integer coefficients.

    Everything is scaled to one common denominator so the inner loop is
    integer arithmetic.
    """
    terms = [(Fraction(c), q) for c, q in terms if c]
    den = math.lcm(*(c.denominator for c, _ in terms)) if terms else 1
    acc: list[int] = []
    for c, q in terms:
        scale = c.numerator * (den // c.denominator)
        if len(acc) < len(q.coeffs):
            acc.extend([0] * (len(q.coeffs) - len(acc)))
        for i, a in enumerate(q.coeffs):
            acc[i] += scale * int(a)
    return Polynomial(Fraction(a, den) for a in acc)


def laurent_lhs(p: int) -> Polynomial:
    """(x-1)^{p+1} * (-sum_{k=1}^{p} (1/k) x^{p-k} / (x-1)^{p-k+1})."""
    return _lincomb((Fraction(-1, k), _xm1_pow(k).shift(p - k)) for k in range(1, p + 1))


def laurent_regrouped(p: int) -> Polynomial:
    """(x-1)^{p+1} * -sum_{l=0}^{p-1} (x-1)^{-(l+1)} sum_{k=1}^{p-l} C(p-k, l)/k."""
    return _lincomb(
        (-sum(Fraction(binomial(p - k, l), k) for k in range(1, p - l + 1)), _xm1_pow(p - l))
        for l in range(p)
    )


def laurent_middle(p: int) -> Polynomial:
    """(x-1)^{p+1} * sum_{l=0}^{p-1} C(p,l) (H_l - H_p) / (x-1)^{l+1}."""
    return _lincomb(
        (binomial(p, l) * (harmonic(l) - harmonic(p)), _xm1_pow(p - l)) for l in range(p)
    )


def laurent_rhs(p: int) -> Polynomial:
    """(x-1)^{p+1} * (sum_{l=0}^{p} C(p,l) H_l / (x-1)^{l+1} - H_p x^p / (x-1)^{p+1})."""
    terms = [(binomial(p, l) * harmonic(l), _xm1_pow(p - l)) for l in range(p + 1)]
    terms.append((-harmonic(p), Polynomial.monomial(p)))
    return _lincomb(terms)


def verify_identity_laurent(pmax: int) -> VerificationReport:
    report = VerificationReport("laurent-expansion")
    for p in range(pmax + 1):
        lhs = laurent_lhs(p)
        report.check(f"p={p} regrouped", lhs, laurent_regrouped(p))
        report.check(f"p={p} middle", lhs, laurent_middle(p))
        report.check(f"p={p}", laurent_rhs(p), lhs)
    return report


def collapse_lhs(p: int) -> Polynomial:
    """(x-1)^{p+1} * sum_{l=0}^{p} C(p,l) / (x-1)^{l+1}."""
    return _lincomb((binomial(p, l), _xm1_pow(p - l)) for l in range(p + 1))


def collapse_rhs(p: int) -> Polynomial:
    return Polynomial.monomial(p)


def verify_identity_collapse(pmax: int) -> VerificationReport:
    report = VerificationReport("collapse")
    for p in range(pmax + 1):
        report.check(f"p={p}", collapse_rhs(p), collapse_lhs(p))
    return report


# -- route agreement ---------------------------------------------------------


def compare_tables(tables: dict[Route, PBernoulliTable]) -> VerificationReport:
    """Entrywise agreement of all tables, plus the p = 0 and n = 0 edges."""
    report = VerificationReport("cross")
    ref = next(iter(tables.values()))
    nmax, pmax = ref.nmax, ref.pmax
    bern = bernoulli_oracle(nmax)
    for route, table in tables.items():
        for n, p, v in table.entries():
            if table is not ref:
                report.check(f"{route.value} (n={n},p={p})", ref[n, p], v)
        for n in range(nmax + 1):
            report.check(f"{route.value} B_{n},0 vs oracle", bern[n], table[n, 0])
        for p in range(pmax + 1):
            report.check(f"{route.value} B_0,{p}", Fraction(1), table[0, p])
    return report


def cross_validate(nmax: int, pmax: int) -> VerificationReport:
    return compare_tables({route: build_table(route, nmax, pmax) for route in Route})
