from fractions import Fraction as F

import pytest

from pbern import verify as V
from pbern.bivariate import BivariateSeries, build_G
from pbern.pbernoulli import PBernoulliTable, Route, build_table, f_series
from pbern.polynomial import Polynomial
from pbern.series import LaurentSeries, Series


def test_report_bookkeeping():
    r = V.VerificationReport("demo")
    assert r.check("a", 1, 1)
    assert not r.check("b", F(1, 2), F(1, 3))
    assert r.cases_run == 2 and not r.passed
    assert r.failures == [("b", "1/2", "1/3")]
    assert "FAIL" in r.summary() and "b: expected 1/2, got 1/3" in r.summary()


@pytest.mark.parametrize("route", list(Route))
def test_diff_recurrence_small(route):
    r = V.verify_diff_recurrence(4, 10, route)
    assert r.passed and r.cases_run == 5


def test_diff_recurrence_p0_instance():
    f0, f1 = f_series(Route.THEOREM1, 1, 12)
    lhs = Series(i * c for i, c in enumerate(f0.coeffs) if i)
    assert lhs.agrees_with(f1 * F(-1, 2))


def test_diff_recurrence_catches_corrupted_f1():
    fs = f_series(Route.RECURRENCE, 4, 10)
    bad = list(fs[1].coeffs)
    bad[3] += 1
    fs[1] = Series(bad)
    r = V.check_diff_recurrence(fs)
    failed = {case for case, _, _ in r.failures}
    assert failed == {"p=0", "p=1"}


def test_pde_small():
    r = V.verify_pde(6, 9)
    # 5 residual coefficients, 6 boundary values at t = 0, one z = 0 row
    assert r.passed and r.cases_run == 12


def test_pde_catches_corruption():
    g = build_G(5, 8)
    cs = list(g.zcoeffs)
    cs[2] = cs[2] + LaurentSeries.constant(F(1, 1000), g.torder)
    r = V.verify_pde(5, 8, g=BivariateSeries(cs, g.torder))
    failed = {case for case, _, _ in r.failures}
    assert "G(z,0) z^2" in failed
    assert "residual z^1" in failed


def test_binomial_harmonic_hand_cases():
    assert V.binomial_harmonic_lhs(3, 1) == F(5, 2) == V.binomial_harmonic_rhs(3, 1)
    for n in range(1, 30):
        assert V.binomial_harmonic_lhs(n, n - 1) == 1 == V.binomial_harmonic_rhs(n, n - 1)


def test_binomial_harmonic_lhs_by_plain_summation():
    for n in range(1, 25):
        for j in range(n):
            plain = sum((F(V.binomial(k, j), n - k) for k in range(j, n)), F(0))
            assert V.binomial_harmonic_lhs(n, j) == plain


def test_laurent_identity_p1_by_hand():
    x = Polynomial.x()
    assert V.laurent_lhs(1) == -(x - 1)
    assert V.laurent_rhs(1) == 1 - x
    assert V.laurent_lhs(0).is_zero() and V.laurent_rhs(0).is_zero()


def test_laurent_identity_by_evaluation():
    # Independent of the cleared-denominator form: evaluate the original
    # rational functions at a few points away from x = 1.
    for p in range(8):
        for x in (F(3), F(-2, 5), F(7, 3)):
            lhs = -sum((F(1, k) * x ** (p - k) / (x - 1) ** (p - k + 1) for k in range(1, p + 1)), F(0))
            rhs = sum(
                (V.binomial(p, l) * V.harmonic(l) / (x - 1) ** (l + 1) for l in range(p + 1)), F(0)
            ) - V.harmonic(p) * x**p / (x - 1) ** (p + 1)
            assert lhs == rhs
            assert V.laurent_lhs(p)(x) == lhs * (x - 1) ** (p + 1)


def test_collapse_small():
    x = Polynomial.x()
    assert V.collapse_lhs(2) == (x - 1) ** 2 + 2 * (x - 1) + 1 == x**2
    assert V.collapse_lhs(0) == Polynomial([1])


def test_identity_verifiers_small_ranges():
    assert V.verify_identity_binomial_harmonic(20).passed
    assert V.verify_identity_laurent(15).passed
    assert V.verify_identity_collapse(15).passed


def test_identity_verifiers_catch_mutations(monkeypatch):
    monkeypatch.setattr(V, "binomial_harmonic_rhs", lambda n, j: V.binomial(n, j) * (V.harmonic(n) - V.harmonic(j + 1)))
    assert not V.verify_identity_binomial_harmonic(6).passed
    monkeypatch.setattr(V, "collapse_rhs", lambda p: Polynomial.monomial(p + 1))
    assert not V.verify_identity_collapse(4).passed
    monkeypatch.setattr(V, "laurent_rhs", lambda p: Polynomial.monomial(p))
    r = V.verify_identity_laurent(4)
    assert [c for c, _, _ in r.failures] == [f"p={p}" for p in range(5)]


def test_cross_validate_small():
    r = V.cross_validate(6, 4)
    assert r.passed
    # 3 compared routes x 35 entries + 4 routes x (7 + 5) edge checks
    assert r.cases_run == 3 * 35 + 4 * 12


def test_compare_tables_catches_fault():
    tables = {r: build_table(r, 4, 3) for r in Route}
    bad = dict(tables[Route.BIVARIATE].values)
    bad[2, 3] += 1
    tables[Route.BIVARIATE] = PBernoulliTable(4, 3, Route.BIVARIATE, bad)
    r = V.compare_tables(tables)
    assert [c for c, _, _ in r.failures] == ["bivariate (n=2,p=3)"]
