"""Exact p-Bernoulli numbers: four computation routes and exact verifiers."""

from .pbernoulli import (
    PBernoulliTable,
    Route,
    bernoulli_oracle,
    build_table,
    f_p_bivariate,
    f_p_corollary,
    f_p_theorem1,
    table_by_recurrence,
)
from .verify import VerificationReport, cross_validate

__version__ = "0.1.0"
