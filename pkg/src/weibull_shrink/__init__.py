"""Shrinkage estimation of the Weibull shape parameter under type-II censoring.

The library works in the pivotal parameterization: for a censored sample of the
m smallest of n lifetimes, the statistic t = h * b_hat is treated as a scaled
chi-square with h degrees of freedom, so every estimator and every risk formula
is a function of (h, t) plus the prior guess interval (beta1, beta2).

Modules:
    model       -- validated value types (samples, intervals, configs, reports)
    specfun     -- log-gamma, gamma ratios, regularized lower incomplete gamma
    estimators  -- point estimators of the shape parameter
    risk        -- exact relative bias / relative MSE / efficiency formulas
    montecarlo  -- seeded simulation: empirical risk, calibration constants
    tables      -- efficiency table grids, CSV/JSON writers, reference audit
    cli         -- command line front end
"""

from weibull_shrink.model import (
    CensoredSample,
    GuessInterval,
    PivotalContext,
    RiskReport,
    ShrinkageConfig,
    WeibullParams,
    departures,
)

__version__ = "0.1.0"

__all__ = [
    "CensoredSample",
    "GuessInterval",
    "PivotalContext",
    "RiskReport",
    "ShrinkageConfig",
    "WeibullParams",
    "departures",
    "__version__",
]
