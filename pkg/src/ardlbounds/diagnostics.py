"""Residual LM tests: Breusch-Godfrey serial correlation and Engle's ARCH."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dist import chi_square_sf
from .errors import SampleTooSmall
from .linalg import DesignMatrix, RegressionResult, ols

LEVEL = 0.05


@dataclass(frozen=True)
class LmTestResult:
    name: str
    lags: int
    statistic: float
    p_value: float
    nobs: int

    @property
    def verdict(self) -> str:
        return "pass" if self.p_value > LEVEL else "fail"

    def as_dict(self) -> dict:
        return {"name": self.name, "lags": self.lags, "statistic": self.statistic,
                "p_value": self.p_value, "nobs": self.nobs, "verdict": self.verdict}


def breusch_godfrey(original: RegressionResult, X: DesignMatrix, lags: int = 2) -> LmTestResult:
    """LM test for serial correlation up to order ``lags``.

    Residuals are regressed on the original regressors plus their own
    lags, with pre-sample lags set to zero; the statistic is n times the
    uncentered R-squared of that auxiliary fit.
    """
    if lags < 1:
        raise ValueError("lags must be >= 1")
    e = np.asarray(original.residuals, dtype=float)
    n = len(e)
    if n != X.n:
        raise ValueError("residuals and design differ in length")
    if n < X.k + lags + 5:
        raise SampleTooSmall(f"Breusch-Godfrey with {lags} lags needs n >= {X.k + lags + 5}")
    ee = float(e @ e)
    if ee == 0.0:
        return LmTestResult("BreuschGodfrey", lags, 0.0, 1.0, n)
    lagged = np.zeros((n, lags))
    for i in range(1, lags + 1):
        lagged[i:, i - 1] = e[:-i]
    aux = DesignMatrix(X.column_names + tuple(f"resid_lag{i}" for i in range(1, lags + 1)),
                       np.hstack([X.values, lagged]))
    fit = ols(aux, e)
    stat = max(n * (1.0 - fit.rss / ee), 0.0)
    return LmTestResult("BreuschGodfrey", lags, stat, chi_square_sf(stat, lags), n)


def arch_lm(residuals, lags: int = 4) -> LmTestResult:
    """Engle's LM test: regress e_t^2 on a constant and ``lags`` of its own lags."""
    if lags < 1:
        raise ValueError("lags must be >= 1")
    e2 = np.asarray(residuals, dtype=float) ** 2
    n = len(e2)
    if n < lags + 10:
        raise SampleTooSmall(f"ARCH LM with {lags} lags needs n >= {lags + 10}")
    target = e2[lags:]
    m = len(target)
    tss = float(((target - target.mean()) ** 2).sum())
    if tss == 0.0:
        return LmTestResult("ArchLm", lags, 0.0, 1.0, m)
    cols = {"const": np.ones(m)}
    for i in range(1, lags + 1):
        cols[f"sq_resid_lag{i}"] = e2[lags - i:n - i]
    fit = ols(DesignMatrix.from_columns(cols), target)
    stat = max(m * (1.0 - fit.rss / tss), 0.0)
    return LmTestResult("ArchLm", lags, stat, chi_square_sf(stat, lags), m)
