"""Augmented Dickey-Fuller test with AIC lag selection."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dist import AdfSpec, CriticalValues, adf_asymptotic_critical_values, adf_critical_values
from .errors import TooShort
from .linalg import DesignMatrix, RegressionResult, aic_compare, ols
from .series import DatedSeries


@dataclass(frozen=True)
class AdfResult:
    statistic: float
    chosen_lag: int
    max_lag: int
    spec: str
    n_effective: int
    critical_values: CriticalValues
    asymptotic_critical_values: CriticalValues
    significance: str
    regression: RegressionResult

    @property
    def stars(self) -> str:
        return {"1%": "***", "5%": "**", "10%": "*"}.get(self.significance, "")


def classify(statistic: float, cv: CriticalValues) -> str:
    if statistic <= cv.cv1:
        return "1%"
    if statistic <= cv.cv5:
        return "5%"
    if statistic <= cv.cv10:
        return "10%"
    return "none"


def default_max_lag(n: int) -> int:
    """Schwert's rule ``floor(12 (n/100)^(1/4))``, capped at ``n/4``."""
    return min(int(math.floor(12.0 * (n / 100.0) ** 0.25)), n // 4)


def _design(y: np.ndarray, p: int, first: int, spec: str) -> tuple[DesignMatrix, np.ndarray]:
    # rows j = first..n-2 regress dy[j] = y[j+1] - y[j] on y[j] and dy[j-1..j-p]
    dy = np.diff(y)
    rows = np.arange(first, len(dy))
    cols: dict[str, np.ndarray] = {}
    if spec in ("c", "ct"):
        cols["const"] = np.ones(len(rows))
    if spec == "ct":
        cols["trend"] = (rows + 1).astype(float)
    cols["level_lag1"] = y[rows]
    for i in range(1, p + 1):
        cols[f"diff_lag{i}"] = dy[rows - i]
    return DesignMatrix.from_columns(cols), dy[rows]


def adf_test(s: DatedSeries | np.ndarray, max_lag: int | None = None,
             spec: AdfSpec = "c") -> AdfResult:
    """ADF t-test on the lagged level.

    Every lag order ``0..max_lag`` is fitted on the common sample implied
    by ``max_lag``; the AIC winner is re-fitted on its own maximal sample.
    """
    y = np.asarray(s.values if isinstance(s, DatedSeries) else s, dtype=float)
    n = len(y)
    if max_lag is None:
        max_lag = default_max_lag(n)
    if max_lag < 0:
        raise ValueError("max_lag must be non-negative")
    if n < max_lag + 10:
        raise TooShort(f"ADF with max_lag={max_lag} needs {max_lag + 10} observations, got {n}")

    candidates = [ols(*_design(y, p, max_lag, spec)) for p in range(max_lag + 1)]
    best = aic_compare(candidates)
    X, target = _design(y, best, best, spec)
    fit = ols(X, target)
    stat = float(fit.t_statistics[X.index("level_lag1")])
    cv = adf_critical_values(spec, fit.nobs)
    return AdfResult(
        statistic=stat,
        chosen_lag=best,
        max_lag=max_lag,
        spec=spec,
        n_effective=fit.nobs,
        critical_values=cv,
        asymptotic_critical_values=adf_asymptotic_critical_values(spec),
        significance=classify(stat, cv),
        regression=fit,
    )
