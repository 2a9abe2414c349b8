"""Dense OLS with classical inference, restricted-vs-unrestricted F tests and AIC ranking."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _backend
from .dist import f_sf, student_t_sf
from .errors import DimensionMismatch, MixedSampleSizes, RankDeficient

RANK_TOL = 1e-10
SIGMA2_FLOOR = 1e-300
_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class DesignMatrix:
    column_names: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        names = tuple(self.column_names)
        vals = np.array(self.values, dtype=float, copy=True)
        if vals.ndim != 2 or vals.shape[1] != len(names):
            raise DimensionMismatch(
                f"design has shape {vals.shape} but {len(names)} column names")
        n, k = vals.shape
        if k < 1 or n <= k:
            raise DimensionMismatch(f"need n > k >= 1, got n={n}, k={k}")
        if len(set(names)) != k:
            raise DimensionMismatch(f"column names are not unique: {names}")
        if not np.all(np.isfinite(vals)):
            raise DimensionMismatch("design contains non-finite entries")
        vals.setflags(write=False)
        object.__setattr__(self, "column_names", names)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_columns(cls, columns: dict[str, Sequence[float]]) -> "DesignMatrix":
        names = list(columns)
        return cls(tuple(names), np.column_stack([np.asarray(columns[c], float) for c in names]))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def k(self) -> int:
        return self.values.shape[1]

    def index(self, name: str) -> int:
        return self.column_names.index(name)

    def drop(self, names: Iterable[str]) -> "DesignMatrix":
        names = set(names)
        keep = [i for i, c in enumerate(self.column_names) if c not in names]
        return DesignMatrix(tuple(self.column_names[i] for i in keep), self.values[:, keep])


@dataclass(frozen=True)
class RegressionResult:
    column_names: tuple[str, ...]
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_statistics: np.ndarray
    p_values: np.ndarray
    residuals: np.ndarray
    rss: float
    sigma2: float
    log_likelihood: float
    aic: float
    nobs: int
    df_resid: int
    covariance: np.ndarray
    exact_fit: bool = False

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def coef(self, name: str) -> float:
        return float(self.coefficients[self.column_names.index(name)])

    def row(self, name: str) -> dict:
        i = self.column_names.index(name)
        return {
            "coefficient": float(self.coefficients[i]),
            "standard_error": float(self.standard_errors[i]),
            "t": float(self.t_statistics[i]),
            "p": float(self.p_values[i]),
        }


def ols(X: DesignMatrix, y) -> RegressionResult:
    """Least squares through a Householder QR factorization of ``X``."""
    y = np.asarray(y, dtype=float)
    if y.shape != (X.n,):
        raise DimensionMismatch(f"y has shape {y.shape}, design has {X.n} rows")
    if not np.all(np.isfinite(y)):
        raise DimensionMismatch("y contains non-finite values")
    n, k = X.n, X.k

    R, qty = _backend.householder_qr(X.values, y)
    diag = np.abs(np.diag(R))
    scale = diag.max()
    for j in range(k):
        if not diag[j] > RANK_TOL * scale:
            raise RankDeficient(X.column_names[j])

    beta = _backend.solve_upper(R, qty[:k])
    resid = y - X.values @ beta
    rss = float(resid @ resid)
    df = n - k
    exact = rss <= 1e-26 * max(float(y @ y), SIGMA2_FLOOR)
    sigma2 = max(rss / df, SIGMA2_FLOOR)

    rinv = _backend.upper_inverse(R)
    xtx_inv = rinv @ rinv.T
    cov = sigma2 * xtx_inv
    cov = 0.5 * (cov + cov.T)
    if exact:
        se = np.zeros(k)
        tvals = np.array([math.copysign(math.inf, b) if b != 0 else 0.0 for b in beta])
        pvals = np.zeros(k)
    else:
        se = np.sqrt(np.diag(cov))
        tvals = beta / se
        pvals = np.array([min(1.0, 2.0 * student_t_sf(abs(t), df)) for t in tvals])

    llf = -0.5 * n * (_LOG_2PI + math.log(max(rss, SIGMA2_FLOOR) / n) + 1.0)
    return RegressionResult(
        column_names=X.column_names,
        coefficients=beta,
        standard_errors=se,
        t_statistics=tvals,
        p_values=pvals,
        residuals=resid,
        rss=rss,
        sigma2=sigma2,
        log_likelihood=llf,
        aic=2.0 * k - 2.0 * llf,
        nobs=n,
        df_resid=df,
        covariance=cov,
        exact_fit=exact,
    )


class WaldF(NamedTuple):
    f_statistic: float
    df1: int
    df2: int

    @property
    def p_value(self) -> float:
        return f_sf(self.f_statistic, self.df1, self.df2)


def wald_f(result: RegressionResult, X: DesignMatrix, y, restricted_columns) -> WaldF:
    """F test that the coefficients on ``restricted_columns`` are jointly zero.

    The restricted model is re-estimated with those columns removed.
    """
    restricted = set(restricted_columns)
    if not restricted:
        raise ValueError("restricted_columns must be nonempty")
    missing = restricted - set(X.column_names)
    if missing:
        raise ValueError(f"columns not in design: {sorted(missing)}")
    if restricted == set(X.column_names):
        raise ValueError("cannot restrict every column")
    if result.nobs != X.n or result.column_names != X.column_names:
        raise DimensionMismatch("result was not estimated on this design")
    sub = ols(X.drop(restricted), y)
    q = len(restricted)
    num = max(sub.rss - result.rss, 0.0) / q
    den = result.rss / result.df_resid
    f = num / den if den > 0 else math.inf
    return WaldF(f, q, result.df_resid)


def aic_compare(results: Sequence[RegressionResult]) -> int:
    """Index of the minimum-AIC fit; ties go to fewer parameters, then lower index."""
    if not results:
        raise ValueError("aic_compare needs at least one result")
    nobs = {r.nobs for r in results}
    if len(nobs) > 1:
        raise MixedSampleSizes(f"candidates use different sample sizes: {sorted(nobs)}")
    return min(range(len(results)), key=lambda i: (results[i].aic, results[i].k, i))
