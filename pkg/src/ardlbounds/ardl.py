"""ARDL bounds testing: UECM lag search, bounds F test, long-run recovery and the conditional ECM.

Two-step scheme. Step one estimates the unrestricted error-correction
model

    D(y)_t = c + d_y y_{t-1} + sum_r d_r x_r,{t-l_r}
             + sum_{i=1..p} a_i D(y)_{t-i} + sum_r sum_i b_{r,i} D(x_r)_{t-i} + e_t

with lags picked by AIC; the bounds F test restricts the level terms and
the long-run coefficients are ``-d_r / d_y``. Step two replaces the
level block with the lagged equilibrium error ``ECT_{t-1}`` and
re-estimates the short-run equation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from datetime import date
from typing import Mapping, Sequence

import numpy as np

from .diagnostics import LmTestResult, arch_lm, breusch_godfrey
from .dist import BoundsCriticalValues, bounds_critical_values, stars, student_t_sf
from .errors import DegenerateAdjustment, InputError, SampleTooSmall
from .linalg import DesignMatrix, RegressionResult, aic_compare, ols, wald_f
from .series import Panel


@dataclass(frozen=True)
class ArdlSpec:
    """Variables and lag bounds.

    ``level_lags[r]`` is the lag at which regressor ``r`` enters the level
    block (0: date t, 1: date t-1). ``contemporaneous[r]`` adds D(x_r)_t
    to the candidate short-run terms, so lag order q means lags 0..q
    instead of 1..q.
    """

    dependent: str = "EPU"
    regressors: tuple[str, ...] = ("COVID", "OIL")
    max_p: int = 4
    max_q: int = 4
    level_lags: tuple[int, ...] = (0, 1)
    contemporaneous: tuple[bool, ...] = (True, True)

    def __post_init__(self):
        object.__setattr__(self, "regressors", tuple(self.regressors))
        object.__setattr__(self, "level_lags", tuple(self.level_lags))
        object.__setattr__(self, "contemporaneous", tuple(self.contemporaneous))
        if self.max_p < 1 or self.max_q < 0:
            raise ValueError("need max_p >= 1 and max_q >= 0")
        r = len(self.regressors)
        if r < 1 or len(self.level_lags) != r or len(self.contemporaneous) != r:
            raise ValueError("level_lags and contemporaneous need one entry per regressor")
        if any(l not in (0, 1) for l in self.level_lags):
            raise ValueError("level_lags entries must be 0 or 1")


@dataclass(frozen=True)
class Estimate:
    coefficient: float
    standard_error: float
    t: float
    p: float

    @property
    def stars(self) -> str:
        return stars(self.p)

    @classmethod
    def from_result(cls, result: RegressionResult, name: str) -> "Estimate":
        return cls(**result.row(name))

    def as_dict(self) -> dict:
        return {"coefficient": self.coefficient, "standard_error": self.standard_error,
                "t": self.t, "p": self.p, "significance": self.stars}


# --- design construction ----------------------------------------------------

def _lagname(name: str, i: int) -> str:
    return name if i == 0 else f"{name}(-{i})"


def level_term_names(spec: ArdlSpec) -> tuple[str, ...]:
    return (_lagname(spec.dependent, 1),) + tuple(
        _lagname(r, l) for r, l in zip(spec.regressors, spec.level_lags))


def _diff_lags(spec: ArdlSpec, qs: Sequence[int]) -> list[tuple[str, range]]:
    out = []
    for r, q, contemp in zip(spec.regressors, qs, spec.contemporaneous):
        out.append((r, range(0 if contemp else 1, q + 1)))
    return out


def _first_row(spec: ArdlSpec, p: int, qs: Sequence[int]) -> int:
    # D(v)_{t-i} needs v_{t-i-1}
    return max([1, p + 1, *(q + 1 for q in qs), *spec.level_lags])


def short_run_terms(spec: ArdlSpec, p: int, qs: Sequence[int]) -> list[str]:
    names = [f"D({_lagname(spec.dependent, i)})" for i in range(1, p + 1)]
    for r, lags in _diff_lags(spec, qs):
        names += [f"D({_lagname(r, i)})" for i in lags]
    return names


def _short_run_columns(panel: Panel, spec: ArdlSpec, p: int, qs: Sequence[int],
                       rows: np.ndarray) -> dict[str, np.ndarray]:
    y = panel[spec.dependent]
    cols = {}
    for i in range(1, p + 1):
        cols[f"D({_lagname(spec.dependent, i)})"] = y[rows - i] - y[rows - i - 1]
    for r, lags in _diff_lags(spec, qs):
        x = panel[r]
        for i in lags:
            cols[f"D({_lagname(r, i)})"] = x[rows - i] - x[rows - i - 1]
    return cols


def uecm_design(panel: Panel, spec: ArdlSpec, p: int, qs: Sequence[int],
                first: int | None = None) -> tuple[DesignMatrix, np.ndarray, np.ndarray]:
    """Design, target and row indices of the UECM for lag orders ``(p, qs)``."""
    if first is None:
        first = _first_row(spec, p, qs)
    rows = np.arange(first, len(panel))
    y = panel[spec.dependent]
    cols: dict[str, np.ndarray] = {"const": np.ones(len(rows)),
                                   _lagname(spec.dependent, 1): y[rows - 1]}
    for r, l in zip(spec.regressors, spec.level_lags):
        cols[_lagname(r, l)] = panel[r][rows - l]
    cols.update(_short_run_columns(panel, spec, p, qs, rows))
    return DesignMatrix.from_columns(cols), y[rows] - y[rows - 1], rows


# --- step one ---------------------------------------------------------------

@dataclass(frozen=True)
class UecmFit:
    spec: ArdlSpec
    regression: RegressionResult
    design: DesignMatrix
    target: np.ndarray
    level_terms: tuple[str, ...]
    p: int
    qs: tuple[int, ...]
    sample: tuple[date, ...]
    candidates_evaluated: int

    @property
    def lags(self) -> tuple[int, ...]:
        return (self.p, *self.qs)


def candidate_orders(spec: ArdlSpec) -> list[tuple[int, tuple[int, ...]]]:
    """Lag orders in canonical (tie-breaking) order."""
    qgrid = itertools.product(range(spec.max_q + 1), repeat=len(spec.regressors))
    return [(p, tuple(qs)) for p, qs in itertools.product(range(1, spec.max_p + 1), list(qgrid))]


def _check_panel(panel: Panel, spec: ArdlSpec) -> None:
    missing = [c for c in (spec.dependent, *spec.regressors) if c not in panel.columns]
    if missing:
        raise InputError(f"panel lacks columns {missing}")


def select_and_fit_uecm(panel: Panel, spec: ArdlSpec = ArdlSpec()) -> UecmFit:
    """AIC grid search over ``p in 1..max_p`` and ``q_r in 0..max_q``.

    All candidates share the sample implied by the maximal lags; the
    winner is re-fitted on its own maximal sample.
    """
    _check_panel(panel, spec)
    orders = candidate_orders(spec)
    common_first = _first_row(spec, spec.max_p, [spec.max_q] * len(spec.regressors))
    n_common = len(panel) - common_first
    k_max = 2 + len(spec.regressors) + len(short_run_terms(
        spec, spec.max_p, [spec.max_q] * len(spec.regressors)))
    if n_common < k_max + 5:
        raise SampleTooSmall(
            f"{n_common} usable observations after lags; the largest candidate has "
            f"{k_max} parameters and needs at least {k_max + 5}")

    fits = []
    for p, qs in orders:
        X, target, _ = uecm_design(panel, spec, p, qs, first=common_first)
        fits.append(ols(X, target))
    p, qs = orders[aic_compare(fits)]

    X, target, rows = uecm_design(panel, spec, p, qs)
    return UecmFit(
        spec=spec,
        regression=ols(X, target),
        design=X,
        target=target,
        level_terms=level_term_names(spec),
        p=p,
        qs=qs,
        sample=tuple(panel.dates[i] for i in rows),
        candidates_evaluated=len(orders),
    )


# --- bounds test ------------------------------------------------------------

@dataclass(frozen=True)
class BoundsResult:
    f_statistic: float
    k: int
    df1: int
    df2: int
    critical: BoundsCriticalValues
    decision: str

    def as_dict(self) -> dict:
        return {"f_statistic": self.f_statistic, "k": self.k, "df1": self.df1, "df2": self.df2,
                "lower_i0": self.critical.lower_i0, "upper_i1": self.critical.upper_i1,
                "level": self.critical.level, "case": self.critical.case,
                "decision": self.decision}


def bounds_decision(f_statistic: float, critical: BoundsCriticalValues) -> str:
    if f_statistic > critical.upper_i1:
        return "cointegration"
    if f_statistic < critical.lower_i0:
        return "no_cointegration"
    return "inconclusive"


def bounds_test(fit: UecmFit, level: float = 0.05, case: str = "II") -> BoundsResult:
    """Joint F test on the level terms, compared with the I(0)/I(1) bounds."""
    w = wald_f(fit.regression, fit.design, fit.target, fit.level_terms)
    k = len(fit.spec.regressors)
    critical = bounds_critical_values(k, level, case)
    return BoundsResult(w.f_statistic, k, w.df1, w.df2, critical,
                        bounds_decision(w.f_statistic, critical))


# --- long run ---------------------------------------------------------------

DEGENERATE_TOL = 1e-8


def long_run_coefficients(fit: UecmFit) -> dict[str, Estimate]:
    """``theta_x = -d_x / d_y`` for each level regressor and the constant.

    Standard errors by the delta method on the UECM covariance; keys are
    the regressor names plus ``"const"``.
    """
    res = fit.regression
    names = res.column_names
    iy = names.index(fit.level_terms[0])
    dy = float(res.coefficients[iy])
    if abs(dy) <= DEGENERATE_TOL:
        raise DegenerateAdjustment(f"adjustment coefficient {dy:.3g} is numerically zero")
    out = {}
    terms = [("const", "const")] + list(zip(fit.spec.regressors, fit.level_terms[1:]))
    for key, term in terms:
        ix = names.index(term)
        dx = float(res.coefficients[ix])
        theta = -dx / dy
        grad = np.zeros(len(names))
        grad[ix] = -1.0 / dy
        grad[iy] = dx / dy**2
        se = float(np.sqrt(max(grad @ res.covariance @ grad, 0.0)))
        t = theta / se if se > 0 else float("inf")
        p = min(1.0, 2.0 * student_t_sf(abs(t), res.df_resid)) if se > 0 else 0.0
        out[key] = Estimate(theta, se, t, p)
    return out


# --- step two ---------------------------------------------------------------

@dataclass(frozen=True)
class ArdlFit:
    spec: ArdlSpec
    lags: tuple[int, ...]
    uecm: UecmFit
    bounds: BoundsResult
    long_run: Mapping[str, Estimate]
    long_run_constant: Estimate
    ect: Estimate
    short_run: Mapping[str, Estimate]
    ecm: RegressionResult
    ecm_design: DesignMatrix
    sample: tuple[date, ...]
    diagnostics: Mapping[str, LmTestResult] = field(default_factory=dict)

    @property
    def ect_negative(self) -> bool:
        return self.ect.coefficient < 0

    @property
    def adjustment_gap(self) -> float:
        """|ECT coefficient - UECM coefficient on the lagged dependent level|."""
        return abs(self.ect.coefficient - self.uecm.regression.coef(self.uecm.level_terms[0]))


def equilibrium_error(panel: Panel, spec: ArdlSpec, long_run: Mapping[str, Estimate]) -> np.ndarray:
    ect = panel[spec.dependent] - long_run["const"].coefficient
    for r in spec.regressors:
        ect = ect - long_run[r].coefficient * panel[r]
    return ect


def fit_ecm(panel: Panel, uecm: UecmFit, long_run: Mapping[str, Estimate] | None = None,
            *, bg_lags: Sequence[int] | int = 2, arch_lags: int = 4,
            level: float = 0.05, case: str = "II") -> ArdlFit:
    """Conditional ECM: D(y)_t on const, ECT_{t-1} and the selected short-run terms."""
    spec = uecm.spec
    _check_panel(panel, spec)
    if long_run is None:
        long_run = long_run_coefficients(uecm)
    ect_full = equilibrium_error(panel, spec, long_run)
    rows = np.arange(_first_row(spec, uecm.p, uecm.qs), len(panel))
    y = panel[spec.dependent]
    cols = {"const": np.ones(len(rows)), "ECT(-1)": ect_full[rows - 1]}
    cols.update(_short_run_columns(panel, spec, uecm.p, uecm.qs, rows))
    X = DesignMatrix.from_columns(cols)
    res = ols(X, y[rows] - y[rows - 1])

    if isinstance(bg_lags, int):
        bg_lags = [bg_lags]
    diags: dict[str, LmTestResult] = {}
    for i, lags in enumerate(bg_lags):
        key = "serial_correlation" if i == 0 else f"serial_correlation_lag{lags}"
        diags[key] = breusch_godfrey(res, X, lags)
    diags["arch"] = arch_lm(res.residuals, arch_lags)

    return ArdlFit(
        spec=spec,
        lags=uecm.lags,
        uecm=uecm,
        bounds=bounds_test(uecm, level, case),
        long_run={r: long_run[r] for r in spec.regressors},
        long_run_constant=long_run["const"],
        ect=Estimate.from_result(res, "ECT(-1)"),
        short_run={name: Estimate.from_result(res, name)
                   for name in X.column_names if name != "ECT(-1)"},
        ecm=res,
        ecm_design=X,
        sample=tuple(panel.dates[i] for i in rows),
        diagnostics=diags,
    )


def estimate(panel: Panel, spec: ArdlSpec = ArdlSpec(), **kwargs) -> ArdlFit:
    """Full pipeline: lag search, bounds test, long run, conditional ECM, diagnostics."""
    uecm = select_and_fit_uecm(panel, spec)
    return fit_ecm(panel, uecm, long_run_coefficients(uecm), **kwargs)
