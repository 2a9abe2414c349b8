"""Distribution functions and static critical-value tables.

CDFs go through the regularized incomplete beta and gamma functions in
:mod:`ardlbounds._backend`. Upper-tail (``*_sf``) variants are evaluated
directly so small p-values keep their relative precision.

Critical-value sources
----------------------
ADF
    MacKinnon, J.G. (2010), "Critical Values for Cointegration Tests",
    Queen's Economics Department Working Paper 1227, Table 2 (N = 1). The
    finite-sample value is ``b_inf + b1/T + b2/T**2 + b3/T**3``.
Bounds test
    Pesaran, Shin & Smith (2001), J. Applied Econometrics 16, Table CI,
    asymptotic F bounds. ``case="II"`` is CI(ii) (restricted intercept, no
    trend), ``case="III"`` is CI(iii) (unrestricted intercept, no trend).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

from . import _backend
from .errors import SampleTooSmall, UnsupportedK

AdfSpec = Literal["n", "c", "ct"]

_SQRT2 = math.sqrt(2.0)


def _checked(p: float, what: str) -> float:
    if math.isnan(p):
        raise ArithmeticError(f"{what}: continued fraction did not converge")
    return min(1.0, max(0.0, p))


def normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / _SQRT2)


def normal_sf(x: float) -> float:
    return 0.5 * math.erfc(x / _SQRT2)


def student_t_sf(x: float, df: float) -> float:
    """P(T > x) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("df must be positive")
    if math.isinf(x):
        return 0.0 if x > 0 else 1.0
    x2 = x * x
    if x2 < df:
        # central mass I_{x^2/(df+x^2)}(1/2, df/2) is well conditioned here
        central = _checked(_backend.betainc(0.5, 0.5 * df, x2 / (df + x2)), "student_t")
        half = 0.5 * central
        return 0.5 - half if x >= 0 else 0.5 + half
    tail = 0.5 * _checked(_backend.betainc(0.5 * df, 0.5, df / (df + x2)), "student_t")
    return tail if x >= 0 else 1.0 - tail


def student_t_cdf(x: float, df: float) -> float:
    return student_t_sf(-x, df)


def chi_square_cdf(x: float, df: float) -> float:
    if df <= 0:
        raise ValueError("df must be positive")
    if x < 0:
        raise ValueError("chi-square argument must be non-negative")
    return _checked(_backend.gammainc(0.5 * df, 0.5 * x), "chi_square")


def chi_square_sf(x: float, df: float) -> float:
    if df <= 0:
        raise ValueError("df must be positive")
    if x < 0:
        raise ValueError("chi-square argument must be non-negative")
    return _checked(_backend.gammaincc(0.5 * df, 0.5 * x), "chi_square")


def f_cdf(x: float, df1: float, df2: float) -> float:
    if df1 <= 0 or df2 <= 0:
        raise ValueError("degrees of freedom must be positive")
    if x < 0:
        raise ValueError("F argument must be non-negative")
    if math.isinf(x):
        return 1.0
    z = df1 * x / (df1 * x + df2)
    return _checked(_backend.betainc(0.5 * df1, 0.5 * df2, z), "f")


def f_sf(x: float, df1: float, df2: float) -> float:
    if df1 <= 0 or df2 <= 0:
        raise ValueError("degrees of freedom must be positive")
    if x < 0:
        raise ValueError("F argument must be non-negative")
    if math.isinf(x):
        return 0.0
    z = df2 / (df1 * x + df2)
    return _checked(_backend.betainc(0.5 * df2, 0.5 * df1, z), "f")


# --- ADF response surfaces ------------------------------------------------

# (b_inf, b1, b2, b3) at 1%, 5%, 10%
_MACKINNON_TAU = {
    "n": (
        (-2.56574, -2.2358, -3.627, 0.0),
        (-1.94100, -0.2686, -3.365, 31.223),
        (-1.61682, 0.2656, -2.714, 25.364),
    ),
    "c": (
        (-3.43035, -6.5393, -16.786, -79.433),
        (-2.86154, -2.8903, -4.234, -40.040),
        (-2.56677, -1.5384, -2.809, 0.0),
    ),
    "ct": (
        (-3.95877, -9.0531, -28.428, -134.155),
        (-3.41049, -4.3904, -9.036, -45.374),
        (-3.12705, -2.5856, -3.925, -22.380),
    ),
}

ADF_MIN_N = 20


class CriticalValues(NamedTuple):
    cv1: float
    cv5: float
    cv10: float


def _check_spec(spec: str) -> None:
    if spec not in _MACKINNON_TAU:
        raise ValueError(f"unknown deterministic spec {spec!r}; expected 'n', 'c' or 'ct'")


def adf_critical_values(spec: AdfSpec, n: int) -> CriticalValues:
    """Finite-sample ADF critical values for ``n`` effective observations."""
    _check_spec(spec)
    if n < ADF_MIN_N:
        raise SampleTooSmall(f"response surface needs n >= {ADF_MIN_N}, got {n}")
    out = []
    for b0, b1, b2, b3 in _MACKINNON_TAU[spec]:
        out.append(b0 + b1 / n + b2 / n**2 + b3 / n**3)
    return CriticalValues(*out)


def adf_asymptotic_critical_values(spec: AdfSpec) -> CriticalValues:
    _check_spec(spec)
    return CriticalValues(*(row[0] for row in _MACKINNON_TAU[spec]))


# --- Pesaran-Shin-Smith bounds -------------------------------------------

# k -> {level: (I0, I1)}
_PSS_CASE_II = {
    1: {0.10: (3.02, 3.51), 0.05: (3.62, 4.16), 0.01: (4.94, 5.58)},
    2: {0.10: (2.63, 3.35), 0.05: (3.10, 3.87), 0.01: (4.13, 5.00)},
    3: {0.10: (2.37, 3.20), 0.05: (2.79, 3.67), 0.01: (3.65, 4.66)},
    4: {0.10: (2.20, 3.09), 0.05: (2.56, 3.49), 0.01: (3.29, 4.37)},
    5: {0.10: (2.08, 3.00), 0.05: (2.39, 3.38), 0.01: (3.06, 4.15)},
    6: {0.10: (1.99, 2.94), 0.05: (2.27, 3.28), 0.01: (2.88, 3.99)},
    7: {0.10: (1.92, 2.89), 0.05: (2.17, 3.21), 0.01: (2.73, 3.90)},
    8: {0.10: (1.85, 2.85), 0.05: (2.11, 3.15), 0.01: (2.62, 3.77)},
    9: {0.10: (1.80, 2.80), 0.05: (2.04, 3.08), 0.01: (2.50, 3.68)},
    10: {0.10: (1.76, 2.77), 0.05: (1.98, 3.04), 0.01: (2.41, 3.61)},
}

_PSS_CASE_III = {
    1: {0.10: (4.04, 4.78), 0.05: (4.94, 5.73), 0.01: (6.84, 7.84)},
    2: {0.10: (3.17, 4.14), 0.05: (3.79, 4.85), 0.01: (5.15, 6.36)},
    3: {0.10: (2.72, 3.77), 0.05: (3.23, 4.35), 0.01: (4.29, 5.61)},
    4: {0.10: (2.45, 3.52), 0.05: (2.86, 4.01), 0.01: (3.74, 5.06)},
    5: {0.10: (2.26, 3.35), 0.05: (2.62, 3.79), 0.01: (3.41, 4.68)},
    6: {0.10: (2.12, 3.23), 0.05: (2.45, 3.61), 0.01: (3.15, 4.43)},
    7: {0.10: (2.03, 3.13), 0.05: (2.32, 3.50), 0.01: (2.96, 4.26)},
    8: {0.10: (1.95, 3.06), 0.05: (2.22, 3.39), 0.01: (2.79, 4.10)},
    9: {0.10: (1.88, 2.99), 0.05: (2.14, 3.30), 0.01: (2.65, 3.97)},
    10: {0.10: (1.83, 2.94), 0.05: (2.06, 3.24), 0.01: (2.54, 3.86)},
}

BOUNDS_TABLES = {"II": _PSS_CASE_II, "III": _PSS_CASE_III}
BOUNDS_LEVELS = (0.01, 0.05, 0.10)


@dataclass(frozen=True)
class BoundsCriticalValues:
    k: int
    case: str
    level: float
    lower_i0: float
    upper_i1: float


def bounds_critical_values(k: int, level: float = 0.05, case: str = "II") -> BoundsCriticalValues:
    """Asymptotic F bounds for ``k`` long-run forcing variables.

    The default table is the one whose k=2, 5% row reads 3.10 / 3.87.
    """
    table = BOUNDS_TABLES.get(case)
    if table is None:
        raise ValueError(f"unsupported case {case!r}; expected one of {sorted(BOUNDS_TABLES)}")
    if k not in table:
        raise UnsupportedK(f"bounds table covers k in [1, 10], got {k}")
    match = [lv for lv in BOUNDS_LEVELS if math.isclose(lv, level)]
    if not match:
        raise ValueError(f"level must be one of {BOUNDS_LEVELS}, got {level}")
    lo, hi = table[k][match[0]]
    return BoundsCriticalValues(k=k, case=case, level=match[0], lower_i0=lo, upper_i1=hi)


def stars(p: float) -> str:
    """Significance stars: ``***`` at 1%, ``**`` at 5%, ``*`` at 10%."""
    if p < 0.01:
        return "***"
    if p < 0.05:
        return "**"
    if p < 0.10:
        return "*"
    return ""
