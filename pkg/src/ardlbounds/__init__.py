"""ARDL bounds testing, unit-root pretests and residual diagnostics for short daily samples."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .ardl import ArdlFit, ArdlSpec, BoundsResult, UecmFit, bounds_test, estimate, fit_ecm
from .ardl import long_run_coefficients, select_and_fit_uecm
from .diagnostics import LmTestResult, arch_lm, breusch_godfrey
from .linalg import DesignMatrix, RegressionResult, aic_compare, ols, wald_f
from .series import AlignmentPolicy, DatedSeries, Panel, align, first_difference, lag, natural_log
from .unitroot import AdfResult, adf_test

__all__ = [
    "BACKEND", "AdfResult", "AlignmentPolicy", "ArdlFit", "ArdlSpec", "BoundsResult",
    "DatedSeries", "DesignMatrix", "LmTestResult", "Panel", "RegressionResult", "UecmFit",
    "adf_test", "aic_compare", "align", "arch_lm", "bounds_test", "breusch_godfrey",
    "estimate", "first_difference", "fit_ecm", "lag", "long_run_coefficients", "natural_log",
    "ols", "select_and_fit_uecm", "wald_f",
]
