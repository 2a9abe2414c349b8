"""Independent reference computations in extended precision.

Nothing here touches the package numerics: CDFs are integrals of the
closed-form densities, OLS is the normal equations solved at 50 digits.
"""

from __future__ import annotations

import mpmath as mp
import numpy as np

mp.mp.dps = 30


def _quad_cdf(pdf, lo, x):
    if x <= lo:
        return 0.0
    return float(mp.quad(pdf, [lo, x] if x - lo < 50 else [lo, (lo + x) / 2, x]))


def normal_cdf(x: float) -> float:
    pdf = lambda t: mp.exp(-t * t / 2) / mp.sqrt(2 * mp.pi)
    if x <= 0:
        return float(mp.quad(pdf, [-mp.inf, x]))
    return float(mp.mpf(1) / 2 + mp.quad(pdf, [0, x]))


def student_t_cdf(x: float, df: float) -> float:
    nu = mp.mpf(df)
    c = mp.gamma((nu + 1) / 2) / (mp.sqrt(nu * mp.pi) * mp.gamma(nu / 2))
    pdf = lambda t: c * (1 + t * t / nu) ** (-(nu + 1) / 2)
    half = mp.quad(pdf, [0, abs(x)])
    return float(mp.mpf(1) / 2 + half) if x >= 0 else float(mp.mpf(1) / 2 - half)


def chi_square_cdf(x: float, df: float) -> float:
    k = mp.mpf(df) / 2
    c = 1 / (mp.mpf(2) ** k * mp.gamma(k))
    pdf = lambda t: c * t ** (k - 1) * mp.exp(-t / 2)
    return _quad_cdf(pdf, 0, x)


def f_cdf(x: float, df1: float, df2: float) -> float:
    d1, d2 = mp.mpf(df1), mp.mpf(df2)
    c = (d1 / d2) ** (d1 / 2) / mp.beta(d1 / 2, d2 / 2)
    pdf = lambda t: c * t ** (d1 / 2 - 1) * (1 + d1 * t / d2) ** (-(d1 + d2) / 2)
    return _quad_cdf(pdf, 0, x)


def ols_coefficients(X: np.ndarray, y: np.ndarray, dps: int = 50) -> np.ndarray:
    """Normal-equations solution of ``X b = y`` at ``dps`` digits."""
    with mp.workdps(dps):
        Xm = mp.matrix(X.tolist())
        ym = mp.matrix(y.tolist())
        b = mp.lu_solve(Xm.T * Xm, Xm.T * ym)
        return np.array([float(v) for v in b])


def cdf_grid(seed: int = 5):
    """200 ``(name, args, x)`` points: 50 per distribution, df values mixed."""
    rng = np.random.default_rng(seed)
    pts = [("normal", (), float(x)) for x in np.linspace(-6.0, 6.0, 50)]
    for i in range(50):
        df = float(rng.choice([1, 2, 3, 5, 10, 30, 120, 2.5]))
        pts.append(("t", (df,), float(rng.uniform(-8.0, 8.0))))
    for i in range(50):
        df = float(rng.choice([1, 2, 3, 4, 6, 10, 25]))
        pts.append(("chi2", (df,), float(rng.uniform(0.01, 4.0 * df + 10.0))))
    for i in range(50):
        d1 = float(rng.choice([1, 2, 3, 5, 8]))
        d2 = float(rng.choice([5, 10, 25, 40, 100]))
        pts.append(("f", (d1, d2), float(rng.uniform(0.01, 8.0))))
    return pts


ORACLES = {"normal": normal_cdf, "t": student_t_cdf, "chi2": chi_square_cdf, "f": f_cdf}
