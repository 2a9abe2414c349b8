import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ardlbounds.diagnostics import LmTestResult, arch_lm, breusch_godfrey
from ardlbounds.errors import SampleTooSmall
from ardlbounds.linalg import DesignMatrix, ols

import montecarlo


def _fit(rng, n=60, phi=0.0):
    x = rng.normal(size=n)
    u = rng.normal(size=n)
    for t in range(1, n):
        u[t] += phi * u[t - 1]
    X = DesignMatrix(("const", "x"), np.column_stack([np.ones(n), x]))
    return X, ols(X, 2.0 - x + u)


def test_bg_by_hand(rng):
    X, res = _fit(rng)
    e = res.residuals
    lagged = np.column_stack([np.r_[0.0, e[:-1]], np.r_[0.0, 0.0, e[:-2]]])
    Z = np.hstack([X.values, lagged])
    coef = np.linalg.lstsq(Z, e, rcond=None)[0]
    u = e - Z @ coef
    stat = len(e) * (1 - u @ u / (e @ e))
    out = breusch_godfrey(res, X, 2)
    assert out.statistic == pytest.approx(stat, rel=1e-10)
    assert out.nobs == 60


def test_bg_matches_statsmodels(rng):
    sm = pytest.importorskip("statsmodels.api")
    from statsmodels.stats.diagnostic import acorr_breusch_godfrey
    X, res = _fit(rng, phi=0.3)
    ref = acorr_breusch_godfrey(sm.OLS(X.values @ res.coefficients + res.residuals,
                                       X.values).fit(), nlags=3)
    out = breusch_godfrey(res, X, 3)
    assert out.statistic == pytest.approx(ref[0], rel=1e-8)
    assert out.p_value == pytest.approx(ref[1], rel=1e-8)


def test_arch_matches_statsmodels(rng):
    pytest.importorskip("statsmodels")
    from statsmodels.stats.diagnostic import het_arch
    e = rng.normal(size=80)
    ref = het_arch(e, nlags=4)
    out = arch_lm(e, 4)
    assert out.statistic == pytest.approx(ref[0], rel=1e-8)
    assert out.p_value == pytest.approx(ref[1], rel=1e-8)
    assert out.nobs == 76


def test_preconditions(rng):
    X, res = _fit(rng, n=10)
    with pytest.raises(SampleTooSmall):
        breusch_godfrey(res, X, 4)
    with pytest.raises(ValueError):
        breusch_godfrey(res, X, 0)
    with pytest.raises(SampleTooSmall):
        arch_lm(rng.normal(size=13), 4)


def test_constant_squares_pass():
    out = arch_lm(np.tile([1.0, -1.0], 20), 4)
    assert out.statistic == 0.0 and out.verdict == "pass"


@given(st.integers(0, 2**32 - 1), st.floats(1e-3, 1e3), st.booleans())
@settings(max_examples=60, deadline=None)
def test_scale_invariance(seed, c, negate):
    c = -c if negate else c
    rng = np.random.default_rng(seed)
    X, res = _fit(rng, n=50, phi=0.4)
    scaled = ols(X, c * (X.values @ res.coefficients + res.residuals))
    assert breusch_godfrey(scaled, X, 2).statistic == pytest.approx(
        breusch_godfrey(res, X, 2).statistic, rel=1e-9, abs=1e-12)
    e = rng.normal(size=50)
    assert arch_lm(c * e).statistic == pytest.approx(arch_lm(e).statistic, rel=1e-9, abs=1e-12)


@given(st.floats(0.0, 1.0))
def test_verdict_follows_p_value(p):
    r = LmTestResult("ArchLm", 4, 1.0, p, 50)
    assert (r.verdict == "pass") == (p > 0.05)
    assert r.as_dict()["verdict"] == r.verdict


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_output_ranges(seed):
    rng = np.random.default_rng(seed)
    X, res = _fit(rng, n=40, phi=0.5)
    for r in (breusch_godfrey(res, X, 2), arch_lm(res.residuals, 4)):
        assert r.statistic >= 0
        assert 0.0 <= r.p_value <= 1.0


def test_bg_size():
    assert 0.02 <= montecarlo.bg_rejections(seed=31, reps=1000, n=100) <= 0.08


def test_bg_power():
    assert montecarlo.bg_rejections(seed=32, reps=300, n=100, phi=0.9, level=0.01) > 0.95


def test_arch_size():
    assert 0.02 <= montecarlo.arch_rejections(seed=33, reps=1000, n=200) <= 0.08


def test_arch_power():
    assert montecarlo.arch_rejections(seed=34, reps=300, n=200, alpha=0.8) > 0.90
