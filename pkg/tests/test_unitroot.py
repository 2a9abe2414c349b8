import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ardlbounds.errors import RankDeficient, TooShort
from ardlbounds.series import DatedSeries
from ardlbounds.unitroot import adf_test, classify, default_max_lag
from ardlbounds.dist import CriticalValues

import montecarlo


def test_schwert_rule():
    assert default_max_lag(100) == 12
    assert default_max_lag(37) == 9
    assert default_max_lag(20) == 5
    assert default_max_lag(500) == 17


def test_classify_boundaries():
    cv = CriticalValues(-3.6, -2.9, -2.6)
    assert classify(-3.6, cv) == "1%"
    assert classify(-3.0, cv) == "5%"
    assert classify(-2.6, cv) == "10%"
    assert classify(-1.0, cv) == "none"


def test_accepts_dated_series(rng):
    from datetime import date, timedelta
    y = np.cumsum(rng.normal(size=50))
    s = DatedSeries("y", [date(2020, 1, 1) + timedelta(i) for i in range(50)], y)
    assert adf_test(s, 3).statistic == adf_test(y, 3).statistic


def test_errors(rng):
    with pytest.raises(TooShort):
        adf_test(rng.normal(size=12), max_lag=4)
    with pytest.raises(ValueError):
        adf_test(rng.normal(size=40), max_lag=-1)
    with pytest.raises(RankDeficient):
        adf_test(np.full(30, 4.0), max_lag=2)


def test_zero_max_lag(rng):
    r = adf_test(rng.normal(size=30), max_lag=0)
    assert r.chosen_lag == 0
    assert r.n_effective == 29


@pytest.mark.parametrize("spec", ["n", "c", "ct"])
@pytest.mark.parametrize("seed", range(4))
def test_matches_statsmodels(spec, seed):
    tsa = pytest.importorskip("statsmodels.tsa.stattools")
    rng = np.random.default_rng(seed)
    y = np.cumsum(rng.normal(size=60)) * 0.3 + rng.normal(size=60)
    ours = adf_test(y, max_lag=6, spec=spec)
    stat, _, lag, nobs, crit, _ = tsa.adfuller(y, maxlag=6, regression=spec, autolag="AIC")
    assert ours.statistic == pytest.approx(stat, abs=1e-8)
    assert ours.chosen_lag == lag
    assert ours.n_effective == nobs
    assert ours.critical_values.cv5 == pytest.approx(crit["5%"], abs=1e-9)


@given(st.integers(0, 2**32 - 1), st.floats(0.01, 100.0), st.floats(-1e3, 1e3),
       st.sampled_from(["c", "ct"]))
@settings(max_examples=60, deadline=None)
def test_affine_invariance(seed, a, b, spec):
    y = np.cumsum(np.random.default_rng(seed).normal(size=45))
    base, moved = adf_test(y, 5, spec), adf_test(a * y + b, 5, spec)
    assert moved.chosen_lag == base.chosen_lag
    assert moved.statistic == pytest.approx(base.statistic, abs=1e-8)


@given(st.integers(0, 2**32 - 1), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_lag_bound_and_significance_consistency(seed, max_lag):
    r = adf_test(np.random.default_rng(seed).normal(size=40).cumsum(), max_lag)
    assert 0 <= r.chosen_lag <= max_lag
    assert r.significance == classify(r.statistic, r.critical_values)
    assert r.stars == {"1%": "***", "5%": "**", "10%": "*", "none": ""}[r.significance]


def test_random_walk_size():
    assert 0.01 <= montecarlo.adf_random_walk_size(seed=11, reps=1000) <= 0.10


def test_white_noise_power():
    assert montecarlo.adf_white_noise_power(seed=12, reps=500) > 0.80
