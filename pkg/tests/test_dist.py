import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ardlbounds import dist
from ardlbounds.errors import SampleTooSmall, UnsupportedK

from oracles import ORACLES, cdf_grid

IMPL = {"normal": dist.normal_cdf, "t": dist.student_t_cdf,
        "chi2": dist.chi_square_cdf, "f": dist.f_cdf}


def test_normal_examples():
    assert dist.normal_cdf(0.0) == 0.5
    for x in (0.3, 1.0, 2.7, 5.0):
        assert dist.normal_cdf(x) + dist.normal_cdf(-x) == pytest.approx(1.0, abs=1e-14)
    assert dist.normal_cdf(1.96) == pytest.approx(0.9750021, abs=1e-6)
    assert dist.normal_sf(1.96) == pytest.approx(1 - 0.9750021, abs=1e-6)


def test_t_examples():
    for df in (1, 3, 17.5, 400):
        assert dist.student_t_cdf(0.0, df) == 0.5
    assert dist.student_t_cdf(1.96, 1e6) == pytest.approx(dist.normal_cdf(1.96), abs=1e-4)
    assert dist.student_t_cdf(2.015, 5) == pytest.approx(0.95, abs=2e-3)
    # Cauchy closed form
    assert dist.student_t_cdf(1.0, 1) == pytest.approx(0.75, abs=1e-14)


def test_chi_square_examples():
    assert dist.chi_square_cdf(0.0, 3) == 0.0
    x = 2 * math.log(20)
    assert dist.chi_square_cdf(x, 2) == pytest.approx(0.95, abs=1e-12)
    assert dist.chi_square_cdf(9.488, 4) == pytest.approx(0.95, abs=1e-3)
    assert dist.chi_square_sf(x, 2) == pytest.approx(0.05, abs=1e-12)


def test_f_examples():
    assert dist.f_cdf(0.0, 3, 30) == 0.0
    assert dist.f_cdf(2.92, 3, 30) == pytest.approx(0.95, abs=2e-3)
    for t in (0.4, 1.7, 3.2):
        for d in (4, 25):
            lhs = dist.f_cdf(t * t, 1, d)
            assert lhs == pytest.approx(2 * dist.student_t_cdf(t, d) - 1, abs=1e-9)
    assert dist.f_sf(2.92, 3, 30) + dist.f_cdf(2.92, 3, 30) == pytest.approx(1.0, abs=1e-14)


def test_domain_errors():
    with pytest.raises(ValueError):
        dist.chi_square_cdf(-1.0, 2)
    with pytest.raises(ValueError):
        dist.f_cdf(1.0, 0, 3)
    with pytest.raises(ValueError):
        dist.student_t_sf(1.0, -1)


@pytest.mark.parametrize("name,args,x", cdf_grid()[::10])
def test_against_quadrature_sample(name, args, x):
    assert IMPL[name](x, *args) == pytest.approx(ORACLES[name](x, *args), abs=1e-10)


@given(st.lists(st.floats(-40, 40), min_size=2, max_size=20),
       st.sampled_from([1.0, 2.0, 4.5, 30.0]))
def test_monotone_and_bounded(xs, df):
    xs = sorted(xs)
    for f in (dist.normal_cdf, lambda x: dist.student_t_cdf(x, df)):
        vals = [f(x) for x in xs]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a <= b for a, b in zip(vals, vals[1:]))
    pos = sorted(abs(x) for x in xs)
    for f in (lambda x: dist.chi_square_cdf(x, df), lambda x: dist.f_cdf(x, df, 7.0)):
        vals = [f(x) for x in pos]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a <= b for a, b in zip(vals, vals[1:]))


# --- critical values ---------------------------------------------------------

def test_adf_asymptote():
    assert dist.adf_asymptotic_critical_values("c").cv5 == pytest.approx(-2.86, abs=0.01)
    assert dist.adf_critical_values("c", 10**9).cv5 == pytest.approx(-2.86154, abs=1e-6)


@pytest.mark.parametrize("spec", ["n", "c", "ct"])
def test_adf_ordering_and_finite_sample(spec):
    for n in range(20, 501):
        cv = dist.adf_critical_values(spec, n)
        assert cv.cv1 < cv.cv5 < cv.cv10


@pytest.mark.parametrize("spec", ["c", "ct"])
def test_adf_small_samples_more_negative(spec):
    # the no-deterministics 10% surface has a positive 1/n term, so it is excluded
    small, large = dist.adf_critical_values(spec, 40), dist.adf_critical_values(spec, 500)
    assert all(s < l for s, l in zip(small, large))


def test_adf_statsmodels_table_agreement():
    st_ = pytest.importorskip("statsmodels.tsa.adfvalues")
    for spec in ("n", "c", "ct"):
        for n in (25, 40, 100):
            ref = st_.mackinnoncrit(1, spec, n)
            assert np.allclose(dist.adf_critical_values(spec, n), ref, atol=1e-9)


def test_adf_errors():
    with pytest.raises(SampleTooSmall):
        dist.adf_critical_values("c", 19)
    with pytest.raises(ValueError):
        dist.adf_critical_values("x", 50)


def test_bounds_k2_five_percent_row():
    cv = dist.bounds_critical_values(2, 0.05)
    assert (cv.lower_i0, cv.upper_i1) == (3.10, 3.87)


@pytest.mark.parametrize("case", ["II", "III"])
def test_bounds_table_invariants(case):
    for k in range(1, 11):
        rows = {lv: dist.bounds_critical_values(k, lv, case) for lv in (0.01, 0.05, 0.10)}
        for cv in rows.values():
            assert cv.lower_i0 < cv.upper_i1
        assert rows[0.01].lower_i0 > rows[0.05].lower_i0 > rows[0.10].lower_i0
        assert rows[0.01].upper_i1 > rows[0.05].upper_i1 > rows[0.10].upper_i1


def test_bounds_errors():
    with pytest.raises(UnsupportedK):
        dist.bounds_critical_values(11)
    with pytest.raises(UnsupportedK):
        dist.bounds_critical_values(0)
    with pytest.raises(ValueError):
        dist.bounds_critical_values(2, 0.025)


def test_stars():
    assert [dist.stars(p) for p in (0.001, 0.01, 0.03, 0.07, 0.5)] == ["***", "**", "**", "*", ""]
