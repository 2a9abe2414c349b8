from dataclasses import replace
from datetime import date

import numpy as np
import pytest

from ardlbounds.errors import (
    DivisionByZeroCases,
    DuplicateDate,
    EmptySample,
    InputError,
    NonMonotonicCumulative,
    NonMonotonicDates,
    NonPositiveValue,
    ParseError,
)
from ardlbounds.ingest import (
    EPU_SCHEMA,
    INDICATORS,
    OIL_SCHEMA,
    WHO_SCHEMA,
    WhoDailyRecord,
    build_indicators,
    build_panel,
    check_cumulative,
    load_csv,
    load_who,
)

WHO_HEADER = "date,confirmed_global,deaths_global,confirmed_china,deaths_china\n"


def write(tmp_path, text, name="f.csv"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def rec(d, cg, dg, cc, dc):
    return WhoDailyRecord(date(2020, 2, d), cg, dg, cc, dc)


# --- load_csv ----------------------------------------------------------------

def test_load_well_formed(tmp_path):
    p = write(tmp_path, "date,epu\n2020-01-01,1.5\n2020-01-02,2\n2020-01-05,3.25\n")
    recs = load_csv(p, EPU_SCHEMA)
    assert [r["date"] for r in recs] == [date(2020, 1, 1), date(2020, 1, 2), date(2020, 1, 5)]
    assert [r["epu"] for r in recs] == [1.5, 2.0, 3.25]


def test_load_column_order_free(tmp_path):
    p = write(tmp_path, "epu,date\n1.5,2020-01-01\n")
    assert load_csv(p, EPU_SCHEMA)[0]["epu"] == 1.5


def test_impossible_date(tmp_path):
    p = write(tmp_path, "date,epu\n2020-02-28,1\n2020-02-30,2\n")
    with pytest.raises(ParseError) as err:
        load_csv(p, EPU_SCHEMA)
    assert err.value.line == 3
    assert "invalid date" in str(err.value)


def test_duplicate_and_unsorted(tmp_path):
    with pytest.raises(DuplicateDate):
        load_csv(write(tmp_path, "date,epu\n2020-01-01,1\n2020-01-01,2\n"), EPU_SCHEMA)
    with pytest.raises(NonMonotonicDates):
        load_csv(write(tmp_path, "date,epu\n2020-01-02,1\n2020-01-01,2\n"), EPU_SCHEMA)


@pytest.mark.parametrize("text", [
    "day,epu\n2020-01-01,1\n",
    "date,epu\n2020-01-01,abc\n",
    "date,epu\n2020-01-01,nan\n",
    "date,epu\n2020-01-01,1,2\n",
    "",
])
def test_malformed(tmp_path, text):
    with pytest.raises(ParseError):
        load_csv(write(tmp_path, text), EPU_SCHEMA)


def test_who_integers_required(tmp_path):
    p = write(tmp_path, WHO_HEADER + "2020-01-21,282.5,6,278,6\n")
    with pytest.raises(ParseError):
        load_csv(p, WHO_SCHEMA)


# --- WHO records and indicators ---------------------------------------------

def test_record_invariants():
    with pytest.raises(InputError):
        rec(1, 10, 1, 11, 1)
    with pytest.raises(InputError):
        rec(1, 10, -1, 5, 0)


def test_indicator_arithmetic():
    ind = build_indicators([rec(1, 100, 0, 50, 0), rec(2, 150, 0, 60, 0)])
    assert list(ind.tnc.values) == [50.0]
    ind = build_indicators([rec(1, 200, 10, 100, 5), rec(2, 200, 10, 100, 5)])
    assert ind.tdr.values[0] == 0.05


def test_hand_fixture():
    records = [
        rec(1, 100, 2, 90, 2),
        rec(2, 150, 3, 130, 3),
        rec(3, 210, 5, 180, 4),
        rec(4, 300, 6, 250, 5),
        rec(5, 400, 10, 330, 8),
    ]
    ind = build_indicators(records)
    # outside China: cases 10, 20, 30, 50, 70; deaths 0, 0, 1, 1, 2
    assert list(ind.tnc.values) == [50, 60, 90, 100]
    assert list(ind.ncoc.values) == [10, 10, 20, 20]
    assert ind.tdr.values == pytest.approx([0.02, 0.02, 5 / 210, 0.02, 0.025], abs=1e-15)
    assert ind.droc.values == pytest.approx([0.0, 0.0, 1 / 30, 0.02, 2 / 70], abs=1e-15)
    assert ind.tnc.dates == tuple(r.report_date for r in records[1:])
    assert ind.tdr.dates == tuple(r.report_date for r in records)
    assert all(s.report_dated for s in (ind.tnc, ind.ncoc, ind.tdr, ind.droc))
    assert ind.get("droc") is ind.droc
    with pytest.raises(InputError):
        ind.get("XYZ")


def test_cumulative_violation():
    records = [rec(1, 100, 2, 90, 2), rec(2, 99, 2, 90, 2)]
    problems = check_cumulative(records)
    assert len(problems) == 1 and problems[0].field == "confirmed_global"
    with pytest.raises(NonMonotonicCumulative):
        build_indicators(records)


def test_zero_outside_denominator():
    with pytest.raises(DivisionByZeroCases):
        build_indicators([rec(1, 100, 2, 100, 2), rec(2, 120, 2, 110, 2)])


def test_bundled_snapshot_invariants(cfg):
    records = load_who(cfg.dataset.who_path)
    ind = build_indicators(records)
    n = len(records)
    assert len(ind.tnc) == len(ind.ncoc) == n - 1
    assert len(ind.tdr) == len(ind.droc) == n
    assert np.all(ind.ncoc.values >= 0)
    assert np.all(ind.ncoc.values <= ind.tnc.values)
    for s in (ind.tdr, ind.droc):
        assert np.all((s.values >= 0) & (s.values <= 1))


# --- panel -------------------------------------------------------------------

def test_tnc_panel_window(cfg):
    p = build_panel(cfg.dataset, "TNC")
    assert p.names == ["EPU", "COVID", "OIL"]
    assert p.dates[0] == date(2020, 1, 21)
    assert p.dates[-1] == date(2020, 3, 13)
    assert all(d.weekday() < 5 for d in p.dates)
    # every WTI trading day in the window survives the intersection
    assert len(p) == 38


def test_panel_is_logged(cfg):
    p = build_panel(cfg.dataset, "TNC")
    oil = load_csv(cfg.wti_path, OIL_SCHEMA)
    assert p["OIL"][0] == np.log(oil[0]["price"])


def test_droc_requires_trim(cfg):
    untrimmed = replace(cfg.dataset, trim_leading_nonpositive=False)
    with pytest.raises(NonPositiveValue):
        build_panel(untrimmed, "DROC")
    p = build_panel(cfg.dataset, "DROC")
    assert p.dates[0] > date(2020, 1, 21)


@pytest.mark.parametrize("indicator", INDICATORS)
def test_every_indicator_builds(cfg, indicator):
    p = build_panel(cfg.dataset, indicator)
    assert np.all(np.isfinite(p["COVID"]))


def test_empty_window(cfg):
    early = replace(cfg.dataset, sample_start=date(2019, 1, 1), sample_end=date(2019, 6, 1))
    with pytest.raises(EmptySample):
        build_panel(early, "TNC")


def test_window_order_enforced(cfg):
    with pytest.raises(InputError):
        replace(cfg.dataset, sample_start=date(2020, 3, 1), sample_end=date(2020, 2, 1))
