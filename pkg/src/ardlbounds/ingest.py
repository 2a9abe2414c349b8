"""CSV loading, COVID-19 indicator construction and the replication panel."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Literal, Mapping

import numpy as np

from .errors import (
    DivisionByZeroCases,
    DuplicateDate,
    EmptySample,
    InputError,
    NonMonotonicCumulative,
    NonMonotonicDates,
    ParseError,
)
from .series import AlignmentPolicy, DatedSeries, Panel, align, natural_log

log = logging.getLogger(__name__)

INDICATORS = ("TNC", "NCOC", "TDR", "DROC")


@dataclass(frozen=True)
class CsvSchema:
    date_column: str
    value_columns: Mapping[str, type]


WHO_SCHEMA = CsvSchema("date", {"confirmed_global": int, "deaths_global": int,
                                "confirmed_china": int, "deaths_china": int})
EPU_SCHEMA = CsvSchema("date", {"epu": float})
OIL_SCHEMA = CsvSchema("date", {"price": float})


def load_csv(path: str | Path, schema: CsvSchema) -> list[dict]:
    """Read a dated CSV into records ``{"date": date, column: value, ...}``.

    Rows must already be in strictly ascending date order.
    """
    path = Path(path)
    records: list[dict] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(1, "empty file", str(path)) from None
        header = [h.strip() for h in header]
        expected = [schema.date_column, *schema.value_columns]
        if sorted(header) != sorted(expected):
            raise ParseError(1, f"header {header} does not match {expected}", str(path))
        pos = {h: i for i, h in enumerate(header)}
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise ParseError(line, f"expected {len(header)} fields, got {len(row)}", str(path))
            raw = row[pos[schema.date_column]].strip()
            try:
                d = date.fromisoformat(raw)
            except ValueError:
                raise ParseError(line, f"invalid date {raw!r}", str(path)) from None
            rec: dict = {"date": d}
            for col, kind in schema.value_columns.items():
                cell = row[pos[col]].strip()
                try:
                    rec[col] = kind(cell)
                except ValueError:
                    raise ParseError(line, f"invalid {kind.__name__} {cell!r} in column {col}",
                                     str(path)) from None
                if kind is float and not np.isfinite(rec[col]):
                    raise ParseError(line, f"non-finite value in column {col}", str(path))
            if records:
                prev = records[-1]["date"]
                if d == prev:
                    raise DuplicateDate(d, line)
                if d < prev:
                    raise NonMonotonicDates(f"{path}:{line}: {d} follows {prev}")
            records.append(rec)
    return records


def load_series(path: str | Path, schema: CsvSchema, column: str, name: str) -> DatedSeries:
    recs = load_csv(path, schema)
    if not recs:
        raise EmptySample(f"{path} has no data rows")
    return DatedSeries(name, [r["date"] for r in recs], [r[column] for r in recs])


# --- WHO records and indicators ---------------------------------------------

@dataclass(frozen=True)
class WhoDailyRecord:
    report_date: date
    confirmed_global: int
    deaths_global: int
    confirmed_china: int
    deaths_china: int

    def __post_init__(self):
        for name in ("confirmed_global", "deaths_global", "confirmed_china", "deaths_china"):
            if getattr(self, name) < 0:
                raise InputError(f"{self.report_date}: {name} is negative")
        if self.confirmed_china > self.confirmed_global or self.deaths_china > self.deaths_global:
            raise InputError(f"{self.report_date}: China counts exceed global counts")

    @property
    def confirmed_outside(self) -> int:
        return self.confirmed_global - self.confirmed_china

    @property
    def deaths_outside(self) -> int:
        return self.deaths_global - self.deaths_china


CUMULATIVE_FIELDS = ("confirmed_global", "deaths_global", "confirmed_china", "deaths_china")


def load_who(path: str | Path) -> list[WhoDailyRecord]:
    recs = load_csv(path, WHO_SCHEMA)
    out = []
    for r in recs:
        d = r.pop("date")
        out.append(WhoDailyRecord(report_date=d, **r))
    return out


def check_cumulative(records: list[WhoDailyRecord]) -> list[NonMonotonicCumulative]:
    problems = []
    for prev, cur in zip(records, records[1:]):
        for f in CUMULATIVE_FIELDS:
            if getattr(cur, f) < getattr(prev, f):
                problems.append(NonMonotonicCumulative(cur.report_date, f))
    return problems


@dataclass(frozen=True)
class IndicatorSet:
    """Indicator levels before logs, stamped with WHO report dates."""

    tnc: DatedSeries
    ncoc: DatedSeries
    tdr: DatedSeries
    droc: DatedSeries

    def get(self, name: str) -> DatedSeries:
        if name.upper() not in INDICATORS:
            raise InputError(f"unknown indicator {name!r}; expected one of {INDICATORS}")
        return getattr(self, name.lower())


def build_indicators(records: list[WhoDailyRecord]) -> IndicatorSet:
    """New cases (total, outside China) and case-fatality ratios (total, outside China).

    New cases are first differences of the cumulative counts, so they
    start at the second report.
    """
    if len(records) < 2:
        raise InputError("need at least two WHO records")
    problems = check_cumulative(records)
    if problems:
        raise problems[0]
    dates = [r.report_date for r in records]
    conf = np.array([r.confirmed_global for r in records], dtype=float)
    outside = np.array([r.confirmed_outside for r in records], dtype=float)
    deaths = np.array([r.deaths_global for r in records], dtype=float)
    deaths_out = np.array([r.deaths_outside for r in records], dtype=float)
    for r in records:
        if r.confirmed_global == 0 or r.confirmed_outside == 0:
            raise DivisionByZeroCases(r.report_date)
    return IndicatorSet(
        tnc=DatedSeries("TNC", dates[1:], np.diff(conf), report_dated=True),
        ncoc=DatedSeries("NCOC", dates[1:], np.diff(outside), report_dated=True),
        tdr=DatedSeries("TDR", dates, deaths / conf, report_dated=True),
        droc=DatedSeries("DROC", dates, deaths_out / outside, report_dated=True),
    )


# --- replication panel ------------------------------------------------------

@dataclass(frozen=True)
class DatasetConfig:
    who_path: Path
    epu_path: Path
    oil_path: Path
    oil_variable: Literal["WTI", "BRENT"] = "WTI"
    sample_start: date = date(2020, 1, 21)
    sample_end: date = date(2020, 3, 13)
    trim_leading_nonpositive: bool = False
    alignment: AlignmentPolicy = field(default_factory=AlignmentPolicy)

    def __post_init__(self):
        if not self.sample_start < self.sample_end:
            raise InputError("sample_start must precede sample_end")
        if self.oil_variable not in ("WTI", "BRENT"):
            raise InputError(f"oil_variable must be WTI or BRENT, got {self.oil_variable!r}")


def trim_leading_nonpositive(s: DatedSeries) -> DatedSeries:
    positive = np.flatnonzero(s.values > 0)
    if positive.size == 0:
        raise EmptySample(f"{s.name} has no positive observations")
    first = int(positive[0])
    return DatedSeries(s.name, s.dates[first:], s.values[first:], s.report_dated)


def load_inputs(config: DatasetConfig) -> tuple[IndicatorSet, DatedSeries, DatedSeries]:
    indicators = build_indicators(load_who(config.who_path))
    epu = load_series(config.epu_path, EPU_SCHEMA, "epu", "EPU")
    oil = load_series(config.oil_path, OIL_SCHEMA, "price", "OIL")
    return indicators, epu, oil


def build_panel(config: DatasetConfig, indicator: str = "TNC") -> Panel:
    """Log-level panel with columns EPU, COVID, OIL over the configured window."""
    indicators, epu, oil = load_inputs(config)
    covid = indicators.get(indicator)
    if config.trim_leading_nonpositive:
        trimmed = trim_leading_nonpositive(covid)
        if trimmed.dates[0] != covid.dates[0]:
            log.info("%s: dropped leading non-positive observations before %s",
                     covid.name, trimmed.dates[0])
        covid = trimmed
    covid = natural_log(covid).rename("COVID")
    panel = align([natural_log(epu), covid, natural_log(oil)], config.alignment)
    panel = panel.between(config.sample_start, config.sample_end)
    if len(panel) == 0:
        raise EmptySample(
            f"no aligned observations between {config.sample_start} and {config.sample_end}")
    log.info("%s panel: %d observations, %s to %s", indicator, len(panel),
             panel.dates[0], panel.dates[-1])
    return panel


def figure_tables(config: DatasetConfig) -> tuple[list[dict], list[dict]]:
    """Level data behind the two figures, COVID dates shifted by the report offset.

    Rows follow the EPU calendar (every day) within the sample window.
    """
    indicators, epu, _ = load_inputs(config)
    policy = AlignmentPolicy("intersection", config.alignment.covid_report_offset)

    def table(a: DatedSeries, b: DatedSeries) -> list[dict]:
        panel = align([a.rename(a.name.lower()), b.rename(b.name.lower()), epu.rename("epu")],
                      policy).between(config.sample_start, config.sample_end)
        return [{"date": d, **{k: float(v[i]) for k, v in panel.columns.items()}}
                for i, d in enumerate(panel.dates)]

    return (table(indicators.tnc, indicators.ncoc), table(indicators.tdr, indicators.droc))
