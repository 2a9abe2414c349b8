"""Dated series, aligned panels and the transforms used by every estimator."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from datetime import date, timedelta
from types import MappingProxyType
from typing import Iterable, Literal, Mapping, Sequence

import numpy as np

from .errors import EmptyIntersection, InputError, NonPositiveValue, TooShort


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    arr.setflags(write=False)
    return arr


def _check_dates(dates: Sequence[date], what: str) -> None:
    for a, b in zip(dates, dates[1:]):
        if not b > a:
            raise InputError(f"{what}: dates must be strictly increasing ({a} then {b})")


@dataclass(frozen=True)
class DatedSeries:
    """Ordered ``(date, value)`` observations of one variable.

    ``report_dated`` marks series stamped with a publication date (WHO
    situation reports); :func:`align` shifts those by the policy offset.
    """

    name: str
    dates: tuple[date, ...]
    values: np.ndarray
    report_dated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        object.__setattr__(self, "values", _frozen(self.values))
        if len(self.dates) == 0:
            raise TooShort(f"series {self.name!r} is empty")
        if self.values.ndim != 1 or len(self.values) != len(self.dates):
            raise InputError(f"series {self.name!r}: dates and values differ in length")
        if not np.all(np.isfinite(self.values)):
            bad = self.dates[int(np.argmin(np.isfinite(self.values)))]
            raise InputError(f"series {self.name!r}: non-finite value at {bad}")
        _check_dates(self.dates, f"series {self.name!r}")

    @classmethod
    def from_pairs(cls, name: str, pairs: Iterable[tuple[date, float]], report_dated: bool = False):
        pairs = list(pairs)
        return cls(name, tuple(d for d, _ in pairs), [v for _, v in pairs], report_dated)

    def __len__(self) -> int:
        return len(self.dates)

    def pairs(self) -> list[tuple[date, float]]:
        return list(zip(self.dates, self.values.tolist()))

    def rename(self, name: str) -> "DatedSeries":
        return DatedSeries(name, self.dates, self.values, self.report_dated)

    def between(self, start: date | None = None, end: date | None = None) -> "DatedSeries":
        keep = [i for i, d in enumerate(self.dates)
                if (start is None or d >= start) and (end is None or d <= end)]
        if not keep:
            raise TooShort(f"series {self.name!r} has no observations in [{start}, {end}]")
        return DatedSeries(self.name, [self.dates[i] for i in keep], self.values[keep],
                           self.report_dated)


@dataclass(frozen=True)
class Panel:
    """Date-aligned named columns with no missing cells."""

    dates: tuple[date, ...]
    columns: Mapping[str, np.ndarray]

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        cols = {name: _frozen(vals) for name, vals in self.columns.items()}
        object.__setattr__(self, "columns", MappingProxyType(cols))
        _check_dates(self.dates, "panel")
        for name, vals in cols.items():
            if vals.shape != (len(self.dates),):
                raise InputError(f"panel column {name!r} has length {vals.shape}, "
                                 f"expected {len(self.dates)}")
            if not np.all(np.isfinite(vals)):
                raise InputError(f"panel column {name!r} has missing or non-finite cells")

    def __len__(self) -> int:
        return len(self.dates)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]

    @property
    def names(self) -> list[str]:
        return list(self.columns)

    def column(self, name: str) -> DatedSeries:
        return DatedSeries(name, self.dates, self.columns[name])

    def between(self, start: date | None = None, end: date | None = None) -> "Panel":
        keep = [i for i, d in enumerate(self.dates)
                if (start is None or d >= start) and (end is None or d <= end)]
        return Panel([self.dates[i] for i in keep],
                     {k: v[keep] for k, v in self.columns.items()})


@dataclass(frozen=True)
class AlignmentPolicy:
    """How to put series with different calendars onto one set of dates.

    ``calendar="intersection"`` keeps dates observed by every series;
    ``"dependent"`` keeps the first series' dates and carries the other
    series' last observation forward. ``covid_report_offset`` moves a
    report-dated observation published on ``t + offset`` to date ``t``.
    """

    calendar: Literal["intersection", "dependent"] = "intersection"
    covid_report_offset: int = 1

    def __post_init__(self):
        if self.calendar not in ("intersection", "dependent"):
            raise InputError(f"unknown calendar {self.calendar!r}")
        if not -3 <= self.covid_report_offset <= 3:
            raise InputError("covid_report_offset must lie in [-3, 3]")


def natural_log(s: DatedSeries) -> DatedSeries:
    bad = np.flatnonzero(s.values <= 0)
    if bad.size:
        raise NonPositiveValue(s.dates[bad[0]], s.name)
    return DatedSeries(s.name, s.dates, np.log(s.values), s.report_dated)


def first_difference(s: DatedSeries) -> DatedSeries:
    """Positional difference; each change is stamped with the later date."""
    if len(s) < 2:
        raise TooShort(f"first_difference needs 2 observations, {s.name!r} has {len(s)}")
    return DatedSeries(s.name, s.dates[1:], np.diff(s.values), s.report_dated)


def lag(s: DatedSeries, k: int) -> DatedSeries:
    if k < 1:
        raise ValueError("lag order must be >= 1")
    if len(s) <= k:
        raise TooShort(f"lag {k} needs more than {k} observations, {s.name!r} has {len(s)}")
    return DatedSeries(s.name, s.dates[k:], s.values[:-k], s.report_dated)


def cumulative_sum(s: DatedSeries, start: float = 0.0) -> DatedSeries:
    """Running total prefixed with ``start`` on the day before the first date."""
    first = s.dates[0] - timedelta(days=1)
    vals = np.concatenate([[start], start + np.cumsum(s.values)])
    return DatedSeries(s.name, (first,) + s.dates, vals, s.report_dated)


def _shifted(s: DatedSeries, offset: int) -> DatedSeries:
    if not s.report_dated or offset == 0:
        return s
    delta = timedelta(days=offset)
    return DatedSeries(s.name, [d - delta for d in s.dates], s.values, False)


def align(series_list: Sequence[DatedSeries], policy: AlignmentPolicy = AlignmentPolicy()) -> Panel:
    """Build a :class:`Panel` from series with different calendars.

    Report-dated series are shifted first. The first series is the
    dependent variable for ``calendar="dependent"``.
    """
    if not series_list:
        raise InputError("align needs at least one series")
    names = [s.name for s in series_list]
    if len(set(names)) != len(names):
        raise InputError(f"duplicate series names: {names}")
    shifted = [_shifted(s, policy.covid_report_offset) for s in series_list]

    if policy.calendar == "intersection":
        common = set(shifted[0].dates)
        for s in shifted[1:]:
            common &= set(s.dates)
        dates = sorted(common)
        if not dates:
            raise EmptyIntersection("series share no dates after report-date shifting")
        cols = {}
        for s in shifted:
            pos = {d: i for i, d in enumerate(s.dates)}
            cols[s.name] = s.values[[pos[d] for d in dates]]
        return Panel(dates, cols)

    base = shifted[0]
    others = shifted[1:]
    keep: list[int] = []
    picks: list[list[int]] = [[] for _ in others]
    for row, d in enumerate(base.dates):
        js = [bisect.bisect_right(s.dates, d) - 1 for s in others]
        if min(js, default=0) < 0:
            continue
        keep.append(row)
        for slot, j in zip(picks, js):
            slot.append(j)
    if not keep:
        raise EmptyIntersection("no dependent-variable date is covered by every series")
    cols = {base.name: base.values[keep]}
    for s, slot in zip(others, picks):
        cols[s.name] = s.values[slot]
    return Panel([base.dates[i] for i in keep], cols)
