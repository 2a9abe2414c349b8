"""Exception hierarchy.

``InputError`` subclasses describe bad data or configuration (CLI exit 2);
``EstimationError`` subclasses describe numerical failures (CLI exit 1).
"""

from __future__ import annotations


class ArdlBoundsError(Exception):
    pass


class InputError(ArdlBoundsError):
    pass


class EstimationError(ArdlBoundsError):
    pass


class NonPositiveValue(InputError):
    def __init__(self, date, name: str = ""):
        self.date = date
        label = f" in {name}" if name else ""
        super().__init__(f"non-positive value{label} at {date}; cannot take log")


class TooShort(InputError):
    pass


class EmptyIntersection(InputError):
    pass


class ParseError(InputError):
    def __init__(self, line: int, reason: str, path: str = ""):
        self.line = line
        self.reason = reason
        where = f"{path}:" if path else "line "
        super().__init__(f"{where}{line}: {reason}")


class DuplicateDate(InputError):
    def __init__(self, date, line: int | None = None):
        self.date = date
        self.line = line
        suffix = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate date {date}{suffix}")


class NonMonotonicDates(InputError):
    pass


class NonMonotonicCumulative(InputError):
    def __init__(self, date, field: str):
        self.date = date
        self.field = field
        super().__init__(f"cumulative field {field} decreases at {date}")


class DivisionByZeroCases(InputError):
    def __init__(self, date):
        self.date = date
        super().__init__(f"zero confirmed cases outside China at {date}")


class EmptySample(InputError):
    pass


class ConfigError(InputError):
    pass


class RankDeficient(EstimationError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"design matrix is rank deficient at column {column!r}")


class DimensionMismatch(EstimationError):
    pass


class MixedSampleSizes(EstimationError):
    pass


class SampleTooSmall(EstimationError):
    pass


class UnsupportedK(EstimationError):
    pass


class DegenerateAdjustment(EstimationError):
    pass
