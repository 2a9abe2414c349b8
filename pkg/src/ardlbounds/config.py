"""Flat ``key = value`` run configuration.

Grammar: one ``key = value`` pair per line, ``#`` or ``;`` starts a
comment line, blank values mean "use the default". Relative paths are
resolved against the directory holding the config file.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, replace
from datetime import date
from importlib import resources
from pathlib import Path

from .errors import ConfigError
from .ingest import DatasetConfig
from .series import AlignmentPolicy

_SECTION = "run"

KNOWN_KEYS = {
    "who_path", "epu_path", "wti_path", "brent_path", "oil_variable",
    "sample_start", "sample_end", "trim_leading_nonpositive", "calendar",
    "covid_report_offset", "max_p", "max_q", "adf_max_lag", "adf_spec",
    "bg_lags", "arch_lags", "bounds_level", "bounds_case",
}


def default_config_path() -> Path:
    return Path(str(resources.files("ardlbounds") / "data" / "default.cfg"))


@dataclass(frozen=True)
class RunConfig:
    path: Path
    wti_path: Path
    brent_path: Path | None
    dataset: DatasetConfig
    max_p: int = 4
    max_q: int = 4
    adf_max_lag: int | None = None
    adf_spec: str = "c"
    bg_lags: int = 2
    arch_lags: int = 4
    bounds_level: float = 0.05
    bounds_case: str = "II"

    def with_oil(self, variable: str) -> "RunConfig":
        variable = variable.upper()
        if variable == self.dataset.oil_variable:
            return self
        path = self.brent_path if variable == "BRENT" else self.wti_path
        if path is None:
            raise ConfigError(f"config has no path for {variable}")
        return replace(self, dataset=replace(self.dataset, oil_variable=variable, oil_path=path))

    def echo(self) -> dict:
        """Settings as plain JSON-able values (paths reduced to file names)."""
        d = self.dataset
        return {
            "who_path": d.who_path.name,
            "epu_path": d.epu_path.name,
            "oil_path": d.oil_path.name,
            "oil_variable": d.oil_variable,
            "sample_start": d.sample_start.isoformat(),
            "sample_end": d.sample_end.isoformat(),
            "trim_leading_nonpositive": d.trim_leading_nonpositive,
            "calendar": d.alignment.calendar,
            "covid_report_offset": d.alignment.covid_report_offset,
            "max_p": self.max_p,
            "max_q": self.max_q,
            "adf_max_lag": self.adf_max_lag,
            "adf_spec": self.adf_spec,
            "bg_lags": self.bg_lags,
            "arch_lags": self.arch_lags,
            "bounds_level": self.bounds_level,
            "bounds_case": self.bounds_case,
        }


def _parse_bool(key: str, raw: str) -> bool:
    low = raw.lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"{key}: expected a boolean, got {raw!r}")


def load_config(path: str | Path | None = None) -> RunConfig:
    path = Path(path) if path is not None else default_config_path()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from None
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",),
                                       comment_prefixes=("#", ";"), inline_comment_prefixes=None)
    try:
        parser.read_string(f"[{_SECTION}]\n{text}", source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    raw = {k: v.strip() for k, v in parser[_SECTION].items()}
    unknown = set(raw) - KNOWN_KEYS
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")
    base = path.parent

    def get(key, default=None):
        v = raw.get(key, "")
        return v if v != "" else default

    def req_path(key) -> Path:
        v = get(key)
        if v is None:
            raise ConfigError(f"{path}: missing required key {key}")
        return (base / v).resolve()

    def typed(key, kind, default):
        v = get(key)
        if v is None:
            return default
        try:
            return kind(v)
        except ValueError:
            raise ConfigError(f"{key}: cannot parse {v!r}") from None

    wti = req_path("wti_path")
    brent = req_path("brent_path") if get("brent_path") else None
    oil_variable = get("oil_variable", "WTI").upper()
    if oil_variable not in ("WTI", "BRENT"):
        raise ConfigError(f"oil_variable must be WTI or BRENT, got {oil_variable!r}")
    if oil_variable == "BRENT" and brent is None:
        raise ConfigError("oil_variable = BRENT needs brent_path")
    try:
        alignment = AlignmentPolicy(get("calendar", "intersection"),
                                    typed("covid_report_offset", int, 1))
        dataset = DatasetConfig(
            who_path=req_path("who_path"),
            epu_path=req_path("epu_path"),
            oil_path=brent if oil_variable == "BRENT" else wti,
            oil_variable=oil_variable,
            sample_start=typed("sample_start", date.fromisoformat, date(2020, 1, 21)),
            sample_end=typed("sample_end", date.fromisoformat, date(2020, 3, 13)),
            trim_leading_nonpositive=_parse_bool(
                "trim_leading_nonpositive", get("trim_leading_nonpositive", "false")),
            alignment=alignment,
        )
    except ConfigError:
        raise
    except Exception as exc:  # invariant violations from the dataclasses
        raise ConfigError(f"{path}: {exc}") from None
    return RunConfig(
        path=path.resolve(),
        wti_path=wti,
        brent_path=brent,
        dataset=dataset,
        max_p=typed("max_p", int, 4),
        max_q=typed("max_q", int, 4),
        adf_max_lag=typed("adf_max_lag", int, None),
        adf_spec=get("adf_spec", "c"),
        bg_lags=typed("bg_lags", int, 2),
        arch_lags=typed("arch_lags", int, 4),
        bounds_level=typed("bounds_level", float, 0.05),
        bounds_case=get("bounds_case", "II"),
    )
