"""Replication run: ADF grid, four ARDL models, figure data, and their renderings."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import __version__, _backend
from .ardl import ArdlFit, ArdlSpec, estimate
from .config import RunConfig
from .errors import ArdlBoundsError
from .ingest import INDICATORS, build_panel, figure_tables
from .series import first_difference
from .unitroot import AdfResult, adf_test

log = logging.getLogger(__name__)

MODEL_LABELS = {"TNC": "Model 1", "NCOC": "Model 2", "TDR": "Model 3", "DROC": "Model 4"}
TABLE1_VARIABLES = ("EPU", "TNC", "NCOC", "TDR", "DROC", "OIL")
BG_REPORT_LAGS = (1, 2, 4)


def _iso(d) -> str:
    return d.isoformat()


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def ardl_spec(cfg: RunConfig) -> ArdlSpec:
    return ArdlSpec(max_p=cfg.max_p, max_q=cfg.max_q)


def bg_lag_list(cfg: RunConfig) -> list[int]:
    return [cfg.bg_lags] + [l for l in BG_REPORT_LAGS if l != cfg.bg_lags]


def fit_model(cfg: RunConfig, indicator: str) -> ArdlFit:
    panel = build_panel(cfg.dataset, indicator)
    return estimate(panel, ardl_spec(cfg), bg_lags=bg_lag_list(cfg), arch_lags=cfg.arch_lags,
                    level=cfg.bounds_level, case=cfg.bounds_case)


def variable_series(cfg: RunConfig, variable: str, diff: bool = False):
    """Log series of one Table 1 variable on its estimation calendar."""
    variable = variable.upper()
    if variable in ("EPU", "OIL", "WTI", "BRENT"):
        # taken from the TNC panel, which has the longest sample
        run = cfg
        if variable in ("WTI", "BRENT"):
            run = cfg.with_oil(variable)
        panel = build_panel(run.dataset, "TNC")
        s = panel.column("EPU" if variable == "EPU" else "OIL")
    elif variable in INDICATORS:
        s = build_panel(cfg.dataset, variable).column("COVID").rename(variable)
    else:
        raise ValueError(f"unknown variable {variable!r}")
    return first_difference(s) if diff else s


def run_adf(cfg: RunConfig, variable: str, diff: bool = False,
            max_lag: int | None = None, spec: str | None = None) -> AdfResult:
    s = variable_series(cfg, variable, diff)
    return adf_test(s, cfg.adf_max_lag if max_lag is None else max_lag, spec or cfg.adf_spec)


# --- serialization ------------------------------------------------------------

def adf_dict(variable: str, transform: str, r: AdfResult) -> dict:
    cv, acv = r.critical_values, r.asymptotic_critical_values
    return {
        "variable": variable,
        "transform": transform,
        "statistic": r.statistic,
        "chosen_lag": r.chosen_lag,
        "max_lag": r.max_lag,
        "spec": r.spec,
        "n_effective": r.n_effective,
        "critical_values": {"1%": cv.cv1, "5%": cv.cv5, "10%": cv.cv10},
        "asymptotic_critical_values": {"1%": acv.cv1, "5%": acv.cv5, "10%": acv.cv10},
        "significance": r.significance,
        "stars": r.stars,
    }


def fit_dict(indicator: str, fit: ArdlFit) -> dict:
    p, q_covid, q_oil = fit.lags
    return {
        "model": MODEL_LABELS[indicator],
        "indicator": indicator,
        "lags": {"p": p, "q_covid": q_covid, "q_oil": q_oil},
        "sample": {"start": _iso(fit.sample[0]), "end": _iso(fit.sample[-1]),
                   "nobs": len(fit.sample)},
        "long_run": {**{k: v.as_dict() for k, v in fit.long_run.items()},
                     "const": fit.long_run_constant.as_dict()},
        "short_run": {k: v.as_dict() for k, v in fit.short_run.items()},
        "ect": fit.ect.as_dict(),
        "ect_negative": fit.ect_negative,
        "uecm_level_coefficient": fit.uecm.regression.coef(fit.uecm.level_terms[0]),
        "adjustment_gap": fit.adjustment_gap,
        "diagnostics": {k: v.as_dict() for k, v in fit.diagnostics.items()},
    }


@dataclass
class ReplicationReport:
    table1: list[dict] = field(default_factory=list)
    table2: list[dict] = field(default_factory=list)
    table3: list[dict] = field(default_factory=list)
    figure_data: dict[str, str] = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    fits: dict[str, ArdlFit] = field(default_factory=dict, repr=False)

    @property
    def complete(self) -> bool:
        return all(row.get("error") is None for row in self.table3) and len(self.fits) == 4

    def to_dict(self) -> dict:
        return {"metadata": self.metadata, "table1": self.table1, "table2": self.table2,
                "table3": self.table3, "figure_data": self.figure_data}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=True) + "\n"


def figure_csvs(cfg: RunConfig) -> dict[str, str]:
    fig1, fig2 = figure_tables(cfg.dataset)
    out = {}
    for name, rows in (("figure1.csv", fig1), ("figure2.csv", fig2)):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = list(rows[0])
        w.writerow(keys)
        for row in rows:
            w.writerow([row["date"].isoformat()] + [repr(row[k]) for k in keys[1:]])
        out[name] = buf.getvalue()
    return out


def replicate(cfg: RunConfig, timestamp: str | None = None) -> ReplicationReport:
    rep = ReplicationReport()
    d = cfg.dataset
    rep.metadata = {
        "software": {"name": "ardlbounds", "version": __version__,
                     "kernel_backend": _backend.BACKEND},
        "config": cfg.echo(),
        "data_sha256": {p.name: sha256_file(p) for p in (d.who_path, d.epu_path, d.oil_path)},
        "robustness": d.oil_variable != "WTI",
        "generated_at": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }

    for var in TABLE1_VARIABLES:
        label = d.oil_variable if var == "OIL" else var
        for transform, diff in (("level", False), ("first_difference", True)):
            try:
                rep.table1.append(adf_dict(label, transform, run_adf(cfg, var, diff)))
            except ArdlBoundsError as exc:
                rep.table1.append({"variable": label, "transform": transform, "error": str(exc)})

    for ind in INDICATORS:
        try:
            fit = fit_model(cfg, ind)
        except (ArdlBoundsError, ArithmeticError) as exc:
            log.error("%s failed: %s", ind, exc)
            err = f"{type(exc).__name__}: {exc}"
            rep.table2.append({"model": MODEL_LABELS[ind], "indicator": ind, "error": err})
            rep.table3.append({"model": MODEL_LABELS[ind], "indicator": ind, "error": err})
            continue
        rep.fits[ind] = fit
        rep.table2.append({"model": MODEL_LABELS[ind], "indicator": ind,
                           **fit.bounds.as_dict(), "error": None})
        rep.table3.append({**fit_dict(ind, fit), "error": None})

    rep.figure_data = figure_csvs(cfg)
    return rep


# --- text and CSV renderings -------------------------------------------------

def _num(x: float | None, stars: str = "") -> str:
    return "" if x is None else f"{x:.3f}{stars}"


def render_adf(variable: str, r: AdfResult) -> str:
    cv = r.critical_values
    acv = r.asymptotic_critical_values
    return "\n".join([
        f"ADF test: {variable} (spec={r.spec})",
        f"  statistic        {_num(r.statistic, r.stars)}",
        f"  chosen lag       {r.chosen_lag} (max {r.max_lag}, AIC)",
        f"  observations     {r.n_effective}",
        f"  critical values  1%: {cv.cv1:.3f}  5%: {cv.cv5:.3f}  10%: {cv.cv10:.3f}",
        f"  asymptotic       1%: {acv.cv1:.3f}  5%: {acv.cv5:.3f}  10%: {acv.cv10:.3f}",
        f"  significance     {r.significance}",
    ])


def render_fit(indicator: str, fit: ArdlFit) -> str:
    b = fit.bounds
    lines = [
        f"{MODEL_LABELS.get(indicator, indicator)}: COVID-19 {indicator}",
        f"  sample {fit.sample[0]} .. {fit.sample[-1]} ({len(fit.sample)} obs), "
        f"lags (p, q_covid, q_oil) = {fit.lags}",
        f"  bounds F = {b.f_statistic:.3f}  I(0) {b.critical.lower_i0:.2f}  "
        f"I(1) {b.critical.upper_i1:.2f}  -> {b.decision}",
        "  long run:",
    ]
    for k, e in [*fit.long_run.items(), ("const", fit.long_run_constant)]:
        lines.append(f"    {k:<14}{_num(e.coefficient, e.stars):>12}  (se {e.standard_error:.3f})")
    lines.append("  short run:")
    for k, e in fit.short_run.items():
        lines.append(f"    {k:<14}{_num(e.coefficient, e.stars):>12}  (se {e.standard_error:.3f})")
    lines.append(f"    {'ECT(-1)':<14}{_num(fit.ect.coefficient, fit.ect.stars):>12}"
                 f"  (se {fit.ect.standard_error:.3f})")
    lines.append("  residual tests:")
    for k, t in fit.diagnostics.items():
        lines.append(f"    {k:<28} stat {t.statistic:.3f}  p {t.p_value:.3f}  {t.verdict}")
    return "\n".join(lines)


def render_text(rep: ReplicationReport) -> str:
    out = []
    if rep.metadata.get("robustness"):
        oil = rep.metadata["config"]["oil_variable"]
        out += [f"*** ROBUSTNESS RUN: oil series = {oil}; no replication targets ***", ""]
    out.append("Table 1. ADF unit-root statistics")
    header = [row["variable"] for row in rep.table1[::2]]
    out.append(f"{'':<18}" + "".join(f"{h:>12}" for h in header))
    for transform, label in (("level", "Level"), ("first_difference", "First difference")):
        cells = []
        for row in rep.table1:
            if row["transform"] == transform:
                cells.append("error" if "error" in row else _num(row["statistic"], row["stars"]))
        out.append(f"{label:<18}" + "".join(f"{c:>12}" for c in cells))
    out += ["", "Table 2. Bounds F test",
            f"{'Model':<10}{'F-statistic':>12}{'I(0)':>8}{'I(1)':>8}  Conclusion"]
    for row in rep.table2:
        if row.get("error"):
            out.append(f"{row['indicator']:<10}  error: {row['error']}")
        else:
            out.append(f"{row['indicator']:<10}{row['f_statistic']:>12.2f}"
                       f"{row['lower_i0']:>8.2f}{row['upper_i1']:>8.2f}  {row['decision']}")
    out += ["", "Table 3. Long-run, short-run and ECM estimates", ""]
    for ind in INDICATORS:
        if ind in rep.fits:
            out += [render_fit(ind, rep.fits[ind]), ""]
        else:
            row = next(r for r in rep.table3 if r["indicator"] == ind)
            out += [f"{MODEL_LABELS[ind]}: error: {row['error']}", ""]
    return "\n".join(out)


def render_csvs(rep: ReplicationReport) -> dict[str, str]:
    files = {}

    def write(name, header, rows):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        files[name] = buf.getvalue()

    write("table1.csv",
          ["variable", "transform", "statistic", "chosen_lag", "n_effective", "cv1", "cv5",
           "cv10", "significance"],
          [[r["variable"], r["transform"], r.get("statistic"), r.get("chosen_lag"),
            r.get("n_effective"), *(r.get("critical_values", {}).get(k) for k in ("1%", "5%", "10%")),
            r.get("significance", r.get("error"))] for r in rep.table1])
    write("table2.csv",
          ["model", "indicator", "f_statistic", "lower_i0", "upper_i1", "decision"],
          [[r["model"], r["indicator"], r.get("f_statistic"), r.get("lower_i0"),
            r.get("upper_i1"), r.get("decision", r.get("error"))] for r in rep.table2])
    rows = []
    for r in rep.table3:
        if r.get("error"):
            rows.append([r["model"], r["indicator"], "error", "", "", "", "", r["error"]])
            continue
        for block in ("long_run", "short_run"):
            for term, e in r[block].items():
                rows.append([r["model"], r["indicator"], block, term, e["coefficient"],
                             e["standard_error"], e["p"], e["significance"]])
        e = r["ect"]
        rows.append([r["model"], r["indicator"], "short_run", "ECT(-1)", e["coefficient"],
                     e["standard_error"], e["p"], e["significance"]])
        for name, t in r["diagnostics"].items():
            rows.append([r["model"], r["indicator"], "diagnostics", name, t["statistic"], "",
                         t["p_value"], t["verdict"]])
    write("table3.csv", ["model", "indicator", "block", "term", "value", "standard_error", "p",
                         "flag"], rows)
    return files
