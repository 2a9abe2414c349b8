"""Command-line driver.

Exit codes: 0 success, 1 estimation failure, 2 input or configuration error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .config import RunConfig, load_config
from .errors import EstimationError, InputError
from .ingest import (
    EPU_SCHEMA,
    INDICATORS,
    OIL_SCHEMA,
    build_indicators,
    check_cumulative,
    load_csv,
    load_who,
)
from .report import (
    fit_model,
    figure_csvs,
    render_adf,
    render_csvs,
    render_fit,
    render_text,
    replicate,
    run_adf,
)

EXIT_OK, EXIT_ESTIMATION, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("ardlbounds")


def _write(out: Path, name: str, text: str) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(text, encoding="utf-8")


def cmd_validate(cfg: RunConfig, args) -> int:
    d = cfg.dataset
    problems: list[str] = []
    lines: list[str] = []

    def span(recs):
        return f"{recs[0]['date']} .. {recs[-1]['date']}" if recs else "empty"

    try:
        who = load_who(d.who_path)
    except (InputError, OSError) as exc:
        problems.append(f"WHO {d.who_path.name}: {exc}")
        who = None
    if who is not None:
        lines.append(f"WHO   {d.who_path.name}: {len(who)} records, "
                     f"{who[0].report_date} .. {who[-1].report_date}")
        for p in check_cumulative(who):
            problems.append(f"WHO {d.who_path.name}: NonMonotonicCumulative: {p}")
        if not problems:
            try:
                ind = build_indicators(who)
            except InputError as exc:
                problems.append(f"WHO {d.who_path.name}: {exc}")
            else:
                for s in (ind.tnc, ind.ncoc, ind.tdr, ind.droc):
                    zeros = [str(dt) for dt, v in zip(s.dates, s.values) if v <= 0]
                    if zeros:
                        lines.append(f"  note: {s.name} is zero on {len(zeros)} report dates "
                                     f"({zeros[0]} .. {zeros[-1]})")

    others = [("EPU", d.epu_path, EPU_SCHEMA), ("WTI", cfg.wti_path, OIL_SCHEMA)]
    if cfg.brent_path is not None:
        others.append(("BRENT", cfg.brent_path, OIL_SCHEMA))
    for label, path, schema in others:
        try:
            recs = load_csv(path, schema)
        except (InputError, OSError) as exc:
            problems.append(f"{label} {path.name}: {exc}")
            continue
        col = next(iter(schema.value_columns))
        nonpos = [r["date"] for r in recs if r[col] <= 0]
        lines.append(f"{label:<5} {path.name}: {len(recs)} records, {span(recs)}")
        if nonpos:
            problems.append(f"{label} {path.name}: non-positive values on {nonpos[0]} "
                            f"and {len(nonpos) - 1} other dates")

    print("\n".join(lines))
    if problems:
        for p in problems:
            print(f"ERROR {p}", file=sys.stderr)
        return EXIT_INPUT
    print("clean")
    return EXIT_OK


def cmd_adf(cfg: RunConfig, args) -> int:
    res = run_adf(cfg, args.variable, args.diff, args.max_lag, args.spec)
    label = f"D({args.variable.upper()})" if args.diff else args.variable.upper()
    print(render_adf(label, res))
    return EXIT_OK


def cmd_ardl(cfg: RunConfig, args) -> int:
    fit = fit_model(cfg, args.indicator.upper())
    print(render_fit(args.indicator.upper(), fit))
    return EXIT_OK


def cmd_replicate(cfg: RunConfig, args) -> int:
    if args.oil:
        cfg = cfg.with_oil(args.oil)
    rep = replicate(cfg)
    out = Path(args.out) if args.out else None
    if args.format == "json":
        text = rep.to_json()
        if out:
            _write(out, "report.json", text)
        else:
            sys.stdout.write(text)
    elif args.format == "csv":
        files = render_csvs(rep)
        if out:
            for name, text in files.items():
                _write(out, name, text)
        else:
            for name, text in files.items():
                sys.stdout.write(f"# {name}\n{text}")
    else:
        text = render_text(rep)
        print(text)
        if out:
            _write(out, "report.txt", text + "\n")
    if out:
        for name, text in rep.figure_data.items():
            _write(out, name, text)
    if not rep.complete:
        log.error("one or more models failed; see the report")
        return EXIT_ESTIMATION
    return EXIT_OK


def cmd_figures(cfg: RunConfig, args) -> int:
    out = Path(args.out)
    for name, text in figure_csvs(cfg).items():
        _write(out, name, text)
        print(f"wrote {out / name} ({text.count(chr(10)) - 1} rows)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ardlbounds", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="run configuration (default: bundled snapshot)")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the input files")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("adf", help="augmented Dickey-Fuller test on one variable")
    p.add_argument("variable", type=str.upper,
                   choices=["EPU", "WTI", "BRENT", "OIL", *INDICATORS])
    p.add_argument("--diff", action="store_true", help="test the first difference")
    p.add_argument("--max-lag", type=int, default=None)
    p.add_argument("--spec", choices=["n", "c", "ct"], default=None)
    p.set_defaults(func=cmd_adf)

    p = sub.add_parser("ardl", help="bounds test and ECM for one COVID-19 indicator")
    p.add_argument("indicator", type=str.upper, choices=list(INDICATORS))
    p.add_argument("--bg-lags", type=int, default=None)
    p.set_defaults(func=cmd_ardl)

    p = sub.add_parser("replicate", help="Tables 1-3 and figure data")
    p.add_argument("--oil", type=str.upper, choices=["WTI", "BRENT"], default=None)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out", default=None, help="directory for report files")
    p.set_defaults(func=cmd_replicate)

    p = sub.add_parser("figures", help="write figure1.csv and figure2.csv")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = load_config(args.config)
        if getattr(args, "bg_lags", None) is not None:
            cfg = replace(cfg, bg_lags=args.bg_lags)
        return args.func(cfg, args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (EstimationError, ArithmeticError) as exc:
        print(f"estimation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION


if __name__ == "__main__":
    sys.exit(main())
