"""Command-line front end.

Subcommands: eval, scan, system, record, estimate, simulate, realdata.
Exit code 0 on success, 2 on usage or domain errors (message on stderr,
nothing on stdout).
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys

import numpy as np

from .data import COVID_INFECTION_PERCENTAGES
from .distributions import DomainError, hazard, parse_distribution
from .functionals import extropy, extropy_curve, past_extropy, residual_extropy
from .kde import Sample, estimate_pex, estimate_rex, mle_exponential
from .records import k_record_distribution
from .simulate import StudyConfig, run_study, write_rows_csv
from .systems import Signature, preservation_premises


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


@contextlib.contextmanager
def _out_stream(path):
    if path:
        with open(path, "w", newline="") as fh:
            yield fh
    else:
        yield sys.stdout


def _read_observations(path: str) -> list[float]:
    """One observation per line; comma-separated fields are scanned and
    non-numeric tokens (headers) skipped."""
    values: list[float] = []
    with open(path) as fh:
        for line in fh:
            for tok in line.replace(",", " ").split():
                try:
                    values.append(float(tok))
                except ValueError:
                    continue
    if not values:
        raise ValueError(f"no numeric observations found in {path}")
    return values


def cmd_eval(args) -> int:
    d = parse_distribution(args.dist)
    if args.kind == "extropy":
        value = extropy(d)
    else:
        if args.t is None:
            raise ValueError(f"--t is required for kind {args.kind}")
        value = residual_extropy(d, args.t) if args.kind == "rex" else past_extropy(d, args.t)
    print(f"{value:.6f}")
    return 0


def cmd_scan(args) -> int:
    d = parse_distribution(args.dist)
    if args.points < 3:
        raise ValueError("need at least 3 grid points")
    grid = np.linspace(args.start, args.stop, args.points)
    kind = "residual" if args.kind == "rex" else "past"
    curve = extropy_curve(d, kind, grid)
    with _out_stream(args.out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "value"])
        for t, v in zip(curve.grid, curve.values):
            writer.writerow([f"{t:.6f}", f"{v:.6f}"])
        writer.writerow(["classification", curve.classification])
    return 0


def cmd_system(args) -> int:
    sig = Signature.parse(args.signature)
    report = preservation_premises(sig, args.check)
    line = (
        f"ordered={str(report.ordered).lower()} "
        f"rational_monotone={str(report.rational_monotone).lower()}"
    )
    with _out_stream(args.out) as fh:
        print(line, file=fh)
    return 0


def cmd_record(args) -> int:
    base = parse_distribution(args.dist)
    model = k_record_distribution(base, args.n, args.k)
    start = args.start if args.start is not None else model.quantile(0.01)
    stop = args.stop if args.stop is not None else model.quantile(0.99)
    if not stop > start:
        raise ValueError(f"empty scan range [{start}, {stop}]")
    grid = np.linspace(start, stop, args.points)
    with _out_stream(args.out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "pdf", "survival", "hazard"])
        for t in grid:
            t = float(t)
            writer.writerow(
                [
                    f"{t:.6f}",
                    f"{model.pdf(t):.6f}",
                    f"{model.survival(t):.6f}",
                    f"{hazard(model, t):.6f}",
                ]
            )
    return 0


def cmd_estimate(args) -> int:
    data = _read_observations(args.data)
    if args.kind == "rex":
        value = estimate_rex(data, args.h, args.t, upper="max" if args.sample_range else "tail")
    else:
        value = estimate_pex(data, args.h, args.t, lower="min" if args.sample_range else "zero")
    with _out_stream(args.out) as fh:
        print(f"{value:.6f}", file=fh)
    return 0


def cmd_simulate(args) -> int:
    if args.config:
        with open(args.config) as fh:
            raw = json.load(fh)
        cfg = StudyConfig(
            kind=raw["kind"],
            sizes=tuple(raw.get("sizes", (40, 50, 100))),
            t_grid=tuple(raw.get("t_grid", ())),
            h_grid=tuple(raw.get("h_grid", (0.1, 0.3, 0.5, 0.7, 0.9))),
            replications=int(raw.get("replications", 5000)),
            master_seed=int(raw.get("master_seed", 1)),
        )
    else:
        if args.kind is None:
            raise ValueError("--kind is required (or provide --config)")
        cfg = StudyConfig(
            kind=args.kind,
            sizes=tuple(args.n),
            t_grid=tuple(args.t) if args.t else (),
            h_grid=tuple(args.h),
            replications=args.reps,
            master_seed=args.seed,
        )
    rows = run_study(cfg)
    for r in rows:
        if r.drops > 0.01 * cfg.replications:
            print(
                f"warning: cell (n={r.n}, t={r.t:g}, h={r.h:g}) dropped "
                f"{r.drops}/{cfg.replications} replications",
                file=sys.stderr,
            )
    with _out_stream(args.out) as fh:
        write_rows_csv(rows, fh)
    return 0


def cmd_realdata(args) -> int:
    data = Sample(COVID_INFECTION_PERCENTAGES)
    rate = mle_exponential(data)
    rounded = round(rate, 2)
    theoretical = -rounded / 4.0
    print(f"lambda_hat,{rounded:.2f}")
    with _out_stream(args.out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "h", "theoretical", "estimate"])
        for t in args.t:
            for h in args.h:
                try:
                    est = f"{estimate_rex(data, h, t, upper='max'):.6f}"
                except DomainError as exc:
                    print(f"warning: cell (t={t:g}, h={h:g}): {exc}", file=sys.stderr)
                    est = "nan"
                writer.writerow([f"{t:.6f}", f"{h:.6f}", f"{theoretical:.6f}", est])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="extropy",
        description="Residual and past extropy: exact functionals, system and "
        "record checks, kernel estimation, simulation studies.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("eval", help="evaluate a functional of a model")
    q.add_argument("--dist", required=True, help="exp:RATE | unif:A:B | example1")
    q.add_argument("--kind", required=True, choices=["extropy", "rex", "pex"])
    q.add_argument("--t", type=float, default=None, help="age (required for rex/pex)")
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("scan", help="extropy curve over an age grid, as CSV")
    q.add_argument("--dist", required=True)
    q.add_argument("--kind", required=True, choices=["rex", "pex"])
    q.add_argument("--from", dest="start", type=float, required=True)
    q.add_argument("--to", dest="stop", type=float, required=True)
    q.add_argument("--points", type=int, default=200)
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("system", help="signature preservation premises")
    q.add_argument("--signature", required=True, help="comma list, e.g. 0,0,0.25,0.75")
    q.add_argument("--check", required=True, choices=["drex", "ipex"])
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_system)

    q = sub.add_parser("record", help="k-record distribution curves, as CSV")
    q.add_argument("--n", type=int, required=True, help="record index")
    q.add_argument("--k", type=int, required=True, help="record order")
    q.add_argument("--dist", required=True)
    q.add_argument("--from", dest="start", type=float, default=None)
    q.add_argument("--to", dest="stop", type=float, default=None)
    q.add_argument("--points", type=int, default=100)
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_record)

    q = sub.add_parser("estimate", help="kernel extropy estimate from a data file")
    q.add_argument("kind", choices=["rex", "pex"])
    q.add_argument("--data", required=True, help="text file, one observation per line")
    q.add_argument("--h", type=float, required=True, help="bandwidth")
    q.add_argument("--t", type=float, required=True, help="age")
    q.add_argument(
        "--sample-range",
        action="store_true",
        help="integrate over the observed range only (the published-table convention)",
    )
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_estimate)

    q = sub.add_parser("simulate", help="bias/RMSE study, as CSV")
    q.add_argument("--kind", choices=["rex", "pex"], default=None)
    q.add_argument("--n", type=_int_list, default=[40, 50, 100], help="comma list of sizes")
    q.add_argument("--t", type=_float_list, default=None, help="comma list of ages")
    q.add_argument("--h", type=_float_list, default=[0.1, 0.3, 0.5, 0.7, 0.9])
    q.add_argument("--reps", type=int, default=5000)
    q.add_argument("--seed", type=int, default=1)
    q.add_argument("--config", default=None, help="JSON study file (overrides flags)")
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_simulate)

    q = sub.add_parser("realdata", help="embedded COVID data: fit and estimates")
    q.add_argument("--t", type=_float_list, default=[0.1, 0.3, 0.5, 0.7, 0.9])
    q.add_argument("--h", type=_float_list, default=[0.1, 0.3, 0.5, 0.7, 0.9])
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_realdata)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
