"""Command-line harness: parameter sweeps, bound checking, acceptance runs.

Subcommands:
    sweep        evaluate a (x, theta) grid and emit CSV
    check-bounds randomized verification of the incomplete-gamma bounds
    verify       run the acceptance criteria and report pass/fail

The default output directory is taken from $LAPLASYM_OUTDIR when set.
Flags override values read from --config (simple `key = value` lines).
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from .acceptance import VERIFY_PRESETS, run_criteria
from .bounds import check_bounds
from .errors import DomainError
from .sweep import (
    SweepConfig,
    e1_table,
    preset_configs,
    run_sweep,
    write_csv,
    write_e1_csv,
)

ENV_OUTDIR = "LAPLASYM_OUTDIR"


def _parse_value(text: str) -> float:
    text = text.strip()
    if text.endswith("pi"):
        return float(text[:-2] or "1") * math.pi
    return float(text)


def parse_spec_string(text: str) -> tuple[str, dict]:
    """Parse 'name' or 'name:k=v,k=v' (values may carry a `pi` suffix)."""
    name, _, rest = text.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            key, _, val = item.partition("=")
            if not val:
                raise DomainError(f"malformed spec parameter {item!r} in {text!r}")
            params[key.strip()] = _parse_value(val)
    return name.strip(), params


def read_config_file(path: str) -> dict:
    """Key-value config: one `key = value` (or `key: value`) pair per line."""
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            for sep in ("=", ":"):
                if sep in line:
                    key, _, val = line.partition(sep)
                    values[key.strip().replace("_", "-")] = val.strip()
                    break
            else:
                raise DomainError(f"malformed config line {raw!r} in {path}")
    return values


def _resolve_out(path: str | None, default_name: str) -> str:
    outdir = os.environ.get(ENV_OUTDIR, "")
    if path is None:
        return os.path.join(outdir, default_name) if outdir else default_name
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def _suffix_path(path: str, suffix: str) -> str:
    root, ext = os.path.splitext(path)
    return f"{root}{suffix}{ext or '.csv'}"


def _merged(args: argparse.Namespace, parser: argparse.ArgumentParser) -> argparse.Namespace:
    if not getattr(args, "config", None):
        return args
    file_values = read_config_file(args.config)
    flag_args = []
    for key, val in file_values.items():
        flag_args += [f"--{key}", val]
    base = parser.parse_args([args.command] + flag_args)
    merged = vars(base)
    defaults = vars(parser.parse_args([args.command]))
    for key, val in vars(args).items():
        if key == "config":
            continue
        if val != defaults.get(key):
            merged[key] = val
    return argparse.Namespace(**merged)


def cmd_sweep(args: argparse.Namespace) -> int:
    jobs = args.jobs
    if args.preset == "e1":
        rows = e1_table([float(v) for v in range(1, 31)])
        out = _resolve_out(args.out, "e1.csv")
        write_e1_csv(rows, out)
        print(f"wrote {out}")
        return 0

    if args.preset:
        configs = preset_configs(args.preset)
        default_name = f"{args.preset}.csv"
    else:
        if not args.spec:
            print("sweep requires --preset or --spec", file=sys.stderr)
            return 2
        name, params = parse_spec_string(args.spec)
        start, _, stop = args.theta_range.partition(":")
        configs = [
            SweepConfig(
                spec_name=name,
                spec_params=params,
                r=args.r,
                x_values=tuple(float(v) for v in args.x.split(",")),
                theta_grid=(float(start), float(stop), args.points),
                delta=args.delta * math.pi,
                tol=args.tol,
            )
        ]
        default_name = "sweep.csv"

    out = _resolve_out(args.out, default_name)
    multi = len(configs) > 1
    for cfg in configs:
        try:
            cfg.validate()
        except DomainError as exc:
            print(f"invalid sweep configuration: {exc}", file=sys.stderr)
            return 2
        records = run_sweep(cfg, jobs=jobs)
        path = out
        if multi:
            psi = cfg.spec_params.get("psi", 0.0) / math.pi
            path = _suffix_path(out, f"-psi{psi:g}pi")
        write_csv(records, path)
        n_err = sum(1 for rec in records if rec.error)
        print(f"wrote {path} ({len(records)} rows{f', {n_err} errors' if n_err else ''})")
    return 0


def cmd_check_bounds(args: argparse.Namespace) -> int:
    report = check_bounds(seed=args.seed, samples=args.samples)
    print(f"tail bound: {args.samples} samples, min bound/actual = {report.min_ratio_a1:.6f}, "
          f"violations = {report.violations_a1}, worst case (a,b,chi) = {report.worst_case_a1}")
    print(f"head bound: {args.samples} samples, min bound/actual = {report.min_ratio_a2:.6f}, "
          f"violations = {report.violations_a2}, worst case (a,b,chi) = {report.worst_case_a2}")
    print(f"out-of-range parameters rejected: {report.out_of_range_rejected}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_criteria(args.preset)
    failures = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        print(f"{tag}  {res.name}: {res.summary}")
        if not res.passed:
            failures += 1
        for line in res.details if (args.verbose or not res.passed) else []:
            print(f"      {line}")
    print(f"{len(results) - failures}/{len(results)} criteria passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laplasym")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate an (x, theta) grid and write CSV")
    p_sweep.add_argument("--preset", help="fig1a|fig1b|fig2a|fig2b|trivial|e1")
    p_sweep.add_argument("--spec", help="amplitude, e.g. 'pole:psi=0.1pi' or 'u_chg:a=0.5,b=0.75'")
    p_sweep.add_argument("--r", type=float, default=0.8, help="truncation radius (0 < r < R)")
    p_sweep.add_argument("--x", default="5,10,15,20", help="comma-separated |z| values")
    p_sweep.add_argument("--theta-range", default="0:0.45", help="theta grid start:stop in units of pi")
    p_sweep.add_argument("--points", type=int, default=25, help="number of theta grid points")
    p_sweep.add_argument("--delta", type=float, default=0.02, help="sector margin in units of pi")
    p_sweep.add_argument("--tol", type=float, default=1e-13, help="oracle tolerance")
    p_sweep.add_argument("--seed", type=int, default=1)
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel workers over grid points")
    p_sweep.add_argument("--out", help="output CSV path")
    p_sweep.add_argument("--config", help="key-value config file; flags override")
    p_sweep.set_defaults(func=cmd_sweep)

    p_bounds = sub.add_parser("check-bounds", help="randomized incomplete-gamma bound suite")
    p_bounds.add_argument("--seed", type=int, default=1)
    p_bounds.add_argument("--samples", type=int, default=1000)
    p_bounds.set_defaults(func=cmd_check_bounds)

    p_verify = sub.add_parser("verify", help="run acceptance criteria")
    p_verify.add_argument("--preset", default="all", choices=sorted(VERIFY_PRESETS))
    p_verify.add_argument("--verbose", action="store_true", help="print details for passing criteria too")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        args = _merged(args, parser)
        args.func = cmd_sweep
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
