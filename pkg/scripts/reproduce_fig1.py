#!/usr/bin/env python3
"""Remainder-vs-angle sweeps for the two regular amplitude examples.

Writes fig1a.csv (confluent hypergeometric U amplitude, a=1/2, b=3/4) and
fig1b.csv (Struve amplitude) with x in {5, 10, 15, 20}, r = 0.8, and
49 theta points in [0, 0.48 pi].

Plot recipe (any CSV plotter works), e.g. with pandas + matplotlib:

    df = pandas.read_csv("fig1a.csv")
    for x, g in df.groupby("x"):
        plt.plot(g.theta_over_pi, g.log10_abs_remainder, label=f"x={x}")
"""

import argparse
import os

from laplasym.sweep import preset_configs, run_sweep, write_csv


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default=".")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)
    for preset in ("fig1a", "fig1b"):
        (cfg,) = preset_configs(preset)
        records = run_sweep(cfg, jobs=args.jobs)
        path = os.path.join(args.outdir, f"{preset}.csv")
        write_csv(records, path)
        print(f"wrote {path} ({len(records)} rows)")


if __name__ == "__main__":
    main()
