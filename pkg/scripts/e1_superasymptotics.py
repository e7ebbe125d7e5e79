#!/usr/bin/env python3
"""Optimal-truncation table for the scaled exponential integral.

For each x the table lists the least-term index, the exact value, the
optimally truncated partial sum, the remainder, the first neglected term,
the (2 pi x)^(1/2) e^{-x} estimate, and the converging-factor ratio
R_N/u_N (which tends to 1/2).
"""

import argparse
import os

from laplasym.sweep import e1_table, write_e1_csv


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default=".")
    ap.add_argument("--xmax", type=int, default=30)
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)
    rows = e1_table([float(v) for v in range(1, args.xmax + 1)])
    path = os.path.join(args.outdir, "e1.csv")
    write_e1_csv(rows, path)
    print(f"wrote {path}")
    for x, n_opt, ev, ps, rem, u_n, est, ratio in rows:
        print(
            f"x={x:5.1f} N={n_opt:3d} E={ev:.12f} |R|={abs(rem):.3e} "
            f"estimate={est:.3e} R/u={ratio:+.4f}"
        )


if __name__ == "__main__":
    main()
