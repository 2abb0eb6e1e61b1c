#!/usr/bin/env python3
"""Scaling experiment: planted instances at doubling sizes, median of repeated
runs, stage timings to CSV and consecutive-size ratios to stdout.

The interesting number is the ratio of total pipeline time between size n and
size 2n; values near 2 support linear dependence on n at fixed k.
"""

import argparse
import csv
import sys
from pathlib import Path
from statistics import median

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from intervalpath.generators import GeneratorSpec, generate
from intervalpath.pipeline import longest_path

STAGES = ("t_preprocess_ns", "t_reduce1_ns", "t_reduce2_ns", "t_dp_ns", "t_lift_ns")


def run(n: int, k: int, seed: int, reps: int) -> dict:
    graph = generate(GeneratorSpec(kind="planted", n=n, k=k, seed=seed))
    samples = []
    for _ in range(reps):
        stats = longest_path(graph).stats
        stats["total_ns"] = sum(stats[s] for s in STAGES)
        samples.append(stats)
    mid = median(s["total_ns"] for s in samples)
    chosen = min(samples, key=lambda s: abs(s["total_ns"] - mid))
    return chosen


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="10000,20000,40000", help="comma-separated n values")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--csv", default="scaling.csv", help="output CSV path")
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = []
    for n in sizes:
        stats = run(n, args.k, args.seed, args.reps)
        rows.append({"n": n, "k": args.k, **{s: stats[s] for s in STAGES}, "total_ns": stats["total_ns"]})
        print(f"n={n:>7}  total {stats['total_ns'] / 1e9:.3f}s  "
              f"(dp {stats['t_dp_ns'] / 1e9:.3f}s, reduce1 {stats['t_reduce1_ns'] / 1e9:.3f}s)")

    with open(args.csv, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {args.csv}")

    for prev, cur in zip(rows, rows[1:]):
        ratio = cur["total_ns"] / prev["total_ns"]
        print(f"ratio n={prev['n']} -> n={cur['n']}: {ratio:.2f}")


if __name__ == "__main__":
    main()
