"""Induced-path growth on seeded families.

Runs the experiment driver over a size ladder, writes the CSV, and prints the
fitted log-log slope of the induced-path count against n over FREE rows.

    python3 scripts/growth.py --generator forest-plus --k 3 --out runs/forest_plus.csv
"""

import argparse
import os

from anticycle.experiment import ExperimentSpec, fit_exponent, read_csv_rows, run_experiment


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--generator", default="forest-plus")
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    ap.add_argument("--trials", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--p", type=float, default=0.2)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="runs/growth.csv")
    args = ap.parse_args()

    spec = ExperimentSpec(
        args.generator, args.sizes, args.seed, trials=args.trials, s=args.s,
        p=args.p, k=args.k, workers=args.workers, timing=True,
    )
    if os.path.dirname(args.out):
        os.makedirs(os.path.dirname(args.out), exist_ok=True)
    rows = read_csv_rows(run_experiment(spec, args.out))
    free = [r for r in rows if r["verdict"] == "FREE"]
    print(f"{len(rows)} rows, {len(free)} FREE, written to {args.out}")
    for n in args.sizes:
        counts = [int(r["induced_paths"]) for r in free if int(r["n"]) == n and r["induced_paths"]]
        if counts:
            print(f"n={n:4d}  free={len(counts):3d}  paths min {min(counts)}  max {max(counts)}")
    if len(free) >= 3:
        fit = fit_exponent(free, "n", "induced_paths")
        print(f"slope {fit.slope:.3f}  residual {fit.residual:.3g}  points {fit.points}")


if __name__ == "__main__":
    main()
