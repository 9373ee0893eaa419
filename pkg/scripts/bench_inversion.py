#!/usr/bin/env python3
"""Time the composition-sum formula for entry (N, 0) against full matrix inversion.

    python scripts/bench_inversion.py --seq fibonacci --sizes 8,12,16,20 --out bench.json
"""

import argparse
import json
import platform
import sys

from fnomial.cli import DEFAULT_BENCH_SIZES, bench_row


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seq", action="append",
                   help="sequence selector, repeatable (default: natural, fibonacci, gaussian:2)")
    p.add_argument("--sizes", default=",".join(map(str, DEFAULT_BENCH_SIZES)))
    p.add_argument("--repeat", type=int, default=3, help="keep the best of this many runs")
    p.add_argument("--out", help="write the JSON results here as well")
    args = p.parse_args()

    seqs = args.seq or ["natural", "fibonacci", "gaussian:2"]
    sizes = [int(s) for s in args.sizes.split(",")]
    results = []
    for seq in seqs:
        for N in sizes:
            runs = [bench_row(seq, N) for _ in range(args.repeat)]
            best = dict(runs[0])
            best["direct_seconds"] = min(r["direct_seconds"] for r in runs)
            best["oracle_seconds"] = min(r["oracle_seconds"] for r in runs)
            best["faster"] = "oracle" if best["oracle_seconds"] < best["direct_seconds"] else "direct"
            best["sequence"] = seq
            results.append(best)
            print(f"{seq:>12} N={N:>3} compositions={best['compositions']:>8} "
                  f"direct={best['direct_seconds']:.5f}s oracle={best['oracle_seconds']:.5f}s "
                  f"ratio={best['direct_seconds'] / best['oracle_seconds']:.1f}", flush=True)

    doc = {"python": platform.python_version(), "results": results}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
    json.dump(doc, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    main()
