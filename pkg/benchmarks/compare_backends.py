#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the numpy fallback.

Runs the per-stage decoder benchmark once per backend and field size and
prints a side-by-side table.  Decoded digests are checked to match across
backends, so this doubles as an equivalence smoke test.

Usage: python benchmarks/compare_backends.py [--m 12 16 20] [--repeat 3]
"""

import argparse
import sys

from rswe import backend
from rswe.bench import PHASES, run_bench


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--erasures", type=int, default=None,
                        help="default q/2 per field size")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    names = ["python"] + (["compiled"] if backend.HAVE_COMPILED else [])
    if len(names) == 1:
        print("compiled kernels unavailable; benchmarking the fallback only")

    header = f"{'m':>3} {'backend':>9}" + "".join(
        f"{p:>14}" for p in (*PHASES, "total")
    )
    print(header)
    print("-" * len(header))
    for m in args.m:
        reports = {}
        for name in names:
            reports[name] = run_bench(
                m, erasures=args.erasures, seed=args.seed,
                repeat=args.repeat, backend_name=name,
            )
            r = reports[name]
            cells = "".join(
                f"{r.medians[p]:>13.4f}s" for p in (*PHASES, "total")
            )
            print(f"{m:>3} {name:>9}{cells}")
        digests = {r.digest for r in reports.values()}
        if len(digests) != 1:
            print(f"m={m}: BACKEND MISMATCH, digests differ", file=sys.stderr)
            return 1
        if len(reports) == 2:
            ratio = (reports["python"].medians["total"]
                     / reports["compiled"].medians["total"])
            print(f"{'':>13}compiled speedup on total: {ratio:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
