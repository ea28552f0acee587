#!/usr/bin/env python3
"""Time the two forcing engines side by side across a range of n.

Useful for picking an engine on bigger instances: the hitting-set engine
scales with the number of alternating cycles, the subset-search engine with
binomial(n, f) definition checks per matching.

Usage:
    python scripts/engine_timings.py [--min 5] [--max 14] [--threads N]
"""

import argparse
import sys
import time

from gpforce.forcing import default_jobs, forcing_numbers_map
from gpforce.graphs import build_gp
from gpforce.matchings import enumerate_perfect_matchings


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=5, dest="n_min")
    ap.add_argument("--max", type=int, default=14, dest="n_max")
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args(argv)
    jobs = args.threads if args.threads is not None else default_jobs()

    print(f"{'n':>3} {'matchings':>9} {'hitting_set':>12} {'subset_search':>14}  agree")
    for n in range(args.n_min, args.n_max + 1):
        g = build_gp(n, 2)
        ms = enumerate_perfect_matchings(g)
        timings = {}
        numbers = {}
        for engine in ("hitting_set", "subset_search"):
            t0 = time.perf_counter()
            results = forcing_numbers_map(g, ms, engine=engine, jobs=jobs)
            timings[engine] = time.perf_counter() - t0
            numbers[engine] = [r.forcing_number for r in results]
        agree = numbers["hitting_set"] == numbers["subset_search"]
        print(
            f"{n:>3} {len(ms):>9} {timings['hitting_set']:>11.2f}s"
            f" {timings['subset_search']:>13.2f}s  {agree}"
        )
        if not agree:
            print("  ENGINE DISAGREEMENT, this is a bug", file=sys.stderr)
            return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
