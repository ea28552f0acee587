#!/usr/bin/env python3
"""Compute forcing polynomials and orbit tables beyond the published range.

The published tables stop at n = 15. For larger n there is nothing to diff
against, so correctness rests on running both engines and insisting they
agree on every matching (--engine both, the default here).

Usage:
    python scripts/extend_tables.py [--min 16] [--max 20] [--threads N]
                                    [--engine both] [--group rotation]
"""

import argparse
import sys
import time
from collections import Counter

from gpforce.forcing import default_jobs, forcing_numbers_map
from gpforce.graphs import build_gp
from gpforce.matchings import enumerate_perfect_matchings
from gpforce.polynomial import (
    ForcingPolynomial,
    matching_orbits,
    orbit_table,
    poly_stats,
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=16, dest="n_min")
    ap.add_argument("--max", type=int, default=20, dest="n_max")
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument(
        "--engine", choices=("hitting_set", "subset_search", "both"), default="both"
    )
    ap.add_argument("--group", choices=("rotation", "dihedral"), default="rotation")
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--no-orbits", action="store_true", help="skip the orbit tables")
    args = ap.parse_args(argv)
    jobs = args.threads if args.threads is not None else default_jobs()

    for n in range(args.n_min, args.n_max + 1):
        t0 = time.perf_counter()
        g = build_gp(n, args.k)
        ms = enumerate_perfect_matchings(g)
        results = forcing_numbers_map(g, ms, engine=args.engine, jobs=jobs)
        poly = ForcingPolynomial(dict(Counter(r.forcing_number for r in results)))
        elapsed = time.perf_counter() - t0
        stats = poly_stats(poly)
        avg = stats.average_forcing
        print(f"GP({n},{args.k}): {poly}   [{elapsed:.1f}s, engine={args.engine}]")
        print(
            f"  matchings={stats.pm_count}  average={avg.numerator}/{avg.denominator}"
            f" ({avg.numerator / avg.denominator:.6f})  spectrum={list(stats.spectrum)}"
        )
        if not args.no_orbits:
            table = orbit_table(g, matching_orbits(g, ms, results, group=args.group))
            for line in table.to_text().splitlines():
                print(f"  {line}")
        print(flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
