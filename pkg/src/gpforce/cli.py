"""Command-line interface.

Subcommands: graph, matchings, force, cycles, packing, poly, orbits,
verify-paper. Worker count comes from --threads, then the FORCE_THREADS
environment variable, then the available parallelism; outputs are assembled
after a deterministic sort, so they are byte-identical for any worker count.

Exit codes: 0 success, 1 verification mismatch, 2 domain error, 3 internal
consistency failure (the engines or orbit bookkeeping disagreed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .forcing import (
    EngineMismatch,
    compute_forcing,
    default_jobs,
    enumerate_alternating_cycles,
    max_disjoint_alternating_cycles,
)
from .graphs import DomainError, build_gp, validate
from .matchings import (
    edge_indices,
    enumerate_perfect_matchings,
    is_perfect_matching,
    matching_text,
    parse_matching,
    uncovered_and_overcovered,
)
from .polynomial import (
    ForcingPolynomial,
    OrbitInconsistency,
    forcing_report,
    matching_orbits,
    orbit_table,
    poly_stats,
    polynomial_text,
)
from .tables import PUBLISHED_RANGE, verify_published_tables

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3

_ENGINES = {"cycles": "hitting_set", "subsets": "subset_search", "both": "both"}


@dataclass
class RunConfig:
    n: int
    k: int = 2
    engine: str = "hitting_set"
    fmt: str = "table"
    jobs: int = 1
    group: str = "rotation"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _add_common(sub, engine=True, fmt=("table", "json"), group=False):
    sub.add_argument("--n", type=int, required=True, help="ring length n of GP(n,k)")
    sub.add_argument("--k", type=int, default=2, help="inner skip k (default 2)")
    if engine:
        sub.add_argument(
            "--engine",
            choices=sorted(_ENGINES),
            default="cycles",
            help="forcing engine: cycles = alternating-cycle hitting set, "
            "subsets = definition-based subset search, both = run and compare",
        )
    sub.add_argument("--format", choices=fmt, default="table", dest="fmt")
    if group:
        sub.add_argument("--group", choices=("rotation", "dihedral"), default="rotation")
    sub.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker processes (default: FORCE_THREADS or all cores)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpforce",
        description="Exact forcing numbers, forcing polynomials, and matching "
        "orbits of generalized Petersen graphs GP(n,k).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="construct and describe GP(n,k)")
    _add_common(p, engine=False, fmt=("table", "json", "dot"))

    p = sub.add_parser("matchings", help="list all perfect matchings")
    _add_common(p, engine=False)

    p = sub.add_parser("force", help="forcing number of one matching")
    _add_common(p)
    p.add_argument("--matching", required=True, help='text form, e.g. "u0-v0,u1-v1,..."')

    p = sub.add_parser("cycles", help="alternating cycles of one matching")
    _add_common(p, engine=False)
    p.add_argument("--matching", required=True)

    p = sub.add_parser("packing", help="maximum disjoint alternating cycles")
    _add_common(p, engine=False)
    p.add_argument("--matching", required=True)

    p = sub.add_parser("poly", help="forcing polynomial and statistics")
    _add_common(p, group=True)
    p.add_argument("--orbits", action="store_true", help="append the orbit table")

    p = sub.add_parser("orbits", help="orbit table (NO, PMC, FN, representative)")
    _add_common(p, fmt=("table", "json", "csv"), group=True)

    p = sub.add_parser(
        "verify-paper", help="recompute the published GP(n,2) tables and diff"
    )
    p.add_argument("--min", type=int, default=PUBLISHED_RANGE.start, dest="n_min")
    p.add_argument("--max", type=int, default=PUBLISHED_RANGE.stop - 1, dest="n_max")
    p.add_argument(
        "--engine", choices=sorted(_ENGINES), default="cycles", help="forcing engine"
    )
    p.add_argument("--format", choices=("table", "json"), default="table", dest="fmt")
    p.add_argument("--threads", type=int, default=None)

    return parser


def _config(args) -> RunConfig:
    jobs = args.threads if args.threads is not None else default_jobs()
    if jobs < 1:
        raise DomainError("--threads must be >= 1")
    return RunConfig(
        n=getattr(args, "n", 0),
        k=getattr(args, "k", 2),
        engine=_ENGINES[getattr(args, "engine", "cycles")],
        fmt=args.fmt,
        jobs=jobs,
        group=getattr(args, "group", "rotation"),
    )


def _parse_perfect_matching(g, text: str) -> int:
    m = parse_matching(g, text)
    if not is_perfect_matching(g, m):
        uncovered, overcovered = uncovered_and_overcovered(g, m)
        parts = []
        if uncovered:
            parts.append("uncovered: " + ",".join(g.vertex_name(v) for v in uncovered))
        if overcovered:
            parts.append(
                "doubly covered: " + ",".join(g.vertex_name(v) for v in overcovered)
            )
        raise DomainError("not a perfect matching (" + "; ".join(parts) + ")")
    return m


def cmd_graph(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    if cfg.fmt == "dot":
        out.write(g.to_dot())
    elif cfg.fmt == "json":
        out.write(g.to_json())
    else:
        problems = validate(g)
        out.write(f"{g!r}: {g.num_vertices} vertices, {g.num_edges} edges, 3-regular\n")
        out.write("valid\n" if not problems else "\n".join(problems) + "\n")
    return EXIT_OK


def cmd_matchings(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    ms = enumerate_perfect_matchings(g)
    if cfg.fmt == "json":
        out.write(
            _dumps(
                {
                    "n": cfg.n,
                    "k": cfg.k,
                    "count": len(ms),
                    "matchings": [edge_indices(m) for m in ms],
                }
            )
        )
    else:
        for i, m in enumerate(ms, start=1):
            out.write(f"{i:>4d}  {matching_text(g, m)}\n")
        out.write(f"{len(ms)} perfect matchings\n")
    return EXIT_OK


def cmd_force(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    m = _parse_perfect_matching(g, args.matching)
    result = compute_forcing(g, m, cfg.engine)
    packing = max_disjoint_alternating_cycles(g, m)
    n_cycles = len(enumerate_alternating_cycles(g, m))
    if cfg.fmt == "json":
        out.write(
            _dumps(
                {
                    "matching": edge_indices(m),
                    "forcing_number": result.forcing_number,
                    "witness": edge_indices(result.witness),
                    "packing_size": packing.size,
                    "n_alt_cycles": n_cycles,
                    "engine": result.method,
                }
            )
        )
    else:
        out.write(f"matching: {matching_text(g, m)}\n")
        out.write(f"forcing number: {result.forcing_number}\n")
        out.write(f"witness: {matching_text(g, result.witness) or '(empty)'}\n")
        out.write(f"max disjoint alternating cycles: {packing.size}\n")
        out.write(f"alternating cycles: {n_cycles}\n")
        out.write(f"engine: {result.method}\n")
    return EXIT_OK


def _cycle_path_text(g, cycle) -> str:
    return "-".join(g.vertex_name(v) for v in cycle.vertices)


def cmd_cycles(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    m = _parse_perfect_matching(g, args.matching)
    cycles = enumerate_alternating_cycles(g, m)
    if cfg.fmt == "json":
        out.write(
            _dumps(
                {
                    "matching": edge_indices(m),
                    "count": len(cycles),
                    "cycles": [
                        {
                            "vertices": [g.vertex_name(v) for v in c.vertices],
                            "matched_edges": edge_indices(c.matched_edges),
                        }
                        for c in cycles
                    ],
                }
            )
        )
    else:
        for i, c in enumerate(cycles, start=1):
            out.write(
                f"{i:>3d}  {_cycle_path_text(g, c)}"
                f"  [matched: {matching_text(g, c.matched_edges)}]\n"
            )
        out.write(f"{len(cycles)} alternating cycles\n")
    return EXIT_OK


def cmd_packing(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    m = _parse_perfect_matching(g, args.matching)
    packing = max_disjoint_alternating_cycles(g, m)
    if cfg.fmt == "json":
        out.write(
            _dumps(
                {
                    "matching": edge_indices(m),
                    "size": packing.size,
                    "cycles": [
                        [g.vertex_name(v) for v in c.vertices] for c in packing.cycles
                    ],
                }
            )
        )
    else:
        out.write(f"maximum disjoint alternating cycles: {packing.size}\n")
        for c in packing.cycles:
            out.write(f"  {_cycle_path_text(g, c)}\n")
    return EXIT_OK


def cmd_poly(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    matchings, results = forcing_report(g, engine=cfg.engine, jobs=cfg.jobs)
    coeffs: dict[int, int] = {}
    for r in results:
        coeffs[r.forcing_number] = coeffs.get(r.forcing_number, 0) + 1
    stats = poly_stats(ForcingPolynomial(coeffs))
    orbits = (
        matching_orbits(g, matchings, results, group=cfg.group) if args.orbits else None
    )
    if cfg.fmt == "json":
        payload = {
            "n": cfg.n,
            "k": cfg.k,
            "engine": cfg.engine,
            "polynomial": {str(e): c for e, c in sorted(coeffs.items())},
            "stats": stats.as_json_dict(),
        }
        if orbits is not None:
            payload["orbits"] = [
                {
                    "representative_edges": edge_indices(o.representative),
                    "pmc": o.size,
                    "fn": o.forcing_number,
                }
                for o in orbits
            ]
        out.write(_dumps(payload))
    else:
        avg = stats.average_forcing
        out.write(f"GP({cfg.n},{cfg.k}) forcing polynomial: {polynomial_text(coeffs)}\n")
        out.write(f"perfect matchings: {stats.pm_count}\n")
        out.write(
            f"average forcing number: {avg.numerator}/{avg.denominator}"
            f" ({avg.numerator / avg.denominator:.6f})\n"
        )
        out.write(f"spectrum: {{{', '.join(map(str, stats.spectrum))}}}\n")
        out.write(f"min/max forcing number: {stats.min_forcing}/{stats.max_forcing}\n")
        if orbits is not None:
            out.write(orbit_table(g, orbits).to_text())
    return EXIT_OK


def cmd_orbits(args, out) -> int:
    cfg = _config(args)
    g = build_gp(cfg.n, cfg.k)
    matchings, results = forcing_report(g, engine=cfg.engine, jobs=cfg.jobs)
    table = orbit_table(g, matching_orbits(g, matchings, results, group=cfg.group))
    if cfg.fmt == "json":
        out.write(_dumps(table.to_json_dict()))
    elif cfg.fmt == "csv":
        out.write(table.to_csv())
    else:
        out.write(table.to_text())
    return EXIT_OK


def cmd_verify_paper(args, out) -> int:
    jobs = args.threads if args.threads is not None else default_jobs()
    if jobs < 1:
        raise DomainError("--threads must be >= 1")
    if not PUBLISHED_RANGE.start <= args.n_min <= args.n_max <= PUBLISHED_RANGE.stop - 1:
        raise DomainError(
            f"published tables cover n = {PUBLISHED_RANGE.start}.."
            f"{PUBLISHED_RANGE.stop - 1}"
        )
    checks = verify_published_tables(
        range(args.n_min, args.n_max + 1), engine=_ENGINES[args.engine], jobs=jobs
    )
    n_pass = sum(1 for c in checks if c.ok)
    if args.fmt == "json":
        out.write(
            _dumps(
                {
                    "checks": [c.to_json_dict() for c in checks],
                    "passed": n_pass,
                    "total": len(checks),
                }
            )
        )
    else:
        for c in checks:
            if c.ok:
                out.write(
                    f"n={c.n}: PASS  {polynomial_text(c.computed_poly)}"
                    f"  ({len(c.computed_rows)} orbit rows)\n"
                )
            else:
                out.write(f"n={c.n}: FAIL\n")
                for line in c.diff_lines():
                    out.write(f"  {line}\n")
        out.write(f"{n_pass}/{len(checks)} tables reproduced\n")
    return EXIT_OK if n_pass == len(checks) else EXIT_MISMATCH


_HANDLERS = {
    "graph": cmd_graph,
    "matchings": cmd_matchings,
    "force": cmd_force,
    "cycles": cmd_cycles,
    "packing": cmd_packing,
    "poly": cmd_poly,
    "orbits": cmd_orbits,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (EngineMismatch, OrbitInconsistency) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
