"""Forcing numbers of perfect matchings by two independent exact engines.

A subset S of a perfect matching M is a forcing set when no other perfect
matching contains S; f(G, M) is the smallest size of such a subset. The two
engines here must always agree:

  * subset search: scan subsets of M by size and test each one directly by
    counting perfect matchings that contain it (the definition, executed
    literally);
  * hitting set: S forces M exactly when S meets the matched edges of every
    M-alternating cycle, so f(G, M) is the minimum transversal of those
    cycles, found by branch and bound.

Their agreement on every input is itself a theorem, which makes running both
a built-in correctness oracle.
"""

from __future__ import annotations

import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import _kernel
from .graphs import DomainError, Graph
from .matchings import count_matchings_containing, is_perfect_matching, iter_bits


class EngineMismatch(RuntimeError):
    """The two forcing engines disagreed; this always signals a bug."""


@dataclass(frozen=True)
class AltCycle:
    """An M-alternating cycle: vertex sequence plus derived bitmasks.

    `edges` holds the complete cycle edge set, matched and unmatched alike;
    it is the identity of the cycle. Two different cycles can share both
    matched_edges and vertex_set (two Hamiltonian alternating cycles of
    GP(6,2) do), so neither is enough to tell cycles apart on its own.
    """

    vertices: tuple[int, ...]
    edges: int
    matched_edges: int
    vertex_set: int

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class ForcingResult:
    forcing_number: int
    witness: int  # a minimum forcing set, as an edge bitmask
    method: str  # "subset_search" | "hitting_set" | "both"


@dataclass(frozen=True)
class CyclePacking:
    cycles: tuple[AltCycle, ...]

    @property
    def size(self) -> int:
        return len(self.cycles)


def enumerate_alternating_cycles(g: Graph, m: int) -> list[AltCycle]:
    """Every M-alternating cycle of (g, m), each exactly once.

    DFS over alternating paths seeded at each matched edge e = (a, b) with
    a < b: the path starts a, b and only visits matched edges with index
    greater than e, so e is the lexicographically smallest matched edge of
    any cycle it closes and the fixed a -> b orientation rules out the
    reversed traversal. Cycles are keyed by their full edge set. Sorted by
    ascending length, then lexicographic vertex set, then edge set.
    """
    if not is_perfect_matching(g, m):
        raise DomainError("not a perfect matching of this graph")
    partner = [-1] * g.num_vertices
    matched_edge_at = [-1] * g.num_vertices
    for eid in iter_bits(m):
        a, b = g.edges[eid]
        partner[a], partner[b] = b, a
        matched_edge_at[a] = matched_edge_at[b] = eid
    incident = g.incident
    found: dict[int, AltCycle] = {}

    for e0 in iter_bits(m):
        a, b = g.edges[e0]

        def walk(v: int, vmask: int, path: list[int], emask: int, mmask: int):
            for eid, w in incident[v]:
                if m >> eid & 1:  # this step must leave the matching
                    continue
                if w == a:
                    key = emask | (1 << eid)
                    if key not in found:
                        found[key] = AltCycle(tuple(path), key, mmask, vmask)
                    continue
                if vmask >> w & 1:
                    continue
                ew = matched_edge_at[w]
                if ew <= e0:
                    continue
                x = partner[w]
                if vmask >> x & 1:
                    continue
                walk(
                    x,
                    vmask | (1 << w) | (1 << x),
                    path + [w, x],
                    emask | (1 << eid) | (1 << ew),
                    mmask | (1 << ew),
                )

        walk(b, (1 << a) | (1 << b), [a, b], 1 << e0, 1 << e0)

    cycles = list(found.values())
    cycles.sort(
        key=lambda c: (len(c.vertices), tuple(iter_bits(c.vertex_set)), c.edges)
    )
    return cycles


def is_forcing(g: Graph, m: int, s: int, criterion: str = "uniqueness") -> bool:
    """Whether s (a subset of matching m) forces m.

    criterion "uniqueness" counts perfect matchings containing s (forcing
    iff exactly one); criterion "cycles" checks that s meets the matched
    edges of every m-alternating cycle. The two are provably equivalent.
    """
    if s & ~m:
        raise DomainError("s is not a subset of the matching")
    if criterion == "uniqueness":
        return count_matchings_containing(g, s, limit=2) == 1
    if criterion == "cycles":
        return all(c.matched_edges & s for c in enumerate_alternating_cycles(g, m))
    raise DomainError(f"unknown criterion {criterion!r}")


def _greedy_disjoint_count(masks) -> int:
    # pairwise matched-edge-disjoint cycles need pairwise distinct hits
    used = 0
    count = 0
    for cm in masks:
        if not cm & used:
            count += 1
            used |= cm
    return count


def forcing_number_by_hitting_set(g: Graph, m: int) -> ForcingResult:
    """f(g, m) as a minimum hitting set over alternating-cycle matched edges.

    Exact branch and bound: branch on the first uncovered cycle's matched
    edges in ascending index order; lower bound is the greedy count of
    pairwise disjoint uncovered cycles. The first optimum found under this
    deterministic order is the witness.
    """
    cycle_masks = [c.matched_edges for c in enumerate_alternating_cycles(g, m)]
    if not cycle_masks:
        return ForcingResult(0, 0, "hitting_set")
    best_size = m.bit_count()
    best_mask = m

    def descend(chosen: int, size: int, masks: list[int]):
        nonlocal best_size, best_mask
        if not masks:
            if size < best_size:
                best_size, best_mask = size, chosen
            return
        if size + _greedy_disjoint_count(masks) >= best_size:
            return
        target = masks[0]
        for eid in iter_bits(target):
            ebit = 1 << eid
            descend(chosen | ebit, size + 1, [cm for cm in masks if not cm & ebit])

    descend(0, 0, cycle_masks)
    return ForcingResult(best_size, best_mask, "hitting_set")


def _subset_search_py(g: Graph, m: int) -> ForcingResult:
    medges = list(iter_bits(m))
    for k in range(len(medges) + 1):
        for combo in combinations(medges, k):
            s = 0
            for e in combo:
                s |= 1 << e
            if count_matchings_containing(g, s, limit=2) == 1:
                return ForcingResult(k, s, "subset_search")
    raise AssertionError("unreachable: a matching always forces itself")


def forcing_number_by_subset_search(g: Graph, m: int) -> ForcingResult:
    """f(g, m) straight from the definition.

    For k = 0, 1, ... try every k-subset of m in lexicographic order by edge
    index; a subset forces iff exactly one perfect matching contains it
    (counted with early exit at two). Returns the first success. k = 0
    covers graphs whose matching is already unique.
    """
    if not is_perfect_matching(g, m):
        raise DomainError("not a perfect matching of this graph")
    if not _kernel.eligible(g):
        return _subset_search_py(g, m)
    medges = list(iter_bits(m))
    k, positions = _kernel.run_subset_search(g, medges)
    witness = 0
    for j in positions:
        witness |= 1 << medges[j]
    return ForcingResult(k, witness, "subset_search")


def max_disjoint_alternating_cycles(g: Graph, m: int) -> CyclePacking:
    """A maximum family of pairwise vertex-disjoint m-alternating cycles.

    Exhaustive branch and bound over the canonically ordered cycle list;
    prunes a branch when even taking every remaining compatible cycle cannot
    beat the incumbent.
    """
    cycles = enumerate_alternating_cycles(g, m)
    best: list[AltCycle] = []

    def grow(start: int, used: int, chosen: list[AltCycle]):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        candidates = [
            i for i in range(start, len(cycles)) if not cycles[i].vertex_set & used
        ]
        if len(chosen) + len(candidates) <= len(best):
            return
        for i in candidates:
            chosen.append(cycles[i])
            grow(i + 1, used | cycles[i].vertex_set, chosen)
            chosen.pop()

    grow(0, 0, [])
    return CyclePacking(tuple(best))


def compute_forcing(g: Graph, m: int, engine: str = "hitting_set") -> ForcingResult:
    """Dispatch to one engine, or run both and insist they agree."""
    if engine == "hitting_set":
        return forcing_number_by_hitting_set(g, m)
    if engine == "subset_search":
        return forcing_number_by_subset_search(g, m)
    if engine == "both":
        hit = forcing_number_by_hitting_set(g, m)
        sub = forcing_number_by_subset_search(g, m)
        if hit.forcing_number != sub.forcing_number:
            raise EngineMismatch(
                f"engines disagree on {g!r}, matching {m:#x}: "
                f"hitting_set={hit.forcing_number}, subset_search={sub.forcing_number}"
            )
        return ForcingResult(hit.forcing_number, hit.witness, "both")
    raise DomainError(f"unknown engine {engine!r}")


_POOL_GRAPH: Graph | None = None
_POOL_ENGINE = "hitting_set"


def _pool_init(g: Graph, engine: str):
    global _POOL_GRAPH, _POOL_ENGINE
    _POOL_GRAPH = g
    _POOL_ENGINE = engine


def _pool_task(m: int) -> ForcingResult:
    return compute_forcing(_POOL_GRAPH, m, _POOL_ENGINE)


def default_jobs() -> int:
    """Worker count: FORCE_THREADS env var, else available parallelism."""
    env = os.environ.get("FORCE_THREADS", "").strip()
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise DomainError(f"FORCE_THREADS must be an integer, got {env!r}") from None
        if jobs < 1:
            raise DomainError("FORCE_THREADS must be >= 1")
        return jobs
    return os.cpu_count() or 1


def forcing_numbers_map(
    g: Graph, matchings, engine: str = "hitting_set", jobs: int | None = None
) -> list[ForcingResult]:
    """Per-matching forcing results, in input order.

    jobs > 1 fans out over worker processes; results are collected back in
    input order, so the output is identical for every worker count.
    """
    matchings = list(matchings)
    if jobs is None:
        jobs = default_jobs()
    if (
        jobs <= 1
        or len(matchings) < 8
        or "fork" not in multiprocessing.get_all_start_methods()
    ):
        return [compute_forcing(g, m, engine) for m in matchings]
    # compile kernels before forking so every worker inherits them; forking
    # mid-JIT (or JIT-cache loads inside workers) is not reliable
    _kernel.warmup()
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(
        max_workers=jobs, mp_context=ctx, initializer=_pool_init, initargs=(g, engine)
    ) as pool:
        return list(pool.map(_pool_task, matchings, chunksize=1))
