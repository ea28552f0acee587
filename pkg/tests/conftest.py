"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's search code: matchings are
enumerated by scanning raw edge combinations, and forcing numbers are derived
by testing subset containment against that full matching list. They are slow
and only used at small sizes, which is exactly the point.
"""

from itertools import combinations

import pytest

from gpforce.graphs import Graph, build_gp
from gpforce.matchings import parse_matching


@pytest.fixture(scope="session")
def gp52():
    return build_gp(5, 2)


@pytest.fixture(scope="session")
def gp52_matchings(gp52):
    """The six perfect matchings of GP(5,2), in published naming (m1..m6)."""
    texts = {
        "m1": "u0-u2,u1-u3,u4-v4,v0-v1,v2-v3",
        "m2": "u1-u3,u2-u4,u0-v0,v1-v2,v3-v4",
        "m3": "u2-u4,u0-u3,u1-v1,v2-v3,v0-v4",
        "m4": "u0-u3,u1-u4,u2-v2,v3-v4,v0-v1",
        "m5": "u1-u4,u0-u2,u3-v3,v0-v4,v1-v2",
        "m6": "u0-v0,u1-v1,u2-v2,u3-v3,u4-v4",
    }
    return {name: parse_matching(gp52, text) for name, text in texts.items()}


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture(scope="session")
def k2():
    return path_graph(2)


def brute_force_matchings(g: Graph) -> list[int]:
    """All perfect matchings by scanning raw |V|/2-subsets of the edge set."""
    if g.num_vertices % 2:
        return []
    want = g.num_vertices // 2
    full = g.full_vertex_mask
    out = []
    for combo in combinations(range(g.num_edges), want):
        covered = 0
        ok = True
        for eid in combo:
            a, b = g.edges[eid]
            bits = (1 << a) | (1 << b)
            if covered & bits:
                ok = False
                break
            covered |= bits
        if ok and covered == full:
            out.append(sum(1 << e for e in combo))
    out.sort()
    return out


def brute_forcing_number(g: Graph, m: int, all_matchings: list[int]) -> int:
    """Smallest size of a subset of m contained in exactly one matching."""
    medges = [e for e in range(g.num_edges) if m >> e & 1]
    for k in range(len(medges) + 1):
        for combo in combinations(medges, k):
            s = sum(1 << e for e in combo)
            if sum(1 for mm in all_matchings if mm & s == s) == 1:
                return k
    raise AssertionError("a perfect matching always forces itself")


def brute_single_cycle_partners(g: Graph, m: int, all_matchings: list[int]) -> list[int]:
    """Matchings whose symmetric difference with m is one single cycle.

    These are in bijection with the m-alternating cycles, giving an oracle
    for the cycle enumerator that never walks a path.
    """
    partners = []
    for mm in all_matchings:
        diff = mm ^ m
        if not diff:
            continue
        verts = set()
        adj = {}
        for eid in range(g.num_edges):
            if diff >> eid & 1:
                a, b = g.edges[eid]
                verts.update((a, b))
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
        if any(len(v) != 2 for v in adj.values()):
            continue
        # connected iff a walk from any vertex visits them all
        start = next(iter(verts))
        seen = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if seen == verts:
            partners.append(mm)
    return partners


def brute_max_packing(cycles) -> int:
    """Exhaustive maximum vertex-disjoint cycle family, no bounding tricks."""
    best = 0

    def grow(i, used, size):
        nonlocal best
        best = max(best, size)
        for j in range(i, len(cycles)):
            if not cycles[j].vertex_set & used:
                grow(j + 1, used | cycles[j].vertex_set, size + 1)

    grow(0, 0, 0)
    return best
