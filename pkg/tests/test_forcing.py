"""Both forcing engines, alternating-cycle enumeration, and cycle packings."""

import pytest

from conftest import (
    brute_force_matchings,
    brute_forcing_number,
    brute_max_packing,
    brute_single_cycle_partners,
    cycle_graph,
)
from gpforce.forcing import (
    compute_forcing,
    enumerate_alternating_cycles,
    forcing_number_by_hitting_set,
    forcing_number_by_subset_search,
    is_forcing,
    max_disjoint_alternating_cycles,
)
from gpforce.graphs import DomainError, build_gp
from gpforce.matchings import (
    edge_indices,
    edge_set,
    enumerate_perfect_matchings,
    iter_bits,
    parse_matching,
)

# The five m1-alternating cycles of GP(5,2), straight from the published
# worked example, as (matched edge indices, vertex ids). Vertex v_i is 5+i.
M1_CYCLES = {
    (frozenset({0, 1, 10, 12}), frozenset({0, 1, 2, 3, 5, 6, 7, 8})),
    (frozenset({0, 1, 9, 12}), frozenset({0, 1, 2, 3, 4, 7, 8, 9})),
    (frozenset({0, 9, 10, 12}), frozenset({0, 2, 4, 5, 6, 7, 8, 9})),
    (frozenset({0, 1, 9, 10}), frozenset({0, 1, 2, 3, 4, 5, 6, 9})),
    (frozenset({1, 9, 10, 12}), frozenset({1, 3, 4, 5, 6, 7, 8, 9})),
}


def canonical_cycles(cycles):
    return {
        (frozenset(iter_bits(c.matched_edges)), frozenset(iter_bits(c.vertex_set)))
        for c in cycles
    }


def test_m1_alternating_cycles_match_published_list(gp52, gp52_matchings):
    cycles = enumerate_alternating_cycles(gp52, gp52_matchings["m1"])
    assert len(cycles) == 5
    assert canonical_cycles(cycles) == M1_CYCLES


def test_m6_alternating_cycles_match_published_family(gp52, gp52_matchings):
    # for the all-spokes matching: one 8-cycle per i, using spokes i..i+3
    # and omitting u_{i+4}, v_{i+4}
    expected = set()
    for i in range(5):
        matched = frozenset(5 + (i + d) % 5 for d in range(4))
        vertices = frozenset(range(10)) - {(i + 4) % 5, 5 + (i + 4) % 5}
        expected.add((matched, vertices))
    cycles = enumerate_alternating_cycles(gp52, gp52_matchings["m6"])
    assert len(cycles) == 5
    assert canonical_cycles(cycles) == expected


def test_cycles_are_even_and_alternating(gp52):
    for m in enumerate_perfect_matchings(build_gp(8, 2)):
        g = build_gp(8, 2)
        for c in enumerate_alternating_cycles(g, m):
            assert len(c.vertices) >= 4 and len(c.vertices) % 2 == 0
            assert c.matched_edges.bit_count() == len(c.vertices) // 2
            assert c.matched_edges & m == c.matched_edges
            assert c.edges & m == c.matched_edges
            # walk the stored sequence: edges must alternate in/out of m
            verts = list(c.vertices)
            walked = 0
            for i, (a, b) in enumerate(zip(verts, verts[1:] + verts[:1])):
                eid = g.find_edge(a, b)
                walked |= 1 << eid
                assert bool(m >> eid & 1) == (i % 2 == 0)
            assert walked == c.edges


def test_cycle_enumeration_rejects_non_matching(gp52):
    with pytest.raises(DomainError):
        enumerate_alternating_cycles(gp52, edge_set([0, 1]))


def test_c4_has_one_alternating_cycle():
    g = cycle_graph(4)
    for m in enumerate_perfect_matchings(g):
        cycles = enumerate_alternating_cycles(g, m)
        assert len(cycles) == 1
        assert cycles[0].vertex_set == 0b1111


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_cycle_count_equals_single_cycle_partners(n):
    # each m-alternating cycle C pairs with the distinct perfect matching
    # m XOR C, so the cycle list must biject with single-cycle partners
    g = build_gp(n, 2)
    ms = enumerate_perfect_matchings(g)
    for m in ms:
        cycles = enumerate_alternating_cycles(g, m)
        partners = brute_single_cycle_partners(g, m, ms)
        assert len(cycles) == len(partners)
        assert {m ^ c.edges for c in cycles} == set(partners)


def test_gp52_forcing_numbers_published(gp52, gp52_matchings):
    for m in gp52_matchings.values():
        assert forcing_number_by_hitting_set(gp52, m).forcing_number == 2
        assert forcing_number_by_subset_search(gp52, m).forcing_number == 2


def test_published_minimum_forcing_sets_are_found(gp52, gp52_matchings):
    r1 = forcing_number_by_hitting_set(gp52, gp52_matchings["m1"])
    assert edge_indices(r1.witness) == [0, 1]  # u0-u2, u1-u3
    r6 = forcing_number_by_hitting_set(gp52, gp52_matchings["m6"])
    assert edge_indices(r6.witness) == [5, 6]  # u0-v0, u1-v1
    s6 = forcing_number_by_subset_search(gp52, gp52_matchings["m6"])
    assert edge_indices(s6.witness) == [5, 6]


def test_unique_matching_forces_itself_with_nothing(k2):
    m = enumerate_perfect_matchings(k2)[0]
    for engine in (forcing_number_by_hitting_set, forcing_number_by_subset_search):
        result = engine(k2, m)
        assert result.forcing_number == 0
        assert result.witness == 0
    assert enumerate_alternating_cycles(k2, m) == []


def test_is_forcing_criteria_on_published_sets(gp52, gp52_matchings):
    m1 = gp52_matchings["m1"]
    single = parse_matching(gp52, "u0-u2")
    pair = parse_matching(gp52, "u0-u2,u1-u3")
    for criterion in ("uniqueness", "cycles"):
        assert not is_forcing(gp52, m1, single, criterion)
        assert is_forcing(gp52, m1, pair, criterion)
        assert is_forcing(gp52, m1, m1, criterion)


def test_is_forcing_rejects_non_subset(gp52, gp52_matchings):
    with pytest.raises(DomainError):
        is_forcing(gp52, gp52_matchings["m1"], edge_set([2]))
    with pytest.raises(DomainError):
        is_forcing(gp52, gp52_matchings["m1"], edge_set([0]), "nonsense")


def test_witnesses_are_minimal_and_forcing():
    for n in (5, 6, 7, 8):
        g = build_gp(n, 2)
        for m in enumerate_perfect_matchings(g):
            for result in (
                forcing_number_by_hitting_set(g, m),
                forcing_number_by_subset_search(g, m),
            ):
                w = result.witness
                assert w & m == w
                assert w.bit_count() == result.forcing_number
                assert is_forcing(g, m, w, "uniqueness")
                assert is_forcing(g, m, w, "cycles")


def test_engines_agree_with_brute_force():
    for build in (lambda: build_gp(5, 2), lambda: build_gp(6, 2), lambda: build_gp(7, 2)):
        g = build()
        ms = brute_force_matchings(g)
        for m in ms:
            expected = brute_forcing_number(g, m, ms)
            assert forcing_number_by_hitting_set(g, m).forcing_number == expected
            assert forcing_number_by_subset_search(g, m).forcing_number == expected


def test_subset_search_python_fallback_matches_kernel():
    from gpforce.forcing import _subset_search_py

    for n in (5, 6, 8):
        g = build_gp(n, 2)
        for m in enumerate_perfect_matchings(g):
            fast = forcing_number_by_subset_search(g, m)
            slow = _subset_search_py(g, m)
            assert (fast.forcing_number, fast.witness) == (
                slow.forcing_number,
                slow.witness,
            )


def test_gp52_packing_is_one_everywhere(gp52):
    for m in enumerate_perfect_matchings(gp52):
        packing = max_disjoint_alternating_cycles(gp52, m)
        assert packing.size == 1
        # and the packing really is disjoint
        used = 0
        for c in packing.cycles:
            assert not c.vertex_set & used
            used |= c.vertex_set


def test_k2_packing_empty(k2):
    m = enumerate_perfect_matchings(k2)[0]
    assert max_disjoint_alternating_cycles(k2, m).size == 0


def test_gp10_spokes_packing_matches_exhaustive_oracle():
    g = build_gp(10, 2)
    spokes = edge_set(range(10, 20))
    cycles = enumerate_alternating_cycles(g, spokes)
    assert max_disjoint_alternating_cycles(g, spokes).size == brute_max_packing(cycles)


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_packing_matches_exhaustive_oracle_everywhere(n):
    g = build_gp(n, 2)
    for m in enumerate_perfect_matchings(g):
        cycles = enumerate_alternating_cycles(g, m)
        assert max_disjoint_alternating_cycles(g, m).size == brute_max_packing(cycles)


def test_compute_forcing_dispatch(gp52, gp52_matchings):
    m = gp52_matchings["m1"]
    assert compute_forcing(gp52, m, "hitting_set").method == "hitting_set"
    assert compute_forcing(gp52, m, "subset_search").method == "subset_search"
    both = compute_forcing(gp52, m, "both")
    assert both.method == "both" and both.forcing_number == 2
    with pytest.raises(DomainError):
        compute_forcing(gp52, m, "oracle")
