"""Optional numba-compiled kernels for the hot counting loops.

Each kernel mirrors a pure-Python implementation that remains the reference
(and the fallback when numba is missing or the graph is too large). Masks are
signed 64-bit here, so the fast path only engages when the vertex count fits
in 62 bits; callers check `eligible` first.
"""

from __future__ import annotations

try:
    import numpy as np
    from numba import njit

    AVAILABLE = True
except ImportError:  # pragma: no cover - numba is normally present
    AVAILABLE = False

MAX_KERNEL_VERTICES = 62


def eligible(g) -> bool:
    return AVAILABLE and g.num_vertices <= MAX_KERNEL_VERTICES


def neighbor_table(g):
    """Flat (width-padded) neighbor array for a graph, memoized on the graph."""
    table = getattr(g, "_nbr_table", None)
    if table is None:
        width = max((g.degree(v) for v in range(g.num_vertices)), default=1)
        flat = np.full(width * g.num_vertices, -1, np.int64)
        for v in range(g.num_vertices):
            for slot, (_, w) in enumerate(g.incident[v]):
                flat[width * v + slot] = w
        table = (flat, width)
        g._nbr_table = table
    return table


def warmup():
    """Compile the kernels now. Called before forking worker pools so the
    children inherit compiled code instead of each re-JITting. The on-disk
    JIT cache is deliberately not used: loading it from pool workers proved
    unreliable, and a single up-front compile per run is cheap."""
    if not AVAILABLE:
        return
    nbr = np.array([1, 0], np.int64)
    count_capped(nbr, 1, 0b11, 0, 2)
    out = np.empty(1, np.int64)
    subset_search_lex(nbr, 1, 0b11, np.array([0b11], np.int64), 1, out)


def run_subset_search(g, medges: list[int]) -> tuple[int, list[int]]:
    """Kernel-backed subset search over the given matched edges (ascending).

    Returns the forcing number and the chosen positions into `medges`.
    """
    nbr, width = neighbor_table(g)
    cover_bits = np.empty(len(medges), np.int64)
    for i, eid in enumerate(medges):
        a, b = g.edges[eid]
        cover_bits[i] = (1 << a) | (1 << b)
    out_idx = np.empty(max(1, len(medges)), np.int64)
    k = subset_search_lex(
        nbr, width, g.full_vertex_mask, cover_bits, len(medges), out_idx
    )
    return k, [int(out_idx[j]) for j in range(k)]


if AVAILABLE:

    @njit(nogil=True)
    def count_capped(nbr, width, full, covered, cap):
        """Perfect matchings extending `covered`, counted up to `cap`.

        Branches on the lowest-index uncovered vertex, exactly like the
        pure-Python counter.
        """
        if covered == full:
            return 1
        rest = full & ~covered
        vbit = rest & (-rest)
        v = 0
        b = vbit
        while b > 1:
            b >>= 1
            v += 1
        total = 0
        base = width * v
        for j in range(width):
            w = nbr[base + j]
            if w < 0:
                break
            wbit = 1 << w
            if covered & wbit:
                continue
            total += count_capped(nbr, width, full, covered | vbit | wbit, cap)
            if total >= cap:
                break
        return total

    @njit(nogil=True)
    def subset_search_lex(nbr, width, full, cover_bits, n_edges, out_idx):
        """First forcing subset of a matching, scanning k = 0, 1, ... in
        lexicographic order over matched-edge positions.

        cover_bits[i] is the two-endpoint vertex mask of the i-th matched
        edge. Returns the subset size and writes the chosen positions into
        out_idx; a subset forces iff exactly one perfect matching contains it.
        """
        for k in range(n_edges + 1):
            if k == 0:
                if count_capped(nbr, width, full, 0, 2) == 1:
                    return 0
                continue
            idx = np.empty(k, np.int64)
            for j in range(k):
                idx[j] = j
            while True:
                covered = 0
                for j in range(k):
                    covered |= cover_bits[idx[j]]
                if count_capped(nbr, width, full, covered, 2) == 1:
                    for j in range(k):
                        out_idx[j] = idx[j]
                    return k
                # advance to the next k-combination
                j = k - 1
                while j >= 0 and idx[j] == n_edges - k + j:
                    j -= 1
                if j < 0:
                    break
                idx[j] += 1
                for t in range(j + 1, k):
                    idx[t] = idx[t - 1] + 1
        return -1  # unreachable: the full matching always forces itself
