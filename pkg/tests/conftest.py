"""Shared test fixtures: independent brute-force oracles and graph strategies.

The oracles deliberately use different formulations than the package code
(per-vertex adjacency loops instead of coverage unions, all-pairs symmetric
difference instead of incremental moves) so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations

import hypothesis.strategies as st

from domrec import SeedGraph


def naive_is_dominating(g: SeedGraph, bits: int) -> bool:
    """Per-vertex check: every vertex outside the set has a neighbor inside."""
    for v in range(g.n):
        if (bits >> v) & 1:
            continue
        if not (g.adj[v] & bits):
            return False
    return True


def naive_dominating_masks(g: SeedGraph, k: int) -> list[int]:
    """Filter subsets by size then by the naive predicate, via combinations."""
    out = []
    for size in range(k + 1):
        for combo in combinations(range(g.n), size):
            bits = 0
            for v in combo:
                bits |= 1 << v
            if naive_is_dominating(g, bits):
                out.append(bits)
    return out


def naive_reconfig_edges(masks: list[int]) -> set[tuple[int, int]]:
    """All-pairs oracle: nodes adjacent iff symmetric difference has one bit."""
    edges = set()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (masks[i] ^ masks[j]).bit_count() == 1:
                edges.add((i, j))
    return edges


@st.composite
def seed_graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return SeedGraph.from_edges(n, edges)
