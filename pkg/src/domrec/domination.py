"""Dominating-set predicates, enumeration, and summary statistics.

A subset S dominates when the union of closed neighborhoods of its members
covers every vertex.  All enumeration walks the 2**n subset masks with a
one-step dynamic program over precomputed closed neighborhoods; at the
supported sizes this brute force is both the implementation and the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DimensionMismatch, EmptyGraph
from .graphs import SeedGraph


class VertexSet:
    """An immutable subset of seed-graph vertices, stored as a bitmask."""

    __slots__ = ("bits", "n")

    def __init__(self, bits: int, n: int):
        if bits < 0 or bits >> n:
            raise ValueError(f"bits {bits:#x} outside [0, 2**{n})")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *_):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, vertices, n: int) -> "VertexSet":
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits, n)

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if (self.bits >> v) & 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool((self.bits >> v) & 1)

    def __iter__(self):
        return iter(self.members())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.bits == other.bits
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.n))

    def __lt__(self, other: "VertexSet") -> bool:
        # Sorting key used for node order everywhere: cardinality, then mask.
        return (self.cardinality, self.bits) < (other.cardinality, other.bits)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members()) + "}"

    def __repr__(self) -> str:
        return f"VertexSet({self}, n={self.n})"


@dataclass(frozen=True)
class DominationProfile:
    """Summary of the dominating sets of one seed graph."""

    gamma: int
    upper_gamma: int
    counts_by_size: tuple[int, ...]
    total_count: int
    universal_threshold: int
    well_dominated: bool


def is_dominating(g: SeedGraph, s: VertexSet) -> bool:
    """True iff every vertex outside s has a neighbor in s."""
    if s.n != g.n:
        raise DimensionMismatch(f"vertex set over {s.n} vertices, graph has {g.n}")
    covered = 0
    m = s.bits
    adj = g.adj
    while m:
        low = m & -m
        m ^= low
        covered |= adj[low.bit_length() - 1] | low
    return covered == (1 << g.n) - 1


def is_minimal_dominating(g: SeedGraph, s: VertexSet) -> bool:
    """True iff s dominates and no single-vertex deletion of s still dominates."""
    if not is_dominating(g, s):
        return False
    m = s.bits
    while m:
        low = m & -m
        m ^= low
        if is_dominating(g, VertexSet(s.bits ^ low, s.n)):
            return False
    return True


def dominating_table(g: SeedGraph) -> bytearray:
    """Byte table over all 2**n subset masks: table[S] == 1 iff S dominates.

    Computed in one pass: the coverage of S is the coverage of S minus its
    lowest vertex, unioned with that vertex's closed neighborhood.
    """
    n = g.n
    size = 1 << n
    table = bytearray(size)
    if n == 0:
        table[0] = 1  # the empty set dominates the empty graph vacuously
        return table
    full = size - 1
    nbhd = g.closed_neighborhoods()
    cover = [0] * size
    for s in range(1, size):
        low = s & -s
        c = cover[s ^ low] | nbhd[low.bit_length() - 1]
        cover[s] = c
        if c == full:
            table[s] = 1
    return table


def enumerate_dominating_sets(g: SeedGraph, k: int) -> list[VertexSet]:
    """All dominating sets of cardinality <= k, sorted by (cardinality, mask)."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k must be in [0, {g.n}], got {k}")
    table = dominating_table(g)
    buckets: list[list[int]] = [[] for _ in range(k + 1)]
    for s in range(1 << g.n):
        if table[s]:
            c = s.bit_count()
            if c <= k:
                buckets[c].append(s)
    n = g.n
    return [VertexSet(s, n) for bucket in buckets for s in bucket]


def domination_profile(g: SeedGraph) -> DominationProfile:
    """Compute gamma, the upper domination number, per-size counts, and the
    universal domination threshold (least t with every t-subset dominating)."""
    n = g.n
    if n == 0:
        raise EmptyGraph("domination profile undefined on the empty graph")
    table = dominating_table(g)
    counts = [0] * (n + 1)
    for s in range(1 << n):
        if table[s]:
            counts[s.bit_count()] += 1
    gamma = next(c for c in range(n + 1) if counts[c])
    universal_threshold = next(t for t in range(n + 1) if counts[t] == comb(n, t))
    upper_gamma = gamma
    for s in range(1 << n):
        if not table[s]:
            continue
        c = s.bit_count()
        if c <= upper_gamma:
            continue
        m = s
        minimal = True
        while m:
            low = m & -m
            m ^= low
            if table[s ^ low]:
                minimal = False
                break
        if minimal:
            upper_gamma = c
    return DominationProfile(
        gamma=gamma,
        upper_gamma=upper_gamma,
        counts_by_size=tuple(counts),
        total_count=sum(counts),
        universal_threshold=universal_threshold,
        well_dominated=gamma == upper_gamma,
    )
