"""Seed graphs: bitmask representation, family generators, enumeration, graph6.

Vertices are the integers 0..n-1 and adjacency is stored as one bitmask per
vertex, so a graph on n vertices fits in n machine words.  The hard cap
HARD_CAP keeps every subset of vertices representable as a single int.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BoundExceeded,
    CapacityExceeded,
    InvalidFamilyParameters,
    MalformedGraph6,
)

#: Largest supported vertex count.  Subset enumeration is 2**n, and 2**26 is
#: the desk-scale ceiling this package is designed for.
HARD_CAP = 26

#: Largest n for exhaustive labeled-graph enumeration (2**21 graphs at n=7).
ENUMERATION_CAP = 7


class SeedGraph:
    """Simple undirected graph as per-vertex neighbor bitmasks.

    adj[v] has bit u set iff uv is an edge.  Instances are immutable after
    construction and safe to share across threads.
    """

    __slots__ = ("n", "adj", "name")

    def __init__(self, n: int, adj, name: str | None = None, validate: bool = True):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if n > HARD_CAP:
            raise CapacityExceeded(f"{n} vertices exceeds the cap of {HARD_CAP}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        if validate:
            limit = 1 << n
            for v, mask in enumerate(adj):
                if mask < 0 or mask >= limit:
                    raise ValueError(f"adjacency mask of vertex {v} out of range")
                if (mask >> v) & 1:
                    raise ValueError(f"self-loop at vertex {v}")
            for u in range(n):
                for v in range(u + 1, n):
                    if ((adj[u] >> v) & 1) != ((adj[v] >> u) & 1):
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "name", name)

    def __setattr__(self, *_):
        raise AttributeError("SeedGraph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges, name: str | None = None) -> "SeedGraph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, name=name, validate=False)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def closed_neighborhoods(self) -> list[int]:
        """adj[v] | {v} for every v, the unit of domination checks."""
        return [self.adj[v] | (1 << v) for v in range(self.n)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SeedGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = self.name or f"{self.n}v{self.edge_count()}e"
        return f"SeedGraph({label})"


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance: kind plus integer or nested arguments."""

    kind: str
    args: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = field(default=())

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", (n,))

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls("cycle", (n,))

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls("complete", (n,))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "FamilySpec":
        return cls("complete_bipartite", (m, n))

    @classmethod
    def star(cls, n: int) -> "FamilySpec":
        return cls("star", (n,))

    @classmethod
    def cocktail(cls, n: int) -> "FamilySpec":
        return cls("cocktail", (n,))

    @classmethod
    def turan(cls, n: int, r: int) -> "FamilySpec":
        return cls("turan", (n, r))

    @classmethod
    def corona(cls, inner: "FamilySpec") -> "FamilySpec":
        return cls("corona", (), (inner,))

    @classmethod
    def disjoint_union(cls, *parts: "FamilySpec") -> "FamilySpec":
        return cls("disjoint_union", (), tuple(parts))

    def spec_string(self) -> str:
        """Round-trippable textual form, e.g. 'biclique:3,4' or 'corona:path:3'."""
        if self.kind == "complete_bipartite":
            return f"biclique:{self.args[0]},{self.args[1]}"
        if self.kind == "corona":
            return f"corona:{self.parts[0].spec_string()}"
        if self.kind == "disjoint_union":
            return "union:" + "+".join(p.spec_string() for p in self.parts)
        return f"{self.kind}:{','.join(str(a) for a in self.args)}"


def _require(cond: bool, message: str):
    if not cond:
        raise InvalidFamilyParameters(message)


def make_family(spec: FamilySpec) -> SeedGraph:
    """Build the canonical labeled instance of a graph family.

    Labelings are fixed: path/cycle vertices in order, bipartite parts
    X = 0..m-1 then Y, cocktail partner pairs (2i, 2i+1), corona pendant n+i
    attached to i, disjoint union relabeling later parts by offset.
    """
    kind, args = spec.kind, spec.args
    if kind == "path":
        (n,) = args
        _require(n >= 1, f"path needs n >= 1, got {n}")
        _check_cap(n)
        g = SeedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    elif kind == "cycle":
        (n,) = args
        _require(n >= 3, f"cycle needs n >= 3, got {n}")
        _check_cap(n)
        g = SeedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    elif kind == "complete":
        (n,) = args
        _require(n >= 1, f"complete needs n >= 1, got {n}")
        _check_cap(n)
        full = (1 << n) - 1
        g = SeedGraph(n, [full ^ (1 << v) for v in range(n)], validate=False)
    elif kind == "complete_bipartite":
        m, n = args
        _require(m >= 1 and n >= 1, f"biclique needs m, n >= 1, got {m}, {n}")
        _check_cap(m + n)
        xmask = (1 << m) - 1
        ymask = ((1 << (m + n)) - 1) ^ xmask
        g = SeedGraph(m + n, [ymask] * m + [xmask] * n, validate=False)
    elif kind == "star":
        (n,) = args
        _require(n >= 1, f"star needs n >= 1, got {n}")
        return make_family(FamilySpec.complete_bipartite(1, n))
    elif kind == "cocktail":
        (n,) = args
        _require(n >= 4 and n % 2 == 0, f"cocktail needs even n >= 4, got {n}")
        _check_cap(n)
        full = (1 << n) - 1
        g = SeedGraph(
            n, [full ^ (1 << v) ^ (1 << (v ^ 1)) for v in range(n)], validate=False
        )
    elif kind == "turan":
        n, r = args
        _require(1 <= r <= n, f"turan needs n >= r >= 1, got {n}, {r}")
        _check_cap(n)
        # First n % r parts get the extra vertex; parts are contiguous ranges.
        sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
        full = (1 << n) - 1
        adj = []
        start = 0
        for size in sizes:
            part = ((1 << size) - 1) << start
            adj.extend(full ^ part for _ in range(size))
            start += size
        g = SeedGraph(n, adj, validate=False)
    elif kind == "corona":
        inner = make_family(spec.parts[0])
        _require(inner.n >= 2, f"corona needs an inner graph on >= 2 vertices, got {inner.n}")
        g = corona_of(inner)
    elif kind == "disjoint_union":
        _require(len(spec.parts) >= 2, "disjoint union needs at least two parts")
        g = disjoint_union([make_family(p) for p in spec.parts])
    else:
        raise InvalidFamilyParameters(f"unknown family kind {kind!r}")
    return SeedGraph(g.n, g.adj, name=spec.spec_string(), validate=False)


def _check_cap(n: int):
    if n > HARD_CAP:
        raise CapacityExceeded(f"{n} vertices exceeds the cap of {HARD_CAP}")


def corona_of(g: SeedGraph) -> SeedGraph:
    """Attach a pendant vertex n+i to each vertex i of g."""
    n = g.n
    _check_cap(2 * n)
    adj = [g.adj[v] | (1 << (n + v)) for v in range(n)]
    adj.extend(1 << v for v in range(n))
    return SeedGraph(2 * n, adj, validate=False)


def disjoint_union(graphs: list[SeedGraph]) -> SeedGraph:
    """Disjoint union, relabeling each component by the running vertex offset."""
    total = sum(g.n for g in graphs)
    _check_cap(total)
    adj = []
    offset = 0
    for g in graphs:
        adj.extend(mask << offset for mask in g.adj)
        offset += g.n
    return SeedGraph(total, adj, validate=False)


def induced_subgraph(g: SeedGraph, vertices: list[int]) -> SeedGraph:
    """Subgraph induced by the given vertices, relabeled 0..len-1 in order."""
    pos = {v: i for i, v in enumerate(vertices)}
    adj = [0] * len(vertices)
    for v in vertices:
        m = g.adj[v]
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            if u in pos:
                adj[pos[v]] |= 1 << pos[u]
    return SeedGraph(len(vertices), adj, validate=False)


def is_complete(g: SeedGraph) -> bool:
    full = (1 << g.n) - 1
    return all(g.adj[v] == full ^ (1 << v) for v in range(g.n))


def is_cocktail_party(g: SeedGraph) -> bool:
    """True iff g is a complete graph of even order >= 4 minus a perfect matching.

    Checked structurally: every vertex has exactly one non-neighbor and the
    non-neighbor pairing is an involution.
    """
    n = g.n
    if n < 4 or n % 2:
        return False
    full = (1 << n) - 1
    partner = []
    for v in range(n):
        non = full ^ g.adj[v] ^ (1 << v)
        if non.bit_count() != 1:
            return False
        partner.append(non.bit_length() - 1)
    return all(partner[partner[v]] == v for v in range(n))


def is_bipartite(g: SeedGraph) -> bool:
    """Two-colorability check by breadth-first traversal of each component."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            m = g.adj[v]
            while m:
                low = m & -m
                m ^= low
                u = low.bit_length() - 1
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def _component_mask(adj, start: int) -> int:
    """Bitmask of vertices reachable from start."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def connected_components(g: SeedGraph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by minimum vertex."""
    out = []
    remaining = (1 << g.n) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(g.adj, start)
        out.append([v for v in range(g.n) if (comp >> v) & 1])
        remaining &= ~comp
    return out


def is_connected(g: SeedGraph) -> bool:
    if g.n <= 1:
        return True
    return _component_mask(g.adj, 0) == (1 << g.n) - 1


def enumerate_labeled_graphs(n: int, connected_only: bool = False):
    """Yield every labeled graph on n vertices exactly once.

    Edge subsets of K_n are enumerated in increasing edge-mask order, with
    bit i of the mask standing for the i-th pair in the lexicographic order
    (0,1), (0,2), ..., (0,n-1), (1,2), ...  With connected_only, graphs that
    are not connected are skipped.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise BoundExceeded(
            f"labeled enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}"
        )
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            m >>= 1
            i += 1
        if connected_only and n > 1 and _component_mask(adj, 0) != full:
            continue
        yield SeedGraph(n, adj, validate=False)


# ---------------------------------------------------------------------------
# graph6 interchange (printable 6-bit encoding of the upper triangle)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: SeedGraph) -> str:
    """Encode as a single graph6 record (no header, no newline)."""
    n = g.n
    if n > 62:
        raise CapacityExceeded("graph6 short form supports at most 62 vertices")
    bits = []
    for v in range(1, n):
        col = g.adj[v]
        bits.extend((col >> u) & 1 for u in range(v))
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> SeedGraph:
    """Decode one graph6 record, optionally prefixed with '>>graph6<<'."""
    record = text.strip()
    if record.startswith(_G6_HEADER):
        record = record[len(_G6_HEADER) :]
    if not record:
        raise MalformedGraph6("empty record")
    for i, ch in enumerate(record):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} at byte {i} outside graph6 range")
    if ord(record[0]) == 126:
        # Long-form counts start at 63 vertices, always over our cap.
        raise CapacityExceeded("multi-byte graph6 vertex counts exceed the cap")
    n = ord(record[0]) - 63
    if n > HARD_CAP:
        raise CapacityExceeded(f"{n} vertices exceeds the cap of {HARD_CAP}")
    nbits = n * (n - 1) // 2
    body = record[1:]
    expected_len = (nbits + 5) // 6
    if len(body) != expected_len:
        raise MalformedGraph6(
            f"expected {expected_len} data characters for n={n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    adj = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            i += 1
    return SeedGraph(n, adj, validate=False)


def seed_to_dot(g: SeedGraph) -> str:
    """DOT source for the seed graph, vertex ids as labels."""
    lines = ["graph seed {"]
    if g.name:
        lines.append(f'  label="{g.name}";')
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
