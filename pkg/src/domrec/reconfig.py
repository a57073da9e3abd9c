"""k-dominating reconfiguration graphs and their Eulerian analysis.

The reconfiguration graph of a seed graph G at bound k has one node per
dominating set of cardinality at most k; nodes are adjacent when the sets
differ by adding or removing a single vertex.  The Eulerian test used
throughout is the relaxed one: every node has even degree and at most one
component contains an edge (isolated nodes are harmless).
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import VertexSet, dominating_table, is_dominating
from .errors import (
    BoundBelowGamma,
    DimensionMismatch,
    NoEdges,
    NotDominating,
    NotEulerian,
    NotSeedBuilt,
    ReconfigTooLarge,
)
from .graphs import SeedGraph

#: Node-cap default: a reconfiguration graph can have ~2**n nodes, so builds
#: above this size fail loudly instead of thrashing.
DEFAULT_NODE_CAP = 1 << 22

#: How many odd-degree witness nodes a report keeps.
ODD_WITNESS_CAP = 8


class ReconfigGraph:
    """Materialized reconfiguration graph with deterministic node order.

    Seed-built graphs carry their nodes as VertexSets sorted by (cardinality,
    bitmask); Cartesian products carry tuple labels instead.  Adjacency lists
    are sorted and never mutated after construction.
    """

    __slots__ = ("seed", "k", "nodes", "node_labels", "index", "adjacency", "_pos")

    def __init__(self, seed, k, nodes, node_labels, adjacency, pos=None):
        self.seed = seed
        self.k = k
        self.nodes = nodes
        self.node_labels = node_labels
        self.adjacency = adjacency
        self.index = {vs: i for i, vs in enumerate(nodes)} if nodes is not None else {}
        self._pos = pos

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def label(self, i: int):
        """Node label: a VertexSet for seed-built graphs, a tuple for products."""
        if self.nodes is not None:
            return self.nodes[i]
        return self.node_labels[i]

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for a in self.adjacency:
            hist[len(a)] = hist.get(len(a), 0) + 1
        return dict(sorted(hist.items()))

    def __repr__(self) -> str:
        src = f"{self.seed!r}, k={self.k}" if self.seed is not None else "product"
        return f"ReconfigGraph({src}: {self.node_count} nodes, {self.edge_count} edges)"


@dataclass(frozen=True)
class EulerReport:
    """Eulerian analysis of one reconfiguration graph."""

    node_count: int
    edge_count: int
    odd_degree_count: int
    odd_degree_nodes: tuple
    isolated_count: int
    nontrivial_component_count: int
    is_connected: bool
    is_eulerian: bool


def build_reconfig(g: SeedGraph, k: int, node_cap: int = DEFAULT_NODE_CAP) -> ReconfigGraph:
    """Materialize the reconfiguration graph of g at cardinality bound k.

    Down-moves are tested against the domination table; up-moves need no test
    because supersets of dominating sets dominate.
    """
    n = g.n
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    table = dominating_table(g)
    buckets: list[list[int]] = [[] for _ in range(k + 1)]
    count = 0
    for s in range(1 << n):
        if table[s]:
            c = s.bit_count()
            if c <= k:
                buckets[c].append(s)
                count += 1
                if count > node_cap:
                    raise ReconfigTooLarge(
                        f"more than {node_cap} nodes for k={k}; raise node_cap to force"
                    )
    if count == 0:
        raise BoundBelowGamma(f"no dominating set of cardinality <= {k}")
    masks = [s for bucket in buckets for s in bucket]
    pos = {s: i for i, s in enumerate(masks)}
    adjacency = []
    for s in masks:
        nbrs = []
        m = s
        while m:
            low = m & -m
            m ^= low
            t = s ^ low
            if table[t]:
                nbrs.append(pos[t])
        if s.bit_count() < k:
            rest = ((1 << n) - 1) ^ s
            while rest:
                low = rest & -rest
                rest ^= low
                nbrs.append(pos[s | low])
        nbrs.sort()
        adjacency.append(nbrs)
    nodes = [VertexSet(s, n) for s in masks]
    return ReconfigGraph(g, k, nodes, None, adjacency, pos)


def node_degree(g: SeedGraph, s: VertexSet, k: int) -> int:
    """Degree of the node for s in the reconfiguration graph at bound k,
    computed from the seed without materializing: removable members plus,
    below the bound, one up-move per outside vertex."""
    if s.n != g.n:
        raise DimensionMismatch(f"vertex set over {s.n} vertices, graph has {g.n}")
    if not is_dominating(g, s):
        raise NotDominating(f"{s} does not dominate {g!r}")
    c = s.cardinality
    if c > k:
        raise ValueError(f"cardinality {c} exceeds bound k={k}")
    deg = g.n - c if c < k else 0
    m = s.bits
    while m:
        low = m & -m
        m ^= low
        if is_dominating(g, VertexSet(s.bits ^ low, s.n)):
            deg += 1
    return deg


def eulerian_report(r: ReconfigGraph, witness_cap: int = ODD_WITNESS_CAP) -> EulerReport:
    """Degrees plus component analysis; Eulerian means no odd degree and at
    most one component containing an edge."""
    adjacency = r.adjacency
    node_count = len(adjacency)
    odd_count = 0
    witnesses = []
    degsum = 0
    for i, a in enumerate(adjacency):
        degsum += len(a)
        if len(a) % 2:
            odd_count += 1
            if len(witnesses) < witness_cap:
                witnesses.append(r.label(i))
    edge_count = degsum // 2
    seen = bytearray(node_count)
    nontrivial = 0
    component_count = 0
    isolated = 0
    for start in range(node_count):
        if seen[start]:
            continue
        component_count += 1
        stack = [start]
        seen[start] = 1
        size = 0
        has_edge = False
        while stack:
            v = stack.pop()
            size += 1
            if adjacency[v]:
                has_edge = True
            for u in adjacency[v]:
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
        if has_edge:
            nontrivial += 1
        elif size == 1:
            isolated += 1
    return EulerReport(
        node_count=node_count,
        edge_count=edge_count,
        odd_degree_count=odd_count,
        odd_degree_nodes=tuple(witnesses),
        isolated_count=isolated,
        nontrivial_component_count=nontrivial,
        is_connected=component_count <= 1,
        is_eulerian=odd_count == 0 and nontrivial <= 1,
    )


def euler_circuit(r: ReconfigGraph) -> list[int]:
    """Closed walk (node indices) using every edge exactly once.

    Hierholzer construction with a deterministic tie-break: start at the
    lowest-index node incident to an edge and always take the lowest-index
    unused neighbor.  The walk has edge_count + 1 entries.
    """
    report = eulerian_report(r)
    if not report.is_eulerian:
        raise NotEulerian("graph has an odd degree or two non-trivial components")
    if report.edge_count == 0:
        raise NoEdges("no edges to traverse")
    adjacency = r.adjacency
    start = next(i for i, a in enumerate(adjacency) if a)
    ptr = [0] * len(adjacency)
    used: set[tuple[int, int]] = set()
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        a = adjacency[v]
        i = ptr[v]
        while i < len(a) and ((v, a[i]) if v < a[i] else (a[i], v)) in used:
            i += 1
        ptr[v] = i
        if i < len(a):
            u = a[i]
            used.add((v, u) if v < u else (u, v))
            stack.append(u)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def cartesian_product(a: ReconfigGraph, b: ReconfigGraph, node_cap: int = DEFAULT_NODE_CAP) -> ReconfigGraph:
    """Cartesian product: (u, v) ~ (x, y) iff equal in one coordinate and
    adjacent in the other.  Node labels become (label_a, label_b) pairs."""
    na, nb = a.node_count, b.node_count
    if na * nb > node_cap:
        raise ReconfigTooLarge(f"product would have {na * nb} nodes")
    labels = []
    adjacency = []
    for i in range(na):
        la = a.label(i)
        for j in range(nb):
            labels.append((la, b.label(j)))
            nbrs = [i2 * nb + j for i2 in a.adjacency[i]]
            nbrs.extend(i * nb + j2 for j2 in b.adjacency[j])
            nbrs.sort()
            adjacency.append(nbrs)
    return ReconfigGraph(None, None, None, labels, adjacency)


def parity_bipartition_valid(r: ReconfigGraph) -> bool:
    """True iff every edge joins sets whose cardinalities differ by one, so
    coloring nodes by cardinality parity is a proper 2-coloring."""
    if r.nodes is None:
        raise NotSeedBuilt("parity bipartition needs vertex-set nodes")
    cards = [vs.cardinality for vs in r.nodes]
    for i, nbrs in enumerate(r.adjacency):
        ci = cards[i]
        for j in nbrs:
            if abs(ci - cards[j]) != 1:
                return False
    return True


def reconfig_to_dot(r: ReconfigGraph, label_style: str = "set") -> str:
    """DOT source; node labels in set notation '{0,2}' or as bitstrings."""
    if label_style not in ("set", "bits"):
        raise ValueError(f"label_style must be 'set' or 'bits', got {label_style!r}")
    lines = ["graph reconfig {"]
    for i in range(r.node_count):
        label = r.label(i)
        if r.nodes is not None and label_style == "bits":
            text = format(label.bits, f"0{label.n}b")
        else:
            text = str(label)
        lines.append(f'  {i} [label="{text}"];')
    for i, nbrs in enumerate(r.adjacency):
        lines.extend(f"  {i} -- {j};" for j in nbrs if i < j)
    lines.append("}")
    return "\n".join(lines) + "\n"


def reconfig_to_csv(r: ReconfigGraph) -> str:
    """Adjacency CSV: node_id, space-separated neighbor ids."""
    lines = ["node_id,neighbor_ids"]
    for i, nbrs in enumerate(r.adjacency):
        lines.append(f"{i},{' '.join(str(j) for j in nbrs)}")
    return "\n".join(lines) + "\n"
