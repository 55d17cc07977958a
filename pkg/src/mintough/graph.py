"""Simple undirected graphs on dense ids and their connectivity primitives."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from mintough import kernels
from mintough.errors import PreconditionError

VertexSet = frozenset  # of int vertex ids


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Deleting vertices is expressed with a ``removed`` set at call sites, so
    ids are never renumbered.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour id {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        return cls(len(masks), tuple(members(m) for m in masks))

    @cached_property
    def masks(self) -> list[int]:
        return [mask_of(nb) for nb in self.adj]

    @cached_property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph(self.n, tuple(adj))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n > 0 and omega(self) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    @property
    def kernel(self):
        return kernels.for_size(self.n)


def _removed_mask(G: Graph, removed: Iterable[int] | None) -> int:
    if removed is None:
        return 0
    m = mask_of(removed)
    if m >> G.n:
        raise ValueError("removed set contains ids outside the graph")
    return m


def components(G: Graph, removed: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``G - removed``, ordered by smallest member."""
    alive = G.full & ~_removed_mask(G, removed)
    comps = G.kernel.component_masks(G.masks, alive)
    return sorted((members(c) for c in comps), key=min)


def omega(G: Graph, removed: Iterable[int] | None = None) -> int:
    """Number of components of ``G - removed``; 0 for the empty graph."""
    alive = G.full & ~_removed_mask(G, removed)
    return G.kernel.count_components(G.masks, alive)


def is_cut_vertex(G: Graph, v: int) -> bool:
    return omega(G, (v,)) > omega(G)


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[frozenset[int], ...]


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Blocks (2-connected pieces and bridges) of a connected graph.

    Iterative Hopcroft-Tarjan with an edge stack.
    """
    if not G.is_connected():
        raise PreconditionError("block decomposition needs a connected graph")
    if G.n == 1:
        return BlockDecomposition(frozenset(), (frozenset({0}),))
    disc = [-1] * G.n
    low = [0] * G.n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    nbrs = [sorted(a) for a in G.adj]
    disc[0] = low[0] = 0
    clock = 1
    root_children = 0
    stack = [(0, -1, iter(nbrs[0]))]
    while stack:
        v, parent, it = stack[-1]
        for w in it:
            if disc[w] < 0:
                disc[w] = low[w] = clock
                clock += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter(nbrs[w])))
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == 0:
                    root_children += 1
                else:
                    cuts.add(parent)
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(block))
    if root_children > 1:
        cuts.add(0)
    blocks.sort(key=sorted)
    return BlockDecomposition(frozenset(cuts), tuple(blocks))


def vertex_connectivity(G: Graph) -> int:
    """Size of a smallest cutset; ``n - 1`` for complete graphs, 0 if disconnected."""
    return G.kernel.vertex_connectivity(G.masks, G.n)


ENUMERATION_LIMIT = 20


def min_separator(G: Graph, u: int, v: int) -> tuple[int, frozenset[int]]:
    """Smallest set avoiding ``u, v`` whose removal separates them (``u, v`` nonadjacent)."""
    if u == v or G.has_edge(u, v):
        raise PreconditionError("separator needs two distinct nonadjacent vertices")
    k, s = G.kernel.min_separator(G.masks, G.n, u, v)
    return k, members(s)


def local_connectivity(G: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint ``u``-``v`` paths.

    Separator enumeration up to ``ENUMERATION_LIMIT`` vertices, unit-capacity
    max-flow above it.
    """
    if u == v:
        raise PreconditionError("local connectivity needs u != v")
    if G.n > ENUMERATION_LIMIT:
        return local_connectivity_flow(G, u, v)
    if G.has_edge(u, v):
        return 1 + min_separator(G.without_edge(u, v), u, v)[0]
    return min_separator(G, u, v)[0]


def local_connectivity_flow(G: Graph, u: int, v: int) -> int:
    """Menger count by augmenting paths on the vertex-split network."""
    if u == v:
        raise PreconditionError("local connectivity needs u != v")
    direct = 1 if G.has_edge(u, v) else 0
    # node 2x is x_in, 2x+1 is x_out
    cap: dict[int, dict[int, int]] = {}

    def add(a: int, b: int) -> None:
        cap.setdefault(a, {})[b] = cap.get(a, {}).get(b, 0) + 1
        cap.setdefault(b, {}).setdefault(a, 0)

    for x in range(G.n):
        if x not in (u, v):
            add(2 * x, 2 * x + 1)
    for a, b in G.edges():
        if {a, b} == {u, v}:
            continue
        add(2 * a + 1, 2 * b)
        add(2 * b + 1, 2 * a)
    source, sink = 2 * u + 1, 2 * v
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap.get(a, {}).items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow + direct
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
