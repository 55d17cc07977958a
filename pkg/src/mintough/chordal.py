"""Chordality via LexBFS, maximal cliques, and weighted clique trees."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from mintough import kernels
from mintough.errors import PreconditionError
from mintough.graph import Graph, mask_of, members, omega


def lexbfs_order(G: Graph) -> list[int]:
    """Reversed LexBFS visit order (start at 0, smallest id breaks ties)."""
    order = G.kernel.lexbfs(G.masks, G.n)
    order.reverse()
    return order


def is_perfect_elimination_order(G: Graph, order: list[int]) -> bool:
    if sorted(order) != list(range(G.n)):
        return False
    return G.kernel.is_peo(G.masks, G.n, list(order))


def is_chordal(G: Graph) -> list[int] | None:
    """A perfect elimination order if ``G`` is chordal, else ``None``."""
    return G.kernel.is_chordal(G.masks, G.n)


def _require_peo(G: Graph) -> list[int]:
    peo = is_chordal(G)
    if peo is None:
        raise PreconditionError("graph is not chordal")
    return peo


def maximal_cliques_chordal(G: Graph) -> list[frozenset[int]]:
    peo = _require_peo(G)
    return [members(c) for c in G.kernel.peo_cliques(G.masks, G.n, peo)]


@dataclass(frozen=True)
class CliqueTree:
    cliques: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int, int], ...]

    def to_json(self) -> dict:
        return {
            "cliques": [sorted(c) for c in self.cliques],
            "tree_edges": [list(e) for e in self.tree_edges],
        }

    def to_dot(self, name: str = "T") -> str:
        lines = [f"graph {name} {{"]
        for i, c in enumerate(self.cliques):
            label = ",".join(str(v) for v in sorted(c))
            lines.append(f'  {i} [label="{{{label}}}"];')
        for i, j, w in self.tree_edges:
            lines.append(f'  {i} -- {j} [label="{w}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_clique_tree(G: Graph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph.

    Ties are broken by weight descending, then by clique index pair, so the
    result is deterministic.
    """
    peo = _require_peo(G)
    if not G.is_connected():
        raise PreconditionError("clique tree needs a connected graph")
    cl = G.kernel.peo_cliques(G.masks, G.n, peo)
    edges = kernels.for_size(len(cl)).clique_tree_edges(cl)
    return CliqueTree(tuple(members(c) for c in cl), tuple(tuple(e) for e in edges))


def verify_clique_intersection(ct: CliqueTree) -> bool:
    """Every ``K & K'`` lies in every clique on the tree path between them."""
    cl = [mask_of(c) for c in ct.cliques]
    n = max((max(c) + 1 for c in ct.cliques if c), default=0)
    return kernels.for_size(max(n, len(cl))).verify_clique_intersection(cl, list(ct.tree_edges))


def verify_induced_subtree(ct: CliqueTree, G: Graph) -> bool:
    """For each vertex, the cliques holding it induce a connected subtree."""
    cl = [mask_of(c) for c in ct.cliques]
    return kernels.for_size(max(G.n, len(cl))).verify_induced_subtree(cl, list(ct.tree_edges), G.n)


def max_pairwise_clique_intersection(G: Graph) -> int:
    """Largest ``|K & K'|`` over pairs of maximal cliques (0 with fewer than two).

    At most 1 exactly when every clique tree has all edge weights 1.
    """
    cl = [mask_of(c) for c in maximal_cliques_chordal(G)]
    best = 0
    for i in range(len(cl)):
        for j in range(i + 1, len(cl)):
            best = max(best, bin(cl[i] & cl[j]).count("1"))
    return best


class VertexKind(str, Enum):
    SIMPLICIAL = "simplicial"
    CUT = "cut"
    BOTH = "both"
    NEITHER = "neither"


def is_simplicial(G: Graph, v: int) -> bool:
    nb = G.adj[v]
    return all(nb - {w} <= G.adj[w] for w in nb)


def classify_vertex(G: Graph, v: int) -> VertexKind:
    simplicial = is_simplicial(G, v)
    cut = omega(G, (v,)) > 1
    if simplicial and cut:
        return VertexKind.BOTH
    if simplicial:
        return VertexKind.SIMPLICIAL
    if cut:
        return VertexKind.CUT
    return VertexKind.NEITHER
