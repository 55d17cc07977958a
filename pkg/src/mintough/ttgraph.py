"""TT-graphs: trees whose chosen degree-3 vertices are replaced by triangles.

A vertex ``y`` of the removed set ``Y`` is deleted and its three tree
neighbours are joined pairwise.  Recognition runs the other way: every
triangle block of ``G`` becomes a claw on a fresh centre, and the resulting
tree is replayed to confirm it rebuilds ``G``.
"""
from __future__ import annotations

from dataclasses import dataclass

from mintough import chordal, kernels
from mintough.errors import PreconditionError, TTValidationError
from mintough.graph import Graph, mask_of, omega
from mintough.rational import ExtendedRational
from mintough.toughness import is_minimally_tough, toughness

CASE_A = "a"
CASE_B = "b"
PURE_TREE = "pure_tree"

_TREE_ERRORS = {
    1: ("not_a_tree", "input is not a tree"),
    2: ("max_degree_below_3", "tree has maximum degree below 3"),
    3: ("removed_set_dependent", "removed set is not independent"),
    4: ("removed_vertex_degree", "a removed vertex does not have degree 3"),
    5: ("neighbor_degree", "neighbours of removed vertices fit neither degree condition"),
}

_TT_REASONS = {
    1: "complete",
    2: "disconnected",
    3: "block_not_edge_or_triangle",
    4: "triangle_vertex_below_max_modified_degree",
}


def modified_degree(G: Graph, v: int) -> int:
    """Number of components of ``G - v``."""
    return omega(G, (v,))


def mu(G: Graph) -> int:
    return max(G.kernel.modified_degrees(G.masks, G.n), default=0)


def triangles_at(G: Graph, v: int) -> int:
    nb = sorted(G.adj[v])
    return sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b in G.adj[a])


def toughness_via_mu(G: Graph) -> ExtendedRational:
    """``1/mu(G)`` for connected noncomplete graphs whose vertices are all simplicial or cut."""
    if not G.is_connected() or G.is_complete():
        raise PreconditionError("needs a connected noncomplete graph")
    for v in range(G.n):
        if chordal.classify_vertex(G, v) is chordal.VertexKind.NEITHER:
            raise PreconditionError(f"vertex {v} is neither simplicial nor a cut vertex")
    return ExtendedRational(1, mu(G))


@dataclass(frozen=True)
class TTDecomposition:
    """Certificate that a graph is a TT-graph.

    ``correspondence[i]`` is the tree vertex that graph vertex ``i`` came from.
    ``triangle_map`` pairs each removed tree vertex with the graph vertices
    of the triangle that replaced it.
    """

    tree: Graph
    removed: frozenset[int]
    triangle_map: tuple[tuple[int, tuple[int, int, int]], ...]
    case_tag: str
    mu: int
    correspondence: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "tree": {"n": self.tree.n, "edges": [list(e) for e in self.tree.edges()]},
            "removed": sorted(self.removed),
            "triangle_map": [[c, list(t)] for c, t in self.triangle_map],
            "case_tag": self.case_tag,
            "mu": self.mu,
            "correspondence": list(self.correspondence),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TTDecomposition":
        tree = Graph.from_edges(obj["tree"]["n"], [tuple(e) for e in obj["tree"]["edges"]])
        return cls(
            tree=tree,
            removed=frozenset(obj["removed"]),
            triangle_map=tuple((c, tuple(t)) for c, t in obj["triangle_map"]),
            case_tag=obj["case_tag"],
            mu=obj["mu"],
            correspondence=tuple(obj["correspondence"]),
        )


def _replay(T: Graph, removed: frozenset[int]) -> Graph:
    return Graph.from_masks(T.kernel.tt_replay(T.masks, T.n, mask_of(removed)))


def validate_tree_and_removed(T: Graph, Y) -> str:
    """Case tag (``"a"`` or ``"b"``) for a valid pair, else :class:`TTValidationError`."""
    Y = frozenset(Y)
    if any(not 0 <= y < T.n for y in Y):
        raise TTValidationError("not_a_tree", "removed set has ids outside the tree")
    code, case = T.kernel.tt_validate(T.masks, T.n, mask_of(Y))
    if code:
        raise TTValidationError(*_TREE_ERRORS[code])
    return case


def tt_from_tree(T: Graph, Y) -> tuple[Graph, TTDecomposition]:
    """Build the TT-graph of ``(T, Y)``; surviving tree vertices keep their relative order."""
    Y = frozenset(Y)
    case = validate_tree_and_removed(T, Y)
    G = _replay(T, Y)
    kept = [v for v in range(T.n) if v not in Y]
    index = {v: i for i, v in enumerate(kept)}
    tri = tuple(
        (y, tuple(sorted(index[w] for w in T.adj[y])))
        for y in sorted(Y)
    )
    return G, TTDecomposition(T, Y, tri, case, mu(G), tuple(kept))


def explain_tt(G: Graph) -> tuple[TTDecomposition | None, str]:
    """Recognise ``G`` as a TT-graph; returns the certificate or ``None`` with a reason code."""
    code, tris = G.kernel.tt_decompose(G.masks, G.n)
    if code:
        return None, _TT_REASONS[code]
    m = mu(G)
    if not tris:
        # trees are TT-graphs whatever their maximum degree
        T, removed, case = G, frozenset(), PURE_TREE
    else:
        T = Graph.from_masks(kernels.for_size(G.n + len(tris)).claw_tree(G.masks, G.n, [list(t) for t in tris]))
        removed = frozenset(range(G.n, G.n + len(tris)))
        try:
            case = validate_tree_and_removed(T, removed)
        except TTValidationError as exc:
            return None, f"claw_tree_invalid:{exc.code}"
    if _replay(T, removed).masks != G.masks:
        return None, "replay_mismatch"
    tri_map = tuple((G.n + k, tuple(t)) for k, t in enumerate(tris))
    return TTDecomposition(T, removed, tri_map, case, m, tuple(range(G.n))), "ok"


def recognize_tt(G: Graph) -> TTDecomposition | None:
    return explain_tt(G)[0]


def replay_matches(G: Graph, d: TTDecomposition) -> bool:
    """Rebuild from ``(tree, removed)`` and compare with ``G`` through the correspondence."""
    H = _replay(d.tree, d.removed)
    kept = [v for v in range(d.tree.n) if v not in d.removed]
    if H.n != G.n or tuple(kept) != tuple(sorted(d.correspondence)):
        return False
    pos = {t: i for i, t in enumerate(kept)}
    relabel = [pos[d.correspondence[i]] for i in range(G.n)]
    return all(
        {relabel[w] for w in G.adj[v]} == H.adj[relabel[v]] for v in range(G.n)
    )


@dataclass(frozen=True)
class CharacterisationReport:
    """Both sides of the characterisation, evaluated independently.

    ``left``: minimally ``t``-tough with ``t <= 1/2`` (brute force).
    ``right``: recognised as a TT-graph with toughness ``1/mu``.
    """

    left: bool
    right: bool
    toughness: ExtendedRational
    mu: int
    decomposition: TTDecomposition | None
    tt_reason: str
    counterexample_edge: tuple[int, int] | None

    @property
    def agree(self) -> bool:
        return self.left == self.right

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "agree": self.agree,
            "toughness": self.toughness.to_json(),
            "mu": self.mu,
            "tt_reason": self.tt_reason,
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
            "counterexample_edge": None if self.counterexample_edge is None else list(self.counterexample_edge),
        }


def classify_main_theorem(G: Graph) -> CharacterisationReport:
    if not G.is_connected():
        raise PreconditionError("graph must be connected")
    if G.is_complete():
        raise PreconditionError("graph must be noncomplete")
    if chordal.is_chordal(G) is None:
        raise PreconditionError("graph must be chordal")
    minimal = is_minimally_tough(G)
    t = minimal.toughness
    left = minimal.minimal and t <= ExtendedRational(1, 2)
    decomposition, reason = explain_tt(G)
    m = mu(G)
    right = decomposition is not None and toughness(G).value == ExtendedRational(1, m)
    return CharacterisationReport(left, right, t, m, decomposition, reason, minimal.edge)
