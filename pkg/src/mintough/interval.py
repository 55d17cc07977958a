"""Asteroidal triples, interval recognition and caterpillars."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from mintough.chordal import is_chordal
from mintough.errors import PreconditionError
from mintough.graph import Graph
from mintough.rational import ExtendedRational
from mintough.toughness import is_minimally_tough


@dataclass(frozen=True)
class AsteroidalTriple:
    x: int
    y: int
    z: int
    witness_paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def to_json(self) -> dict:
        return {"triple": [self.x, self.y, self.z], "witness_paths": [list(p) for p in self.witness_paths]}


def _path_avoiding(G: Graph, a: int, b: int, banned: frozenset[int]) -> tuple[int, ...] | None:
    """Shortest ``a``-``b`` path with no vertex in ``banned``; smallest ids explored first."""
    if a in banned or b in banned:
        return None
    parent = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return tuple(reversed(path))
        for y in sorted(G.adj[x]):
            if y not in parent and y not in banned:
                parent[y] = x
                queue.append(y)
    return None


def validate_asteroidal_triple(G: Graph, at: AsteroidalTriple) -> bool:
    """Independent re-check of a triple and its three paths."""
    x, y, z = at.x, at.y, at.z
    if len({x, y, z}) != 3 or G.has_edge(x, y) or G.has_edge(x, z) or G.has_edge(y, z):
        return False
    for path, (a, b, c) in zip(at.witness_paths, ((x, y, z), (x, z, y), (y, z, x))):
        if not path or path[0] != a or path[-1] != b:
            return False
        if any(not G.has_edge(p, q) for p, q in zip(path, path[1:])):
            return False
        if any(p in G.adj[c] for p in path):
            return False
    return True


def find_asteroidal_triple(G: Graph) -> AsteroidalTriple | None:
    """First independent triple (lexicographic) whose pairs connect outside the third's neighbourhood."""
    found = G.kernel.find_asteroidal_triple(G.masks, G.n)
    if found is None:
        return None
    x, y, z = found
    paths = (
        _path_avoiding(G, x, y, G.adj[z]),
        _path_avoiding(G, x, z, G.adj[y]),
        _path_avoiding(G, y, z, G.adj[x]),
    )
    return AsteroidalTriple(x, y, z, paths)


def is_interval(G: Graph) -> bool:
    return is_chordal(G) is not None and find_asteroidal_triple(G) is None


def is_caterpillar(G: Graph) -> bool:
    """A tree whose non-leaf vertices induce a path (possibly empty or a single vertex)."""
    if not G.is_tree():
        return False
    spine = [v for v in range(G.n) if G.degree(v) != 1]
    if len(spine) <= 1:
        return True
    spine_set = set(spine)
    inner = {v: len(G.adj[v] & spine_set) for v in spine}
    # the spine of a tree is connected, so a path iff max inner degree <= 2
    return max(inner.values()) <= 2


@dataclass(frozen=True)
class CaterpillarReport:
    interval: bool
    minimal: bool
    toughness: ExtendedRational | None
    caterpillar: bool

    @property
    def applicable(self) -> bool:
        return self.interval and self.minimal and self.toughness <= ExtendedRational(1, 2)

    @property
    def consistent(self) -> bool:
        return not self.applicable or self.caterpillar

    def to_json(self) -> dict:
        return {
            "interval": self.interval,
            "minimal": self.minimal,
            "toughness": None if self.toughness is None else self.toughness.to_json(),
            "caterpillar": self.caterpillar,
            "applicable": self.applicable,
            "consistent": self.consistent,
        }


def corollary_check(G: Graph) -> CaterpillarReport:
    """Minimally ``t``-tough interval graphs with ``t <= 1/2`` should be caterpillars."""
    if not G.is_connected():
        raise PreconditionError("graph must be connected")
    interval = is_interval(G)
    if G.is_complete():
        return CaterpillarReport(interval, False, None, is_caterpillar(G))
    res = is_minimally_tough(G)
    return CaterpillarReport(interval, res.minimal, res.toughness, is_caterpillar(G))
