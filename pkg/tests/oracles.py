"""Definition-level reference computations on plain Python sets.

Slow and deliberately independent of the bitmask kernels.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from mintough.graph import Graph


def count_components(G: Graph, removed=()) -> int:
    removed = set(removed)
    seen = set(removed)
    count = 0
    for s in range(G.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def toughness(G: Graph):
    """``None`` for complete graphs, otherwise the exact minimum ratio (0 if disconnected)."""
    if all(len(G.adj[v]) == G.n - 1 for v in range(G.n)):
        return None
    if count_components(G) > 1:
        return Fraction(0)
    best = None
    for k in range(1, G.n):
        for S in itertools.combinations(range(G.n), k):
            w = count_components(G, S)
            if w > 1 and (best is None or Fraction(k, w) < best):
                best = Fraction(k, w)
    return best


def is_minimally_tough(G: Graph) -> bool:
    t = toughness(G)
    for u, v in G.edges():
        after = toughness(G.without_edge(u, v))
        if after is None or after >= t:
            return False
    return True


def is_simplicial(G: Graph, v: int) -> bool:
    return all(b in G.adj[a] for a, b in itertools.combinations(sorted(G.adj[v]), 2))
