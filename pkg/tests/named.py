"""Small named graphs shared by the tests.

The net graph is the triangle 1-2-3 with pendants 0 (on 1), 4 (on 2) and
5 (on 3).  The diamond with pendants uses u=0, v=1, x=2, y=3, a=4, b=5.
"""
from __future__ import annotations

import random

from mintough.graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


NET = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 3), (2, 4), (3, 5)])
GDP = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)])
# centre 0 with legs 0-1-2, 0-3-4, 0-5-6
SPIDER = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
# y=0 joined to w1..w3 = 1..3, each w with two extra leaves
CASE_B_TREE = Graph.from_edges(10, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)])
TWO_EDGES = Graph.from_edges(4, [(0, 1), (2, 3)])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def graphs(min_n: int = 1, max_n: int = 8):
    """Hypothesis strategy for labelled graphs, drawn through their edge masks."""
    from hypothesis import strategies as st

    from mintough import kernels

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        emask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        return Graph.from_masks(kernels.pure.adjacency_from_edge_mask(n, emask))

    return build()
