from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from mintough.chordal import (
    CliqueTree, VertexKind, build_clique_tree, classify_vertex, is_chordal, is_perfect_elimination_order,
    lexbfs_order, max_pairwise_clique_intersection, maximal_cliques_chordal, verify_clique_intersection,
    verify_induced_subtree,
)
from mintough.errors import PreconditionError
from mintough.graph import Graph
from named import GDP, NET, complete, cycle, graphs, path


def _fs(*sets):
    return [frozenset(s) for s in sets]


def test_lexbfs_examples():
    assert lexbfs_order(complete(3)) == [2, 1, 0]
    assert lexbfs_order(path(3)) == [2, 1, 0]
    assert lexbfs_order(Graph.from_edges(1, [])) == [0]


def test_chordal_examples():
    assert is_chordal(cycle(4)) is None
    assert is_chordal(path(6)) is not None
    assert is_chordal(NET) is not None
    assert is_perfect_elimination_order(NET, is_chordal(NET))
    assert not is_perfect_elimination_order(cycle(4), [0, 1, 2, 3])
    assert not is_perfect_elimination_order(NET, [0, 1, 2])


def _has_long_induced_cycle(G: Graph) -> bool:
    for k in range(4, G.n + 1):
        for S in itertools.combinations(range(G.n), k):
            s = set(S)
            if all(len(G.adj[v] & s) == 2 for v in S):
                # 2-regular; connected means a single cycle
                seen, stack = {S[0]}, [S[0]]
                while stack:
                    for y in G.adj[stack.pop()] & s:
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
                if seen == s:
                    return True
    return False


@given(graphs(1, 7))
def test_chordal_matches_induced_cycles(G):
    assert (is_chordal(G) is not None) == (not _has_long_induced_cycle(G))


def test_cliques_examples():
    assert maximal_cliques_chordal(NET) == _fs({0, 1}, {1, 2, 3}, {2, 4}, {3, 5})
    assert maximal_cliques_chordal(complete(4)) == _fs(range(4))
    assert maximal_cliques_chordal(path(4)) == _fs({0, 1}, {1, 2}, {2, 3})
    with pytest.raises(PreconditionError):
        maximal_cliques_chordal(cycle(4))


@given(graphs(1, 7))
def test_cliques_are_maximal_and_complete(G):
    if is_chordal(G) is None:
        return
    cl = maximal_cliques_chordal(G)
    brute = set()
    for k in range(1, G.n + 1):
        for S in itertools.combinations(range(G.n), k):
            s = frozenset(S)
            if all(s - {v} <= G.adj[v] for v in s) and not any(s <= G.adj[w] for w in range(G.n) if w not in s):
                brute.add(s)
    assert set(cl) == brute and len(cl) == len(brute)


def test_clique_tree_examples():
    ct = build_clique_tree(NET)
    assert ct.cliques == tuple(_fs({0, 1}, {1, 2, 3}, {2, 4}, {3, 5}))
    assert sorted(ct.tree_edges) == [(0, 1, 1), (1, 2, 1), (1, 3, 1)]
    assert build_clique_tree(complete(4)).tree_edges == ()
    ct = build_clique_tree(GDP)
    assert (0, 1, 2) in ct.tree_edges and len(ct.tree_edges) == 3


def test_clique_tree_preconditions():
    with pytest.raises(PreconditionError):
        build_clique_tree(cycle(4))
    with pytest.raises(PreconditionError):
        build_clique_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))


@given(graphs(1, 7))
def test_clique_tree_properties(G):
    if is_chordal(G) is None or not G.is_connected():
        return
    ct = build_clique_tree(G)
    assert len(ct.tree_edges) == len(ct.cliques) - 1
    assert all(w == len(ct.cliques[i] & ct.cliques[j]) for i, j, w in ct.tree_edges)
    assert verify_clique_intersection(ct) and verify_induced_subtree(ct, G)


def test_verifiers_reject_bad_arrangements():
    # {1,0} - {2,4} - {1,2,3} - {3,5}: the middle clique {2,4} misses vertex 1,
    # which the cliques on either side share, so both properties fail.
    ct = CliqueTree(tuple(_fs({0, 1}, {2, 4}, {1, 2, 3}, {3, 5})), ((0, 1, 0), (1, 2, 1), (2, 3, 1)))
    assert not verify_clique_intersection(ct)
    assert not verify_induced_subtree(ct, NET)
    # diamond with pendants, {x,a} hung off {u,v,y}
    ct = CliqueTree(tuple(_fs({0, 1, 2}, {0, 1, 3}, {2, 4}, {3, 5})), ((0, 1, 2), (1, 2, 0), (1, 3, 1)))
    assert not verify_clique_intersection(ct)
    assert not verify_induced_subtree(ct, GDP)


def test_max_pairwise_intersection():
    assert max_pairwise_clique_intersection(NET) == 1
    assert max_pairwise_clique_intersection(GDP) == 2
    assert max_pairwise_clique_intersection(path(5)) == 1
    assert max_pairwise_clique_intersection(path(2)) == 0


def test_classify_vertex():
    assert classify_vertex(NET, 0) is VertexKind.SIMPLICIAL
    assert classify_vertex(NET, 1) is VertexKind.CUT
    assert classify_vertex(cycle(4), 0) is VertexKind.NEITHER
    assert classify_vertex(Graph.from_edges(2, [(0, 1)]), 0) is VertexKind.SIMPLICIAL


def test_dot_and_json():
    ct = build_clique_tree(NET)
    assert ct.to_json()["cliques"][1] == [1, 2, 3]
    assert ct.to_dot().startswith("graph T {") and '1 -- 2 [label="1"];' in ct.to_dot()
