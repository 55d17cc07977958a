from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from mintough import kernels
from mintough.errors import PreconditionError
from mintough.graph import Graph
from mintough.interval import (
    AsteroidalTriple, corollary_check, find_asteroidal_triple, is_caterpillar, is_interval,
    validate_asteroidal_triple,
)
from mintough.rational import ExtendedRational
from named import NET, SPIDER, complete, cycle, graphs, path, star


def test_subdivided_claw_leaves_form_triple():
    at = find_asteroidal_triple(SPIDER)
    assert (at.x, at.y, at.z) == (2, 4, 6)
    assert validate_asteroidal_triple(SPIDER, at)


def test_c6_alternate_vertices():
    at = find_asteroidal_triple(cycle(6))
    assert {at.x, at.y, at.z} == {0, 2, 4} and validate_asteroidal_triple(cycle(6), at)


def test_no_triple_in_caterpillar():
    cat = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (2, 6)])
    assert find_asteroidal_triple(cat) is None


def test_validator_rejects_bad_paths():
    at = find_asteroidal_triple(SPIDER)
    bad = AsteroidalTriple(at.x, at.y, at.z, ((2, 1, 0, 3, 4), (2, 0, 6), at.witness_paths[2]))
    assert not validate_asteroidal_triple(SPIDER, bad)
    adjacent = AsteroidalTriple(0, 1, 2, ((0, 1), (0, 1, 2), (1, 2)))
    assert not validate_asteroidal_triple(path(3), adjacent)


@given(graphs(3, 7))
def test_triples_validate(G):
    at = find_asteroidal_triple(G)
    if at is not None:
        assert validate_asteroidal_triple(G, at)


def test_interval_examples():
    assert is_interval(path(6))
    assert not is_interval(cycle(4))
    assert not is_interval(SPIDER)
    assert is_interval(complete(4))


@given(graphs(1, 7))
def test_interval_matches_model_search(G):
    assert is_interval(G) == kernels.pure.interval_model_exists(list(G.masks), G.n)


def test_caterpillar_examples():
    assert is_caterpillar(path(5))
    assert is_caterpillar(star(4))
    assert not is_caterpillar(SPIDER)
    assert not is_caterpillar(cycle(4))


def _contains_subdivided_claw(T: Graph) -> bool:
    # a tree is a caterpillar iff no vertex has three neighbours of degree >= 2
    return any(sum(1 for w in T.adj[v] if T.degree(w) >= 2) >= 3 for v in range(T.n))


@pytest.mark.parametrize("n", range(1, 9))
def test_caterpillar_iff_no_subdivided_claw(n):
    K = kernels.default
    count = 1 if n <= 2 else n ** (n - 2)
    step = max(1, count // 3000)
    for index in range(0, count, step):
        T = Graph.from_masks(K.prufer_tree(n, index))
        assert is_caterpillar(T) == (not _contains_subdivided_claw(T))


def test_caterpillar_report_examples():
    r = corollary_check(path(4))
    assert r.interval and r.minimal and r.caterpillar and r.applicable and r.consistent
    assert r.toughness == ExtendedRational(1, 2)
    r = corollary_check(NET)
    assert not r.interval and not r.applicable and r.consistent
    r = corollary_check(SPIDER)
    assert r.minimal and r.toughness == ExtendedRational(1, 3) and not r.interval and r.consistent
    assert corollary_check(complete(3)).to_json()["toughness"] is None
    with pytest.raises(PreconditionError):
        corollary_check(Graph.from_edges(3, [(0, 1)]))
