from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given

import oracles
from mintough import kernels
from mintough.errors import PreconditionError
from mintough.graph import omega
from mintough.rational import INFINITY, ZERO, ExtendedRational
from mintough.toughness import (
    is_minimally_tough, is_t_tough, kriesell_degree_check, theorem7_witness, toughness, toughness_exhaustive,
    witness_edge_report,
)
from named import GDP, NET, TWO_EDGES, complete, cycle, graphs, path, random_graph, star


def test_complete_is_infinite():
    c = toughness(complete(5))
    assert c.value == INFINITY and c.tough_set is None


def test_disconnected_is_zero():
    c = toughness(TWO_EDGES)
    assert c.value == ZERO and c.tough_set is None


def test_star_and_cycle():
    c = toughness(star(3))
    assert c.value == ExtendedRational(1, 3) and c.tough_set == {0} and c.components_after == 3
    c = toughness(cycle(4))
    assert c.value == 1 and c.tough_set in ({0, 2}, {1, 3})


def test_net_tough_set_is_lowest_mask():
    c = toughness(NET)
    assert c.value == ExtendedRational(1, 2) and c.tough_set == {1}


@given(graphs(1, 7))
def test_matches_definition(G):
    expected = oracles.toughness(G)
    got = toughness(G)
    if expected is None:
        assert got.value.is_infinite
    else:
        assert got.value == expected
    if got.tough_set is not None:
        assert ExtendedRational(len(got.tough_set), omega(G, got.tough_set)) == got.value
        assert omega(G, got.tough_set) == got.components_after


def test_pruned_matches_plain_exhaustively():
    K = kernels.default
    for n in range(1, 7):
        for emask in range(1 << (n * (n - 1) // 2)):
            adj = K.adjacency_from_edge_mask(n, emask)
            assert K.toughness(adj, n) == K.toughness_plain(adj, n), (n, emask)


def test_pruned_matches_plain_sampled_n7():
    rng = random.Random(3)
    for _ in range(400):
        G = random_graph(rng, 7, rng.random())
        assert toughness(G) == toughness_exhaustive(G)


@pytest.mark.parametrize("G, t, expected", [
    (path(3), Fraction(1, 2), True),
    (path(3), Fraction(2, 3), False),
    (complete(4), 10, True),
    (cycle(5), 1, True),
    (cycle(5), Fraction(11, 10), False),
    (TWO_EDGES, 0, True),
])
def test_is_t_tough(G, t, expected):
    assert is_t_tough(G, t) is expected


def test_is_t_tough_rejects_infinity():
    with pytest.raises(PreconditionError):
        is_t_tough(path(3), INFINITY)


@given(graphs(2, 7))
def test_t_tough_threshold(G):
    t = toughness(G).value
    if t.is_infinite or t == 0:
        return
    assert is_t_tough(G, t)
    assert not is_t_tough(G, t.fraction + Fraction(1, 100))


def test_minimality_examples():
    assert is_minimally_tough(path(3)).minimal
    res = is_minimally_tough(NET)
    assert res.minimal and res.toughness == ExtendedRational(1, 2)
    res = is_minimally_tough(GDP)
    assert not res.minimal
    assert res.edge == (0, 1) and res.toughness == ExtendedRational(1, 2)
    assert res.toughness_after == ExtendedRational(1, 2)


def test_minimality_preconditions():
    with pytest.raises(PreconditionError):
        is_minimally_tough(TWO_EDGES)
    with pytest.raises(PreconditionError):
        is_minimally_tough(complete(3))


@given(graphs(2, 6))
def test_minimality_matches_definition(G):
    if not G.is_connected() or G.is_complete():
        return
    assert is_minimally_tough(G).minimal == oracles.is_minimally_tough(G)


def test_witness_examples():
    r = theorem7_witness(GDP)
    assert r.edge == (0, 1) and r.path_count == 3 and r.failing_cutset is None and r.holds
    assert theorem7_witness(cycle(4)) is None
    assert theorem7_witness(path(3)) is None


def test_witness_edge_report_records_failure():
    r = witness_edge_report(NET, 4, 2)
    assert r.edge == (2, 4) and r.path_count == 1 and not r.condition_a
    assert r.failing_cutset == {1}
    with pytest.raises(PreconditionError):
        witness_edge_report(NET, 0, 2)


@given(graphs(3, 6))
def test_witness_iff_not_minimal(G):
    if not G.is_connected() or G.is_complete():
        return
    assert (theorem7_witness(G) is None) == is_minimally_tough(G).minimal


def test_degree_ceiling_examples():
    assert kriesell_degree_check(star(3))
    assert kriesell_degree_check(NET)
    assert kriesell_degree_check(cycle(4))
    with pytest.raises(PreconditionError):
        kriesell_degree_check(GDP)


def test_json_shapes():
    assert toughness(NET).to_json() == {"value": {"num": 1, "den": 2}, "tough_set": [1], "components_after": 2}
    assert is_minimally_tough(GDP).to_json()["edge"] == [0, 1]
    assert theorem7_witness(GDP).to_json()["holds"] is True


def test_beyond_64_vertices_uses_fallback():
    assert toughness(star(70)).value == ExtendedRational(1, 70)
    assert toughness(complete(66)).value == INFINITY
