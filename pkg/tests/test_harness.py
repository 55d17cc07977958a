from __future__ import annotations

import csv
import io
import json

import pytest

from mintough import harness
from mintough.errors import PreconditionError
from mintough.formats import emit_graph6, parse_graph6
from named import GDP, path, star


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_graph_enumeration_counts(n, count):
    graphs = list(harness.enumerate_labeled_graphs(n))
    assert len(graphs) == count
    assert len({emit_graph6(G) for G in graphs}) == count


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_enumeration(n):
    trees = list(harness.enumerate_labeled_trees(n))
    assert len(trees) == harness.tree_count(n)
    assert all(T.is_tree() for T in trees)
    assert len({tuple(T.edges()) for T in trees}) == len(trees)


def test_enumeration_limits():
    with pytest.raises(PreconditionError):
        next(harness.enumerate_labeled_graphs(9))
    with pytest.raises(PreconditionError):
        next(harness.enumerate_labeled_trees(10))


@pytest.mark.parametrize("name", sorted(harness.SWEEPS))
def test_every_sweep_clean_at_small_n(name):
    report = harness.run_sweep(name, 5)
    assert report.mismatches == []
    assert report.to_json()["sweep"] == name


def test_main_sweep_small_examples():
    r = harness.run_sweep("main", 3, collect_rows=True)
    assert emit_graph6(path(3)) in {row[0] for row in r.rows}
    r = harness.run_sweep("main", 4, collect_rows=True)
    g6s = {row[0] for row in r.rows}
    assert emit_graph6(star(3)) in g6s and emit_graph6(path(4)) in g6s


def test_statement_sweeps_clean_at_six():
    r = harness.sweep_theorem5(6)
    assert r.ok and not any(k.startswith("minimally_tough_t=") and k.split("=")[1] in ("2/3", "1/1", "3/4")
                            for k in r.counts)
    assert harness.sweep_kriesell(6).ok
    assert harness.sweep_lemma14(6).ok


def test_report_schema_and_csv():
    r = harness.run_sweep("main", 4, collect_rows=True)
    doc = json.loads(r.dumps())
    assert set(doc) == {"sweep", "n", "counts", "mismatches", "elapsed_ms"}
    rows = list(csv.reader(io.StringIO(r.csv_text())))
    assert rows[0] == harness.CSV_COLUMNS
    assert all(len(row) == 6 for row in rows)
    assert all(row[4] == "true" for row in rows[1:])


def test_jobs_do_not_change_report():
    a = harness.run_sweep("edge-witness", 5, jobs=1, collect_rows=True)
    b = harness.run_sweep("edge-witness", 5, jobs=2, collect_rows=True)
    assert (a.counts, a.mismatches, a.rows) == (b.counts, b.mismatches, b.rows)


def test_repeat_runs_identical():
    a = harness.run_sweep("closure", 6).to_json()
    b = harness.run_sweep("closure", 6).to_json()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_limits():
    with pytest.raises(PreconditionError):
        harness.run_sweep("edge-witness", 7)
    with pytest.raises(PreconditionError):
        harness.run_sweep("main", 8)
    with pytest.raises(PreconditionError):
        harness.run_sweep("nonsense", 3)


def test_recheck_single_graph():
    assert harness.recheck("main", emit_graph6(GDP)) is None
    assert harness.recheck("edge-witness", emit_graph6(GDP)) is None
    assert harness.recheck("closure", emit_graph6(star(3))) is None


def test_recheck_reproduces_injected_mismatch(monkeypatch):
    # a deliberately broken check must fail the same way on re-check
    def broken(adj, n, acc):
        return "always" if n == 4 else None

    sweep = harness.SWEEPS["mu-formula"]
    monkeypatch.setitem(harness.SWEEPS, "mu-formula", type(sweep)(**{**sweep.__dict__, "check": broken}))
    r = harness.run_sweep("mu-formula", 4)
    assert r.mismatches and r.mismatches == sorted(r.mismatches, key=lambda m: (m["graph6"], m["reason"]))
    for m in r.mismatches:
        assert parse_graph6(m["graph6"]).n == 4
        assert harness.recheck("mu-formula", m["graph6"]) == m["reason"]


def test_main_fast_path_matches_classifier():
    from mintough.chordal import is_chordal
    from mintough.ttgraph import classify_main_theorem

    for n in range(3, 6):
        left = right = 0
        for G in harness.enumerate_labeled_graphs(n):
            if not G.is_connected() or G.is_complete() or is_chordal(G) is None:
                continue
            r = classify_main_theorem(G)
            if r.toughness.fraction * 2 > 1:
                continue
            assert r.agree
            left += r.left
            right += r.right
        counts = harness.run_sweep("main", n, n_min=n).counts
        assert counts["minimally_tough"] == left
        assert counts["tt_with_tau_one_over_mu"] == right
