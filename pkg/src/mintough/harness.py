"""Exhaustive sweeps over labelled graphs and trees.

Each sweep is a prefilter (pushed down into the kernels' ``select_graphs``
loop) plus a per-graph check that returns a mismatch reason or ``None``.
Work is chunked by edge-mask (or Pruefer index) ranges so it can be fanned
out to worker processes; the reducer sorts everything, so reports are
identical whatever the job count.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterator

from mintough import kernels
from mintough.errors import PreconditionError
from mintough.formats import graph6_from_edge_mask, parse_graph6
from mintough.graph import Graph
from mintough.ttgraph import explain_tt

log = logging.getLogger(__name__)

K = kernels.default

CSV_COLUMNS = ["graph6", "tau_num", "tau_den", "mu", "is_tt", "case_tag"]


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` graphs on ``0..n-1``, by ascending graph6-order edge mask."""
    if not 1 <= n <= 8:
        raise PreconditionError("labelled graph enumeration supports 1 <= n <= 8")
    for emask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_masks(K.adjacency_from_edge_mask(n, emask))


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n^(n-2)`` labelled trees, decoded from Pruefer codes in base-``n`` order."""
    if not 1 <= n <= 9:
        raise PreconditionError("labelled tree enumeration supports 1 <= n <= 9")
    for index in range(tree_count(n)):
        yield Graph.from_masks(K.prufer_tree(n, index))


def tree_count(n: int) -> int:
    return 1 if n <= 2 else n ** (n - 2)


# ------------------------------------------------------------------ helpers

def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _g6(adj: list[int]) -> str:
    n = len(adj)
    return graph6_from_edge_mask(n, K.edge_mask_from_adjacency(adj, n))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _is_caterpillar_adj(adj: list[int], n: int) -> bool:
    if sum(_popcount(a) for a in adj) != 2 * (n - 1) or K.count_components(adj, (1 << n) - 1) != 1:
        return False
    spine = sum(1 << v for v in range(n) if _popcount(adj[v]) != 1)
    return all(_popcount(adj[v] & spine) <= 2 for v in _bits(spine))


class _Acc:
    """Per-chunk accumulator."""

    def __init__(self, collect_rows: bool):
        self.counts: Counter = Counter()
        self.mismatches: list[tuple[str, str]] = []
        self.rows: list[tuple] | None = [] if collect_rows else None

    def row(self, adj: list[int], n: int, p: int, q: int) -> None:
        if self.rows is None:
            return
        d, _ = explain_tt(Graph.from_masks(adj))
        mu = max(K.modified_degrees(adj, n))
        self.rows.append((_g6(adj), p, q, mu, d is not None, "" if d is None else d.case_tag))


# ------------------------------------------------------------------ checks
# Each check gets the adjacency masks of a graph that passed the sweep's
# prefilter and returns a mismatch reason or None.

def _check_main(adj, n, acc: _Acc):
    _, p, q, _, _ = K.toughness(adj, n)
    if 2 * p > q:
        acc.counts["tau_above_half"] += 1
        return None
    acc.counts["tau_at_most_half"] += 1
    minimal = K.minimality(adj, n)[0]
    code, _ = K.tt_decompose(adj, n)
    mu = max(K.modified_degrees(adj, n))
    right = code == 0 and p == 1 and q == mu
    if right:
        # full recognition, including claw-tree replay
        d, reason = explain_tt(Graph.from_masks(adj))
        if d is None:
            return f"fast TT check accepted but recognition rejected ({reason})"
        acc.counts[f"tt_case_{d.case_tag}"] += 1
        acc.counts["tt_with_tau_one_over_mu"] += 1
    if minimal:
        acc.counts["minimally_tough"] += 1
        acc.counts[f"minimally_tough_t={p}/{q}"] += 1
        acc.row(adj, n, p, q)
    if minimal != right:
        return f"minimally tough={minimal} but TT with tau=1/mu={right} (tau={p}/{q}, mu={mu})"
    return None


def _check_mu_formula(adj, n, acc: _Acc):
    simp = K.simplicial_mask(adj, n)
    md = K.modified_degrees(adj, n)
    if any(not (simp >> v) & 1 and md[v] < 2 for v in range(n)):
        return None
    acc.counts["simplicial_or_cut"] += 1
    _, p, q, _, _ = K.toughness(adj, n)
    mu = max(md)
    if (p, q) != (1, mu):
        return f"tau={p}/{q} but 1/mu=1/{mu}"
    return None


def _check_edge_witness(adj, n, acc: _Acc):
    minimal, p, q, _, _ = K.minimality(adj, n)
    witness = None
    for u in range(n):
        for v in _bits(adj[u] >> (u + 1)):
            v += u + 1
            paths, cond_a, _, failing = K.edge_witness(adj, n, u, v, p, q)
            if cond_a and failing < 0:
                witness = (u, v)
                break
        if witness:
            break
    acc.counts["minimally_tough" if minimal else "not_minimally_tough"] += 1
    if minimal:
        acc.row(adj, n, p, q)
    if (witness is None) != minimal:
        return f"minimal={minimal} but witness edge={witness} (tau={p}/{q})"
    return None


def _check_simplicial_degree(adj, n, acc: _Acc):
    minimal, p, q, _, _ = K.minimality(adj, n)
    if not minimal:
        return None
    acc.counts["minimally_tough"] += 1
    acc.counts[f"minimally_tough_t={p}/{q}"] += 1
    acc.row(adj, n, p, q)
    if 2 * p <= q:
        simp = K.simplicial_mask(adj, n)
        bad = [v for v in _bits(simp) if _popcount(adj[v]) != 1]
        if bad:
            return f"minimally {p}/{q}-tough chordal graph has simplicial vertices {bad} of degree != 1"
    elif p <= q:
        return f"minimally {p}/{q}-tough chordal graph with 1/2 < t <= 1"
    return None


def _check_interval_caterpillar(adj, n, acc: _Acc):
    if K.find_asteroidal_triple(adj, n) is not None:
        return None
    acc.counts["interval"] += 1
    minimal, p, q, _, _ = K.minimality(adj, n)
    if not minimal or 2 * p > q:
        return None
    acc.counts["minimally_tough_t_le_half"] += 1
    acc.row(adj, n, p, q)
    if not _is_caterpillar_adj(adj, n):
        return f"minimally {p}/{q}-tough interval graph is not a caterpillar"
    acc.counts["caterpillar"] += 1
    return None


def _check_degree_ceiling(adj, n, acc: _Acc):
    minimal, p, q, _, _ = K.minimality(adj, n)
    if not minimal:
        return None
    acc.counts["minimally_tough"] += 1
    acc.counts[f"minimally_tough_t={p}/{q}"] += 1
    acc.row(adj, n, p, q)
    target = _ceil_div(2 * p, q)
    if not any(_popcount(a) == target for a in adj):
        return f"minimally {p}/{q}-tough but no vertex of degree {target}"
    return None


def _check_chordal_oracle(adj, n, acc: _Acc):
    fast = K.is_chordal(adj, n) is not None
    brute = not K.has_induced_long_cycle(adj, n)
    acc.counts["chordal"] += fast
    if fast != brute:
        return f"LexBFS chordal={fast}, induced-cycle search chordal={brute}"
    return None


def _check_cliques_oracle(adj, n, acc: _Acc):
    peo = K.is_chordal(adj, n)
    fast = K.peo_cliques(adj, n, peo)
    brute = K.brute_maximal_cliques(adj, n)
    acc.counts["cliques"] += len(fast)
    if fast != brute:
        return f"elimination-order cliques {fast} != brute force {brute}"
    return None


def _check_interval_oracle(adj, n, acc: _Acc):
    fast = K.is_chordal(adj, n) is not None and K.find_asteroidal_triple(adj, n) is None
    brute = K.interval_model_exists(adj, n)
    acc.counts["interval"] += fast
    if fast != brute:
        return f"chordal and AT-free={fast}, interval model found={brute}"
    return None


def _check_clique_tree(adj, n, acc: _Acc):
    peo = K.is_chordal(adj, n)
    cl = K.peo_cliques(adj, n, peo)
    edges = K.clique_tree_edges(cl)
    acc.counts["clique_tree_edges"] += len(edges)
    if len(edges) != len(cl) - 1:
        return "clique tree is not spanning"
    if any(w < 1 or w != _popcount(cl[i] & cl[j]) for i, j, w in edges):
        return "clique tree edge weight wrong"
    if not K.verify_clique_intersection(cl, edges):
        return "clique-intersection property fails"
    if not K.verify_induced_subtree(cl, edges, n):
        return "induced-subtree property fails"
    return None


def _check_sanity(adj, n, acc: _Acc):
    full = (1 << n) - 1
    kind, p, q, _, _ = K.toughness(adj, n)
    if K.is_complete(adj, n):
        acc.counts["complete"] += 1
        return None if kind == kernels.pure.INFINITE else "complete graph with finite toughness"
    if K.count_components(adj, full) != 1:
        acc.counts["disconnected"] += 1
        return None if (kind, p) == (kernels.pure.FINITE, 0) else f"disconnected graph with toughness {p}/{q}"
    acc.counts["connected_noncomplete"] += 1
    kappa = K.vertex_connectivity(adj, n)
    if kappa * q < 2 * p:
        return f"kappa={kappa} < 2*tau={2 * p}/{q}"
    return None


def _check_closure(tadj, n, acc: _Acc):
    """All valid removal sets of one tree: construct, brute-force, recognise, replay."""
    problems = []
    for ymask, case in K.valid_removal_sets(tadj, n):
        acc.counts[f"instances_case_{case}" if ymask else "instances_empty_Y"] += 1
        why = _closure_instance(tadj, n, ymask, case)
        if why:
            problems.append(f"Y={sorted(_bits(ymask))}: {why}")
    return "; ".join(problems) or None


def _closure_instance(tadj, n, ymask, case):
    g = K.tt_replay(tadj, n, ymask)
    gn = len(g)
    minimal, p, q, _, _ = K.minimality(g, gn)
    mu = max(K.modified_degrees(g, gn))
    if not minimal or (p, q) != (1, mu):
        return f"constructed graph minimal={minimal} tau={p}/{q} mu={mu}"
    code, tris = K.tt_decompose(g, gn)
    if code:
        return f"recognition rejected with code {code}"
    if not tris:
        if ymask:
            return "recognised as a tree although triangles were built"
        return None if g == tadj else "recognised tree differs from source tree"
    tree2 = K.claw_tree(g, gn, tris)
    n2 = len(tree2)
    centres = ((1 << n2) - 1) & ~((1 << gn) - 1)
    code2, case2 = K.tt_validate(tree2, n2, centres)
    if code2 or case2 != case:
        return f"claw tree validation code={code2} case={case2!r}, built as case {case!r}"
    if K.tt_replay(tree2, n2, centres) != g:
        return "claw tree replay differs"
    # map recognised tree back onto the source tree
    kept = [v for v in range(n) if not (ymask >> v) & 1]
    index = {v: i for i, v in enumerate(kept)}
    by_triangle = {tuple(sorted(index[w] for w in _bits(tadj[y]))): y for y in _bits(ymask)}
    f = list(kept)
    for t in tris:
        y = by_triangle.get(tuple(t))
        if y is None:
            return f"triangle {t} matches no removed vertex"
        f.append(y)
    if sorted(f) != list(range(n)):
        return "correspondence is not a bijection"
    if any(sum(1 << f[b] for b in _bits(tree2[a])) != tadj[f[a]] for a in range(n2)):
        return "recognised tree is not the source tree"
    return None


@dataclass(frozen=True)
class SweepDef:
    name: str
    statement: str
    check: Callable
    kind: str = "graphs"  # or "trees"
    connected: bool = True
    chordal: bool = False
    noncomplete: bool = True
    default_n: int = 6
    max_n: int = 8


SWEEPS: dict[str, SweepDef] = {s.name: s for s in [
    SweepDef("main", "chordal, t <= 1/2: minimally t-tough iff TT-graph with t = 1/mu",
              _check_main, chordal=True),
    SweepDef("mu-formula", "every vertex simplicial or cut => tau = 1/mu", _check_mu_formula),
    SweepDef("edge-witness", "edge witness exists iff not minimally tough", _check_edge_witness, max_n=6),
    SweepDef("simplicial-degree", "minimally t-tough chordal: t <= 1/2 => simplicial vertices have degree 1; "
              "none with 1/2 < t <= 1", _check_simplicial_degree, chordal=True),
    SweepDef("interval-caterpillar", "minimally t-tough interval, t <= 1/2 => caterpillar",
              _check_interval_caterpillar, chordal=True),
    SweepDef("degree-ceiling", "minimally t-tough => some vertex of degree ceil(2t)", _check_degree_ceiling),
    SweepDef("chordal-oracle", "LexBFS chordality agrees with induced-cycle search",
              _check_chordal_oracle, connected=False, noncomplete=False, default_n=7),
    SweepDef("cliques-oracle", "elimination-order cliques agree with brute force",
              _check_cliques_oracle, connected=False, chordal=True, noncomplete=False, default_n=7),
    SweepDef("interval-oracle", "chordal and AT-free agrees with interval-model search",
              _check_interval_oracle, connected=False, noncomplete=False, default_n=7),
    SweepDef("clique-tree", "clique trees pass both property verifiers",
              _check_clique_tree, chordal=True, noncomplete=False, default_n=7),
    SweepDef("sanity", "tau(K_n) = inf, tau(disconnected) = 0, kappa >= 2 tau",
              _check_sanity, connected=False, noncomplete=False, default_n=7),
    SweepDef("closure", "tree + valid Y => minimally (1/mu)-tough and recognition inverts",
              _check_closure, kind="trees", default_n=8, max_n=9),
]}


def _chunk(args) -> tuple[Counter, list, list | None]:
    name, n, lo, hi, collect_rows = args
    sweep = SWEEPS[name]
    acc = _Acc(collect_rows)
    if sweep.kind == "trees":
        acc.counts["trees"] += hi - lo
        items = ((i, K.prufer_tree(n, i)) for i in range(lo, hi))
    else:
        acc.counts["graphs_examined"] += hi - lo
        masks = K.select_graphs(n, lo, hi, sweep.connected, sweep.chordal, sweep.noncomplete)
        acc.counts["graphs_selected"] += len(masks)
        items = ((em, K.adjacency_from_edge_mask(n, em)) for em in masks)
    for _, adj in items:
        reason = sweep.check(adj, n, acc)
        if reason is not None:
            acc.mismatches.append((_g6(adj), reason))
    return acc.counts, acc.mismatches, acc.rows


@dataclass
class SweepReport:
    sweep: str
    n: int
    counts: dict[str, int]
    mismatches: list[dict]
    elapsed_ms: int
    rows: list[tuple] | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "sweep": self.sweep,
            "n": self.n,
            "counts": self.counts,
            "mismatches": self.mismatches,
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows or []:
            g6, p, q, mu, is_tt, case = row
            w.writerow([g6, p, q, mu, "true" if is_tt else "false", case])
        return buf.getvalue()


def run_sweep(name: str, n_max: int | None = None, *, jobs: int = 1, collect_rows: bool = False,
              allow_large: bool = False, n_min: int = 1) -> SweepReport:
    """Run a named sweep over ``n_min <= n <= n_max``."""
    if name not in SWEEPS:
        raise PreconditionError(f"unknown sweep {name!r}; choose from {', '.join(SWEEPS)}")
    sweep = SWEEPS[name]
    n_max = sweep.default_n if n_max is None else n_max
    if n_max > sweep.max_n:
        raise PreconditionError(f"sweep {name!r} supports n <= {sweep.max_n}")
    large = 9 if sweep.kind == "trees" else 8
    if n_max >= large and not allow_large:
        raise PreconditionError(f"n = {n_max} needs the explicit large-run flag")
    tasks = []
    for n in range(max(n_min, 1), n_max + 1):
        total = tree_count(n) if sweep.kind == "trees" else 1 << (n * (n - 1) // 2)
        pieces = max(1, min(total, 4 * jobs if jobs > 1 else 1))
        step = -(-total // pieces)
        tasks += [(name, n, lo, min(lo + step, total), collect_rows) for lo in range(0, total, step)]
    started = time.perf_counter()
    if jobs > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_chunk, tasks)
    else:
        parts = [_chunk(t) for t in tasks]
    counts: Counter = Counter()
    mismatches: list[tuple[str, str]] = []
    rows: list[tuple] = []
    for c, m, r in parts:
        counts.update(c)
        mismatches += m
        rows += r or []
    elapsed = int((time.perf_counter() - started) * 1000)
    mismatches.sort()
    rows.sort()
    log.info("sweep %s n<=%d: %d mismatches in %d ms", name, n_max, len(mismatches), elapsed)
    return SweepReport(
        sweep=name,
        n=n_max,
        counts=dict(sorted(counts.items())),
        mismatches=[{"graph6": g, "reason": r} for g, r in mismatches],
        elapsed_ms=elapsed,
        rows=rows if collect_rows else None,
    )


def recheck(name: str, graph6: str) -> str | None:
    """Re-run one sweep's check on a single graph (or source tree); the mismatch reason or ``None``."""
    sweep = SWEEPS[name]
    G = parse_graph6(graph6)
    adj = list(G.masks)
    acc = _Acc(False)
    if sweep.kind == "graphs":
        n = G.n
        if sweep.noncomplete and K.is_complete(adj, n):
            return None
        if sweep.connected and K.count_components(adj, (1 << n) - 1) != 1:
            return None
        if sweep.chordal and K.is_chordal(adj, n) is None:
            return None
    return sweep.check(adj, G.n, acc)


def sweep_theorem_main(n_max: int = 6, **kw) -> SweepReport:
    return run_sweep("main", n_max, **kw)


def sweep_lemma14(n_max: int = 6, **kw) -> SweepReport:
    return run_sweep("mu-formula", n_max, **kw)


def sweep_theorem7(n_max: int = 6, **kw) -> SweepReport:
    return run_sweep("edge-witness", n_max, **kw)


def sweep_theorem5(n_max: int = 6, **kw) -> SweepReport:
    return run_sweep("simplicial-degree", n_max, **kw)


def sweep_corollary(n_max: int = 6, **kw) -> SweepReport:
    return run_sweep("interval-caterpillar", n_max, **kw)


def sweep_kriesell(n_max: int = 6, **kw) -> SweepReport:
    return run_sweep("degree-ceiling", n_max, **kw)


def sweep_closure(n_max: int = 8, **kw) -> SweepReport:
    return run_sweep("closure", n_max, **kw)
