"""``tough``: command-line access to toughness, chordality, TT-graph and sweep checks.

Exit codes: 0 success, 1 negative result (or sweep mismatch), 2 usage,
parse or precondition error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from mintough import chordal, harness, interval, ttgraph
from mintough.errors import MintoughError, ParseError, TTValidationError
from mintough.formats import emit_edge_list, read_graph
from mintough.graph import Graph
from mintough.toughness import is_minimally_tough, theorem7_witness, toughness, witness_edge_report

OK, NEGATIVE, USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(v) for v in sorted(s)) + "}"


def _load(path: str, fmt: str | None) -> Graph:
    if fmt is None:
        fmt = "graph6" if path.endswith(".g6") else "edges"
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise _Usage(f"cannot read {path}: {exc.strerror}") from exc
    return read_graph(text, fmt)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ------------------------------------------------------------------ commands

def cmd_analyze(args) -> int:
    G = _load(args.input, args.format)
    cert = toughness(G)
    if cert.value.is_infinite:
        text = "toughness = inf (complete graph)"
    elif cert.tough_set is None:
        text = "toughness = 0 (disconnected)"
    else:
        text = f"toughness = {cert.value}, tough set {_fmt_set(cert.tough_set)}"
    _emit(args, cert.to_json(), text)
    return OK


def cmd_minimal(args) -> int:
    G = _load(args.input, args.format)
    res = is_minimally_tough(G)
    if res.minimal:
        text = f"minimally {res.toughness}-tough"
    else:
        u, v = res.edge
        text = (f"not minimally {res.toughness}-tough: removing edge ({u}, {v}) "
                f"leaves toughness {res.toughness_after}")
    _emit(args, res.to_json(), text)
    return OK if res.minimal else NEGATIVE


def cmd_witness(args) -> int:
    G = _load(args.input, args.format)
    if args.edge:
        report = witness_edge_report(G, *args.edge)
    else:
        report = theorem7_witness(G)
    if report is None:
        _emit(args, {"witness": None}, "no witness edge: graph is minimally tough")
        return NEGATIVE
    u, v = report.edge
    verdict = "witness" if report.holds else "not a witness"
    detail = f"{report.path_count} internally disjoint paths, {report.checked_cutsets} separating cutsets checked"
    if report.failing_cutset is not None:
        detail += f", failing cutset {_fmt_set(report.failing_cutset)}"
    _emit(args, report.to_json(), f"edge ({u}, {v}) is {verdict} at t = {report.toughness}: {detail}")
    return OK if report.holds else NEGATIVE


def cmd_chordal(args) -> int:
    G = _load(args.input, args.format)
    peo = chordal.is_chordal(G)
    if peo is None:
        _emit(args, {"chordal": False}, "not chordal")
        return NEGATIVE
    cliques = chordal.maximal_cliques_chordal(G)
    payload = {"chordal": True, "elimination_order": peo, "cliques": [sorted(c) for c in cliques]}
    text = "chordal; elimination order " + " ".join(map(str, peo))
    text += "\nmaximal cliques: " + " ".join(_fmt_set(c) for c in cliques)
    _emit(args, payload, text)
    return OK


def cmd_clique_tree(args) -> int:
    G = _load(args.input, args.format)
    if chordal.is_chordal(G) is None:
        _emit(args, {"chordal": False}, "not chordal")
        return NEGATIVE
    ct = chordal.build_clique_tree(G)
    if args.dot:
        sys.stdout.write(ct.to_dot())
        return OK
    lines = [f"{i}: {_fmt_set(c)}" for i, c in enumerate(ct.cliques)]
    lines += [f"{i} -- {j} (weight {w})" for i, j, w in ct.tree_edges]
    _emit(args, ct.to_json(), "\n".join(lines))
    return OK


def cmd_tt_recognize(args) -> int:
    G = _load(args.input, args.format)
    d, reason = ttgraph.explain_tt(G)
    if d is None:
        _emit(args, {"tt": False, "reason": reason}, f"not a TT-graph: {reason}")
        return NEGATIVE
    text = f"TT-graph (case {d.case_tag}), mu = {d.mu}"
    text += f"\nsource tree on {d.tree.n} vertices, removed {_fmt_set(d.removed)}"
    for c, t in d.triangle_map:
        text += f"\n  centre {c} -> triangle {_fmt_set(t)}"
    _emit(args, {"tt": True, "reason": reason, "decomposition": d.to_json()}, text)
    return OK


def _parse_ids(text: str) -> list[int]:
    out = []
    for tok in text.replace(",", " ").split():
        if not tok.isdigit():
            raise _Usage(f"bad vertex id {tok!r} in --remove")
        out.append(int(tok))
    return out


def cmd_tt_build(args) -> int:
    T = _load(args.tree, args.format)
    G, d = ttgraph.tt_from_tree(T, _parse_ids(args.remove))
    payload = {"graph": {"n": G.n, "edges": [list(e) for e in G.edges()]}, "decomposition": d.to_json()}
    _emit(args, payload, f"# case {d.case_tag}, mu = {d.mu}\n" + emit_edge_list(G).rstrip("\n"))
    return OK


def cmd_interval(args) -> int:
    G = _load(args.input, args.format)
    if chordal.is_chordal(G) is None:
        _emit(args, {"interval": False, "chordal": False, "asteroidal_triple": None},
              "not an interval graph: not chordal")
        return NEGATIVE
    at = interval.find_asteroidal_triple(G)
    if at is not None:
        _emit(args, {"interval": False, "chordal": True, "asteroidal_triple": at.to_json()},
              f"not an interval graph: asteroidal triple ({at.x}, {at.y}, {at.z})")
        return NEGATIVE
    _emit(args, {"interval": True, "chordal": True, "asteroidal_triple": None}, "interval graph")
    return OK


def cmd_caterpillar(args) -> int:
    G = _load(args.input, args.format)
    cat = interval.is_caterpillar(G)
    if G.is_connected():
        report = interval.corollary_check(G)
        payload = report.to_json()
        extra = "" if not report.applicable else " (minimally tough interval graph with t <= 1/2)"
    else:
        payload = {"caterpillar": cat}
        extra = ""
    _emit(args, payload, ("caterpillar" if cat else "not a caterpillar") + extra)
    return OK if cat else NEGATIVE


def cmd_sweep(args) -> int:
    report = harness.run_sweep(args.check, args.n, jobs=args.jobs, collect_rows=bool(args.csv),
                               allow_large=args.large)
    Path(args.out).write_text(report.dumps())
    if args.csv:
        Path(args.csv).write_text(report.csv_text())
    text = f"sweep {report.sweep} n <= {report.n}: {len(report.mismatches)} mismatches ({report.elapsed_ms} ms)"
    for m in report.mismatches[:10]:
        text += f"\n  {m['graph6']}: {m['reason']}"
    _emit(args, report.to_json(), text)
    return OK if report.ok else NEGATIVE


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["edges", "graph6"], default=None,
                        help="input format (default: graph6 for .g6 files, else edge list)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="tough", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", help="graph file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("analyze", cmd_analyze, "exact toughness with a tough set")
    graph_cmd("minimal", cmd_minimal, "test minimal toughness")
    w = graph_cmd("witness", cmd_witness, "edge witness for non-minimality")
    w.add_argument("--edge", nargs=2, type=int, metavar=("U", "V"), help="report on this edge only")
    graph_cmd("chordal", cmd_chordal, "chordality, elimination order and maximal cliques")
    ct = graph_cmd("clique-tree", cmd_clique_tree, "maximum-weight clique tree")
    ct.add_argument("--dot", action="store_true", help="write Graphviz DOT to stdout")
    graph_cmd("interval", cmd_interval, "interval recognition via asteroidal triples")
    graph_cmd("caterpillar", cmd_caterpillar, "caterpillar test")

    tt = sub.add_parser("tt", help="TT-graph recognition and construction")
    tsub = tt.add_subparsers(dest="tt_command", metavar="ACTION")
    tsub.required = True
    rec = tsub.add_parser("recognize", parents=[common], help="recognise a TT-graph")
    rec.add_argument("input")
    rec.set_defaults(func=cmd_tt_recognize)
    bld = tsub.add_parser("build", parents=[common], help="build a TT-graph from a tree")
    bld.add_argument("--tree", required=True, help="tree file, or - for stdin")
    bld.add_argument("--remove", default="", help="comma-separated ids of removed tree vertices")
    bld.set_defaults(func=cmd_tt_build)

    sw = sub.add_parser("sweep", parents=[common], help="exhaustive verification sweep")
    sw.add_argument("--check", required=True, choices=list(harness.SWEEPS))
    sw.add_argument("--n", type=int, default=None, help="largest vertex count")
    sw.add_argument("--out", required=True, help="JSON report path")
    sw.add_argument("--csv", default=None, help="CSV path for minimally tough graphs found")
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--large", action="store_true", help="allow n = 8 graph sweeps (n = 9 for closure)")
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except TTValidationError as exc:
        print(f"tough: invalid tree/removed set ({exc.code}): {exc}", file=sys.stderr)
    except ParseError as exc:
        print(f"tough: parse error: {exc}", file=sys.stderr)
    except (_Usage, MintoughError) as exc:
        print(f"tough: {exc}", file=sys.stderr)
    return USAGE


def run(argv: list[str]) -> int:
    """Programmatic entry point; same as :func:`main` with explicit arguments."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
