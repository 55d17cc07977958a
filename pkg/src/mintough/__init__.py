"""Exact toughness, minimal toughness and TT-graph recognition for small graphs."""
from __future__ import annotations

from mintough.chordal import build_clique_tree, is_chordal, maximal_cliques_chordal
from mintough.errors import MintoughError, ParseError, PreconditionError, TTValidationError
from mintough.formats import emit_graph6, parse_edge_list, parse_graph6
from mintough.graph import Graph
from mintough.interval import find_asteroidal_triple, is_caterpillar, is_interval
from mintough.kernels import BACKEND
from mintough.rational import INFINITY, ExtendedRational
from mintough.toughness import is_minimally_tough, theorem7_witness, toughness
from mintough.ttgraph import classify_main_theorem, recognize_tt, tt_from_tree

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ExtendedRational", "Graph", "INFINITY", "MintoughError", "ParseError",
    "PreconditionError", "TTValidationError", "build_clique_tree", "classify_main_theorem",
    "emit_graph6", "find_asteroidal_triple", "is_caterpillar", "is_chordal", "is_interval",
    "is_minimally_tough", "maximal_cliques_chordal", "parse_edge_list", "parse_graph6",
    "recognize_tt", "theorem7_witness", "toughness", "tt_from_tree",
]
