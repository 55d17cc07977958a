"""Exact toughness, minimal toughness and the edge-witness test for non-minimality."""
from __future__ import annotations

import math
from dataclasses import dataclass

from mintough.errors import PreconditionError
from mintough.graph import Graph, members
from mintough.rational import INFINITY, ZERO, ExtendedRational


@dataclass(frozen=True)
class ToughnessCertificate:
    value: ExtendedRational
    tough_set: frozenset[int] | None
    components_after: int

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "tough_set": None if self.tough_set is None else sorted(self.tough_set),
            "components_after": self.components_after,
        }


def _cert(kind_row) -> ToughnessCertificate:
    kind, num, den, mask, comps = kind_row
    if kind:
        return ToughnessCertificate(INFINITY, None, comps)
    if num == 0:
        return ToughnessCertificate(ZERO, None, comps)
    return ToughnessCertificate(ExtendedRational(num, den), members(mask), comps)


def toughness(G: Graph) -> ToughnessCertificate:
    """Minimum of ``|S| / w(G-S)`` over cutsets, with the lowest-mask minimiser.

    Complete graphs give infinity, disconnected graphs give 0; neither
    carries a tough set.
    """
    return _cert(G.kernel.toughness(G.masks, G.n))


def toughness_exhaustive(G: Graph) -> ToughnessCertificate:
    """Same contract as :func:`toughness` but scanning every subset with no pruning."""
    return _cert(G.kernel.toughness_plain(G.masks, G.n))


def is_t_tough(G: Graph, t) -> bool:
    """Whether ``|S| >= t * w(G-S)`` for every cutset ``S``."""
    t = ExtendedRational.of(t)
    if t.is_infinite:
        raise PreconditionError("t must be finite")
    if t <= 0:
        return True
    return G.kernel.find_cutset_below(G.masks, G.n, t.num, t.den) < 0


def _require_connected_noncomplete(G: Graph, what: str) -> None:
    if not G.is_connected():
        raise PreconditionError(f"{what} is undefined for disconnected graphs")
    if G.is_complete():
        raise PreconditionError(f"{what} is undefined for complete graphs")


@dataclass(frozen=True)
class MinimalityResult:
    """``minimal`` with ``toughness = t``, or a counterexample ``edge`` whose
    deletion leaves toughness at ``toughness_after >= t``."""

    minimal: bool
    toughness: ExtendedRational
    edge: tuple[int, int] | None = None
    toughness_after: ExtendedRational | None = None

    def to_json(self) -> dict:
        return {
            "minimal": self.minimal,
            "toughness": self.toughness.to_json(),
            "edge": None if self.edge is None else list(self.edge),
            "toughness_after": None if self.toughness_after is None else self.toughness_after.to_json(),
        }


def is_minimally_tough(G: Graph) -> MinimalityResult:
    _require_connected_noncomplete(G, "minimal toughness")
    minimal, p, q, u, v = G.kernel.minimality(G.masks, G.n)
    t = ExtendedRational(p, q)
    if minimal:
        return MinimalityResult(True, t)
    after = toughness(G.without_edge(u, v)).value
    return MinimalityResult(False, t, (u, v), after)


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of the two non-minimality conditions for one edge.

    ``condition_a`` records whether ``path_count >= 2t + 1``.
    ``failing_cutset`` is the first cutset (lowest mask) that violates
    ``|S| >= (w(G-S) + 1) t``; ``checked_cutsets`` counts the qualifying
    sets inspected up to and including it.
    """

    edge: tuple[int, int]
    path_count: int
    checked_cutsets: int
    failing_cutset: frozenset[int] | None
    condition_a: bool
    toughness: ExtendedRational

    @property
    def holds(self) -> bool:
        return self.condition_a and self.failing_cutset is None

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "path_count": self.path_count,
            "checked_cutsets": self.checked_cutsets,
            "failing_cutset": None if self.failing_cutset is None else sorted(self.failing_cutset),
            "condition_a": self.condition_a,
            "toughness": self.toughness.to_json(),
            "holds": self.holds,
        }


def _edge_report(G: Graph, u: int, v: int, t: ExtendedRational) -> WitnessReport:
    paths, cond_a, checked, failing = G.kernel.edge_witness(G.masks, G.n, u, v, t.num, t.den)
    return WitnessReport(
        edge=(u, v),
        path_count=paths,
        checked_cutsets=checked,
        failing_cutset=None if failing < 0 else members(failing),
        condition_a=bool(cond_a),
        toughness=t,
    )


def witness_edge_report(G: Graph, u: int, v: int) -> WitnessReport:
    """Evaluate both conditions for the edge ``uv`` at ``t = toughness(G)``.

    Every ``S`` inside ``V - {u, v}`` is tried; it counts when it is a cutset
    of ``G`` (components counted in ``G``) and separates ``u`` from ``v``
    once ``uv`` is deleted.
    """
    _require_connected_noncomplete(G, "the witness test")
    if not G.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    u, v = min(u, v), max(u, v)
    return _edge_report(G, u, v, toughness(G).value)


def theorem7_witness(G: Graph) -> WitnessReport | None:
    """First edge, in lexicographic order, meeting both conditions; ``None`` if none does.

    A witness exists exactly when ``G`` is not minimally ``toughness(G)``-tough.
    """
    _require_connected_noncomplete(G, "the witness test")
    t = toughness(G).value
    for u, v in G.edges():
        report = _edge_report(G, u, v, t)
        if report.holds:
            return report
    return None


def kriesell_degree_check(G: Graph) -> bool:
    """Whether some vertex has degree ``ceil(2t)`` for a minimally ``t``-tough ``G``."""
    result = is_minimally_tough(G)
    if not result.minimal:
        raise PreconditionError("graph is not minimally tough")
    target = math.ceil(2 * result.toughness.fraction)
    return any(G.degree(v) == target for v in range(G.n))

