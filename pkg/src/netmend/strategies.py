"""Replacement strategies that keep a network connected when a node leaves.

A replacement sequence (p0, ..., pk) is the token built while the departing
node p0 looks for a safe place to take the loss: the agent at p(i+1) moves
into p(i)'s slot, so applying the sequence leaves the graph exactly as if pk
had been removed instead.  The walk-based strategies read nothing but the
current holder's neighbor set (plus neighbor criticality flags for the
delta-aware variant) and the token itself; the centralized baseline sees the
whole graph and is cost-optimal.

Cost is the number of replacements, i.e. sequence length minus one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .criticality import CriticalityMap, articulation_points, compute_criticality
from .graph import Graph, GraphError, NodeId
from .rng import pick


class ConnectivityViolation(RuntimeError):
    """A strategy produced a disconnecting removal; this indicates a bug."""


class Strategy(Enum):
    MPS = "mps"
    DELTA_MPS = "dmps"
    CENTRALIZED = "central"
    MIN_DEGREE_MPS = "mindeg"  # experimental successor policy


# observer(step, holder, message_so_far, candidates, chosen)
StepObserver = Callable[[int, NodeId, tuple, tuple, NodeId], None]


@dataclass(frozen=True)
class ReplacementSequence:
    """Ordered node token: nodes[0] is the departing node, nodes[-1] the slot
    that ends up vacant."""

    nodes: tuple[NodeId, ...]
    strategy: Strategy
    delta: int | None = None

    def __post_init__(self):
        if not self.nodes:
            raise GraphError("replacement sequence cannot be empty")
        if len(set(self.nodes)) != len(self.nodes):
            raise GraphError("replacement sequence repeats a node")

    @property
    def cost(self) -> int:
        return len(self.nodes) - 1

    @property
    def terminal(self) -> NodeId:
        return self.nodes[-1]


@dataclass(frozen=True)
class StrategyOutcome:
    sequence: ReplacementSequence
    final_graph: Graph
    message_hops: int


def mps(
    graph: Graph,
    p0: NodeId,
    rng: np.random.Generator,
    observer: Optional[StepObserver] = None,
) -> ReplacementSequence:
    """Random replacement walk using neighbor ids only.

    A leaf departs without replacements.  Otherwise the token moves to a
    neighbor drawn uniformly from those not yet on it, until the holder has
    no unvisited neighbor left; that terminal is always safe to vacate.
    """
    return _walk(graph, p0, rng, Strategy.MPS, _uniform_successor, observer)


def min_degree_mps(
    graph: Graph,
    p0: NodeId,
    rng: np.random.Generator,
    observer: Optional[StepObserver] = None,
) -> ReplacementSequence:
    """MPS variant steering toward low-degree neighbors (experimental).

    Needs neighbors to share their degree, one step beyond the id-only walk;
    ties are broken uniformly at random.
    """

    def successor(g, candidates, r):
        degrees = [g.degree(u) for u in candidates]
        lowest = min(degrees)
        return pick(r, [u for u, d in zip(candidates, degrees) if d == lowest])

    return _walk(graph, p0, rng, Strategy.MIN_DEGREE_MPS, successor, observer)


def _uniform_successor(graph, candidates, rng):
    return pick(rng, candidates)


def _walk(graph, p0, rng, tag, successor, observer) -> ReplacementSequence:
    if rng is None:
        raise GraphError(f"{tag.value} requires an rng")
    if len(graph.neighbors(p0)) <= 1:
        return ReplacementSequence((p0,), tag)
    nodes = [p0]
    visited = {p0}
    holder = p0
    step = 0
    while True:
        candidates = [u for u in graph.neighbors(holder) if u not in visited]
        if not candidates:
            break
        chosen = successor(graph, candidates, rng)
        step += 1
        if observer is not None:
            observer(step, holder, tuple(nodes), tuple(candidates), chosen)
        nodes.append(chosen)
        visited.add(chosen)
        holder = chosen
    return ReplacementSequence(tuple(nodes), tag)


def delta_mps(
    graph: Graph,
    p0: NodeId,
    delta: int,
    crit: CriticalityMap,
    rng: np.random.Generator,
    deterministic_ties: bool = False,
    observer: Optional[StepObserver] = None,
) -> ReplacementSequence:
    """Replacement walk that exploits delta-hop criticality flags.

    A departing node that is a leaf or knows itself delta-noncritical leaves
    without replacements: delta-noncritical implies globally noncritical, so
    its removal is already safe.  Otherwise the token prefers delta-noncritical
    unvisited neighbors (uniformly among them, or the smallest id when
    ``deterministic_ties`` is set) and falls back to a uniform pick when every
    candidate is delta-critical.  The walk stops as soon as a delta-noncritical
    node holds the token, or when no unvisited neighbor remains.
    """
    if delta < 1:
        raise GraphError(f"delta must be >= 1, got {delta}")
    if crit.delta != delta:
        raise GraphError(
            f"criticality map was computed for delta={crit.delta}, not {delta}"
        )
    if crit.node_count != graph.node_count:
        raise GraphError("criticality map does not match the graph")
    if rng is None:
        raise GraphError("dmps requires an rng")
    if len(graph.neighbors(p0)) <= 1 or not crit.delta_flag(p0):
        return ReplacementSequence((p0,), Strategy.DELTA_MPS, delta)
    nodes = [p0]
    visited = {p0}
    holder = p0
    step = 0
    while True:
        candidates = [u for u in graph.neighbors(holder) if u not in visited]
        if not candidates:
            break
        safe = [u for u in candidates if not crit.delta_flag(u)]
        if safe:
            chosen = safe[0] if deterministic_ties else pick(rng, safe)
        else:
            chosen = pick(rng, candidates)
        step += 1
        if observer is not None:
            observer(step, holder, tuple(nodes), tuple(candidates), chosen)
        nodes.append(chosen)
        visited.add(chosen)
        holder = chosen
        if not crit.delta_flag(holder):
            break
    return ReplacementSequence(tuple(nodes), Strategy.DELTA_MPS, delta)


def centralized(graph: Graph, p0: NodeId) -> ReplacementSequence:
    """Cost-optimal baseline with full graph visibility.

    A noncritical departing node leaves as is.  Otherwise the result is a
    shortest path to the nearest noncritical node, with ties broken by the
    smallest terminal id and then the lexicographically smallest path, so the
    optimum is reproducible.
    """
    if not graph.is_connected():
        raise GraphError("centralized replacement requires a connected graph")
    graph._check_live(p0)
    cut = articulation_points(graph)
    if p0 not in cut:
        return ReplacementSequence((p0,), Strategy.CENTRALIZED)
    dist = graph._bfs_distances(p0)
    targets = [v for v in graph.live_nodes() if v not in cut]
    best = min(dist[t] for t in targets)
    terminal = min(t for t in targets if dist[t] == best)
    back = graph._bfs_distances(terminal)
    path = [p0]
    current = p0
    while current != terminal:
        current = min(
            u
            for u in graph.neighbors(current)
            if dist[u] == dist[current] + 1 and back[u] == back[current] - 1
        )
        path.append(current)
    return ReplacementSequence(tuple(path), Strategy.CENTRALIZED)


def apply_sequence(graph: Graph, sequence: ReplacementSequence) -> Graph:
    """Relocate agents along the sequence; the net effect removes its terminal."""
    for v in sequence.nodes:
        graph._check_live(v)
    for u, v in zip(sequence.nodes, sequence.nodes[1:]):
        if not graph.has_edge(u, v):
            raise GraphError(f"sequence nodes {u} and {v} are not adjacent")
    return graph.remove_node(sequence.terminal)


def run_removal(
    graph: Graph,
    p0: NodeId,
    strategy: Strategy,
    rng: np.random.Generator | None = None,
    delta: int | None = None,
    crit: CriticalityMap | None = None,
    deterministic_ties: bool = False,
) -> StrategyOutcome:
    """Run one strategy for the removal of ``p0`` and apply its sequence.

    Validates that the input graph is connected, and that the resulting graph
    still is; a disconnected result is a bug in the strategy, not bad input.
    """
    if not graph.is_connected():
        raise GraphError("replacement strategies require a connected graph")
    if strategy is Strategy.MPS:
        sequence = mps(graph, p0, rng)
    elif strategy is Strategy.MIN_DEGREE_MPS:
        sequence = min_degree_mps(graph, p0, rng)
    elif strategy is Strategy.DELTA_MPS:
        if delta is None:
            raise GraphError("dmps requires a delta")
        if crit is None:
            crit = compute_criticality(graph, delta)
        sequence = delta_mps(graph, p0, delta, crit, rng, deterministic_ties)
    elif strategy is Strategy.CENTRALIZED:
        sequence = centralized(graph, p0)
    else:  # pragma: no cover - exhaustive enum dispatch
        raise GraphError(f"unknown strategy {strategy!r}")
    final = apply_sequence(graph, sequence)
    if not final.is_connected():
        raise ConnectivityViolation(
            f"{strategy.value} removal of {p0} terminated at {sequence.terminal} "
            "and disconnected the graph"
        )
    return StrategyOutcome(sequence, final, sequence.cost)
