"""Node criticality, globally and within bounded-hop neighborhoods.

A node is critical (a cut vertex) if deleting it disconnects the graph.  The
delta-hop variant asks the same question inside the subgraph induced by the
node's delta-neighborhood; a delta-noncritical node is always globally
noncritical, while the converse needs delta at least half the longest
chordless cycle.  The remove-and-search oracle and the exhaustive cycle scan
exist to certify the fast paths and are capped accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, NodeId

DEFAULT_CYCLE_ORACLE_CAP = 15


class OracleCapError(RuntimeError):
    """Brute-force oracle invoked above its configured node cap."""


def articulation_points(graph: Graph) -> frozenset[NodeId]:
    """All cut vertices of a connected graph, found by one low-link DFS."""
    if not graph.is_connected():
        raise GraphError("articulation points require a connected graph")
    live = graph.live_nodes()
    if len(live) <= 2:
        return frozenset()
    root = live[0]
    order: dict[NodeId, int] = {root: 0}
    low: dict[NodeId, int] = {root: 0}
    counter = 1
    cut: set[NodeId] = set()
    root_children = 0
    stack: list[tuple[NodeId, NodeId | None, iter]] = [
        (root, None, iter(graph.neighbors(root)))
    ]
    while stack:
        v, parent, it = stack[-1]
        descended = False
        for w in it:
            if w == parent:
                continue
            if w in order:
                low[v] = min(low[v], order[w])
            else:
                order[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(graph.neighbors(w))))
                descended = True
                break
        if descended:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if u == root:
                root_children += 1
            elif low[v] >= order[u]:
                cut.add(u)
    if root_children >= 2:
        cut.add(root)
    return frozenset(cut)


def is_critical(graph: Graph, v: NodeId) -> bool:
    """True iff removing live node ``v`` disconnects the connected graph."""
    graph._check_live(v)
    return v in articulation_points(graph)


def is_critical_oracle(graph: Graph, v: NodeId) -> bool:
    """Independent check: actually remove ``v`` and search for connectivity."""
    if not graph.is_connected():
        raise GraphError("criticality requires a connected graph")
    graph._check_live(v)
    return not graph.remove_node(v).is_connected()


def noncritical_nodes(graph: Graph) -> frozenset[NodeId]:
    """Complement of the cut vertices; always at least min_degree + 1 nodes."""
    if graph.live_count < 2:
        raise GraphError("noncritical_nodes requires at least 2 live nodes")
    return frozenset(graph.live_nodes()) - articulation_points(graph)


def is_delta_critical(graph: Graph, v: NodeId, delta: int) -> bool:
    """Criticality of ``v`` inside the subgraph induced by its delta-ball.

    The ball includes ``v``; the test removes ``v`` from the induced subgraph
    and asks whether the rest falls apart.  A ball holding at most one other
    node leaves nothing to disconnect, so the node counts as noncritical,
    which keeps leaves noncritical at every delta.
    """
    ball = graph.delta_neighborhood(v, delta)
    rest = ball - {v}
    if len(rest) <= 1:
        return False
    sub, _ = graph.induced_subgraph(rest)
    return not sub.is_connected()


@dataclass(frozen=True)
class CriticalityMap:
    """Per-node global and delta-hop criticality flags, fixed after build.

    Strategies read a node's own flag and its neighbors' flags only; the map
    models the state each node would hold after exchanging flags with its
    neighborhood.
    """

    delta: int
    global_critical: tuple[bool, ...]
    delta_critical: tuple[bool, ...]

    @property
    def node_count(self) -> int:
        return len(self.delta_critical)

    def global_flag(self, v: NodeId) -> bool:
        return self.global_critical[v]

    def delta_flag(self, v: NodeId) -> bool:
        return self.delta_critical[v]


def compute_criticality(graph: Graph, delta: int) -> CriticalityMap:
    """Evaluate both flags for every live node of a connected graph."""
    if delta < 1:
        raise GraphError(f"delta must be >= 1, got {delta}")
    cut = articulation_points(graph)
    global_flags = [False] * graph.node_count
    delta_flags = [False] * graph.node_count
    for v in graph.live_nodes():
        global_flags[v] = v in cut
        delta_flags[v] = is_delta_critical(graph, v, delta)
    return CriticalityMap(delta, tuple(global_flags), tuple(delta_flags))


def longest_chordless_cycle(
    graph: Graph, max_nodes: int = DEFAULT_CYCLE_ORACLE_CAP
) -> int:
    """Length of the longest chordless cycle, 0 for acyclic graphs.

    Exhaustive test oracle: grows induced paths from each cycle's smallest
    node and closes them where possible.  Refuses graphs above ``max_nodes``;
    never call this from a production path.
    """
    live = graph.live_nodes()
    if len(live) > max_nodes:
        raise OracleCapError(
            f"{len(live)} live nodes exceed the cycle oracle cap of {max_nodes}"
        )
    adj = {v: set(graph.neighbors(v)) for v in live}
    best = 0

    def extend(path: list[NodeId], on_path: set[NodeId]) -> None:
        nonlocal best
        first, last = path[0], path[-1]
        middle = path[1:-1]
        for u in sorted(adj[last]):
            if u <= first or u in on_path:
                continue
            if any(u in adj[w] for w in middle):
                continue
            if u in adj[first]:
                # Closing edge found; count each cycle in one direction only.
                if path[1] < u:
                    best = max(best, len(path) + 1)
                continue
            path.append(u)
            on_path.add(u)
            extend(path, on_path)
            path.pop()
            on_path.remove(u)

    for v0 in live:
        for v1 in sorted(adj[v0]):
            if v1 > v0:
                extend([v0, v1], {v0, v1})
    return best


def delta_sufficient(
    graph: Graph, delta: int, max_nodes: int = DEFAULT_CYCLE_ORACLE_CAP
) -> bool:
    """Whether ``delta`` makes delta-criticality imply global criticality.

    Holds when delta is at least half the longest chordless cycle; acyclic
    graphs need only delta >= 1 since their noncritical nodes are leaves.
    """
    if delta < 1:
        raise GraphError(f"delta must be >= 1, got {delta}")
    c_max = longest_chordless_cycle(graph, max_nodes)
    return c_max == 0 or delta >= c_max / 2
