"""Undirected simple graphs over dense integer node ids.

Removing a node sets a per-node flag instead of rebuilding the structure, so
repair traces over long removal sequences stay cheap to replay.  Every query
treats flagged nodes and their incident edges as absent.  Graph values are
immutable; ``remove_node`` returns a new value sharing the adjacency lists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

NodeId = int


class GraphError(ValueError):
    """Invalid node, malformed edge set, or violated operation precondition."""


class EdgeListError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    mean_degree: float
    degree_histogram: dict[int, int]


class InducedSubgraph(NamedTuple):
    """Re-indexed subgraph plus the original id of each new node."""

    graph: "Graph"
    original_ids: tuple[NodeId, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with removal flags.

    Invariants (see :meth:`validate`): adjacency is symmetric, has no
    self-loops or duplicates, and each neighbor list is sorted ascending so
    iteration order is deterministic.
    """

    node_count: int
    adjacency: tuple[tuple[NodeId, ...], ...]
    removed: tuple[bool, ...]

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[NodeId, NodeId]]) -> "Graph":
        if node_count < 0:
            raise GraphError(f"node_count must be >= 0, got {node_count}")
        nbrs: list[set[NodeId]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {node_count} nodes")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(node_count, adjacency, (False,) * node_count)

    # -- basic accessors -------------------------------------------------

    def _check_node(self, v: NodeId) -> None:
        if not (0 <= v < self.node_count):
            raise GraphError(f"node {v} out of range for {self.node_count} nodes")

    def _check_live(self, v: NodeId) -> None:
        self._check_node(v)
        if self.removed[v]:
            raise GraphError(f"node {v} has been removed")

    def is_live(self, v: NodeId) -> bool:
        self._check_node(v)
        return not self.removed[v]

    def live_nodes(self) -> tuple[NodeId, ...]:
        return tuple(v for v in range(self.node_count) if not self.removed[v])

    @property
    def live_count(self) -> int:
        return self.node_count - sum(self.removed)

    def neighbors(self, v: NodeId) -> tuple[NodeId, ...]:
        """Live nodes adjacent to live node ``v``, ascending."""
        self._check_live(v)
        return tuple(u for u in self.adjacency[v] if not self.removed[u])

    def degree(self, v: NodeId) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        self._check_live(u)
        self._check_live(v)
        return v in self.adjacency[u]

    def edge_count(self) -> int:
        """Number of edges between live nodes."""
        total = 0
        for v in range(self.node_count):
            if self.removed[v]:
                continue
            total += sum(1 for u in self.adjacency[v] if not self.removed[u])
        return total // 2

    # -- removal ---------------------------------------------------------

    def remove_node(self, v: NodeId) -> "Graph":
        """New graph with ``v`` flagged removed; this graph is unchanged."""
        self._check_live(v)
        flags = list(self.removed)
        flags[v] = True
        return Graph(self.node_count, self.adjacency, tuple(flags))

    # -- connectivity and distances ---------------------------------------

    def is_connected(self) -> bool:
        """True iff every pair of live nodes is joined by a live path.

        Graphs with at most one live node are connected by convention, which
        lets depletion loops run down to the empty graph.
        """
        live = self.live_nodes()
        if len(live) <= 1:
            return True
        seen = {live[0]}
        stack = [live[0]]
        while stack:
            x = stack.pop()
            for y in self.adjacency[x]:
                if not self.removed[y] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(live)

    def _bfs_distances(self, source: NodeId) -> dict[NodeId, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if not self.removed[y] and y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def distance(self, u: NodeId, v: NodeId) -> int | None:
        """Shortest-path length between live nodes, or None if unreachable."""
        self._check_live(u)
        self._check_live(v)
        if u == v:
            return 0
        return self._bfs_distances(u).get(v)

    def diameter(self) -> int:
        """Largest distance over all live pairs; requires a connected graph."""
        live = self.live_nodes()
        if not live:
            raise GraphError("diameter of an empty graph is undefined")
        if not self.is_connected():
            raise GraphError("diameter requires a connected graph")
        best = 0
        for v in live:
            best = max(best, max(self._bfs_distances(v).values()))
        return best

    def delta_neighborhood(self, v: NodeId, delta: int) -> set[NodeId]:
        """All live nodes within ``delta`` hops of ``v``, including ``v``."""
        self._check_live(v)
        if delta < 1:
            raise GraphError(f"delta must be >= 1, got {delta}")
        ball = {v}
        frontier = [v]
        for _ in range(delta):
            nxt = []
            for x in frontier:
                for y in self.adjacency[x]:
                    if not self.removed[y] and y not in ball:
                        ball.add(y)
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        return ball

    def induced_subgraph(self, nodes: Iterable[NodeId]) -> InducedSubgraph:
        """Subgraph on ``nodes`` with ids re-indexed to 0..k-1.

        Keeps exactly the edges with both endpoints in ``nodes``; the returned
        mapping gives each new id's original node.
        """
        order = sorted(set(nodes))
        for v in order:
            self._check_live(v)
        index = {old: new for new, old in enumerate(order)}
        edges = []
        for old in order:
            for u in self.adjacency[old]:
                if u in index and old < u:
                    edges.append((index[old], index[u]))
        return InducedSubgraph(Graph.from_edges(len(order), edges), tuple(order))

    def degree_stats(self) -> DegreeStats:
        """Degree statistics over live nodes only."""
        live = self.live_nodes()
        if not live:
            raise GraphError("degree_stats requires at least one live node")
        degrees = [self.degree(v) for v in live]
        hist: dict[int, int] = {}
        for d in degrees:
            hist[d] = hist.get(d, 0) + 1
        return DegreeStats(max(degrees), sum(degrees) / len(degrees), hist)

    def adjacency_matrix(self) -> list[list[int]]:
        """Dense 0/1 matrix over all node ids; removed nodes give zero rows.

        Derived debug view only; nothing computes from it.
        """
        mat = [[0] * self.node_count for _ in range(self.node_count)]
        for v in range(self.node_count):
            if self.removed[v]:
                continue
            for u in self.adjacency[v]:
                if not self.removed[u]:
                    mat[v][u] = 1
        return mat

    def validate(self) -> None:
        """Raise GraphError unless all structural invariants hold."""
        if len(self.adjacency) != self.node_count or len(self.removed) != self.node_count:
            raise GraphError("adjacency/removed length does not match node_count")
        for v, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise GraphError(f"neighbor list of {v} is unsorted or has duplicates")
            for u in row:
                if not (0 <= u < self.node_count):
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at node {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric edge ({v}, {u})")


# -- edge-list text format -------------------------------------------------
#
# First line "n m" (node count, edge count), then m lines "u v" with 0-based
# ids, whitespace separated, each edge once.  Lines starting with '#' are
# comments.  Writers emit edges with u < v, sorted lexicographically.


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListError("expected header 'n m'", line_no)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListError("header values must be integers", line_no) from None
            if n < 0 or m < 0:
                raise EdgeListError("header values must be non-negative", line_no)
            header = (n, m)
            continue
        if len(fields) != 2:
            raise EdgeListError("expected edge 'u v'", line_no)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError("edge endpoints must be integers", line_no) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge ({u}, {v}) out of range for {n} nodes", line_no)
        if u == v:
            raise EdgeListError(f"self-loop at node {u}", line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge ({u}, {v})", line_no)
        seen.add(key)
        if len(edges) >= header[1]:
            raise EdgeListError("more edges than declared in header", line_no)
        edges.append(key)
    if header is None:
        raise EdgeListError("empty input, expected header 'n m'", 1)
    if len(edges) != header[1]:
        raise EdgeListError(
            f"expected {header[1]} edges, found {len(edges)}", len(text.splitlines()) + 1
        )
    return Graph.from_edges(header[0], edges)


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(graph: Graph) -> str:
    """Edge-list text for the live part of ``graph``."""
    edges = sorted(
        (v, u)
        for v in graph.live_nodes()
        for u in graph.neighbors(v)
        if v < u
    )
    lines = [f"{graph.node_count} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def save_edge_list(graph: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(graph))
