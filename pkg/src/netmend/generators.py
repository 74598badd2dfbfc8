"""Random and fixture graph construction.

Connected Erdos-Renyi graphs come from plain rejection sampling: patching a
disconnected sample up with a spanning tree would distort the degree
distribution the experiments report, so disconnected samples are thrown away
instead.  At the sparse operating points this needs thousands of attempts per
accepted graph, hence the vectorized edge sampling.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .graph import Graph, GraphError, NodeId

log = logging.getLogger(__name__)

DEFAULT_MAX_ATTEMPTS = 200_000
_SAMPLE_BATCH = 64


class GenerationError(RuntimeError):
    """Rejection sampling exhausted its attempt budget (p too small for n)."""


@lru_cache(maxsize=None)
def _pair_endpoints(n: int) -> tuple[np.ndarray, np.ndarray]:
    upper, lower = np.triu_indices(n, 1)
    upper.setflags(write=False)
    lower.setflags(write=False)
    return upper, lower


def sample_connected_er(
    n: int,
    p: float,
    rng: np.random.Generator,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> tuple[Graph, int]:
    """First connected G(n, p) sample and the number of attempts it took."""
    if n < 2:
        raise GraphError(f"connected ER sampling needs n >= 2, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    if p == 0.0:
        raise GenerationError(f"p=0 can never yield a connected graph on {n} nodes")
    us, vs = _pair_endpoints(n)
    attempts = 0
    while attempts < max_attempts:
        rows = min(_SAMPLE_BATCH, max_attempts - attempts)
        batch = rng.random((rows, us.size))
        for row in batch:
            attempts += 1
            chosen = np.flatnonzero(row < p)
            if chosen.size < n - 1:
                continue
            degrees = np.bincount(us[chosen], minlength=n) + np.bincount(
                vs[chosen], minlength=n
            )
            if (degrees == 0).any():
                continue
            graph = Graph.from_edges(
                n, [(int(us[k]), int(vs[k])) for k in chosen]
            )
            if graph.is_connected():
                log.debug("connected ER(%d, %g) accepted after %d attempts", n, p, attempts)
                return graph, attempts
    raise GenerationError(
        f"no connected G({n}, {p}) sample within {max_attempts} attempts"
    )


def erdos_renyi_connected(
    n: int,
    p: float,
    rng: np.random.Generator,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Graph:
    graph, _ = sample_connected_er(n, p, rng, max_attempts)
    return graph


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform random labeled tree, decoded from a random Prufer sequence."""
    if n < 1:
        raise GraphError(f"tree size must be >= 1, got {n}")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """Star on ``n`` nodes: node 0 is the hub."""
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


# Named demo graphs.  fig2 is a 7-node tree whose root-adjacent layout gives
# one walk (0,2,4) and an alternative (0,1,5); fig4_path7 is the 7-node line
# with its endpoints labeled 2 and 6; scenario13 is a 13-node assignment
# graph whose hub (node 4) splits it into four parts when removed.
_FIXTURES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "fig2": (7, ((0, 1), (0, 2), (1, 3), (1, 5), (2, 4), (2, 6))),
    "fig4_path7": (7, ((1, 2), (0, 1), (0, 3), (3, 4), (4, 5), (5, 6))),
    "scenario13": (
        13,
        (
            (0, 1), (1, 2), (2, 3), (1, 3),
            (5, 6),
            (7, 8), (8, 9), (7, 9),
            (10, 11), (11, 12),
            (4, 0), (4, 5), (4, 7), (4, 10),
        ),
    ),
    "c6": (6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0))),
    "k4": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    "star4": (4, ((0, 1), (0, 2), (0, 3))),
    "p3": (3, ((0, 1), (1, 2))),
}


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_FIXTURES))


def fixture(name: str) -> Graph:
    try:
        n, edges = _FIXTURES[name]
    except KeyError:
        raise GraphError(
            f"unknown fixture {name!r}; known: {', '.join(fixture_names())}"
        ) from None
    return Graph.from_edges(n, edges)


class GeneratorKind(Enum):
    ERDOS_RENYI_CONNECTED = "erdos_renyi_connected"
    RANDOM_TREE = "random_tree"
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    STAR = "star"
    FIXTURE = "fixture"


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative graph source for experiments."""

    kind: GeneratorKind
    n: int = 0
    p: float | None = None
    fixture_name: str | None = None
    max_attempts: int = DEFAULT_MAX_ATTEMPTS

    def __post_init__(self):
        if self.kind is GeneratorKind.ERDOS_RENYI_CONNECTED and self.p is None:
            raise GraphError("erdos_renyi_connected requires p")
        if self.kind is GeneratorKind.FIXTURE:
            if self.fixture_name is None:
                raise GraphError("fixture generator requires fixture_name")
        elif self.n < 1:
            raise GraphError(f"generator needs n >= 1, got {self.n}")

    def build(self, rng: np.random.Generator) -> Graph:
        if self.kind is GeneratorKind.ERDOS_RENYI_CONNECTED:
            return erdos_renyi_connected(self.n, self.p, rng, self.max_attempts)
        if self.kind is GeneratorKind.RANDOM_TREE:
            return random_tree(self.n, rng)
        if self.kind is GeneratorKind.CYCLE:
            return cycle(self.n)
        if self.kind is GeneratorKind.PATH:
            return path(self.n)
        if self.kind is GeneratorKind.COMPLETE:
            return complete(self.n)
        if self.kind is GeneratorKind.STAR:
            return star(self.n)
        return fixture(self.fixture_name)
