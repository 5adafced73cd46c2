"""Core graph type, traversal primitives and edge-list serialization.

Vertices are the contiguous integers 0..n-1.  Graphs are undirected and
simple (no loops, no parallel edges).  Instances are frozen after
construction and adjacency lists are kept sorted, so every derived
output is deterministic and instances are safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListFormatError,
    LoopEdgeError,
    VertexOutOfRangeError,
)

#: Distance value reported for vertices a BFS cannot reach.
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph from an iterable of endpoint pairs.

    Raises LoopEdgeError, DuplicateEdgeError or VertexOutOfRangeError
    when the input is not a simple graph on 0..n-1.
    """
    if n < 0:
        raise VertexOutOfRangeError("vertex count must be non-negative")
    lists: list[list[int]] = [[] for _ in range(n)]
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        lists[u].append(v)
        lists[v].append(u)
        m += 1
    for u, nbrs in enumerate(lists):
        nbrs.sort()
        for a, b in zip(nbrs, nbrs[1:]):
            if a == b:
                raise DuplicateEdgeError(f"edge ({min(u, a)}, {max(u, a)}) repeated")
    return Graph(n=n, adj=tuple(tuple(nbrs) for nbrs in lists), m=m)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source to every vertex; UNREACHABLE where there is
    no path."""
    if not 0 <= source < g.n:
        raise VertexOutOfRangeError(f"source {source} outside 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs distance table; row u is the BFS distance vector of u."""

    n: int
    d: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.d[u][v]

    def diameter(self) -> int:
        """Largest pairwise distance; requires a connected graph."""
        best = 0
        for row in self.d:
            for x in row:
                if x == UNREACHABLE:
                    raise DisconnectedError("diameter of a disconnected graph")
                if x > best:
                    best = x
        return best


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return bfs_distances(g, 0).count(UNREACHABLE) == 0


def is_tree(g: Graph) -> bool:
    """Connected and acyclic, i.e. connected with exactly n-1 edges."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees())


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring as a 0/1 list, or None if an odd cycle exists.

    Works per component; vertex 0 of each component gets color 0.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            cu = color[u]
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - cu
                    queue.append(v)
                elif color[v] == cu:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: a header line "n m" followed by m
    lines "u v".  Blank lines and lines starting with '#' are ignored.
    """
    rows = [ln for ln in (raw.strip() for raw in text.splitlines())
            if ln and not ln.startswith("#")]
    if not rows:
        raise EdgeListFormatError("empty input")
    head = rows[0].split()
    if len(head) != 2:
        raise EdgeListFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise EdgeListFormatError(f"non-integer header {rows[0]!r}") from exc
    if m < 0:
        raise EdgeListFormatError("negative edge count")
    body = rows[1:]
    if len(body) != m:
        raise EdgeListFormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListFormatError(f"non-integer edge line {ln!r}") from exc
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    """Canonical text form: header then edges sorted with u < v."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def dump_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return from_edge_list(n, ((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((0, n - 1))
    return from_edge_list(n, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def hypercube_graph(d: int) -> Graph:
    """The d-dimensional hypercube; vertex v is its coordinate bitmask."""
    if d < 0:
        raise ValueError("hypercube needs d >= 0")
    n = 1 << d
    edges: Iterator[tuple[int, int]] = (
        (v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1
    )
    return from_edge_list(n, edges)
