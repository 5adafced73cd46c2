"""Linear-time counting of vertex pairs at a fixed distance in a tree.

The tree is rooted and every vertex v keeps a short vector a[v] where
a[v][i] counts the vertices of v's subtree at distance i from v.  Each
distance-k pair is then charged exactly once to the vertex of its
connecting path that is closest to the root: either both endpoints sit
in the subtree with v on their path (the a[v][k] term, which sees each
such pair from both ends), or the path bends at v between two distinct
child subtrees (the cross term).  Summing the doubled contributions and
halving yields the pair count in O(n * k) time.

All traversals use explicit stacks, so paths with millions of vertices
do not exhaust the interpreter stack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotATreeError, VertexOutOfRangeError
from .graphs import Graph, is_tree
from .indices import zagreb_m1, zagreb_m2

#: Parent marker for the root.
NO_PARENT = -1


@dataclass(frozen=True)
class RootedTree:
    """A tree with a chosen root, its parent array and a preorder."""

    graph: Graph
    root: int
    parent: tuple[int, ...]
    order: tuple[int, ...]

    @classmethod
    def build(cls, g: Graph, root: int = 0) -> "RootedTree":
        if not is_tree(g):
            raise NotATreeError("input graph is not a tree")
        if not 0 <= root < g.n:
            raise VertexOutOfRangeError(f"root {root} outside 0..{g.n - 1}")
        parent = [NO_PARENT] * g.n
        order = []
        stack = [root]
        seen = [False] * g.n
        seen[root] = True
        adj = g.adj
        while stack:
            v = stack.pop()
            order.append(v)
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    stack.append(u)
        return cls(graph=g, root=root, parent=tuple(parent), order=tuple(order))


@dataclass
class DistTable:
    """Per-vertex subtree distance counts for one rooted tree.

    a[v][i] is the number of vertices at distance i from v inside the
    subtree rooted at v, for 0 <= i <= k.  Rows are plain lists for
    speed; treat the table as read-only once built.
    """

    k: int
    a: list[list[int]]


def distance_count_table(t: RootedTree, k: int) -> DistTable:
    """Build the subtree distance-count table for depths 0..k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = t.graph.n
    width = k + 1
    a = [[0] * width for _ in range(n)]
    for row in a:
        row[0] = 1
    parent = t.parent
    for v in reversed(t.order):
        p = parent[v]
        if p == NO_PARENT:
            continue
        ap = a[p]
        av = a[v]
        for i in range(k):
            ap[i + 1] += av[i]
    return DistTable(k=k, a=a)


def _doubled_pair_count(t: RootedTree, table: DistTable, k: int) -> int:
    """Twice the number of distance-k pairs, by per-vertex charging."""
    a = table.a
    adj = t.graph.adj
    parent = t.parent
    total = 0
    for v in range(t.graph.n):
        av = a[v]
        total += 2 * av[k]
        pv = parent[v]
        for u in adj[v]:
            if u == pv:
                continue
            au = a[u]
            cross = 0
            for i in range(k - 1):
                cross += au[i] * (av[k - 1 - i] - au[k - 2 - i])
            total += cross
    return total


def wk_linear(t: RootedTree | Graph, k: int, table: DistTable | None = None) -> int:
    """Number of unordered vertex pairs at distance exactly k in a tree.

    Accepts a Graph (rooted at 0 internally) or a prebuilt RootedTree.
    A table built once with depth K serves every k <= K, so sweeps over
    many k values can share it.
    """
    if isinstance(t, Graph):
        t = RootedTree.build(t)
    if k < 1:
        raise ValueError("k must be >= 1")
    if table is None:
        table = distance_count_table(t, k)
    elif table.k < k:
        raise ValueError(f"table depth {table.k} is smaller than k={k}")
    doubled = _doubled_pair_count(t, table, k)
    if doubled % 2:
        raise RuntimeError("pair accumulator must be even")
    return doubled // 2


def wk3_from_zagreb(g: Graph) -> int:
    """Distance-3 pair count of a tree from its Zagreb indices."""
    if not is_tree(g):
        raise NotATreeError("the Zagreb shortcut only holds for trees")
    return zagreb_m2(g) - zagreb_m1(g) + g.m
