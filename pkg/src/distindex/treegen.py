"""Exhaustive free-tree enumeration and random labeled tree sampling.

Rooted trees are generated through the classic level-sequence successor
rule, which walks all canonical level sequences in decreasing
lexicographic order without repetition.  Free trees are obtained by
keeping one representative per isomorphism class: every generated tree
is rerooted at its center (taking the smaller string over the two
choices when the center is an edge) and hashed by its canonical
parenthesis string.
"""

from __future__ import annotations

import heapq
import random
from typing import Iterator

from .errors import NotATreeError, OrderTooLargeError
from .graphs import Graph, from_edge_list, is_tree

#: Orders above this make exhaustive enumeration unreasonably large.
MAX_ORDER = 16


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical level sequences of rooted trees on n vertices, in
    decreasing lexicographic order."""
    if n < 1:
        raise ValueError("needs n >= 1")
    seq = list(range(1, n + 1))
    while True:
        yield seq[:]
        p = -1
        for i in range(n - 1, -1, -1):
            if seq[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        nxt = seq[:p]
        seg = seq[q:p]
        while len(nxt) < n:
            nxt.extend(seg[: n - len(nxt)])
        seq = nxt


def _sequence_to_edges(seq: list[int]) -> list[tuple[int, int]]:
    """Edges of the rooted tree a level sequence encodes: vertex i hangs
    off the most recent vertex one level up."""
    last_at = {}
    edges = []
    for i, lvl in enumerate(seq):
        if i:
            edges.append((last_at[lvl - 1], i))
        last_at[lvl] = i
    return edges


def tree_centers(g: Graph) -> list[int]:
    """The one or two middle vertices of a tree, by leaf stripping."""
    if not is_tree(g):
        raise NotATreeError("centers are defined for trees")
    n = g.n
    if n <= 2:
        return list(range(n))
    deg = g.degrees()
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in g.adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_string(adj: tuple[tuple[int, ...], ...], root: int) -> str:
    def label(v: int, parent: int) -> str:
        subs = sorted(label(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(subs) + ")"

    return label(root, -1)


def canonical_form(g: Graph) -> str:
    """Labeling-independent string identity of a tree: the smaller
    center-rooted parenthesis encoding."""
    centers = tree_centers(g)
    return min(_rooted_string(g.adj, c) for c in centers)


def all_free_trees(n: int) -> Iterator[Graph]:
    """Every unlabeled tree on n vertices exactly once, for n up to
    MAX_ORDER.  The order of the yielded trees is deterministic."""
    if n < 1 or n > MAX_ORDER:
        raise OrderTooLargeError(f"supported orders are 1..{MAX_ORDER}, got {n}")
    seen: set[str] = set()
    for seq in rooted_level_sequences(n):
        g = from_edge_list(n, _sequence_to_edges(seq))
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


def free_tree_count(n: int) -> int:
    return sum(1 for _ in all_free_trees(n))


def prufer_to_tree(seq: list[int], n: int) -> Graph:
    """Decode a length n-2 code over 0..n-1 into its labeled tree."""
    if n < 2:
        raise ValueError("needs n >= 2")
    if len(seq) != n - 2:
        raise ValueError(f"code length must be {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"code entry {x} outside 0..{n - 1}")
        degree[x] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return from_edge_list(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree on n vertices."""
    if n < 1:
        raise ValueError("needs n >= 1")
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)
