"""Edge classes, partial-cube verification and the cut-based route to
degree-restricted distance sums.

Two edges xy and uv are related when d(x,u) + d(y,v) differs from
d(x,v) + d(y,u).  The transitive closure of this relation partitions
the edge set; in a partial cube removing any class splits the graph
into two complementary halfspaces, and recording for each vertex which
side of every class it lies on embeds the graph isometrically into a
hypercube.  The verifier below checks all of that exhaustively, which
is exact and affordable at desk scale (the pairwise stage is O(m^2)).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    ClassRemovalError,
    DisconnectedError,
    NotBipartiteError,
    NotPartialCubeError,
)
from .graphs import Graph, all_pairs_distances, is_connected, two_coloring


@dataclass(frozen=True)
class ThetaPartition:
    """Edge classes with the two vertex sides each class separates.

    Classes are ordered by their lexicographically first edge; side0 of
    a class is the side containing the lowest-numbered vertex.
    """

    n: int
    classes: tuple[tuple[tuple[int, int], ...], ...]
    side0: tuple[frozenset[int], ...]
    side1: tuple[frozenset[int], ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def theta_classes(g: Graph) -> ThetaPartition:
    """Partition the edges into relation classes and split the vertices
    along each class.

    Raises DisconnectedError or NotBipartiteError when the graph cannot
    carry the partition at all, and ClassRemovalError when deleting a
    class fails to leave exactly two components (which already rules
    out a partial cube).
    """
    if not is_connected(g):
        raise DisconnectedError("edge classes need a connected graph")
    if two_coloring(g) is None:
        raise NotBipartiteError("edge classes need a bipartite graph")

    edges = g.edges()
    me = len(edges)
    rows = all_pairs_distances(g).d
    parent = list(range(me))
    for i in range(me):
        x, y = edges[i]
        dx = rows[x]
        dy = rows[y]
        ri = _find(parent, i)
        for j in range(i + 1, me):
            u, v = edges[j]
            if dx[u] + dy[v] != dx[v] + dy[u]:
                rj = _find(parent, j)
                if ri != rj:
                    parent[rj] = ri

    by_root: dict[int, list[int]] = {}
    for i in range(me):
        by_root.setdefault(_find(parent, i), []).append(i)
    class_ids = sorted(by_root.values(), key=lambda ids: ids[0])
    class_of = [0] * me
    for ci, ids in enumerate(class_ids):
        for i in ids:
            class_of[i] = ci
    edge_id = {e: i for i, e in enumerate(edges)}

    classes = []
    side0 = []
    side1 = []
    for ci, ids in enumerate(class_ids):
        comp = _components_without_class(g, edge_id, class_of, ci)
        if len(comp) != 2:
            raise ClassRemovalError(
                f"removing class {ci} leaves {len(comp)} components, expected 2"
            )
        a, b = comp
        lo, hi = (a, b) if 0 in a else (b, a)
        for i in ids:
            u, v = edges[i]
            if (u in lo) == (v in lo):
                raise ClassRemovalError(
                    f"class {ci} edge ({u}, {v}) does not cross the split"
                )
        classes.append(tuple(edges[i] for i in ids))
        side0.append(frozenset(lo))
        side1.append(frozenset(hi))
    return ThetaPartition(
        n=g.n, classes=tuple(classes), side0=tuple(side0), side1=tuple(side1)
    )


def _components_without_class(
    g: Graph, edge_id: dict, class_of: list[int], ci: int
) -> list[set[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if seen[v]:
                    continue
                e = (u, v) if u < v else (v, u)
                if class_of[edge_id[e]] == ci:
                    continue
                seen[v] = True
                comp.add(v)
                queue.append(v)
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class CubeCoordinates:
    """Binary hypercube coordinates, one bit per edge class."""

    length: int
    masks: tuple[int, ...]

    def string(self, v: int) -> str:
        """Coordinate string of v; character i is the side of class i."""
        return "".join("1" if self.masks[v] >> i & 1 else "0" for i in range(self.length))

    def strings(self) -> list[str]:
        return [self.string(v) for v in range(len(self.masks))]

    def hamming(self, u: int, v: int) -> int:
        return (self.masks[u] ^ self.masks[v]).bit_count()


@dataclass(frozen=True)
class CubeVerdict:
    """Outcome of partial-cube verification.

    reason is None on acceptance, otherwise one of "disconnected",
    "not_bipartite", "class_removal_not_two_components" or
    "not_isometric"; detail carries the specific witness.
    """

    accepted: bool
    reason: str | None
    detail: str | None
    coordinates: CubeCoordinates | None
    partition: ThetaPartition | None

    def __bool__(self) -> bool:
        return self.accepted


def is_partial_cube(g: Graph) -> CubeVerdict:
    """Verify the hypercube embedding exhaustively.

    Accepts when the class-side coordinates reproduce every pairwise
    distance as a Hamming distance; any failure is reported with a
    structured reason instead of an exception.
    """
    try:
        part = theta_classes(g)
    except DisconnectedError as exc:
        return CubeVerdict(False, "disconnected", str(exc), None, None)
    except NotBipartiteError as exc:
        return CubeVerdict(False, "not_bipartite", str(exc), None, None)
    except ClassRemovalError as exc:
        return CubeVerdict(
            False, "class_removal_not_two_components", str(exc), None, None
        )
    masks = [0] * g.n
    for i, hi in enumerate(part.side1):
        bit = 1 << i
        for v in hi:
            masks[v] |= bit
    rows = all_pairs_distances(g).d
    for u in range(g.n):
        row = rows[u]
        mu = masks[u]
        for v in range(u + 1, g.n):
            hd = (mu ^ masks[v]).bit_count()
            if hd != row[v]:
                return CubeVerdict(
                    False,
                    "not_isometric",
                    f"pair ({u}, {v}): Hamming {hd} vs distance {row[v]}",
                    None,
                    part,
                )
    coords = CubeCoordinates(length=part.class_count, masks=tuple(masks))
    return CubeVerdict(True, None, None, coords, part)


def halfspace_degree_counts(
    g: Graph, partition: ThetaPartition, k: int
) -> list[tuple[int, int]]:
    """Per class, how many degree-k vertices lie on each side."""
    if k < 0:
        raise ValueError("k must be >= 0")
    marks = [g.degree(v) == k for v in range(g.n)]
    out = []
    for lo, hi in zip(partition.side0, partition.side1):
        out.append((sum(marks[v] for v in lo), sum(marks[v] for v in hi)))
    return out


def twk_cut(g: Graph, k: int, partition: ThetaPartition | None = None) -> int:
    """Distance sum over degree-k vertex pairs, summed class by class.

    Every shortest path crosses each class at most once, so the sum of
    side products over the classes equals the sum of pairwise distances.
    The graph must be a partial cube; pass a precomputed partition to
    skip re-verification when the caller already knows it is one.
    """
    if partition is None:
        verdict = is_partial_cube(g)
        if not verdict.accepted:
            raise NotPartialCubeError(f"{verdict.reason}: {verdict.detail}")
        partition = verdict.partition
    return sum(c0 * c1 for c0, c1 in halfspace_degree_counts(g, partition, k))
