"""Definitional implementations of the distance and degree based indices.

Every function here recomputes from fresh breadth-first searches on each
call.  They are deliberately simple and quadratic: this module is the
ground truth that the faster tree and cut routes are tested against, so
it trades speed for being obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedError
from .graphs import UNREACHABLE, Graph, bfs_distances


def _require_connected(g: Graph) -> None:
    if g.n > 1 and bfs_distances(g, 0).count(UNREACHABLE):
        raise DisconnectedError("graph is not connected")


def wiener(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs."""
    _require_connected(g)
    total = 0
    for u in range(g.n):
        row = bfs_distances(g, u)
        total += sum(row[u + 1:])
    return total


def wk(g: Graph, k: int) -> int:
    """Number of unordered vertex pairs at distance exactly k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_connected(g)
    count = 0
    for u in range(g.n):
        row = bfs_distances(g, u)
        count += row[u + 1:].count(k)
    return count


@dataclass(frozen=True)
class WienerPolynomial:
    """Pair counts by distance; coeffs[k] pairs lie at distance k."""

    coeffs: tuple[int, ...]

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def pair_total(self) -> int:
        return sum(self.coeffs)

    def wiener(self) -> int:
        return sum(k * c for k, c in enumerate(self.coeffs))


def wiener_polynomial(g: Graph) -> WienerPolynomial:
    """Distance distribution of the unordered pairs, as coefficients up
    to the diameter.  coeffs[0] is always 0."""
    _require_connected(g)
    hist = [0] * max(g.n, 1)
    for u in range(g.n):
        row = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            hist[row[v]] += 1
    top = max((k for k, c in enumerate(hist) if c), default=0)
    return WienerPolynomial(tuple(hist[: top + 1]))


def twk(g: Graph, k: int) -> int:
    """Sum of distances over unordered pairs of degree-k vertices."""
    if k < 0:
        raise ValueError("k must be >= 0")
    _require_connected(g)
    sources = [v for v in range(g.n) if g.degree(v) == k]
    total = 0
    for i, u in enumerate(sources):
        row = bfs_distances(g, u)
        total += sum(row[v] for v in sources[i + 1:])
    return total


def zagreb_m1(g: Graph) -> int:
    """Sum of squared degrees."""
    return sum(d * d for d in g.degrees())


def zagreb_m2(g: Graph) -> int:
    """Sum of degree products over the edges."""
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


def wk_star(g: Graph, k: int) -> int:
    """Number of unordered pairs at distance at most k (and at least 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_connected(g)
    count = 0
    for u in range(g.n):
        row = bfs_distances(g, u)
        count += sum(1 for v in range(u + 1, g.n) if 1 <= row[v] <= k)
    return count


def twk_star(g: Graph, k: int) -> int:
    """Sum of distances over unordered pairs of vertices whose degrees
    are both at most k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_connected(g)
    sources = [v for v in range(g.n) if g.degree(v) <= k]
    total = 0
    for i, u in enumerate(sources):
        row = bfs_distances(g, u)
        total += sum(row[v] for v in sources[i + 1:])
    return total


@dataclass(frozen=True)
class IndexReport:
    """One-shot summary of every index this package computes."""

    n: int
    m: int
    wiener: int
    poly: tuple[int, ...]
    twk_by_degree: tuple[tuple[int, int], ...]
    m1: int
    m2: int
    star_k: int | None = None
    wk_star: int | None = None
    twk_star: int | None = None

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "wiener": self.wiener,
            "poly": list(self.poly),
            "twk_by_degree": {str(k): v for k, v in self.twk_by_degree},
            "m1": self.m1,
            "m2": self.m2,
        }
        if self.star_k is not None:
            out["star_k"] = self.star_k
            out["wk_star"] = self.wk_star
            out["twk_star"] = self.twk_star
        return out


def index_report(g: Graph, star_k: int | None = None) -> IndexReport:
    """Compute every index in one pass; the cumulative variants are
    included when star_k is given."""
    poly = wiener_polynomial(g)
    degrees_present = sorted(set(g.degrees()))
    return IndexReport(
        n=g.n,
        m=g.m,
        wiener=poly.wiener(),
        poly=poly.coeffs,
        twk_by_degree=tuple((k, twk(g, k)) for k in degrees_present),
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
        star_k=star_k,
        wk_star=None if star_k is None else wk_star(g, star_k),
        twk_star=None if star_k is None else twk_star(g, star_k),
    )
