import math
import random

import pytest

from distindex import (
    DisconnectedError,
    all_free_trees,
    complete_graph,
    cycle_graph,
    from_edge_list,
    hypercube_graph,
    index_report,
    path_graph,
    random_tree,
    star_graph,
    twk,
    twk_star,
    wiener,
    wiener_polynomial,
    wk,
    wk_star,
    zagreb_m1,
    zagreb_m2,
)
from helpers import random_connected_graph


def test_wiener_small():
    assert wiener(path_graph(1)) == 0
    assert wiener(path_graph(2)) == 1
    assert wiener(path_graph(4)) == 10
    assert wiener(star_graph(4)) == 9
    assert wiener(cycle_graph(6)) == 27


def test_wiener_path_closed_form():
    for n in range(1, 30):
        assert wiener(path_graph(n)) == (n + 1) * n * (n - 1) // 6


def test_wiener_star_closed_form():
    for n in range(1, 30):
        assert wiener(star_graph(n)) == (n - 1) * (n - 1)


def test_wiener_disconnected():
    with pytest.raises(DisconnectedError):
        wiener(from_edge_list(4, [(0, 1), (2, 3)]))


def test_wk_path():
    for n in range(2, 12):
        for k in range(1, n + 2):
            assert wk(path_graph(n), k) == max(n - k, 0)


def test_wk_basic():
    assert wk(star_graph(6), 1) == 5
    assert wk(star_graph(6), 2) == 10
    assert wk(cycle_graph(6), 3) == 3
    with pytest.raises(ValueError):
        wk(path_graph(3), 0)


def test_wk_equals_edge_count_at_one():
    rng = random.Random(5)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(2, 40), rng.randint(0, 20))
        assert wk(g, 1) == g.m


def test_wiener_polynomial_frozen():
    assert wiener_polynomial(path_graph(2)).coeffs == (0, 1)
    assert wiener_polynomial(path_graph(4)).coeffs == (0, 3, 2, 1)
    assert wiener_polynomial(cycle_graph(6)).coeffs == (0, 6, 6, 3)
    assert wiener_polynomial(path_graph(1)).coeffs == (0,)


def test_wiener_polynomial_consistency():
    rng = random.Random(17)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(1, 35), rng.randint(0, 15))
        poly = wiener_polynomial(g)
        assert poly.coeffs[0] == 0
        assert poly.pair_total() == g.n * (g.n - 1) // 2
        assert poly.wiener() == wiener(g)
        assert poly.coefficient(1) == g.m
        for k in range(1, len(poly.coeffs)):
            assert poly.coefficient(k) == wk(g, k)
        assert poly.coefficient(poly.degree() + 1) == 0


def test_twk_basic():
    assert twk(star_graph(4), 1) == 6
    assert twk(path_graph(5), 2) == 4
    assert twk(path_graph(5), 1) == 4
    assert twk(path_graph(2), 1) == 1
    assert twk(path_graph(3), 7) == 0
    assert twk(star_graph(5), 0) == 0
    with pytest.raises(ValueError):
        twk(path_graph(3), -1)


def test_twk_regular_graph_equals_wiener():
    # in a k-regular graph every vertex counts, so the sum is the full one
    for g, k in [(cycle_graph(8), 2), (hypercube_graph(3), 3), (complete_graph(5), 4)]:
        assert twk(g, k) == wiener(g)
        assert twk(g, k + 1) == 0


def test_zagreb_frozen():
    assert (zagreb_m1(path_graph(5)), zagreb_m2(path_graph(5))) == (14, 12)
    assert (zagreb_m1(star_graph(4)), zagreb_m2(star_graph(4))) == (12, 9)
    assert (zagreb_m1(path_graph(2)), zagreb_m2(path_graph(2))) == (2, 1)


def test_zagreb_on_disconnected_is_fine():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert zagreb_m1(g) == 4
    assert zagreb_m2(g) == 2


def test_identities_on_trees():
    # W_1 = m, W_2 = M_1/2 - m, W_3 = M_2 - M_1 + m for every tree
    rng = random.Random(23)
    for _ in range(60):
        t = random_tree(rng.randint(2, 60), rng)
        m1, m2 = zagreb_m1(t), zagreb_m2(t)
        poly = wiener_polynomial(t)
        assert poly.coefficient(1) == t.m
        assert poly.coefficient(2) == m1 // 2 - t.m
        assert m1 % 2 == 0
        assert poly.coefficient(3) == m2 - m1 + t.m


def test_identities_fail_off_trees():
    g = cycle_graph(4)
    assert wk(g, 2) != zagreb_m1(g) // 2 - g.m


def test_wk_star_frozen():
    assert wk_star(path_graph(4), 2) == 5
    assert wk_star(cycle_graph(6), 2) == 12
    with pytest.raises(ValueError):
        wk_star(path_graph(3), 0)


def test_wk_star_cumulative():
    rng = random.Random(31)
    for _ in range(15):
        g = random_connected_graph(rng, rng.randint(2, 30), rng.randint(0, 10))
        poly = wiener_polynomial(g)
        for k in range(1, poly.degree() + 2):
            assert wk_star(g, k) == sum(poly.coefficient(j) for j in range(1, k + 1))
        assert wk_star(g, poly.degree()) == g.n * (g.n - 1) // 2


def test_twk_star_frozen():
    assert twk_star(path_graph(4), 1) == 3
    assert twk_star(path_graph(4), 2) == 10
    assert twk_star(star_graph(4), 1) == 6


def test_twk_star_dominates_summed_twk():
    # pairs with equal degree <= k are a subset of pairs with both degrees <= k
    rng = random.Random(37)
    for _ in range(15):
        g = random_connected_graph(rng, rng.randint(2, 25), rng.randint(0, 8))
        top = max(g.degrees())
        for k in range(1, top + 1):
            assert twk_star(g, k) >= sum(twk(g, j) for j in range(1, k + 1))
        assert twk_star(g, top) == wiener(g)


def test_path_shift_increases_wiener():
    # lengthening the longer pendent path at the expense of the shorter
    # strictly increases the distance sum
    base = cycle_graph(5)

    def with_paths(p, q):
        edges = list(base.edges())
        nxt = 5
        prev = 0
        for _ in range(p):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        prev = 2
        for _ in range(q):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        return from_edge_list(nxt, edges)

    for p in range(1, 5):
        for q in range(1, p + 1):
            assert wiener(with_paths(p + 1, q - 1)) > wiener(with_paths(p, q))


def test_tree_wiener_bounds_enumerated():
    for n in range(2, 11):
        lo = (n - 1) * (n - 1)
        hi = (n + 1) * n * (n - 1) // 6
        for t in all_free_trees(n):
            assert lo <= wiener(t) <= hi


def test_index_report():
    rep = index_report(path_graph(4), star_k=2)
    assert rep.wiener == 10
    assert rep.poly == (0, 3, 2, 1)
    assert dict(rep.twk_by_degree) == {1: 3, 2: 1}
    assert (rep.m1, rep.m2) == (10, 8)
    assert rep.wk_star == 5 and rep.twk_star == 10
    d = rep.as_dict()
    assert d["n"] == 4 and d["m"] == 3
    assert d["twk_by_degree"] == {"1": 3, "2": 1}
    plain = index_report(path_graph(4))
    assert plain.wk_star is None and "wk_star" not in plain.as_dict()


def test_index_report_internally_consistent():
    rng = random.Random(41)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 20), rng.randint(0, 6))
        rep = index_report(g)
        assert rep.wiener == sum(k * c for k, c in enumerate(rep.poly))
        assert sum(rep.poly) == math.comb(g.n, 2)
        for k, value in rep.twk_by_degree:
            assert value == twk(g, k)
