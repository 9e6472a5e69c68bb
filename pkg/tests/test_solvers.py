import random

import pytest

from vertexvis.errors import DisconnectedError, SolveTimeoutError, TooLargeError
from vertexvis.generators import (
    cartesian_product,
    complete_graph,
    complete_product,
    cycle_graph,
    figure_family,
    grid_graph,
    np_gadget,
    path_graph,
    star_graph,
)
from vertexvis.graph import bfs_root_view, build_graph
from vertexvis.solvers import (
    SolverConfig,
    alpha_brute,
    max_leaf_spanning_tree,
    mu_brute,
    vv_exact,
    vx_brute,
    vx_exact,
    vx_greedy,
)
from vertexvis.visibility import is_x_visibility_set

from oracles import connected_graphs_upto, vx_by_paths


def grid_coord(n, k, l):
    return (k - 1) * n + (l - 1)


def test_vx_exact_cycle_and_path():
    assert all(vx_exact(cycle_graph(5), x).value == 2 for x in range(5))
    p6 = path_graph(6)
    assert vx_exact(p6, 2).value == 2
    assert vx_exact(p6, 0).value == 1


def test_vx_exact_figure_family():
    g, labels = figure_family(1)
    assert vx_exact(g, labels["x"]).value == 10
    assert vx_exact(g, labels["y"][0]).value == 10
    assert vx_exact(g, labels["z"][0]).value == 10
    assert vx_exact(g, labels["a"][0]).value == 9
    assert vx_exact(g, labels["b"][0]).value == 8
    assert vx_exact(g, labels["c"][0]).value == 8


def test_vx_exact_grid_root():
    g = grid_graph(4)
    assert vx_exact(g, grid_coord(4, 2, 2)).value == 9


def test_vx_brute_examples():
    assert vx_brute(complete_graph(4), 0).value == 3
    assert vx_brute(cycle_graph(6), 0).value == 2
    red = np_gadget(path_graph(5))
    assert vx_brute(red.gprime, red.apex).value == 7


def test_vx_brute_cap():
    with pytest.raises(TooLargeError):
        vx_brute(grid_graph(5), 0, SolverConfig(brute_cap=20))


def test_exact_matches_brute_and_paths_tiny():
    for g in connected_graphs_upto(4):
        for x in range(g.n):
            exact = vx_exact(g, x).value
            assert exact == vx_brute(g, x).value == vx_by_paths(g, x)


def test_exact_matches_brute_random(random_corpus):
    rng = random.Random(47)
    for g in rng.sample(random_corpus, 30):
        for x in range(g.n):
            assert vx_exact(g, x).value == vx_brute(g, x).value


def test_certificates_sound(random_corpus):
    rng = random.Random(53)
    for g in rng.sample(random_corpus, 20):
        x = rng.randrange(g.n)
        res = vx_exact(g, x)
        assert len(res.witness) == res.value
        assert is_x_visibility_set(g, x, res.witness)
        dist = bfs_root_view(g, x).dist
        for v, p in res.tree.items():
            assert p in g.adj[v]
        for v in range(g.n):
            if v == x:
                continue
            d, u = 0, v
            while u != x:
                u = res.tree[u]
                d += 1
            assert d == dist[v]
        used = set(res.tree.values())
        assert res.witness == frozenset(set(range(g.n)) - used - {x})


def test_vv_examples():
    assert vv_exact(grid_graph(4)).value == 9
    assert vv_exact(star_graph(5)).value == 5
    assert vv_exact(complete_product(3, 2)).value == 4
    assert vv_exact(build_graph(2, [(0, 1)])).value == 1


def test_vv_tie_breaks_to_smallest_root():
    res = vv_exact(cycle_graph(5))
    assert res.root == 0


def test_vv_skips_leaves():
    g, labels = figure_family(1)
    res = vv_exact(g)
    assert res.value == 10
    assert g.degree(res.root) > 1


def test_vv_parallel_matches_sequential():
    g, _ = figure_family(1)
    seq = vv_exact(g)
    par = vv_exact(g, SolverConfig(jobs=2))
    assert (seq.value, seq.root, seq.witness) == (par.value, par.root, par.witness)


def test_solvers_reject_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        vx_exact(g, 0)
    with pytest.raises(DisconnectedError):
        max_leaf_spanning_tree(g)


def test_max_leaf_examples():
    g, _ = figure_family(1)
    assert max_leaf_spanning_tree(g).value == 11
    assert max_leaf_spanning_tree(star_graph(6)).value == 6
    assert max_leaf_spanning_tree(cycle_graph(8)).value == 2
    assert max_leaf_spanning_tree(build_graph(2, [(0, 1)])).value == 2
    assert max_leaf_spanning_tree(build_graph(1, [])).value == 1


def test_max_leaf_certificate():
    g, _ = figure_family(1)
    res = max_leaf_spanning_tree(g)
    assert len(res.tree) == g.n - 1
    for v, p in res.tree.items():
        assert p in g.adj[v]
    assert len(res.leaves) == res.value
    internal = {res.root} | set(res.tree.values())
    assert res.leaves == frozenset(set(range(g.n)) - internal)


def test_max_leaf_cap():
    with pytest.raises(TooLargeError):
        max_leaf_spanning_tree(grid_graph(6), SolverConfig(mcds_cap=32))


def test_max_leaf_dominates_vv(small_graphs):
    rng = random.Random(59)
    for g in rng.sample(small_graphs, 80):
        assert max_leaf_spanning_tree(g).value >= vv_exact(g).value


def test_mu_examples():
    assert mu_brute(complete_graph(6)) == 6
    assert mu_brute(path_graph(4)) == 2
    k2c6 = cartesian_product(complete_graph(2), cycle_graph(6))
    assert mu_brute(k2c6) == 6
    with pytest.raises(TooLargeError):
        mu_brute(grid_graph(5))


def test_alpha_examples():
    assert alpha_brute(path_graph(5)) == 3
    assert alpha_brute(complete_graph(4)) == 1
    assert alpha_brute(cycle_graph(5)) == 2
    assert alpha_brute(build_graph(4, [(0, 1), (2, 3)])) == 2


def test_greedy_examples():
    assert vx_greedy(star_graph(7), 0).value == 7
    assert vx_greedy(cycle_graph(6), 0).value == 2
    g10 = grid_graph(10)
    res = vx_greedy(g10, grid_coord(10, 2, 2))
    assert res.value <= 54
    assert is_x_visibility_set(g10, res.root, res.witness)


def test_greedy_sandwich(small_graphs):
    rng = random.Random(61)
    for g in rng.sample(small_graphs, 100):
        for x in range(g.n):
            lo = vx_greedy(g, x)
            hi = vx_exact(g, x)
            assert lo.value <= hi.value <= g.n - 1
            assert is_x_visibility_set(g, x, lo.witness)


def test_determinism():
    g, _ = figure_family(1)
    a = vv_exact(g)
    b = vv_exact(g)
    assert (a.value, a.root, a.witness, a.tree) == (b.value, b.root, b.witness, b.tree)


def test_timeout_fires():
    g = grid_graph(6)
    with pytest.raises(SolveTimeoutError):
        for x in range(g.n):
            vx_exact(g, x, SolverConfig(timeout_s=1e-7))
