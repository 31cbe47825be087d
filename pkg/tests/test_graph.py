from math import comb
import pickle

import pytest
from hypothesis import given, settings

from contagious import (
    Graph,
    GraphError,
    degree,
    detect_dc,
    gen_circulant,
    gen_dc,
    gen_extremal_mk2,
    gen_ore_groups,
    gen_random_min_degree,
    gen_speed8,
    is_ore,
    min_degree,
    non_edges,
)
from contagious.graph import dense_degree_bound

from conftest import graphs


def test_degree_examples():
    assert degree(Graph.complete(3), 0) == 2
    assert {degree(gen_dc(6), v) for v in range(6)} == {3}
    # v5 sits on v1, v4, v6, v7, v8 in the listed edges
    assert degree(gen_speed8(), 4) == 5


def test_degree_out_of_range():
    with pytest.raises(GraphError):
        degree(Graph.complete(3), 3)
    with pytest.raises(GraphError):
        degree(Graph.complete(3), -1)


def test_min_degree_examples():
    assert min_degree(Graph.complete(5)) == 4
    assert min_degree(gen_speed8()) == 4
    assert min_degree(gen_circulant(3)) == 27 - 8 - 1 == 18


def test_min_degree_empty_graph_rejected():
    with pytest.raises(GraphError):
        min_degree(Graph.empty(0))


def test_is_ore_examples():
    assert is_ore(gen_ore_groups(12, 4, [2, 2, 2, 2]))
    assert not is_ore(Graph(3, [(0, 1), (1, 2)]))
    assert is_ore(gen_speed8())


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 20])
def test_detect_dc_on_dc(n):
    part = detect_dc(gen_dc(n))
    assert part is not None
    assert part.a | part.b == frozenset(range(n))
    assert len(part.a) == len(part.b) == n // 2
    assert sorted(part.matching) == sorted(part.a)
    assert sorted(part.matching.values()) == sorted(part.b)


def test_detect_dc_four_cycle_any_labelling():
    cycle = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    part = detect_dc(cycle)
    assert part is not None
    for a, b in part.matching.items():
        assert cycle.has_edge(a, b)


def test_detect_dc_rejects():
    assert detect_dc(Graph.complete(6)) is None
    assert detect_dc(gen_speed8()) is None
    # 3-regular on 6 vertices but not DC_6: the prism is DC_6, K_{3,3} is not
    assert detect_dc(Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])) is None


def test_detect_dc_relabelled():
    g = gen_dc(10).relabel([3, 7, 0, 9, 1, 5, 2, 8, 6, 4])
    assert detect_dc(g) is not None


def test_non_edges_examples():
    assert non_edges(Graph.complete(4)) == []
    assert non_edges(Graph.empty(3)) == [(0, 1), (0, 2), (1, 2)]
    g = gen_extremal_mk2(30, 3)
    assert len(non_edges(g)) == comb(30, 2) - 379 == 56


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])


def test_with_edge_returns_copy():
    g = Graph(3, [(0, 1)])
    h = g.with_edge(1, 2)
    assert g.m == 1 and h.m == 2
    with pytest.raises(GraphError):
        h.with_edge(2, 1)


def test_pickle_roundtrip():
    for g in (Graph.empty(0), gen_speed8()):
        h = pickle.loads(pickle.dumps(g))
        assert h == g and h.m == g.m and h.n == g.n


def test_dense_degree_bound_matches_ceiling():
    for n in range(1, 60):
        for k in range(1, 8):
            assert dense_degree_bound(n, k) == -(-(k - 1) * n // k)
            assert dense_degree_bound(n, k) * k >= (k - 1) * n > (dense_degree_bound(n, k) - 1) * k


@given(graphs(max_n=12))
def test_invariants_hold(g):
    g.check_invariants()
    adj = g.adjacency
    for v in range(g.n):
        assert v not in adj[v]
        assert all(v in adj[u] for u in adj[v])
    assert 2 * g.m == sum(g.degrees())
    assert len(non_edges(g)) + g.m == comb(g.n, 2)


@given(graphs(min_n=2, max_n=12))
def test_detect_dc_needs_regular_half_degree(g):
    if any(d != g.n // 2 for d in g.degrees()) or g.n % 2:
        assert detect_dc(g) is None


@settings(max_examples=50)
@given(graphs(min_n=2, max_n=12))
def test_dirac_implies_ore(g):
    if 2 * min_degree(g) >= g.n:
        assert is_ore(g)


@pytest.mark.parametrize("seed", range(20))
def test_random_dirac_graphs_are_ore(seed):
    g = gen_random_min_degree(15 + seed, 2, seed)
    assert is_ore(g)
