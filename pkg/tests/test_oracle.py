from itertools import combinations

import pytest
from hypothesis import given, settings

from contagious import (
    Graph,
    enumerate_graphs,
    gen_dc,
    gen_extremal_mkk,
    gen_speed8,
    min_contagious,
    percolate,
    scan_seeds,
)
from contagious import oracle
from contagious.errors import BudgetExceeded, UsageError
from contagious.oracle import _prefix_chunks, forced_vertices

from conftest import as_sets, graphs
from oracles import naive_min_contagious, naive_time


def test_dc8_witness():
    res = min_contagious(gen_dc(8), 2)
    assert res.m == 2 and res.witness == (0, 5)
    assert percolate(gen_dc(8), res.witness, 2).contagious


def test_dc8_matched_pair_is_not_contagious():
    # a matched pair shares no neighbour, so nothing activates
    assert not percolate(gen_dc(8), {0, 4}, 2).contagious


def test_upper_bound_three_valued():
    g = gen_extremal_mkk(6, 2)
    over = min_contagious(g, 2, upper_bound=2)
    assert over.m is None and over.witness is None and over.exceeds_bound
    assert over.to_dict()["status"] == "exceeds_bound"
    exact = min_contagious(g, 2, upper_bound=3)
    assert exact.m == 3 and exact.to_dict()["status"] == "exact"


def test_forced_vertices_are_in_witness():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    forced = forced_vertices(g, 3)
    assert forced == (1, 3, 4)
    res = min_contagious(g, 3)
    assert res.m == 4 and res.witness == (0, 1, 3, 4) and res.forced == forced
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert forced_vertices(star, 2) == (1, 2, 3)
    assert min_contagious(star, 2).witness == (1, 2, 3)


def test_threshold_one_needs_one_per_component():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    assert min_contagious(g, 1).m == 3


def test_budget_refusal_up_front():
    with pytest.raises(BudgetExceeded) as info:
        min_contagious(Graph.complete(40), 5, budget=1000)
    assert info.value.needed > 1000


def test_bad_inputs():
    with pytest.raises(UsageError):
        min_contagious(Graph.empty(0), 1)
    with pytest.raises(UsageError):
        min_contagious(gen_dc(6), 0)
    with pytest.raises(UsageError):
        scan_seeds(gen_dc(6), 2, 7)


def test_prefix_chunks_cover_everything():
    from math import comb

    for size in range(1, 9):
        for t in range(1, size + 1):
            chunks = _prefix_chunks(list(range(size)), t)
            assert sum(c for _, c in chunks) == comb(size, t)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_matches_naive_minimum(g):
    adj = as_sets(g)
    for r in (1, 2, 3):
        res = min_contagious(g, r)
        m, witness = naive_min_contagious(adj, r)
        assert res.m == m
        assert percolate(g, res.witness, r).contagious
        # with no forced vertices both searches agree on the lex-first witness
        if not res.forced:
            assert res.witness == witness


def test_scan_speed8_pairs_and_triples():
    g = gen_speed8()
    pairs = scan_seeds(g, 2, 2)
    assert (pairs.total, pairs.contagious_count, pairs.max_rounds, pairs.argmax_seed) == (28, 27, 4, (0, 1))
    triples = scan_seeds(g, 2, 3)
    assert (triples.total, triples.contagious_count, triples.max_rounds) == (56, 56, 3)
    assert triples.rounds_histogram[3] == 1 and triples.argmax_seed == (0, 1, 2)


def test_scan_matches_naive_times():
    g = gen_dc(6)
    adj = as_sets(g)
    stats = scan_seeds(g, 2, 2)
    times = [naive_time(adj, s, 2) for s in combinations(range(6), 2)]
    assert stats.contagious_count == sum(t is not None for t in times)
    assert stats.max_rounds == max(t for t in times if t is not None)


def test_enumerate_counts_and_failures():
    seen = []
    summary = enumerate_graphs(4, 2, lambda g: seen.append(g.m) or g.has_edge(0, 1))
    assert summary.visited == 15 == len(seen)
    # edge (0,1) plus any of the 5 other edges
    assert summary.failure_count == 5 and len(summary.failures) == 5


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_graphs(10, 20, lambda g: False, budget=10**6)


def _flag_triangle(g):
    return g.has_edge(0, 1) and g.has_edge(1, 2) and g.has_edge(0, 2)


@pytest.mark.parametrize("workers", [2, 4])
def test_parallel_matches_serial(monkeypatch, workers):
    monkeypatch.setattr(oracle, "PARALLEL_MIN_WORK", 1)
    g = gen_extremal_mkk(9, 3)
    serial = min_contagious(g, 2, workers=1)
    par = min_contagious(g, 2, workers=workers)
    assert serial.to_dict() == par.to_dict()
    assert scan_seeds(gen_speed8(), 2, 3, workers=workers) == scan_seeds(gen_speed8(), 2, 3)
    a = enumerate_graphs(5, 4, _flag_triangle)
    b = enumerate_graphs(5, 4, _flag_triangle, workers=workers)
    assert a.to_dict() == b.to_dict()
