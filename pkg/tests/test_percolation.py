import pytest
from hypothesis import given

from contagious import (
    Graph,
    PercolationTrace,
    gen_circulant,
    gen_circulant_seed,
    gen_dc,
    gen_speed8,
    percolate,
    percolation_step,
    percolation_time,
)
from contagious.errors import UsageError

from conftest import as_sets, graph_and_seed
from oracles import naive_rounds


def test_step_examples():
    assert percolation_step(Graph.complete(4), {0, 1}, 2) == {2, 3}
    assert percolation_step(gen_dc(6), {0, 4}, 2) == {1, 3}
    assert percolation_step(gen_speed8(), {0, 1}, 2) == {2}


def test_percolate_clique():
    t = percolate(Graph.complete(5), {0, 1}, 2)
    assert t.contagious and t.waves == ((2, 3, 4),) and t.rounds == 1


def test_dc_cross_pair_two_rounds():
    t = percolate(gen_dc(6), {0, 4}, 2)
    assert t.contagious and t.rounds == 2


def test_dc_same_clique_stalls():
    t = percolate(gen_dc(6), {0, 1}, 2)
    assert not t.contagious
    assert t.closure == {0, 1, 2}


def test_percolation_time_examples():
    g = gen_speed8()
    assert percolation_time(g, range(8), 3) == 0
    assert percolation_time(g, {0, 1}, 2) == 4
    assert percolation_time(gen_circulant(3), {0, 9, 17}, 3) == 3
    assert percolation_time(gen_dc(6), {0, 1}, 2) is None


def test_empty_seed_is_valid():
    t = percolate(gen_speed8(), set(), 2)
    assert not t.contagious and t.waves == () and t.rounds == 0


def test_threshold_zero_rejected():
    with pytest.raises(ValueError):
        percolate(gen_speed8(), {0}, 0)
    with pytest.raises(UsageError):
        percolate(gen_speed8(), {8}, 1)


@pytest.mark.parametrize("k", [3, 5, 7])
def test_odd_circulant_first_wave(k):
    t = percolate(gen_circulant(k), gen_circulant_seed(k), k)
    assert t.waves[0] == (k**3 - (k * k - 1) // 2 - 1,)
    assert t.rounds == 3 and t.contagious


@pytest.mark.parametrize("k", [4, 6, 8])
def test_even_circulant_first_wave(k):
    t = percolate(gen_circulant(k), gen_circulant_seed(k), k)
    assert t.waves[0] == (k * k + k // 2 - 1,)
    assert t.rounds == 3 and t.contagious


def test_trace_dict_roundtrip():
    t = percolate(gen_speed8(), {1, 0}, 2)
    d = t.to_dict()
    assert d == {
        "n": 8,
        "r": 2,
        "seed": [0, 1],
        "waves": [[2], [3], [4, 6, 7], [5]],
        "contagious": True,
        "rounds": 4,
    }
    assert PercolationTrace.from_dict(d) == t


@given(graph_and_seed(max_n=12))
def test_matches_naive_rounds(case):
    g, seed = case
    adj = as_sets(g)
    for r in (1, 2, 3):
        hist = naive_rounds(adj, seed, r)
        t = percolate(g, seed, r)
        assert t.rounds == len(hist) - 1
        for i, wave in enumerate(t.waves):
            assert set(wave) == hist[i + 1] - hist[i]
        assert t.contagious == (len(hist[-1]) == g.n)


@given(graph_and_seed(max_n=12))
def test_trace_invariants(case):
    g, seed = case
    for r in (1, 2, 3):
        t = percolate(g, seed, r)
        seen = set(t.seed)
        for wave in t.waves:
            assert wave and seen.isdisjoint(wave)
            for v in wave:
                assert len(g.neighbors(v) & seen) >= r
            seen.update(wave)
        assert t.contagious == (len(seen) == g.n)
        assert len(t.waves) <= g.n - len(t.seed)
        assert percolate(g, t.closure, r).waves == ()
