from hypothesis import given, settings, strategies as st

from contagious import closure, is_contagious, percolate

from conftest import as_sets, graph_and_seed, graphs
from oracles import naive_closure


@given(graph_and_seed(max_n=12), st.integers(1, 4))
def test_closure_idempotent_and_matches_reference(case, r):
    g, seed = case
    c = closure(g, seed, r)
    assert c == naive_closure(as_sets(g), seed, r)
    assert closure(g, c, r) == c


@given(graph_and_seed(max_n=12), st.integers(1, 4), st.data())
def test_seed_monotone(case, r, data):
    g, seed = case
    extra = data.draw(st.sets(st.integers(0, g.n - 1), max_size=3))
    assert closure(g, seed, r) <= closure(g, seed | extra, r)


@given(graph_and_seed(max_n=12), st.integers(1, 4))
def test_threshold_monotone(case, r):
    g, seed = case
    assert closure(g, seed, r + 1) <= closure(g, seed, r)


@settings(max_examples=50)
@given(graphs(min_n=1, max_n=12), st.integers(1, 3))
def test_whole_vertex_set_is_contagious_instantly(g, r):
    t = percolate(g, range(g.n), r)
    assert t.contagious and t.rounds == 0
    assert is_contagious(g, range(g.n), r)
