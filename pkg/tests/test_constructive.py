import pytest

from contagious import (
    Graph,
    construct_dense_seed,
    construct_ore_seed,
    gen_circulant,
    gen_dc,
    gen_ore_groups,
    gen_random_min_degree,
    gen_random_ore,
    gen_speed8,
    percolate,
)
from contagious.errors import UsageError


def test_dense_on_dc_uses_cross_pair():
    rec = construct_dense_seed(gen_dc(8), 2)
    assert rec.method == "dc_cross_pair" and len(rec.seed) == 2
    assert percolate(gen_dc(8), rec.seed, 2).rounds <= 4


def test_dense_on_speed8():
    rec = construct_dense_seed(gen_speed8(), 2)
    assert rec.method == "neighbors_of_anchor" and rec.anchor == 0
    assert percolate(gen_speed8(), rec.seed, 2).contagious


@pytest.mark.parametrize("k", [3, 4])
def test_dense_on_circulant(k):
    g = gen_circulant(k)
    rec = construct_dense_seed(g, k)
    t = percolate(g, rec.seed, k)
    assert len(rec.seed) == k and t.contagious and t.rounds <= 3


@pytest.mark.parametrize("seed", range(30))
def test_dense_random(seed):
    k = 2 + seed % 4
    n = 10 + seed
    g = gen_random_min_degree(n, k, seed)
    t = percolate(g, construct_dense_seed(g, k).seed, k)
    assert t.contagious and t.rounds <= (4 if k == 2 else 3)


def test_dense_rejects_bad_input():
    with pytest.raises(UsageError):
        construct_dense_seed(Graph.complete(3), 3)
    with pytest.raises(UsageError):
        construct_dense_seed(Graph(6, [(0, 1)]), 2)
    with pytest.raises(UsageError):
        construct_dense_seed(gen_dc(6), 1)


def test_ore_recipes():
    assert construct_ore_seed(gen_dc(10)).method == "dc_cross_pair"
    g = gen_ore_groups(12, 4, [2, 2, 2, 2])
    rec = construct_ore_seed(g)
    assert rec.method == "ore_lemma17" and rec.anchor is not None
    assert percolate(g, rec.seed, 2).contagious
    assert construct_ore_seed(Graph.complete(3)).method == "brute_force_fallback"


@pytest.mark.parametrize("seed", range(40))
def test_ore_random(seed):
    g = gen_random_ore(3 + seed % 22, seed)
    rec = construct_ore_seed(g)
    assert len(rec.seed) == 2 and percolate(g, rec.seed, 2).contagious


def test_ore_rejects_non_ore():
    with pytest.raises(UsageError):
        construct_ore_seed(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(UsageError):
        construct_ore_seed(Graph.complete(2))


def test_recipe_dict():
    d = construct_dense_seed(gen_speed8(), 2).to_dict()
    assert set(d) == {"seed", "method", "anchor"} and d["seed"] == sorted(d["seed"])
