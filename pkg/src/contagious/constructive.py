"""Explicit contagious sets for dense graphs.

``construct_dense_seed`` builds a k-set that is contagious at threshold k in any
graph with minimum degree at least ``ceil((k-1)/k * n)``; ``construct_ore_seed``
builds a contagious pair at threshold 2 in any Ore graph. Ties are always broken
towards the lowest vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from contagious.errors import InvariantViolation, UsageError
from contagious.graph import Graph, bits_of, dense_degree_bound, detect_dc, is_ore, min_degree
from contagious.percolation import closure_rounds, mask_of

METHODS = ("neighbors_of_anchor", "dc_cross_pair", "ore_lemma17", "brute_force_fallback")


@dataclass(frozen=True)
class SeedRecipe:
    seed: frozenset[int]
    method: str
    anchor: int | None = None

    def to_dict(self) -> dict:
        return {"seed": sorted(self.seed), "method": self.method, "anchor": self.anchor}


def _confirm(g: Graph, recipe: SeedRecipe, r: int) -> SeedRecipe:
    final, _ = closure_rounds(g.masks, mask_of(recipe.seed), r)
    if final != g.full_mask:
        raise InvariantViolation(
            f"{recipe.method} seed {sorted(recipe.seed)} is not contagious at threshold {r}"
        )
    return recipe


def construct_dense_seed(g: Graph, k: int) -> SeedRecipe:
    """Return a k-set contagious at threshold k.

    Uses ``k`` lowest-id neighbours of vertex 0, except on DC_n with k = 2 where a
    non-adjacent pair across the two cliques is needed. The result is checked by
    simulation before it is returned.

    Raises :class:`UsageError` if ``n <= k`` or the minimum degree is below the bound.
    """
    n = g.n
    if k < 2:
        raise UsageError(f"k must be at least 2, got {k}")
    if n <= k:
        raise UsageError(f"need n > k, got n={n}, k={k}")
    if min_degree(g) < dense_degree_bound(n, k):
        raise UsageError(
            f"minimum degree {min_degree(g)} is below ceil((k-1)/k*n) = {dense_degree_bound(n, k)}"
        )
    if k == 2:
        dc = detect_dc(g)
        if dc is not None:
            return _confirm(g, SeedRecipe(frozenset(dc.cross_pair()), "dc_cross_pair"), 2)
    anchor = 0
    seed = frozenset(list(bits_of(g.masks[anchor]))[:k])
    return _confirm(g, SeedRecipe(seed, "neighbors_of_anchor", anchor), k)


def construct_ore_seed(g: Graph) -> SeedRecipe:
    """Return a pair contagious at threshold 2 in an Ore graph.

    Looks for the lowest-id vertex ``w`` of degree at least ``ceil(n/2)`` with two
    neighbours of that degree, and returns those two neighbours; ``w`` is then
    infected in round one and the three high-degree vertices spread to everything.
    DC_n is special-cased and graphs with ``n <= 4`` are searched exhaustively.
    """
    n = g.n
    if n < 3:
        raise UsageError(f"need n >= 3, got {n}")
    if not is_ore(g):
        raise UsageError("graph is not an Ore graph")
    dc = detect_dc(g)
    if dc is not None:
        return _confirm(g, SeedRecipe(frozenset(dc.cross_pair()), "dc_cross_pair"), 2)
    if n <= 4:
        for pair in combinations(range(n), 2):
            final, _ = closure_rounds(g.masks, mask_of(pair), 2)
            if final == g.full_mask:
                return SeedRecipe(frozenset(pair), "brute_force_fallback")
        raise InvariantViolation("Ore graph on at most 4 vertices without a contagious pair")
    cut = -(-n // 2)
    high = mask_of(v for v, d in enumerate(g.degrees()) if d >= cut)
    for w in bits_of(high):
        inside = g.masks[w] & high
        if inside.bit_count() >= 2:
            pair = list(bits_of(inside))[:2]
            return _confirm(g, SeedRecipe(frozenset(pair), "ore_lemma17", w), 2)
    raise InvariantViolation("Ore graph with n >= 5 has no high-degree vertex with two high-degree neighbours")
