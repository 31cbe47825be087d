"""Slow reference implementations used to cross-check the package.

They work on plain Python sets straight from the definitions and share no code
with the bitmask engine.
"""

from itertools import combinations


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def naive_rounds(adj, seed, r):
    """List of successive active sets A_0, A_1, ... up to the fixpoint."""
    active = set(seed)
    history = [frozenset(active)]
    while True:
        nxt = active | {v for v in range(len(adj)) if len(adj[v] & active) >= r}
        if nxt == active:
            return history
        active = nxt
        history.append(frozenset(active))


def naive_closure(adj, seed, r):
    return naive_rounds(adj, seed, r)[-1]


def naive_time(adj, seed, r):
    hist = naive_rounds(adj, seed, r)
    return len(hist) - 1 if len(hist[-1]) == len(adj) else None


def naive_min_contagious(adj, r, max_size=None):
    """(m, lexicographically first witness) with no pruning, or (None, None)."""
    n = len(adj)
    for size in range(0, (n if max_size is None else max_size) + 1):
        for seed in combinations(range(n), size):
            if len(naive_closure(adj, seed, r)) == n:
                return size, seed
    return None, None


def circular_distance_edges(n, gap):
    return [(i, j) for i in range(n) for j in range(i + 1, n) if min(j - i, n - (j - i)) > gap]
