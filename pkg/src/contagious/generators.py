"""Constructors for the extremal and tight-example graph families.

Each deterministic family has one ``gen_*`` function; the two random families
draw from a Philox counter-based generator so that equal ``rng_seed`` values give
identical graphs on every platform. :class:`FamilySpec` is a serialisable
envelope that dispatches to the right constructor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from contagious.errors import UsageError
from contagious.graph import Graph, dense_degree_bound, is_ore, min_degree


def _rng(rng_seed: int | Sequence[int]) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(rng_seed)))


def derive_seed(*parts: int) -> int:
    """Deterministically mix integers into one 64-bit seed."""
    return int(np.random.SeedSequence(list(parts)).generate_state(1, np.uint64)[0])


def _cliques(n: int, blocks: Sequence[Sequence[int]]) -> list[int]:
    masks = [0] * n
    for block in blocks:
        bm = 0
        for v in block:
            bm |= 1 << v
        for v in block:
            masks[v] |= bm ^ (1 << v)
    return masks


def gen_dc(n: int) -> Graph:
    """Two cliques on ``0..n/2-1`` and ``n/2..n-1`` joined by the matching ``i -- i+n/2``."""
    if n < 4 or n % 2:
        raise UsageError(f"DC_n needs even n >= 4, got {n}")
    h = n // 2
    masks = _cliques(n, [range(h), range(h, n)])
    for i in range(h):
        masks[i] |= 1 << (i + h)
        masks[i + h] |= 1 << i
    return Graph.from_masks(masks)


def gen_clique_minus_matching(n: int) -> Graph:
    """K_n with ceil(n/2) edges removed.

    Even n: the perfect matching ``(0,1), (2,3), ...``. Odd n: the near-perfect
    matching on ``0..n-2`` plus the edge from the unmatched vertex ``n-1`` to 0.
    """
    if n < 3:
        raise UsageError(f"clique minus matching needs n >= 3, got {n}")
    removed = [(i, i + 1) for i in range(0, n - 1, 2)]
    if n % 2:
        removed.append((0, n - 1))
    masks = list(Graph.complete(n).masks)
    for u, v in removed:
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    return Graph.from_masks(masks)


# v1..v8 -> 0..7
SPEED8_EDGES = [
    (0, 1), (0, 2), (1, 2),          # v1 v2 v3 clique
    (0, 3), (0, 4),                  # v4, v5 -- v1
    (1, 6), (1, 7),                  # v7, v8 -- v2
    (2, 3), (2, 5),                  # v3 -- v4, v6
    (3, 4), (3, 6), (3, 7),          # v4 -- v5, v7, v8
    (4, 6), (4, 7),                  # v5 -- v7, v8
    (6, 7), (5, 6), (5, 7),          # v7 v8 and v6
    (4, 5),                          # v6 -- v5
]


def gen_speed8() -> Graph:
    """Eight-vertex Dirac graph on which the seed ``{0, 1}`` needs four rounds."""
    g = Graph(8, SPEED8_EDGES)
    if min_degree(g) != 4:
        raise AssertionError("speed8 transcription: minimum degree is not 4")
    return g


def _circulant_gap(k: int) -> tuple[int, int]:
    if k < 3:
        raise UsageError(f"circulant family needs k >= 3, got {k}")
    if k % 2:
        return k**3, (k * k - 1) // 2
    return k * (k + 1), k // 2


def circulant(n: int, gap: int) -> Graph:
    """Vertices adjacent iff their circular distance exceeds ``gap``."""
    masks = []
    full = (1 << n) - 1
    for i in range(n):
        near = 1 << i
        for d in range(1, gap + 1):
            near |= 1 << ((i + d) % n) | 1 << ((i - d) % n)
        masks.append(full & ~near)
    return Graph.from_masks(masks)


def gen_circulant(k: int) -> Graph:
    """Tight speed example for threshold ``k``.

    Odd k: ``n = k**3``, gap ``(k*k-1)/2``. Even k: ``n = k*(k+1)``, gap ``k/2``.
    """
    n, gap = _circulant_gap(k)
    return circulant(n, gap)


def gen_circulant_seed(k: int) -> frozenset[int]:
    """The seed of size ``k`` that needs three rounds on :func:`gen_circulant`."""
    _circulant_gap(k)
    step = k * k if k % 2 else k + 1
    return frozenset([j * step for j in range(k - 1)] + [(k - 1) * step - 1])


def gen_extremal_mkk(n: int, k: int) -> Graph:
    """K_{n-1} on ``0..n-2`` plus the isolated vertex ``n-1``."""
    if k < 1 or n < k + 1:
        raise UsageError(f"need n >= k+1 >= 2, got n={n}, k={k}")
    return Graph.from_masks(_cliques(n, [range(n - 1)]))


def gen_extremal_mk2(n: int, k: int) -> Graph:
    """Graph with ``C(n-k+1, 2) + floor((k-1)/2)`` edges and no contagious k-set at threshold 2.

    Odd k: ``(k-1)/2`` isolated edges on ``0..k-2``. Even k: isolated vertex 0 and
    ``(k-2)/2`` isolated edges on ``1..k-2``. The clique occupies ``k-1..n-1``.
    """
    if k < 2 or n < k + 2:
        raise UsageError(f"need k >= 2 and n >= k+2, got n={n}, k={k}")
    start = 0 if k % 2 else 1
    blocks = [range(i, i + 2) for i in range(start, k - 1, 2)]
    blocks.append(range(k - 1, n))
    return Graph.from_masks(_cliques(n, blocks))


def gen_star_counterexample(n: int, k: int) -> Graph:
    """K_{n-k} on ``0..n-k-1`` beside a star with centre ``n-k`` and ``k-1`` leaves."""
    if k < 2 or n - k < 1 or 3 * k < 2 * n + 2:
        raise UsageError(f"need k >= 2, n-k >= 1 and k >= (2n+2)/3, got n={n}, k={k}")
    c = n - k
    edges = list(combinations(range(c), 2)) + [(c, leaf) for leaf in range(c + 1, n)]
    return Graph(n, edges)


def gen_ore_groups(n: int, c: int, group_sizes: Sequence[int]) -> Graph:
    """Ore graph in which the clique ``S = {0..c-1}`` is not contagious at threshold 2.

    The other ``n - c`` vertices form a clique split into consecutive groups of the
    given sizes; every member of group ``i`` is also adjacent to vertex ``i``.
    """
    if not 2 <= c <= n // 2:
        raise UsageError(f"need 2 <= c <= n//2, got n={n}, c={c}")
    sizes = list(group_sizes)
    if len(sizes) != c or any(s < 1 for s in sizes) or sum(sizes) != n - c:
        raise UsageError(f"group sizes must be {c} positive integers summing to {n - c}, got {sizes}")
    masks = _cliques(n, [range(c), range(c, n)])
    v = c
    for i, size in enumerate(sizes):
        for member in range(v, v + size):
            masks[member] |= 1 << i
            masks[i] |= 1 << member
        v += size
    g = Graph.from_masks(masks)
    if not is_ore(g):
        raise UsageError("construction did not yield an Ore graph")
    return g


def _complete_multipartite(n: int, part: int) -> Graph:
    blocks = [range(i, min(i + part, n)) for i in range(0, n, part)]
    inside = _cliques(n, blocks)
    full = (1 << n) - 1
    return Graph.from_masks([full & ~(inside[v] | 1 << v) for v in range(n)])


def _add_random_edges(g: Graph, rng: np.random.Generator, p: float) -> Graph:
    masks = list(g.masks)
    if p <= 0:
        return g
    for u, v in combinations(range(g.n), 2):
        if not masks[u] >> v & 1 and rng.random() < p:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return Graph.from_masks(masks)


def gen_random_min_degree(n: int, k: int, rng_seed: int) -> Graph:
    """Random graph with minimum degree at least ``ceil((k-1)/k * n)``.

    Starts from a relabelled base whose minimum degree sits at or just above the
    bound (a circulant, a complete multipartite graph with parts of size
    ``floor(n/k)``, or DC_n when k = 2 and n is even), then adds each remaining
    non-edge independently with a random probability that is often zero.
    """
    if not n > k >= 2:
        raise UsageError(f"need n > k >= 2, got n={n}, k={k}")
    rng = _rng(rng_seed)
    bound = dense_degree_bound(n, k)
    choices = ["circulant", "multipartite"]
    if k == 2 and n % 2 == 0 and n >= 4:
        choices.append("dc")
    kind = choices[int(rng.integers(len(choices)))]
    if kind == "dc":
        base = gen_dc(n)
    elif kind == "multipartite":
        base = _complete_multipartite(n, n - bound)
    else:
        base = circulant(n, (n - 1 - bound) // 2)
    base = base.relabel([int(x) for x in rng.permutation(n)])
    p = 0.0 if rng.random() < 0.4 else float(rng.uniform(0.0, 0.3))
    g = _add_random_edges(base, rng, p)
    assert min_degree(g) >= bound
    return g


def _random_composition(rng: np.random.Generator, total: int, parts: int) -> list[int]:
    cuts = sorted(int(x) for x in rng.choice(np.arange(1, total), size=parts - 1, replace=False))
    edges = [0, *cuts, total]
    return [b - a for a, b in zip(edges, edges[1:])]


def gen_random_ore(n: int, rng_seed: int) -> Graph:
    """Random Ore graph: a random Dirac graph or a random ore-groups graph, plus extra edges.

    Adding edges never breaks the Ore condition, so the sampled superset is Ore.
    """
    if n < 3:
        raise UsageError(f"need n >= 3, got {n}")
    rng = _rng(rng_seed)
    if n >= 4 and rng.random() < 0.5:
        c = int(rng.integers(2, n // 2 + 1))
        base = gen_ore_groups(n, c, _random_composition(rng, n - c, c))
        base = base.relabel([int(x) for x in rng.permutation(n)])
    else:
        base = gen_random_min_degree(n, 2, int(rng.integers(2**63)))
    p = 0.0 if rng.random() < 0.4 else float(rng.uniform(0.0, 0.15))
    g = _add_random_edges(base, rng, p)
    assert is_ore(g)
    return g


FAMILIES = {
    "dc": (gen_dc, ("n",)),
    "clique_minus_matching": (gen_clique_minus_matching, ("n",)),
    "speed8": (gen_speed8, ()),
    "circulant": (gen_circulant, ("k",)),
    "extremal_mkk": (gen_extremal_mkk, ("n", "k")),
    "extremal_mk2": (gen_extremal_mk2, ("n", "k")),
    "star_counterexample": (gen_star_counterexample, ("n", "k")),
    "ore_groups": (gen_ore_groups, ("n", "c", "sizes")),
    "random_min_degree": (gen_random_min_degree, ("n", "k")),
    "random_ore": (gen_random_ore, ("n",)),
}
RANDOM_FAMILIES = {"random_min_degree", "random_ore"}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus the integers that pick one member."""

    family: str
    params: dict = field(default_factory=dict)
    rng_seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        _, names = FAMILIES[self.family]
        missing = [p for p in names if p not in self.params]
        if missing:
            raise UsageError(f"family {self.family} needs parameters {missing}")
        if self.family in RANDOM_FAMILIES and self.rng_seed is None:
            raise UsageError(f"family {self.family} needs an rng_seed")

    def build(self) -> Graph:
        fn, names = FAMILIES[self.family]
        args = [self.params[p] for p in names]
        if self.family in RANDOM_FAMILIES:
            args.append(self.rng_seed)
        return fn(*args)

    def to_dict(self) -> dict:
        doc = {"family": self.family, "params": {p: self.params[p] for p in FAMILIES[self.family][1]}}
        if self.rng_seed is not None:
            doc["rng_seed"] = self.rng_seed
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict) -> FamilySpec:
        return cls(doc["family"], dict(doc.get("params", {})), doc.get("rng_seed"))
