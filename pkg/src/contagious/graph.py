"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is held as one Python ``int`` bitmask per vertex, which keeps the
neighbour-count test of the percolation rule down to ``(adj & active).bit_count()``.
Graphs are immutable; "modifying" operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from contagious.errors import UsageError


class GraphError(UsageError):
    """Invalid graph construction or out-of-range vertex."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """An immutable simple undirected graph.

    Build one from an edge list with ``Graph(n, edges)``. Self-loops,
    out-of-range endpoints and repeated edges raise :class:`GraphError`.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.degree(1), g.m
    (2, 2)
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self._n = n
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        """Wrap precomputed adjacency masks without re-validating them.

        Callers must supply symmetric, loop-free masks.
        """
        g = cls.__new__(cls)
        g._n = len(masks)
        g._adj = tuple(masks)
        g._m = sum(a.bit_count() for a in masks) // 2
        return g

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls.from_masks([full ^ (1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_masks([0] * n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def masks(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits_of(self._adj[v]))

    @property
    def adjacency(self) -> list[frozenset[int]]:
        return [frozenset(bits_of(a)) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in bits_of(self._adj[u] >> (u + 1) << (u + 1))]

    def with_edge(self, u: int, v: int) -> Graph:
        """Return a copy of this graph with edge ``uv`` added."""
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph.from_masks(adj)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def check_invariants(self) -> None:
        """Raise :class:`GraphError` if the stored adjacency is not a simple graph."""
        full = self.full_mask
        for v, a in enumerate(self._adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self._n})")
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits_of(a):
                if not self._adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if 2 * self._m != sum(self.degrees()):
            raise GraphError("edge count disagrees with degree sum")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    def __getstate__(self):
        return (self._adj,)

    def __setstate__(self, state):
        (self._adj,) = state
        self._n = len(self._adj)
        self._m = sum(a.bit_count() for a in self._adj) // 2


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def dense_degree_bound(n: int, k: int) -> int:
    """Return ``ceil((k-1)/k * n)`` in exact integer arithmetic."""
    return -(-(k - 1) * n // k)


def is_ore(g: Graph) -> bool:
    """True iff every non-adjacent pair ``u != v`` has ``deg(u) + deg(v) >= n``."""
    n = g.n
    deg = g.degrees()
    adj = g.masks
    for u in range(n):
        # only vertices of degree < n/2 can be part of a violating pair
        if 2 * deg[u] >= n:
            continue
        for v in bits_of(~adj[u] & g.full_mask & ~(1 << u)):
            if deg[u] + deg[v] < n:
                return False
    return True


def is_dirac(g: Graph) -> bool:
    return g.n > 0 and 2 * min_degree(g) >= g.n


def non_edges(g: Graph) -> list[tuple[int, int]]:
    """All pairs ``u < v`` that are not edges, in lexicographic order."""
    full = g.full_mask
    out = []
    for u in range(g.n):
        missing = ~g.masks[u] & full
        missing = missing >> (u + 1) << (u + 1)
        out.extend((u, v) for v in bits_of(missing))
    return out


@dataclass(frozen=True)
class DCPartition:
    """Two cliques ``a`` and ``b`` of size n/2 joined by the perfect matching ``matching`` (a -> b)."""

    a: frozenset[int]
    b: frozenset[int]
    matching: dict[int, int]

    def cross_pair(self) -> tuple[int, int]:
        """Lowest-id non-adjacent pair with one vertex on each side."""
        for u, v in combinations(range(len(self.a) + len(self.b)), 2):
            if (u in self.a) != (v in self.a):
                left, right = (u, v) if u in self.a else (v, u)
                if self.matching[left] != right:
                    return (u, v)
        raise GraphError("no non-adjacent cross pair (n < 4)")


def _is_clique(g: Graph, mask: int) -> bool:
    adj = g.masks
    return all((adj[v] | 1 << v) & mask == mask for v in bits_of(mask))


def detect_dc(g: Graph) -> DCPartition | None:
    """Recognise two n/2-cliques joined by a perfect matching.

    Returns the partition, or ``None`` when ``g`` has a different shape.
    """
    n = g.n
    if n < 2 or n % 2:
        return None
    half = n // 2
    if any(d != half for d in g.degrees()):
        return None
    adj = g.masks
    nbrs = adj[0]
    if n == 4:
        # 2-regular on four vertices is the 4-cycle; v0 and its lowest neighbour form one side
        partner = max(bits_of(nbrs))
    elif n == 2:
        partner = 1
    else:
        lonely = [w for w in bits_of(nbrs) if not adj[w] & nbrs]
        if len(lonely) != 1:
            return None
        partner = lonely[0]
    side_a = (nbrs ^ (1 << partner)) | 1
    side_b = g.full_mask ^ side_a
    if side_a.bit_count() != half or not _is_clique(g, side_a) or not _is_clique(g, side_b):
        return None
    matching = {}
    for v in bits_of(side_a):
        cross = adj[v] & side_b
        if cross.bit_count() != 1:
            return None
        matching[v] = cross.bit_length() - 1
    if len(set(matching.values())) != half:
        return None
    return DCPartition(frozenset(bits_of(side_a)), frozenset(bits_of(side_b)), matching)
