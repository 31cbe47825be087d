"""Exact brute-force ground truth.

Everything here enumerates subsets in lexicographic order, so results (including
the witness and the work counters) do not depend on how the search space is
split across worker processes. Each enumeration declares its size up front and
refuses with :class:`~contagious.errors.BudgetExceeded` instead of truncating.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb
from typing import Any, Callable, Iterator, Sequence

from contagious.errors import BudgetExceeded, UsageError
from contagious.graph import Graph, bits_of
from contagious.percolation import closure_rounds

DEFAULT_BUDGET = 10**8
# levels smaller than this are scanned in-process even when workers > 1
PARALLEL_MIN_WORK = 4096


@dataclass(frozen=True)
class MinContagiousResult:
    """Outcome of :func:`min_contagious`.

    ``m`` is ``None`` when an ``upper_bound`` was given and no contagious set of
    size at most that bound exists; ``witness`` is then ``None`` as well.
    """

    m: int | None
    witness: tuple[int, ...] | None
    seeds_examined: int
    forced: tuple[int, ...]
    upper_bound: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def exceeds_bound(self) -> bool:
        return self.m is None

    def to_dict(self) -> dict:
        return {
            "status": "exceeds_bound" if self.m is None else "exact",
            "m": self.m,
            "witness": None if self.witness is None else list(self.witness),
            "seeds_examined": self.seeds_examined,
            "forced": list(self.forced),
            "upper_bound": self.upper_bound,
        }


@dataclass(frozen=True)
class SeedScanStats:
    size: int
    total: int
    contagious_count: int
    max_rounds: int | None
    argmax_seed: tuple[int, ...] | None
    rounds_histogram: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "total": self.total,
            "contagious_count": self.contagious_count,
            "max_rounds": self.max_rounds,
            "argmax_seed": None if self.argmax_seed is None else list(self.argmax_seed),
            "rounds_histogram": {str(k): v for k, v in sorted(self.rounds_histogram.items())},
        }


@dataclass
class EnumerationSummary:
    n: int
    edge_count: int
    visited: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "visited": self.visited,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }


def _check_budget(needed: int, budget: int, what: str) -> None:
    if needed > budget:
        raise BudgetExceeded(needed, budget, what)


def _prefix_chunks(pool: Sequence[int], t: int) -> list[tuple[int, int]]:
    """Split t-subsets of ``pool`` into lexicographically contiguous chunks by first element.

    Returns ``(first_index, count)`` pairs in lexicographic order.
    """
    size = len(pool)
    return [(i, comb(size - i - 1, t - 1)) for i in range(size - t + 1)]


def _chunk_subsets(pool: Sequence[int], t: int, first: int) -> Iterator[tuple[int, ...]]:
    head = pool[first]
    for rest in combinations(pool[first + 1:], t - 1):
        yield (head, *rest)


def _map(workers: int, fn: Callable, jobs: list) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, *zip(*jobs)))


# ---------------------------------------------------------------- min contagious


def _first_contagious(adj, r, base, pool, t, first):
    """Index (0-based, lex order) of the first contagious set in a chunk, or -1."""
    full = (1 << len(adj)) - 1
    for idx, subset in enumerate(_chunk_subsets(pool, t, first)):
        mask = base
        for v in subset:
            mask |= 1 << v
        if closure_rounds(adj, mask, r)[0] == full:
            return idx
    return -1


def forced_vertices(g: Graph, r: int) -> tuple[int, ...]:
    """Vertices of degree below ``r``; they can never be infected, so every contagious set holds them."""
    return tuple(v for v, d in enumerate(g.degrees()) if d < r)


def min_contagious(
    g: Graph,
    r: int,
    upper_bound: int | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> MinContagiousResult:
    """Smallest contagious set at threshold ``r`` by exhaustive search.

    Sizes are tried in increasing order and subsets within a size in
    lexicographic order, so the witness is the lexicographically least minimum
    contagious set. Vertices of degree below ``r`` are fixed into every candidate.
    With ``upper_bound`` the search stops after that size and reports
    ``m is None`` when nothing was found.

    >>> min_contagious(Graph.complete(4), 2).m
    2
    """
    if g.n < 1:
        raise UsageError("graph must have at least one vertex")
    if r < 1:
        raise UsageError(f"threshold must be at least 1, got {r}")
    start = time.perf_counter()
    n = g.n
    adj = g.masks
    full = g.full_mask
    forced = forced_vertices(g, r)
    base = 0
    for v in forced:
        base |= 1 << v
    pool = [v for v in range(n) if not base >> v & 1]
    limit = n if upper_bound is None else min(n, upper_bound)
    examined = 0
    for size in range(max(len(forced), 1), limit + 1):
        t = size - len(forced)
        count = comb(len(pool), t)
        _check_budget(examined + count, budget, "seed sets")
        if t == 0:
            examined += 1
            if closure_rounds(adj, base, r)[0] == full:
                return MinContagiousResult(size, forced, examined, forced, upper_bound, time.perf_counter() - start)
            continue
        chunks = _prefix_chunks(pool, t)
        w = workers if count >= PARALLEL_MIN_WORK else 1
        if w <= 1:
            hits = []
            for first, _ in chunks:
                hit = _first_contagious(adj, r, base, pool, t, first)
                hits.append(hit)
                if hit >= 0:
                    break
        else:
            hits = _map(w, _first_contagious, [(adj, r, base, pool, t, first) for first, _ in chunks])
        for (first, chunk_count), hit in zip(chunks, hits):
            if hit >= 0:
                examined += hit + 1
                subset = next(islice(_chunk_subsets(pool, t, first), hit, None))
                witness = tuple(sorted(forced + subset))
                return MinContagiousResult(size, witness, examined, forced, upper_bound, time.perf_counter() - start)
            examined += chunk_count
    return MinContagiousResult(None, None, examined, forced, upper_bound, time.perf_counter() - start)


# ---------------------------------------------------------------- seed scans


def _scan_chunk(adj, r, pool, t, first):
    full = (1 << len(adj)) - 1
    contagious = 0
    best = -1
    best_seed = None
    hist: dict[int, int] = {}
    for subset in _chunk_subsets(pool, t, first):
        mask = 0
        for v in subset:
            mask |= 1 << v
        final, rounds = closure_rounds(adj, mask, r)
        if final == full:
            contagious += 1
            hist[rounds] = hist.get(rounds, 0) + 1
            if rounds > best:
                best, best_seed = rounds, subset
    return contagious, best, best_seed, hist


def scan_seeds(
    g: Graph,
    r: int,
    size: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SeedScanStats:
    """Percolate every seed of the given size and summarise the contagious ones.

    ``argmax_seed`` is the lexicographically first seed attaining ``max_rounds``.
    """
    n = g.n
    if not 0 <= size <= n:
        raise UsageError(f"seed size must lie in [0, {n}], got {size}")
    if r < 1:
        raise UsageError(f"threshold must be at least 1, got {r}")
    total = comb(n, size)
    _check_budget(total, budget, "seed sets")
    adj = g.masks
    if size == 0:
        final, rounds = closure_rounds(adj, 0, r)
        parts = [(1, rounds, (), {rounds: 1})] if final == g.full_mask else [(0, -1, None, {})]
    else:
        pool = list(range(n))
        jobs = [(adj, r, pool, size, first) for first, _ in _prefix_chunks(pool, size)]
        parts = _map(workers if total >= PARALLEL_MIN_WORK else 1, _scan_chunk, jobs)
    contagious = 0
    best, best_seed = -1, None
    hist: dict[int, int] = {}
    for c, b, s, h in parts:
        contagious += c
        if b > best:
            best, best_seed = b, s
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
    return SeedScanStats(
        size=size,
        total=total,
        contagious_count=contagious,
        max_rounds=best if contagious else None,
        argmax_seed=tuple(best_seed) if contagious else None,
        rounds_histogram=hist,
    )


# ---------------------------------------------------------------- graph enumeration

MAX_RECORDED_FAILURES = 20


def _visit_chunk(n, pairs, t, first, visitor):
    visited = 0
    failures = []
    for chosen in _chunk_subsets(range(len(pairs)), t, first):
        masks = [0] * n
        for i in chosen:
            u, v = pairs[i]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        visited += 1
        outcome = visitor(Graph.from_masks(masks))
        if outcome:
            failures.append(([list(pairs[i]) for i in chosen], outcome))
    return visited, failures


def enumerate_graphs(
    n: int,
    edge_count: int,
    visitor: Callable[[Graph], Any],
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> EnumerationSummary:
    """Call ``visitor`` on every labelled graph on ``n`` vertices with ``edge_count`` edges.

    Edge subsets are visited in lexicographic order of the pair list
    ``(0,1), (0,2), ..., (n-2,n-1)``. A truthy return value from ``visitor`` marks
    a failure; the first few are recorded with their edge lists. With
    ``workers > 1`` the visitor must be picklable.
    """
    pairs = list(combinations(range(n), 2))
    if not 0 <= edge_count <= len(pairs):
        raise UsageError(f"edge count must lie in [0, {len(pairs)}], got {edge_count}")
    total = comb(len(pairs), edge_count)
    _check_budget(total, budget, "graphs")
    summary = EnumerationSummary(n, edge_count)
    if edge_count == 0:
        parts = [(1, [([], outcome)] if (outcome := visitor(Graph.empty(n))) else [])]
    else:
        jobs = [(n, pairs, edge_count, first, visitor) for first, _ in _prefix_chunks(range(len(pairs)), edge_count)]
        parts = _map(workers if total >= PARALLEL_MIN_WORK else 1, _visit_chunk, jobs)
    for visited, failures in parts:
        summary.visited += visited
        summary.failure_count += len(failures)
        room = MAX_RECORDED_FAILURES - len(summary.failures)
        summary.failures.extend({"edges": e, "observed": o} for e, o in failures[:room])
    return summary
