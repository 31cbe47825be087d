"""Synchronous r-neighbour bootstrap percolation.

In each round every inactive vertex with at least ``r`` active neighbours
(counted against the previous round's active set) becomes active for good.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from contagious.graph import Graph, GraphError, bits_of, mask_of


def _seed_mask(g: Graph, seed: Iterable[int]) -> int:
    mask = 0
    for v in seed:
        if not 0 <= v < g.n:
            raise GraphError(f"seed vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def _check_threshold(r: int) -> None:
    if r < 1:
        raise ValueError(f"threshold must be at least 1, got {r}")


def step_mask(adj: tuple[int, ...], active: int, r: int, candidates: int) -> int:
    """New wave among ``candidates`` (already excluding ``active``)."""
    new = 0
    for v in bits_of(candidates):
        if (adj[v] & active).bit_count() >= r:
            new |= 1 << v
    return new


def run_mask(adj: tuple[int, ...], active: int, r: int) -> tuple[int, list[int]]:
    """Iterate to the fixpoint; return the closure mask and the list of wave masks.

    Only neighbours of the previous wave can change their active-neighbour count,
    so each round examines just those.
    """
    waves = []
    frontier = active
    while frontier:
        touched = 0
        for v in bits_of(frontier):
            touched |= adj[v]
        new = step_mask(adj, active, r, touched & ~active)
        if not new:
            break
        waves.append(new)
        active |= new
        frontier = new
    return active, waves


def closure_rounds(adj: tuple[int, ...], active: int, r: int) -> tuple[int, int]:
    """Closure mask and number of non-empty rounds; allocation-light hot path for scans."""
    rounds = 0
    frontier = active
    while frontier:
        touched = 0
        for v in bits_of(frontier):
            touched |= adj[v]
        new = 0
        for v in bits_of(touched & ~active):
            if (adj[v] & active).bit_count() >= r:
                new |= 1 << v
        if not new:
            break
        rounds += 1
        active |= new
        frontier = new
    return active, rounds


@dataclass(frozen=True)
class PercolationTrace:
    """Full record of one percolation run.

    ``rounds`` is the number of non-empty waves; it is the percolation time only
    when ``contagious`` is true.
    """

    n: int
    r: int
    seed: tuple[int, ...]
    waves: tuple[tuple[int, ...], ...]
    contagious: bool
    rounds: int

    @property
    def closure(self) -> frozenset[int]:
        out = set(self.seed)
        for w in self.waves:
            out.update(w)
        return frozenset(out)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "seed": list(self.seed),
            "waves": [list(w) for w in self.waves],
            "contagious": self.contagious,
            "rounds": self.rounds,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> PercolationTrace:
        return cls(
            n=doc["n"],
            r=doc["r"],
            seed=tuple(doc["seed"]),
            waves=tuple(tuple(w) for w in doc["waves"]),
            contagious=doc["contagious"],
            rounds=doc["rounds"],
        )


def percolation_step(g: Graph, active: Iterable[int], r: int) -> frozenset[int]:
    """Vertices that become active in the next round (the new wave, possibly empty)."""
    _check_threshold(r)
    mask = _seed_mask(g, active)
    return frozenset(bits_of(step_mask(g.masks, mask, r, g.full_mask & ~mask)))


def percolate(g: Graph, seed: Iterable[int], r: int) -> PercolationTrace:
    """Run the process from ``seed`` until nothing changes.

    >>> from contagious.graph import Graph
    >>> t = percolate(Graph.complete(5), {0, 1}, 2)
    >>> t.contagious, t.waves
    (True, ((2, 3, 4),))
    """
    _check_threshold(r)
    mask = _seed_mask(g, seed)
    final, waves = run_mask(g.masks, mask, r)
    return PercolationTrace(
        n=g.n,
        r=r,
        seed=tuple(bits_of(mask)),
        waves=tuple(tuple(bits_of(w)) for w in waves),
        contagious=final == g.full_mask,
        rounds=len(waves),
    )


def closure(g: Graph, seed: Iterable[int], r: int) -> frozenset[int]:
    _check_threshold(r)
    final, _ = closure_rounds(g.masks, _seed_mask(g, seed), r)
    return frozenset(bits_of(final))


def is_contagious(g: Graph, seed: Iterable[int], r: int) -> bool:
    _check_threshold(r)
    final, _ = closure_rounds(g.masks, _seed_mask(g, seed), r)
    return final == g.full_mask


def percolation_time(g: Graph, seed: Iterable[int], r: int) -> int | None:
    """Rounds until every vertex is active, or ``None`` if ``seed`` is not contagious."""
    _check_threshold(r)
    final, rounds = closure_rounds(g.masks, _seed_mask(g, seed), r)
    return rounds if final == g.full_mask else None


__all__ = [
    "PercolationTrace",
    "closure",
    "closure_rounds",
    "is_contagious",
    "mask_of",
    "percolate",
    "percolation_step",
    "percolation_time",
]
