"""Theorem checkers.

Each ``verify_*`` function runs one claim end to end on concrete graphs and
returns a :class:`TheoremReport`. A failing sub-check yields verdict
``"counterexample"`` with a payload (graph, seed, observed values) that
:func:`recheck` can replay independently; an enumeration that would exceed its
budget yields ``"refused"``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from contagious.constructive import construct_dense_seed, construct_ore_seed
from contagious.errors import BudgetExceeded, InvariantViolation, UsageError
from contagious.generators import (
    FamilySpec,
    derive_seed,
    gen_clique_minus_matching,
    gen_extremal_mk2,
    gen_extremal_mkk,
    gen_random_min_degree,
    gen_star_counterexample,
)
from contagious.graph import Graph, bits_of, dense_degree_bound, detect_dc, is_ore, min_degree, non_edges
from contagious.oracle import DEFAULT_BUDGET, enumerate_graphs, min_contagious, scan_seeds
from contagious.percolation import closure_rounds, mask_of, percolate, step_mask

THEOREM_IDS = (
    "min_degree",
    "tightness_example7",
    "speed",
    "stop_lemma",
    "almost_there",
    "mkk",
    "mnn",
    "mk2",
    "star_counterexample",
    "ore_theorem",
    "ore_lemmas",
)
VERDICTS = ("verified", "counterexample", "refused")


@dataclass
class TheoremReport:
    theorem_id: str
    params: dict
    verdict: str = "verified"
    counterexample: dict | None = None
    work: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    mode: str = "exhaustive"
    scope: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == "verified"

    def fail(self, g: Graph, seed: Iterable[int] | None, observed: dict, reason: str) -> None:
        """Record the first failing sub-check; later failures only bump the counter."""
        self.work["failures"] = self.work.get("failures", 0) + 1
        if self.counterexample is None:
            self.verdict = "counterexample"
            self.counterexample = {
                "n": g.n,
                "graph_edges": [list(e) for e in g.edges()],
                "seed": None if seed is None else sorted(seed),
                "observed": observed,
                "reason": reason,
            }

    def refuse(self, why: str) -> None:
        self.verdict = "refused"
        self.notes.append(why)

    def bump(self, key: str, by: int = 1) -> None:
        self.work[key] = self.work.get(key, 0) + by

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": self.params,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "work": self.work,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "mode": self.mode,
            "scope": self.scope,
            "notes": self.notes,
        }


class _Timed:
    def __init__(self, report: TheoremReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, exc_type, exc, tb):
        self.report.elapsed_ms = 1000 * (time.perf_counter() - self.start)
        if exc_type is BudgetExceeded:
            self.report.refuse(str(exc))
            return True
        return False


def recheck(counterexample: dict) -> dict:
    """Replay a counterexample payload with the engine and the oracle.

    Returns the recomputed values for every key present in ``observed``.
    """
    g = Graph(counterexample["n"], [tuple(e) for e in counterexample["graph_edges"]])
    observed = counterexample["observed"]
    r = observed.get("r", 2)
    out: dict = {}
    if counterexample.get("seed") is not None:
        trace = percolate(g, counterexample["seed"], r)
        out.update(
            closure_size=len(trace.closure),
            contagious=trace.contagious,
            rounds=trace.rounds,
            first_wave_size=len(trace.waves[0]) if trace.waves else 0,
        )
    if "m" in observed:
        bound = observed.get("upper_bound")
        out["m"] = min_contagious(g, r, upper_bound=bound).m
    return {k: out[k] for k in observed if k in out}


def _speed_bound(k: int) -> int:
    return 4 if k == 2 else 3


# ---------------------------------------------------------------- minimum degree


def verify_min_degree(
    n_range: Iterable[int], k: int, trials: int = 1, rng_seed: int = 0
) -> TheoremReport:
    """Random graphs at the degree bound: the constructed k-set is contagious and fast.

    Also checks that every vertex has at least ``k`` neighbours.
    """
    ns = list(n_range)
    if k < 2 or trials < 1 or any(n <= k for n in ns):
        raise UsageError("need every n > k >= 2 and trials >= 1")
    report = TheoremReport("min_degree", {"n_range": [min(ns), max(ns)], "k": k, "trials": trials, "rng_seed": rng_seed})
    report.scope = "random graphs with minimum degree >= ceil((k-1)/k*n)"
    report.mode = "sampled"
    bound = _speed_bound(k)
    worst = 0
    with _Timed(report):
        for n in ns:
            for trial in range(trials):
                g = gen_random_min_degree(n, k, derive_seed(rng_seed, n, k, trial))
                report.bump("graphs")
                if min_degree(g) < k:
                    report.fail(g, None, {"min_degree": min_degree(g)}, "a vertex has fewer than k neighbours")
                    continue
                try:
                    recipe = construct_dense_seed(g, k)
                except InvariantViolation as exc:
                    seed = list(bits_of(g.masks[0]))[:k]
                    report.fail(g, seed, {"r": k, "contagious": False}, str(exc))
                    continue
                report.bump(f"method_{recipe.method}")
                final, rounds = closure_rounds(g.masks, mask_of(recipe.seed), k)
                limit = 2 if recipe.method == "dc_cross_pair" else bound
                worst = max(worst, rounds)
                if rounds > limit:
                    report.fail(g, recipe.seed, {"r": k, "rounds": rounds}, f"took more than {limit} rounds")
    report.work["max_rounds"] = worst
    return report


def verify_tightness_example7(n: int, *, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """K_n minus a perfect matching: minimum degree floor((k-1)/k*n) with k = n-1 and m(G, k) = n."""
    if n < 4 or n % 2:
        raise UsageError(f"need even n >= 4, got {n}")
    k = n - 1
    report = TheoremReport("tightness_example7", {"n": n, "k": k})
    with _Timed(report):
        g = gen_clique_minus_matching(n)
        floor_bound = (k - 1) * n // k
        report.work["min_degree"] = min_degree(g)
        report.work["required_min_degree"] = dense_degree_bound(n, k)
        if min_degree(g) != floor_bound or floor_bound >= dense_degree_bound(n, k):
            report.fail(g, None, {"min_degree": min_degree(g)}, "minimum degree is not floor((k-1)/k*n)")
        res = min_contagious(g, k, budget=budget)
        report.work["m"] = res.m
        report.work["seeds_examined"] = res.seeds_examined
        if res.m != n:
            report.fail(g, res.witness, {"r": k, "m": res.m}, f"expected m(G, {k}) = {n}")
    return report


# ---------------------------------------------------------------- speed


def verify_speed(g: Graph, k: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoremReport:
    """Every contagious seed of size k or k+1 finishes within 4 rounds (k = 2) or 3 rounds (k >= 3)."""
    n = g.n
    if min_degree(g) < dense_degree_bound(n, k):
        raise UsageError("graph does not meet the minimum degree bound for this k")
    bound = _speed_bound(k)
    report = TheoremReport("speed", {"n": n, "k": k})
    report.scope = f"all seeds of size {k} and {k + 1}"
    with _Timed(report):
        attained = 0
        for size in (k, k + 1):
            if size > n:
                continue
            stats = scan_seeds(g, k, size, budget=budget, workers=workers)
            report.work[f"size_{size}"] = stats.to_dict()
            report.bump("seeds", stats.total)
            if stats.max_rounds is not None:
                attained = max(attained, stats.max_rounds)
                if stats.max_rounds > bound:
                    report.fail(g, stats.argmax_seed, {"r": k, "rounds": stats.max_rounds}, f"exceeds {bound} rounds")
        report.work["max_rounds"] = attained
        report.work["bound"] = bound
        report.work["bound_attained"] = attained == bound
    return report


# ---------------------------------------------------------------- closure-size checks


def _seed_sets(n: int, size: int, sample_budget: int, mode: str, rng_seed: int):
    total = comb(n, size)
    if mode == "auto":
        mode = "exhaustive" if total <= sample_budget else "sampled"
    if mode == "exhaustive":
        if total > sample_budget:
            raise BudgetExceeded(total, sample_budget, "seed sets")
        return mode, combinations(range(n), size)
    if mode != "sampled":
        raise UsageError(f"mode must be auto, exhaustive or sampled, got {mode!r}")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([rng_seed, n, size])))
    return mode, (tuple(sorted(int(x) for x in rng.choice(n, size, replace=False))) for _ in range(sample_budget))


def verify_stop_lemma(
    g: Graph, k: int, sample_budget: int = 10**4, *, mode: str = "auto", rng_seed: int = 0
) -> TheoremReport:
    """Closures of k-sets have size k or at least ceil((k-1)/k*n).

    For k >= 3 a closure of that size must be everything; for k = 2 a proper
    closure may stop at exactly n/2 only on DC_n.
    """
    n = g.n
    bound = dense_degree_bound(n, k)
    if min_degree(g) < bound:
        raise UsageError("graph does not meet the minimum degree bound for this k")
    report = TheoremReport("stop_lemma", {"n": n, "k": k, "sample_budget": sample_budget, "rng_seed": rng_seed})
    dc = detect_dc(g) is not None
    sizes: dict[int, int] = {}
    with _Timed(report):
        report.mode, seeds = _seed_sets(n, k, sample_budget, mode, rng_seed)
        full = g.full_mask
        for seed in seeds:
            report.bump("seeds")
            final, _ = closure_rounds(g.masks, mask_of(seed), k)
            size = final.bit_count()
            sizes[size] = sizes.get(size, 0) + 1
            if size == k or final == full:
                continue
            if size < bound:
                report.fail(g, seed, {"r": k, "closure_size": size}, "stalled between k and the degree bound")
            elif k >= 3:
                report.fail(g, seed, {"r": k, "closure_size": size}, "stalled above the degree bound")
            elif not (2 * size == n and dc):
                report.fail(g, seed, {"r": k, "closure_size": size}, "stalled above n/2 or at n/2 outside DC_n")
    report.work["closure_sizes"] = {str(s): c for s, c in sorted(sizes.items())}
    report.work["stall_sizes"] = sorted(s for s in sizes if s < n)
    report.work["is_dc"] = dc
    return report


def verify_almost_there(
    g: Graph, k: int, sample_budget: int = 10**4, *, mode: str = "auto", rng_seed: int = 0
) -> TheoremReport:
    """Once enough vertices are active, one more round activates the rest.

    "Enough" is ceil((k-1)/k*n) for k >= 3 and floor(n/2) + 1 for k = 2.
    """
    n = g.n
    bound = dense_degree_bound(n, k)
    if min_degree(g) < bound:
        raise UsageError("graph does not meet the minimum degree bound for this k")
    size = bound if k >= 3 else n // 2 + 1
    report = TheoremReport("almost_there", {"n": n, "k": k, "active": size, "sample_budget": sample_budget})
    with _Timed(report):
        report.mode, seeds = _seed_sets(n, size, sample_budget, mode, rng_seed)
        full = g.full_mask
        for seed in seeds:
            report.bump("seeds")
            active = mask_of(seed)
            wave = step_mask(g.masks, active, k, full & ~active)
            if active | wave != full:
                report.fail(g, seed, {"r": k, "first_wave_size": wave.bit_count()}, "one round did not finish")
    return report


# ---------------------------------------------------------------- extremal edge counts


class _AtMostK:
    """Visitor: flag graphs whose minimum contagious set at threshold k exceeds k."""

    def __init__(self, k: int):
        self.k = k

    def __call__(self, g: Graph):
        if min_contagious(g, self.k, upper_bound=self.k).m is None:
            return {"m": f"> {self.k}"}
        return None


class _ExactlyNMinus1:
    def __call__(self, g: Graph):
        n = g.n
        res = min_contagious(g, n - 1)
        universal = any(d == n - 1 for d in g.degrees())
        if res.m != n - 1 or not universal:
            return {"m": res.m, "has_universal_vertex": universal}
        return None


def verify_mkk(n: int, k: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoremReport:
    """Maximum edges with no contagious k-set at threshold k is C(n-1, 2), for n >= 2k+2."""
    if k < 1 or n < 2 * k + 2:
        raise UsageError(f"need k >= 1 and n >= 2k+2, got n={n}, k={k}")
    target = comb(n - 1, 2)
    report = TheoremReport("mkk", {"n": n, "k": k})
    report.scope = f"extremal construction plus every labelled graph with {target + 1} edges"
    with _Timed(report):
        g = gen_extremal_mkk(n, k)
        res = min_contagious(g, k, budget=budget)
        report.work["extremal_edges"] = g.m
        report.work["extremal_m"] = res.m
        if g.m != target:
            report.fail(g, None, {"edges": g.m}, f"extremal graph should have {target} edges")
        if res.m is None or res.m <= k:
            report.fail(g, res.witness, {"r": k, "m": res.m}, f"extremal graph has a contagious set of size {k}")
        summary = enumerate_graphs(n, target + 1, _AtMostK(k), budget=budget, workers=workers)
        report.work["graphs"] = summary.visited
        report.work["expected_graphs"] = comb(comb(n, 2), target + 1)
        if summary.visited != report.work["expected_graphs"]:
            report.notes.append("enumeration count disagrees with the binomial")
            report.verdict = "counterexample"
        if summary.failure_count:
            first = summary.failures[0]
            h = Graph(n, [tuple(e) for e in first["edges"]])
            report.fail(h, None, {"r": k, "m": None, "upper_bound": k}, f"{target + 1}-edge graph without a contagious {k}-set")
            report.work["failures"] = summary.failure_count
    return report


def verify_mnn(n: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoremReport:
    """Maximum edges with no contagious (n-1)-set at threshold n-1 is C(n, 2) - ceil(n/2)."""
    if n < 2:
        raise UsageError(f"need n >= 2, got {n}")
    target = comb(n, 2) - (n + 1) // 2
    report = TheoremReport("mnn", {"n": n})
    report.scope = f"extremal construction plus every labelled graph with {target + 1} edges"
    with _Timed(report):
        g = gen_clique_minus_matching(n) if n >= 3 else Graph.empty(n)
        res = min_contagious(g, n - 1, budget=budget)
        report.work["extremal_edges"] = g.m
        report.work["extremal_m"] = res.m
        if g.m != target:
            report.fail(g, None, {"edges": g.m}, f"extremal graph should have {target} edges")
        if res.m != n:
            report.fail(g, res.witness, {"r": n - 1, "m": res.m}, f"extremal graph should have m = {n}")
        summary = enumerate_graphs(n, target + 1, _ExactlyNMinus1(), budget=budget, workers=workers)
        report.work["graphs"] = summary.visited
        report.work["expected_graphs"] = comb(comb(n, 2), target + 1)
        if summary.visited != report.work["expected_graphs"]:
            report.notes.append("enumeration count disagrees with the binomial")
            report.verdict = "counterexample"
        if summary.failure_count:
            first = summary.failures[0]
            h = Graph(n, [tuple(e) for e in first["edges"]])
            report.fail(h, None, {"r": n - 1, "m": first["observed"]["m"]}, f"graph with {target + 1} edges has m != n-1")
            report.work["failures"] = summary.failure_count
    return report


def mk2_edge_formula(n: int, k: int) -> int:
    return comb(n - k + 1, 2) + (k - 1) // 2


def verify_mk2(n: int, k: int, *, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Threshold-2 extremal construction: edge count, m > k, and every added edge brings m to k."""
    if k < 2 or n < k + 2:
        raise UsageError(f"need k >= 2 and n >= k+2, got n={n}, k={k}")
    report = TheoremReport("mk2", {"n": n, "k": k})
    report.mode = "construction"
    report.scope = (
        "construction and single-edge sensitivity only; exhaustive confirmation needs "
        f"n >= 9k + C(8k, 2) = {9 * k + comb(8 * k, 2)} and is out of reach"
    )
    with _Timed(report):
        g = gen_extremal_mk2(n, k)
        expected = mk2_edge_formula(n, k)
        report.work["edges"] = g.m
        report.work["edge_formula"] = expected
        if g.m != expected:
            report.fail(g, None, {"edges": g.m}, f"expected {expected} edges")
        res = min_contagious(g, 2, upper_bound=k + 2, budget=budget)
        report.work["m"] = res.m
        if res.m is not None and res.m <= k:
            report.fail(g, res.witness, {"r": 2, "m": res.m, "upper_bound": k + 2}, f"has a contagious set of size {res.m} <= k")
        drops = {}
        for u, v in non_edges(g):
            h = g.with_edge(u, v)
            got = min_contagious(h, 2, upper_bound=k, budget=budget)
            report.bump("edge_additions")
            drops[got.m] = drops.get(got.m, 0) + 1
            if got.m != k:
                report.fail(h, got.witness, {"r": 2, "m": got.m, "upper_bound": k}, f"adding ({u}, {v}) gave m = {got.m}, expected {k}")
        report.work["m_after_addition"] = {str(m): c for m, c in drops.items()}
    return report


def verify_star_counterexample(n: int, k: int, *, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Clique plus star beats the threshold-2 edge formula yet has no contagious k-set.

    Outside the regime ``k >= (2n+2)/3`` the report is refused with an explanation.
    """
    if k < 2 or n - k < 1:
        raise UsageError(f"need k >= 2 and n - k >= 1, got n={n}, k={k}")
    report = TheoremReport("star_counterexample", {"n": n, "k": k})
    edges = comb(n - k, 2) + (k - 1)
    formula = mk2_edge_formula(n, k)
    report.work["edges"] = edges
    report.work["edge_formula"] = formula
    if 3 * k < 2 * n + 2:
        report.refuse(
            f"k={k} is below (2n+2)/3={(2 * n + 2) / 3:.2f}; here the star graph has {edges} edges "
            f"against the formula's {formula}, so it does not exceed it"
        )
        return report
    with _Timed(report):
        g = gen_star_counterexample(n, k)
        if g.m != edges or not edges > formula:
            report.fail(g, None, {"edges": g.m}, f"edge count does not exceed {formula}")
        res = min_contagious(g, 2, budget=budget)
        report.work["m"] = res.m
        report.work["seeds_examined"] = res.seeds_examined
        if res.m is None or res.m <= k:
            report.fail(g, res.witness, {"r": 2, "m": res.m}, f"has a contagious set of size {res.m} <= k")
    return report


# ---------------------------------------------------------------- Ore graphs


def verify_ore(
    source: Graph | FamilySpec,
    *,
    triple_budget: int = 10**5,
    rng_seed: int = 0,
    theorem_id: str = "ore_theorem",
) -> TheoremReport:
    """Contagious pair in an Ore graph, plus the supporting triple properties.

    Checks that the constructed pair is contagious; that every three vertices of
    degree >= n/2 infect at least half the graph and, unless the graph is DC_n,
    all of it; and for an ore-groups family that the clique ``{0..c-1}`` is not
    contagious.
    """
    spec = source if isinstance(source, FamilySpec) else None
    g = spec.build() if spec else source
    n = g.n
    if n < 3 or not is_ore(g):
        raise UsageError("input must be an Ore graph on at least 3 vertices")
    params = spec.to_dict() if spec else {"n": n}
    report = TheoremReport(theorem_id, params)
    full = g.full_mask
    with _Timed(report):
        try:
            recipe = construct_ore_seed(g)
            report.work["method"] = recipe.method
            report.work["seed"] = sorted(recipe.seed)
        except InvariantViolation as exc:
            report.fail(g, None, {"r": 2, "contagious": False}, str(exc))
        dc = detect_dc(g) is not None
        report.work["is_dc"] = dc
        high = [v for v, d in enumerate(g.degrees()) if 2 * d >= n]
        report.work["high_degree_vertices"] = len(high)
        report.mode, triples = _triples(high, triple_budget, rng_seed)
        for triple in triples:
            report.bump("triples")
            final, _ = closure_rounds(g.masks, mask_of(triple), 2)
            size = final.bit_count()
            if 2 * size < n:
                report.fail(g, triple, {"r": 2, "closure_size": size}, "high-degree triple infected fewer than n/2")
            elif not dc and final != full:
                report.fail(g, triple, {"r": 2, "contagious": False}, "high-degree triple not contagious outside DC_n")
        if spec is not None and spec.family == "ore_groups":
            c = spec.params["c"]
            final, _ = closure_rounds(g.masks, (1 << c) - 1, 2)
            report.work["clique_s_closure"] = final.bit_count()
            if final == full:
                report.fail(g, range(c), {"r": 2, "contagious": True}, "S = {0..c-1} turned out contagious")
    return report


def _triples(high: list[int], budget: int, rng_seed: int):
    total = comb(len(high), 3)
    if total <= budget:
        return "exhaustive", combinations(high, 3)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([rng_seed, len(high)])))
    return "sampled", (tuple(sorted(high[int(i)] for i in rng.choice(len(high), 3, replace=False))) for _ in range(budget))
