"""Command-line front end: ``contagious <subcommand> ...``.

Exit codes: 0 success / verified, 1 counterexample or a seed that was expected to
be contagious is not, 2 usage or parse error, 3 enumeration budget refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from contagious.constructive import construct_dense_seed, construct_ore_seed
from contagious.errors import BudgetExceeded, InvariantViolation, UsageError
from contagious.formats import GraphDocument, dumps, parse_document
from contagious.generators import FAMILIES, FamilySpec
from contagious.graph import Graph
from contagious.oracle import DEFAULT_BUDGET, min_contagious, scan_seeds
from contagious.percolation import percolate
from contagious import verify as V

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_RNG_SEED = 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_family_flags(p: argparse.ArgumentParser, graph_input: bool = True) -> None:
    if graph_input:
        p.add_argument("--graph", help="edge-list file ('-' for stdin)")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--sizes", type=_int_list, help="ore_groups group sizes, e.g. 2,2,2,2")
    p.add_argument("--rng-seed", type=int, default=DEFAULT_RNG_SEED)


def _family_spec(args) -> FamilySpec:
    _, names = FAMILIES[args.family]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--family {args.family} needs --{name}")
        params[name] = value
    seed = args.rng_seed if args.family.startswith("random_") else None
    return FamilySpec(args.family, params, seed)


def _load(args) -> tuple[Graph, FamilySpec | None]:
    if getattr(args, "graph", None):
        text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
        doc = parse_document(text)
        return doc.graph, doc.family
    if args.family:
        spec = _family_spec(args)
        return spec.build(), spec
    raise UsageError("give a graph with --graph FILE or --family NAME")


def _print(args, doc: dict, text: str) -> None:
    print(dumps(doc) if args.json else text)


def cmd_generate(args) -> int:
    if not args.family:
        raise UsageError("generate needs --family")
    spec = _family_spec(args)
    g = spec.build()
    out = GraphDocument(g, family=spec).emit()
    if args.out:
        Path(args.out).write_text(out)
        _print(args, {"family": spec.to_dict(), "n": g.n, "m": g.m, "out": args.out}, f"wrote {args.out}: n={g.n} m={g.m}")
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    g, _ = _load(args)
    trace = percolate(g, args.seed_set, args.r)
    text = [f"seed {list(trace.seed)} at r={trace.r}"]
    text += [f"round {i + 1}: {list(w)}" for i, w in enumerate(trace.waves)]
    verdict = f"contagious in {trace.rounds} rounds" if trace.contagious else f"stalled at {len(trace.closure)} of {g.n} vertices"
    text.append(verdict)
    _print(args, trace.to_dict(), "\n".join(text))
    if args.expect_contagious and not trace.contagious:
        return EXIT_FAIL
    return EXIT_OK


def cmd_find_min(args) -> int:
    g, _ = _load(args)
    res = min_contagious(g, args.r, upper_bound=args.max_size, budget=args.budget, workers=args.workers)
    if res.m is None:
        text = f"m(G,{args.r}) > {args.max_size} ({res.seeds_examined} seed sets examined)"
    else:
        text = f"m(G,{args.r}) = {res.m}, witness {list(res.witness)} ({res.seeds_examined} seed sets examined)"
    _print(args, res.to_dict(), text)
    return EXIT_OK


def cmd_construct(args) -> int:
    g, _ = _load(args)
    try:
        if args.mode == "dense":
            if args.r is None and args.k is None:
                raise UsageError("--mode dense needs --k (or --r)")
            recipe = construct_dense_seed(g, args.r if args.r is not None else args.k)
        else:
            recipe = construct_ore_seed(g)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _print(args, recipe.to_dict(), f"{recipe.method}: seed {sorted(recipe.seed)}" + (f" (anchor {recipe.anchor})" if recipe.anchor is not None else ""))
    return EXIT_OK


def cmd_scan(args) -> int:
    g, _ = _load(args)
    stats = scan_seeds(g, args.r, args.size, budget=args.budget, workers=args.workers)
    text = (
        f"{stats.contagious_count} of {stats.total} seeds of size {stats.size} are contagious; "
        f"max rounds {stats.max_rounds} (e.g. {None if stats.argmax_seed is None else list(stats.argmax_seed)})"
    )
    _print(args, stats.to_dict(), text)
    return EXIT_OK


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--theorem {args.theorem} needs --{name.replace('_', '-')}")


def run_theorem(args) -> V.TheoremReport:
    tid = args.theorem
    threshold = args.r if args.r is not None else args.k
    if tid == "min_degree":
        _require(args, "k")
        return V.verify_min_degree(range(args.n_min, args.n_max + 1), args.k, args.trials, args.rng_seed)
    if tid == "tightness_example7":
        _require(args, "n")
        return V.verify_tightness_example7(args.n, budget=args.budget)
    if tid == "mkk":
        _require(args, "n", "k")
        return V.verify_mkk(args.n, args.k, budget=args.budget, workers=args.workers)
    if tid == "mnn":
        _require(args, "n")
        return V.verify_mnn(args.n, budget=args.budget, workers=args.workers)
    if tid == "mk2":
        _require(args, "n", "k")
        return V.verify_mk2(args.n, args.k, budget=args.budget)
    if tid == "star_counterexample":
        _require(args, "n", "k")
        return V.verify_star_counterexample(args.n, args.k, budget=args.budget)
    g, spec = _load(args)
    if tid in ("ore_theorem", "ore_lemmas"):
        source = spec if spec is not None and spec.family == "ore_groups" else g
        return V.verify_ore(source, triple_budget=args.sample_budget, rng_seed=args.rng_seed, theorem_id=tid)
    if threshold is None:
        raise UsageError(f"--theorem {tid} needs --k or --r")
    if tid == "speed":
        return V.verify_speed(g, threshold, budget=args.budget, workers=args.workers)
    if tid == "stop_lemma":
        return V.verify_stop_lemma(g, threshold, args.sample_budget, mode=args.mode, rng_seed=args.rng_seed)
    if tid == "almost_there":
        return V.verify_almost_there(g, threshold, args.sample_budget, mode=args.mode, rng_seed=args.rng_seed)
    raise UsageError(f"unknown theorem {tid}")


def cmd_verify(args) -> int:
    report = run_theorem(args)
    text = [f"{report.theorem_id} {report.params}: {report.verdict} ({report.mode}, {report.elapsed_ms:.0f} ms)"]
    if report.scope:
        text.append(f"scope: {report.scope}")
    if report.counterexample:
        text.append(f"counterexample: {report.counterexample['reason']}; seed {report.counterexample['seed']}")
    text.extend(report.notes)
    _print(args, report.to_dict(), "\n".join(text))
    return {"verified": EXIT_OK, "counterexample": EXIT_FAIL, "refused": EXIT_BUDGET}[report.verdict]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="contagious", description="Bootstrap percolation and contagious sets in dense graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph family member as an edge list")
    _add_family_flags(p, graph_input=False)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("simulate", help="run the activation process from a seed")
    _add_family_flags(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed-set", type=_int_list, required=True)
    p.add_argument("--expect-contagious", action="store_true", help="exit 1 if the seed is not contagious")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    def search_flags(q):
        q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        q.add_argument("--workers", type=int, default=1)
        q.add_argument("--json", action="store_true")

    p = sub.add_parser("find-min", help="exact minimum contagious set")
    _add_family_flags(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-size", type=int)
    search_flags(p)
    p.set_defaults(func=cmd_find_min)

    p = sub.add_parser("construct", help="build a contagious set for a dense or Ore graph")
    _add_family_flags(p)
    p.add_argument("--mode", choices=["dense", "ore"], required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", help="statistics over every seed of one size")
    _add_family_flags(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    search_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="check one theorem on concrete graphs")
    _add_family_flags(p)
    p.add_argument("--theorem", choices=V.THEOREM_IDS, required=True)
    p.add_argument("--r", type=int, help="threshold for graph-based checks (defaults to --k)")
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--sample-budget", type=int, default=10**4)
    p.add_argument("--mode", choices=["auto", "exhaustive", "sampled"], default="auto")
    search_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
