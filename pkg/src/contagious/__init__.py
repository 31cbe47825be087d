"""Bootstrap percolation and contagious sets in dense graphs."""

from contagious.constructive import SeedRecipe, construct_dense_seed, construct_ore_seed
from contagious.errors import BudgetExceeded, InvariantViolation, UsageError
from contagious.generators import (
    FamilySpec,
    gen_circulant,
    gen_circulant_seed,
    gen_clique_minus_matching,
    gen_dc,
    gen_extremal_mk2,
    gen_extremal_mkk,
    gen_ore_groups,
    gen_random_min_degree,
    gen_random_ore,
    gen_speed8,
    gen_star_counterexample,
)
from contagious.graph import (
    DCPartition,
    Graph,
    GraphError,
    degree,
    dense_degree_bound,
    detect_dc,
    is_dirac,
    is_ore,
    min_degree,
    non_edges,
)
from contagious.oracle import MinContagiousResult, SeedScanStats, enumerate_graphs, min_contagious, scan_seeds
from contagious.percolation import (
    PercolationTrace,
    closure,
    is_contagious,
    percolate,
    percolation_step,
    percolation_time,
)

__version__ = "0.1.0"
