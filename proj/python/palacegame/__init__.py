"""Exact solver and verifier for the palace search game.

A hidden evader moves along an edge of a finite connected graph every night;
the searcher probes one vertex at noon each day. This package decides which
graphs the searcher can win, synthesizes provably optimal probe schedules,
and computes exact minimum capture times by possibility-set search.
"""

from ._core import (
    Palace,
    PalaceError,
    bipartition,
    canonical_form,
    cycle_evader,
    cycle_palace,
    enumerate_optimal,
    forbidden_spider,
    input_digest,
    is_solvable,
    linear_search,
    linear_strategy,
    longest_path,
    lower_bound,
    min_days_exact,
    optimal_length,
    parse_palace,
    path_palace,
    random_tree,
    reduce,
    removable_leaves,
    spider_evader,
    spider_palace,
    star_evader,
    step,
    verify_strategy,
    vertex_partition,
)

__all__ = [
    "Palace",
    "PalaceError",
    "bipartition",
    "canonical_form",
    "cycle_evader",
    "cycle_palace",
    "enumerate_optimal",
    "forbidden_spider",
    "input_digest",
    "is_solvable",
    "linear_search",
    "linear_strategy",
    "longest_path",
    "lower_bound",
    "min_days_exact",
    "optimal_length",
    "parse_palace",
    "path_palace",
    "random_tree",
    "reduce",
    "removable_leaves",
    "spider_evader",
    "spider_palace",
    "star_evader",
    "step",
    "verify_strategy",
    "vertex_partition",
]
