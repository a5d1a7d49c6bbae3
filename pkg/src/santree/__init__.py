"""Self-adjusting k-ary search tree networks: offline optimizers, online
strategies and a workload-replay harness."""

from .demand import DemandMatrix, uniform_demand, uniform_outflow, total_distance
from .offline_opt import (
    OptResult,
    brute_force_optimal,
    enumerate_trees,
    optimal_tree_generic,
    optimal_tree_uniform,
)
from .online_san import CentroidSplayNet, ServeOutcome, SplayNet, StaticStrategy
from .quasi_opt import build_quasi_optimal, is_weakly_complete, pack_leaves_left, push_up
from .tree_core import KaryTree, balanced_tree, edge_diff
from .workloads import TemporalConfig, Trace, gen_finite_uniform, gen_temporal, gen_uniform, load_trace

__all__ = [
    "DemandMatrix",
    "KaryTree",
    "OptResult",
    "ServeOutcome",
    "SplayNet",
    "CentroidSplayNet",
    "StaticStrategy",
    "TemporalConfig",
    "Trace",
    "balanced_tree",
    "brute_force_optimal",
    "build_quasi_optimal",
    "edge_diff",
    "enumerate_trees",
    "gen_finite_uniform",
    "gen_temporal",
    "gen_uniform",
    "is_weakly_complete",
    "load_trace",
    "optimal_tree_generic",
    "optimal_tree_uniform",
    "pack_leaves_left",
    "push_up",
    "total_distance",
    "uniform_demand",
    "uniform_outflow",
]
