"""Experiment runner: composes workloads, structures and the cost ledger."""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field

from . import offline_opt
from .demand import DemandMatrix
from .online_san import CentroidSplayNet, SplayNet, StaticStrategy
from .tree_core import balanced_tree, edge_diff
from .workloads import TemporalConfig, Trace, gen_finite_uniform, gen_temporal, gen_uniform, load_trace

STRUCTURES = ("static-balanced", "static-optimal", "splaynet", "centroid-splaynet")
WORKLOADS = ("uniform", "finite-uniform", "temporal", "trace")

CSV_HEADER = "request_index,routing_cost_sum,adjustment_cost_sum,cumulative_avg"


class ConfigError(Exception):
    """Invalid experiment configuration (CLI exit code 2)."""


class InvariantViolation(Exception):
    """Internal cross-check failed (CLI exit code 4)."""


@dataclass
class ExperimentConfig:
    structure: str
    k: int
    n: int
    workload: str
    m: int = 0
    theta: float = 0.5
    window: int = 64
    seed: int = 0
    trace_file: str = None
    src_col: int = 0
    dst_col: int = 1
    delimiter: str = None
    stride: int = 1000
    output: str = "experiment.csv"

    def check(self):
        if self.structure not in STRUCTURES:
            raise ConfigError("unknown structure %r" % (self.structure,))
        if self.workload not in WORKLOADS:
            raise ConfigError("unknown workload %r" % (self.workload,))
        if self.k < 2:
            raise ConfigError("k must be >= 2")
        if self.n < 2:
            raise ConfigError("n must be >= 2")
        if self.stride < 1:
            raise ConfigError("stride must be >= 1")
        if self.workload in ("uniform", "temporal") and self.m < 1:
            raise ConfigError("workload %r needs --requests >= 1" % (self.workload,))
        if self.workload == "trace" and not self.trace_file:
            raise ConfigError("workload 'trace' needs --trace-file")


@dataclass
class CostLedger:
    routing_sum: int = 0
    adjustment_sum: int = 0
    served: int = 0
    rows: list = field(default_factory=list)

    def record(self, outcome):
        self.served += 1
        self.routing_sum += outcome.routing_cost
        self.adjustment_sum += outcome.adjustment_cost

    def cumulative_avg(self):
        if self.served == 0:
            return 0.0
        return (self.routing_sum + self.adjustment_sum) / self.served

    def snapshot(self):
        self.rows.append(
            (self.served, self.routing_sum, self.adjustment_sum, self.cumulative_avg())
        )


def build_workload(cfg):
    if cfg.workload == "uniform":
        return gen_uniform(cfg.n, cfg.m, cfg.seed)
    if cfg.workload == "finite-uniform":
        return gen_finite_uniform(cfg.n)
    if cfg.workload == "temporal":
        return gen_temporal(
            cfg.n, cfg.m, TemporalConfig(cfg.theta, cfg.window, cfg.seed)
        )
    trace = load_trace(cfg.trace_file, cfg.n, cfg.src_col, cfg.dst_col, cfg.delimiter)
    if trace.n != cfg.n:
        # Fewer distinct ids than requested: run on what the trace offers.
        cfg.n = trace.n
    return trace


def build_strategy(cfg, trace):
    if cfg.structure == "static-balanced":
        return StaticStrategy(balanced_tree(cfg.n, cfg.k))
    if cfg.structure == "static-optimal":
        demand = DemandMatrix.from_trace(trace)
        return StaticStrategy(offline_opt.optimal_tree_generic(demand, cfg.k).tree)
    if cfg.structure == "splaynet":
        return SplayNet(cfg.n, cfg.k)
    return CentroidSplayNet(cfg.n, cfg.k)


def verify_enabled():
    return os.environ.get("SANTREE_VERIFY", "") == "1"


def replay(strategy, trace, stride=1000, verify=None):
    """Serve the whole trace, sampling ledger rows every `stride` requests."""
    if verify is None:
        verify = verify_enabled()
    ledger = CostLedger()
    for u, v in trace.requests:
        if verify:
            before = strategy.tree.edges()
        outcome = strategy.serve(u, v)
        if verify:
            rederived = edge_diff(before, strategy.tree.edges())
            if rederived != outcome.adjustment_cost:
                raise InvariantViolation(
                    "adjustment cost %d != edge-diff re-derivation %d at request %d"
                    % (outcome.adjustment_cost, rederived, ledger.served + 1)
                )
            if not strategy.tree.validate():
                raise InvariantViolation(
                    "topology invalid after request %d" % (ledger.served + 1)
                )
        ledger.record(outcome)
        if ledger.served % stride == 0:
            ledger.snapshot()
    if ledger.served % stride != 0:
        ledger.snapshot()
    return ledger


def write_csv(ledger, path):
    """Atomic CSV write: request_index, sums, cumulative average."""
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(os.path.abspath(path)) or ".")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(CSV_HEADER + "\n")
            for idx, rsum, asum, avg in ledger.rows:
                f.write("%d,%d,%d,%.6f\n" % (idx, rsum, asum, avg))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_experiment(cfg):
    cfg.check()
    trace = build_workload(cfg)
    strategy = build_strategy(cfg, trace)
    ledger = replay(strategy, trace, stride=cfg.stride)
    write_csv(ledger, cfg.output)
    return ledger


def run_optimizer(k, demand_file=None, uniform_n=None, output="optimal.tree"):
    """Write the offline-optimal tree and return its cost."""
    if (demand_file is None) == (uniform_n is None):
        raise ConfigError("give exactly one of demand file / uniform n")
    if uniform_n is not None:
        result = offline_opt.optimal_tree_uniform(uniform_n, k)
    else:
        result = offline_opt.optimal_tree_generic(DemandMatrix.load(demand_file), k)
    result.tree.dump(output)
    return result.cost
