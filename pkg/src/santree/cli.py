"""Command-line interface: `santree run` and `santree optimize`.

Exit codes: 0 success, 2 invalid configuration, 3 workload/IO failure,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .demand import DemandError
from .harness import ConfigError, ExperimentConfig, InvariantViolation, run_experiment, run_optimizer
from .tree_core import TreeError
from .workloads import WorkloadError


def build_parser():
    parser = argparse.ArgumentParser(
        prog="santree", description="Self-adjusting k-ary search tree network simulator"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="replay a workload on a structure")
    run.add_argument("--structure", required=True)
    run.add_argument("--k", type=int, default=2)
    run.add_argument("--nodes", type=int, required=True)
    run.add_argument("--workload", required=True)
    run.add_argument("--requests", type=int, default=0)
    run.add_argument("--theta", type=float, default=0.5)
    run.add_argument("--window", type=int, default=64)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--trace-file")
    run.add_argument("--src-col", type=int, default=0)
    run.add_argument("--dst-col", type=int, default=1)
    run.add_argument("--stride", type=int, default=1000)
    run.add_argument("--output", default="experiment.csv")

    opt = sub.add_parser("optimize", help="compute an offline-optimal tree")
    opt.add_argument("--demand-file")
    opt.add_argument("--uniform-n", type=int)
    opt.add_argument("--k", type=int, default=2)
    opt.add_argument("--output", default="optimal.tree")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            cfg = ExperimentConfig(
                structure=args.structure,
                k=args.k,
                n=args.nodes,
                workload=args.workload,
                m=args.requests,
                theta=args.theta,
                window=args.window,
                seed=args.seed,
                trace_file=args.trace_file,
                src_col=args.src_col,
                dst_col=args.dst_col,
                stride=args.stride,
                output=args.output,
            )
            ledger = run_experiment(cfg)
            print(
                "served=%d routing=%d adjustment=%d avg=%.6f -> %s"
                % (
                    ledger.served,
                    ledger.routing_sum,
                    ledger.adjustment_sum,
                    ledger.cumulative_avg(),
                    cfg.output,
                )
            )
        else:
            cost = run_optimizer(
                k=args.k,
                demand_file=args.demand_file,
                uniform_n=args.uniform_n,
                output=args.output,
            )
            print("cost=%d -> %s" % (cost, args.output))
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except (WorkloadError, DemandError, OSError) as exc:
        print("workload/io error: %s" % exc, file=sys.stderr)
        return 3
    except (InvariantViolation, TreeError) as exc:
        print("invariant violation: %s" % exc, file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
