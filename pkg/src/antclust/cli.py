"""Command-line interface: generate topologies, run solvers, verify and benchmark.

Human-readable summaries go to stdout; machine-readable artifacts are only
written to paths given via --out. Exit codes: 0 success, 1 verification
failure, 2 usage/input error, 3 capability refusal.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import aco, baselines, clustering, experiments, geomgraph, oracle
from .errors import AntclustError, NodeLimitError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

ALGORITHM_CHOICES = experiments.ALGORITHMS


def _add_aco_flags(p: argparse.ArgumentParser) -> None:
    d = aco.AcoParams()
    p.add_argument("--alpha", type=float, default=d.alpha, help="weight multiplier (default %(default)s)")
    p.add_argument("--beta", type=float, default=d.beta, help="pheromone multiplier (default %(default)s)")
    p.add_argument("--ants", type=int, default=d.ants, help="constructions per iteration (default %(default)s)")
    p.add_argument("--evaporation-rate", type=float, default=d.evaporation_rate,
                   help="pheromone decay per iteration, in [0,1) (default %(default)s)")
    p.add_argument("--deposit-quantum", type=float, default=d.deposit_quantum,
                   help="pheromone deposit scale (default %(default)s)")
    p.add_argument("--greedy", action="store_true", help="pick the argmax instead of roulette sampling")
    p.add_argument("--dynamic-visibility", action="store_true",
                   help="score candidates by newly covered nodes instead of static degree weight")
    p.add_argument("--neighbor-restricted", action="store_true",
                   help="prefer candidates adjacent to the previous head")
    p.add_argument("--final-greedy", action="store_true",
                   help="answer with one last deterministic construction under the final pheromone")
    p.add_argument("--iterations", type=int, default=None,
                   help="iteration count (default: the node count)")
    p.add_argument("--seed", type=int, default=d.seed, help="solver RNG seed (default %(default)s)")


def _add_wca_flags(p: argparse.ArgumentParser) -> None:
    d = baselines.WcaParams()
    p.add_argument("--w1", type=float, default=d.w1, help="degree-deviation weight (default %(default)s)")
    p.add_argument("--w2", type=float, default=d.w2, help="neighbor-distance weight (default %(default)s)")
    p.add_argument("--w3", type=float, default=d.w3, help="mobility weight (default %(default)s)")
    p.add_argument("--w4", type=float, default=d.w4, help="head-tenure weight (default %(default)s)")
    p.add_argument("--ideal-degree", type=float, default=d.ideal_degree,
                   help="target head degree (default %(default)s)")


def _aco_params(args: argparse.Namespace) -> aco.AcoParams:
    return aco.AcoParams(
        alpha=args.alpha,
        beta=args.beta,
        ants=args.ants,
        evaporation_rate=args.evaporation_rate,
        deposit_quantum=args.deposit_quantum,
        greedy=args.greedy,
        dynamic_visibility=args.dynamic_visibility,
        neighbor_restricted=args.neighbor_restricted,
        final_greedy=args.final_greedy,
        iterations=args.iterations,
        seed=args.seed,
    )


def _wca_params(args: argparse.Namespace) -> baselines.WcaParams:
    return baselines.WcaParams(w1=args.w1, w2=args.w2, w3=args.w3, w4=args.w4, ideal_degree=args.ideal_degree)


def _solve_named(t: geomgraph.Topology, name: str, args: argparse.Namespace) -> clustering.Clustering:
    if name == "aco":
        heads = aco.solve(t, _aco_params(args)).heads
        return clustering.assign_members(t, heads)
    if name == "lic":
        return baselines.lowest_id(t)
    if name == "hd":
        return baselines.highest_degree(t)
    if name == "kconid":
        return baselines.kconid(t, args.k)
    if name == "wca":
        return baselines.wca(t, _wca_params(args))
    if name == "greedy":
        return clustering.assign_members(t, oracle.greedy_min_dominating_set(t))
    if name == "exact":
        return clustering.assign_members(t, oracle.exact_min_dominating_set(t, args.node_limit).witness)
    raise AntclustError(f"unknown algorithm {name!r}")


def _cmd_generate(args: argparse.Namespace) -> int:
    config = geomgraph.TopologyConfig(n=args.nodes, area_side=args.area, range=args.range, seed=args.seed)
    t = geomgraph.generate(config)
    geomgraph.save(t, args.out)
    print(f"nodes={t.n} edges={t.edge_count()} mean_degree={t.mean_degree():.2f}")
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    t = geomgraph.load(args.graph)
    t0 = time.perf_counter()
    solution = _solve_named(t, args.algorithm, args)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    print(f"algorithm={args.algorithm} heads={solution.head_count} wall_time_ms={elapsed_ms:.3f}")
    if args.out:
        clustering.save_clustering(solution, args.out)
        print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    t = geomgraph.load(args.graph)
    c = clustering.load_clustering(args.clustering)
    problems = clustering.validate_clustering(t, c)
    if problems:
        for p in problems:
            print(f"VIOLATION: {p}")
        print(f"invalid: {len(problems)} violation(s)")
        return EXIT_VERIFY_FAILED
    print(f"valid: {c.head_count} head(s) dominate all {t.n} node(s)")
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    t = geomgraph.load(args.graph)
    names = [s.strip() for s in args.algorithms.split(",") if s.strip()]
    for name in names:
        if name not in ALGORITHM_CHOICES:
            raise AntclustError(f"unknown algorithm {name!r}; known: {', '.join(ALGORITHM_CHOICES)}")
    print(f"{'algorithm':<10} {'heads':>6} {'wall_ms':>10}")
    for name in names:
        t0 = time.perf_counter()
        solution = _solve_named(t, name, args)
        elapsed_ms = (time.perf_counter() - t0) * 1000.0
        print(f"{name:<10} {solution.head_count:>6} {elapsed_ms:>10.3f}")
    return EXIT_OK


def _cmd_experiment(args: argparse.Namespace) -> int:
    spec = experiments.load_spec(args.spec) if args.spec else experiments.ExperimentSpec()
    result = experiments.run(spec)
    os.makedirs(args.out, exist_ok=True)
    rows_path = os.path.join(args.out, "rows.csv")
    agg_path = os.path.join(args.out, "aggregates.csv")
    json_path = os.path.join(args.out, "results.json")
    experiments.export_rows_csv(result, rows_path)
    experiments.export_aggregates_csv(result, agg_path)
    experiments.export_json(result, json_path)

    failed = [r for r in result.rows if not r.ok]
    aggs = result.aggregates()
    for algorithm in sorted({a.algorithm for a in aggs}):
        print(f"{algorithm}: mean head count by (nodes x range)")
        ranges = sorted({a.range for a in aggs if a.algorithm == algorithm})
        header = "  nodes " + "".join(f"{f'R={rg:g}':>10}" for rg in ranges)
        print(header)
        for n in sorted({a.n for a in aggs if a.algorithm == algorithm}):
            cells = []
            for rg in ranges:
                try:
                    cells.append(f"{result.mean_heads(algorithm, n, rg):>10.2f}")
                except KeyError:
                    cells.append(f"{'-':>10}")
            print(f"  {n:>5} " + "".join(cells))
    if failed:
        print(f"{len(failed)} row(s) failed; see {json_path}")
    print(f"wrote {rows_path}, {agg_path}, {json_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antclust",
                                     description="Cluster-head election toolkit for ad hoc network topologies.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a random topology and write it as JSON")
    p.add_argument("--nodes", type=int, required=True, help="number of nodes")
    p.add_argument("--area", type=float, default=1000.0, help="side of the square area (default %(default)s)")
    p.add_argument("--range", type=float, default=200.0, help="transmission range (default %(default)s)")
    p.add_argument("--seed", type=int, default=0, help="placement RNG seed (default %(default)s)")
    p.add_argument("--out", required=True, help="output graph JSON path")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("solve", help="run one solver on a graph file")
    p.add_argument("--graph", required=True, help="input graph JSON path")
    p.add_argument("--algorithm", required=True, choices=ALGORITHM_CHOICES)
    p.add_argument("--out", default=None, help="output clustering JSON path")
    p.add_argument("--k", type=int, default=1, help="hop radius for kconid (default %(default)s)")
    p.add_argument("--node-limit", type=int, default=oracle.DEFAULT_NODE_LIMIT,
                   help="refusal threshold for exact (default %(default)s)")
    _add_aco_flags(p)
    _add_wca_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a clustering file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--clustering", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", help="run several solvers on one graph and print a table")
    p.add_argument("--graph", required=True)
    p.add_argument("--algorithms", default="aco,lic,hd,kconid,wca,greedy",
                   help="comma-separated solver names (default %(default)s)")
    p.add_argument("--k", type=int, default=1, help="hop radius for kconid (default %(default)s)")
    p.add_argument("--node-limit", type=int, default=oracle.DEFAULT_NODE_LIMIT)
    _add_aco_flags(p)
    _add_wca_flags(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("experiment", help="run a benchmark sweep and write row + aggregate files")
    p.add_argument("--spec", default=None, help="experiment spec JSON (default: built-in benchmark grid)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NodeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (AntclustError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
