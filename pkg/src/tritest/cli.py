#!/usr/bin/env python3
"""
Command-line interface for the tritest package.

Provides entry points for:
- Edge-list validation and statistics
- The estimator, the Γ* probe, the edge sampler and the tester
- Instance generation and the brute-force oracles
- Bench suites and sampler uniformity reports
"""

import argparse
import json
import logging
import os
import sys

import pandas as pd
from dotenv import load_dotenv

from tritest.algorithms.arboricity import probe_gamma_star
from tritest.algorithms.estimator import EstimatorConfig, estimate_edges
from tritest.algorithms.sampler import default_timeout, sample_edges
from tritest.algorithms.tester import ThresholdMode, test_triangle_freeness
from tritest.bench.runner import load_suite, run_suite, write_suite_result
from tritest.bench.uniformity import uniformity_report
from tritest.errors import TritestError
from tritest.exact import degeneracy, enumerate_triangles, exact_arboricity_small, greedy_packing
from tritest.generators.controls import CONTROL_KINDS
from tritest.generators.families import Family, FamilySpec, generate, save_instance
from tritest.graph.core import GraphParams
from tritest.graph.loaders import load_graph, validate_graph_file
from tritest.graph.oracle import QueryOracle
from tritest.graph.subgraph import edges_of_h, out_degrees

LOG_LEVEL_ENV = 'TRITEST_LOG_LEVEL'

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_ERROR = 2


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def cmd_graph(args) -> int:
    """Validate an edge-list file or print its statistics."""
    if args.action == 'validate':
        problems = validate_graph_file(args.path)
        if problems:
            for problem in problems:
                print(problem, file=sys.stderr)
            return EXIT_ERROR
        print("ok")
        return EXIT_OK

    graph = load_graph(args.path)
    _print_json({
        'n': graph.n,
        'm': graph.m,
        'avg_degree': graph.avg_degree,
        'max_degree': graph.max_degree,
        'degeneracy': degeneracy(graph),
    })
    return EXIT_OK


def cmd_subgraph(args) -> int:
    graph = load_graph(args.path)
    d_out = out_degrees(graph, args.t)
    _print_json({
        't': args.t,
        'm': graph.m,
        'edges_of_h': edges_of_h(graph, args.t),
        'heavy_vertices': int((graph.degrees() > args.t).sum()),
        'max_out_degree': int(d_out.max()) if graph.n else 0,
    })
    return EXIT_OK


def cmd_estimate(args) -> int:
    """Repeat the edge-count estimator and print one CSV row per trial."""
    graph = load_graph(args.path)
    oracle = QueryOracle(graph, args.seed)
    config = EstimatorConfig(eps=args.eps, t=args.t, fail_prob=args.fail_prob, n=graph.n, m=graph.m)
    exact = edges_of_h(graph, args.t)

    print(f"r = {config.sample_size} samples per trial", file=sys.stderr)
    rows = []
    for trial in range(1, args.trials + 1):
        estimate = estimate_edges(oracle, config)
        rows.append({
            'trial': trial,
            'estimate': estimate.value,
            'edges_of_h': exact,
            'samples': estimate.samples_used,
            'degree_queries': estimate.queries_used.degree_queries,
            'neighbor_queries': estimate.queries_used.neighbor_queries,
            'total_queries': estimate.queries_used.total,
        })
    pd.DataFrame(rows).to_csv(sys.stdout, index=False, lineterminator='\n')
    return EXIT_OK


def cmd_probe(args) -> int:
    graph = load_graph(args.path)
    oracle = QueryOracle(graph, args.seed)
    result = probe_gamma_star(oracle, GraphParams.of(graph, args.eps))

    print(f"gamma_star = {result.gamma_star}")
    print(f"threshold  = {result.threshold}")
    print(f"iterations = {result.iterations}{' (exhausted)' if result.exhausted else ''}")
    print(f"\n{'i':>3} {'gamma':>8} {'t':>8} {'estimate':>12} {'samples':>10}")
    print("-" * 45)
    for i, it in enumerate(result.per_iteration, 1):
        print(f"{i:>3} {it.gamma:>8} {it.threshold:>8} {it.estimate:>12.2f} {it.samples:>10}")
    ledger = result.queries_used
    print(f"\nqueries: degree={ledger.degree_queries} neighbor={ledger.neighbor_queries} "
          f"pair={ledger.pair_queries} total={ledger.total}")
    return EXIT_OK


def cmd_sample(args) -> int:
    graph = load_graph(args.path)
    oracle = QueryOracle(graph, args.seed)
    timeout = args.timeout or default_timeout(args.t, graph.n, graph.m)
    draws = sample_edges(oracle, args.t, args.count, timeout)
    frame = pd.DataFrame([{
        'draw': i,
        'u': d.edge[0] if d.edge else None,
        'v': d.edge[1] if d.edge else None,
        'attempts': d.attempts,
        'timed_out': d.timed_out,
    } for i, d in enumerate(draws, 1)])
    frame.astype({'u': 'Int64', 'v': 'Int64'}).to_csv(sys.stdout, index=False, lineterminator='\n')
    return EXIT_OK


def cmd_test(args) -> int:
    """Run the tester; exit 0 on ACCEPT and 1 on REJECT."""
    graph = load_graph(args.path)
    oracle = QueryOracle(graph, args.seed)
    verdict = test_triangle_freeness(oracle, GraphParams.of(graph, args.eps), threshold_mode=args.threshold_mode)
    _print_json(verdict.to_dict())
    return EXIT_REJECT if verdict.rejected else EXIT_OK


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, args.n, args.m, args.gamma, args.seed, args.kind, args.d, args.k)
    instance = generate(spec)
    sidecar = save_instance(instance, args.out)
    print(f"Wrote {args.out} (n={instance.n}, m={instance.m}) and {sidecar}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    graph = load_graph(args.path)
    if args.action == 'triangles':
        triangles = enumerate_triangles(graph)
        for tri in triangles:
            print(*tri)
        print(f"{len(triangles)} triangles", file=sys.stderr)
    elif args.action == 'packing':
        packing = greedy_packing(graph)
        for tri in packing.triangles:
            print(*tri)
        print(f"{len(packing)} edge-disjoint triangles, {packing.edges_deleted} edges deleted", file=sys.stderr)
    elif args.action == 'degeneracy':
        print(degeneracy(graph))
    else:
        print(exact_arboricity_small(graph))
    return EXIT_OK


def cmd_bench(args) -> int:
    """Run a suite (exit 1 when an acceptance check fails) or a uniformity report."""
    if args.action == 'run':
        config = load_suite(args.config)
        print(f"Running suite {config.name}: {len(config.cells())} cells x {len(config.seeds)} seeds",
              file=sys.stderr)
        result = run_suite(config, threads=args.threads, timing=not args.no_timing)
        runs_path, summary = write_suite_result(result, args.out)
        print(f"Wrote {runs_path} and {summary}", file=sys.stderr)
        if result.query_slope is not None:
            print(f"log-log slope of mean queries in {config.slope_by}: {result.query_slope:.3f}", file=sys.stderr)
        for failure in result.failed_checks:
            print(f"FAILED: {failure}", file=sys.stderr)
        return EXIT_OK if result.ok else EXIT_REJECT

    graph = load_graph(args.path)
    report = uniformity_report(graph, args.t, args.samples, args.seed)
    report.table.to_csv(args.out, index=False, lineterminator='\n')
    print(f"exact max/min = {float(report.exact_ratio):.4f}, empirical max/min = {report.empirical_ratio:.4f}, "
          f"timeouts = {report.timeouts}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='tritest',
        description='Sublinear triangle-freeness testing under exact query accounting',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Generate a lower-bound instance and test it
  tritest gen lb_matchings --n 3000 --m 1536 --gamma 16 --out data/lb16.txt
  tritest test data/lb16.txt --eps 0.25 --seed 7

  # Look at the Γ* probe
  tritest probe-gamma data/lb16.txt --eps 0.25 --seed 7

  # Run a bench suite
  tritest bench run data/suites/soundness.env --out results/soundness.csv
        """
    )
    parser.add_argument('--verbose', '-v', action='count', default=0, help='More logging (-vv for debug)')
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    graph_parser = subparsers.add_parser('graph', help='Validate an edge list or print its statistics')
    graph_parser.add_argument('action', choices=['validate', 'stats'])
    graph_parser.add_argument('path', type=str, help='Edge-list file')
    graph_parser.set_defaults(handler=cmd_graph)

    sub_parser = subparsers.add_parser('subgraph', help='Inspect H(G, t)')
    sub_parser.add_argument('action', choices=['edges-of-h'])
    sub_parser.add_argument('path', type=str)
    sub_parser.add_argument('--t', type=int, required=True, help='Threshold')
    sub_parser.set_defaults(handler=cmd_subgraph)

    est_parser = subparsers.add_parser('estimate-edges', help='Estimate |E(H(G, t))|')
    est_parser.add_argument('path', type=str)
    est_parser.add_argument('--t', type=int, required=True)
    est_parser.add_argument('--eps', type=float, required=True)
    est_parser.add_argument('--fail-prob', type=float, default=0.1)
    est_parser.add_argument('--seed', type=int, default=None)
    est_parser.add_argument('--trials', type=int, default=1)
    est_parser.set_defaults(handler=cmd_estimate)

    probe_parser = subparsers.add_parser('probe-gamma', help='Run the Γ* doubling probe')
    probe_parser.add_argument('path', type=str)
    probe_parser.add_argument('--eps', type=float, required=True)
    probe_parser.add_argument('--seed', type=int, default=None)
    probe_parser.set_defaults(handler=cmd_probe)

    sample_parser = subparsers.add_parser('sample-edges', help='Draw edges of H(G, t)')
    sample_parser.add_argument('path', type=str)
    sample_parser.add_argument('--t', type=int, required=True)
    sample_parser.add_argument('--count', type=int, default=1)
    sample_parser.add_argument('--seed', type=int, default=None)
    sample_parser.add_argument('--timeout', type=int, default=None, help='Attempts per draw (default ⌈40·t/d̄⌉)')
    sample_parser.set_defaults(handler=cmd_sample)

    test_parser = subparsers.add_parser('test', help='Test triangle-freeness')
    test_parser.add_argument('path', type=str)
    test_parser.add_argument('--eps', type=float, required=True)
    test_parser.add_argument('--seed', type=int, default=None)
    test_parser.add_argument('--threshold-mode', choices=ThresholdMode.choices(),
                             default=ThresholdMode.VALIDATED.value)
    test_parser.set_defaults(handler=cmd_test)

    gen_parser = subparsers.add_parser('gen', help='Generate a certified instance')
    gen_parser.add_argument('family', choices=[f.value for f in Family])
    gen_parser.add_argument('--n', type=int, required=True)
    gen_parser.add_argument('--m', type=int, default=None)
    gen_parser.add_argument('--gamma', type=int, default=None)
    gen_parser.add_argument('--kind', choices=CONTROL_KINDS, default=None, help='Control kind')
    gen_parser.add_argument('--d', type=int, default=None, help='Planted family degree cap')
    gen_parser.add_argument('--k', type=int, default=None, help='Planted triangle count')
    gen_parser.add_argument('--seed', type=int, default=None)
    gen_parser.add_argument('--out', type=str, required=True)
    gen_parser.set_defaults(handler=cmd_gen)

    oracle_parser = subparsers.add_parser('oracle', help='Brute-force ground truth')
    oracle_parser.add_argument('action', choices=['triangles', 'packing', 'degeneracy', 'arboricity'])
    oracle_parser.add_argument('path', type=str)
    oracle_parser.set_defaults(handler=cmd_oracle)

    bench_parser = subparsers.add_parser('bench', help='Experiment harness')
    bench_sub = bench_parser.add_subparsers(dest='action', required=True)
    run_parser = bench_sub.add_parser('run', help='Run a suite file')
    run_parser.add_argument('config', type=str)
    run_parser.add_argument('--out', type=str, required=True)
    run_parser.add_argument('--threads', type=int, default=None, help='Default: TRITEST_THREADS or 1')
    run_parser.add_argument('--no-timing', action='store_true', help='Write 0.0 wall times')
    uni_parser = bench_sub.add_parser('uniformity', help='Sampler uniformity report')
    uni_parser.add_argument('path', type=str)
    uni_parser.add_argument('--t', type=int, required=True)
    uni_parser.add_argument('--samples', type=int, default=100_000)
    uni_parser.add_argument('--seed', type=int, default=None)
    uni_parser.add_argument('--out', type=str, required=True)
    bench_parser.set_defaults(handler=cmd_bench)

    return parser


def configure_logging(verbosity: int) -> None:
    load_dotenv()
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv: list[str] | None = None) -> int:
    """Main entry point that dispatches to subcommands."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    if not getattr(args, 'handler', None):
        parser.print_help()
        return EXIT_ERROR
    try:
        return args.handler(args)
    except (TritestError, ValueError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
