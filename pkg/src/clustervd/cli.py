"""Command line entry point: ``clustervd {solve,gen,bench,verify}``.

Exit status is 0 on success, 2 when a solution is infeasible or fails
verification, and 1 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .approx import (
    MODES,
    cluster_vd_apx,
    hitting_p3_subgraphs_apx,
    naive_3apx,
    verify_feasible,
    verify_minimal,
    verify_p3_subgraph_feasible,
    verify_p3_subgraph_minimal,
)
from .oracle import BudgetExceeded, OracleBudget, exact_cluster_vd
from .weighting import WeightingInvariantError
from .workbench.bench import ALGORITHMS, run_bench, write_report
from .workbench.generators import default_seed, generate, parse_model_spec
from .workbench.instance_io import read_instance, serialize_instance, write_instance
from .workbench.solution import load_solution_vertices, solution_to_dict

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _solve(args) -> int:
    wg = read_instance(args.input)
    g = wg.graph
    trace = None
    problem = "cluster-vd"
    if args.algo == "lr94":
        x, trace = cluster_vd_apx(wg, mode=args.mode)
        xs = x.vertices
    elif args.algo == "naive3":
        xs = naive_3apx(wg).vertices
    elif args.algo == "p3sub":
        xs = hitting_p3_subgraphs_apx(wg).vertices
        problem = "p3-subgraph"
    else:
        xs = exact_cluster_vd(wg, OracleBudget(max_vertices=args.oracle_max_n))[0]

    if problem == "p3-subgraph":
        feasible = verify_p3_subgraph_feasible(g, xs)
        minimal = feasible and verify_p3_subgraph_minimal(g, xs)
    else:
        feasible = verify_feasible(g, xs)
        minimal = feasible and verify_minimal(g, xs)
    cost = wg.cost_of(xs)
    doc = solution_to_dict(xs, cost, feasible, minimal, trace if args.trace else None,
                           algorithm=args.algo, problem=problem)
    if args.output == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"algorithm: {args.algo}")
        print(f"cost: {doc['cost']}")
        print(f"vertices: {' '.join(map(str, doc['vertices']))}")
        print(f"feasible: {feasible}  minimal: {minimal}")
        if args.trace:
            for i, step in enumerate(doc["trace"]):
                print(f"  {i:4d} {json.dumps(step)}")
    return EXIT_OK if feasible else EXIT_FAILED


def _gen(args) -> int:
    model, params = parse_model_spec(args.model)
    seed = default_seed() if args.seed is None else args.seed
    if args.count == 1:
        wg = generate(model, params, seed)
        comment = f"model {args.model} seed {seed}"
        if args.out:
            write_instance(args.out, wg, comment)
        else:
            sys.stdout.write(serialize_instance(wg, comment))
        return EXIT_OK
    if not args.out:
        raise UsageError("--count above 1 needs --out DIR")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    width = len(str(args.count - 1))
    for i in range(args.count):
        wg = generate(model, params, seed + i)
        write_instance(out / f"{model}-{i:0{width}d}.cvd", wg, f"model {args.model} seed {seed + i}")
    return EXIT_OK


def _bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; expected one of {', '.join(ALGORITHMS)}")
    report = run_bench(args.corpus, algos, oracle_max_n=args.oracle_max_n, jobs=args.jobs)
    paths = write_report(report, args.report, figures=not args.no_figures)
    bad = report.violations()
    errors = [r for r in report.rows if r.status != "ok"]
    print(f"{len(report.rows)} rows, {len(errors)} not ok, {len(bad)} ratio violations")
    for name, p in sorted(paths.items()):
        print(f"  {name}: {p}")
    return EXIT_FAILED if bad or any(r.status == "infeasible" for r in errors) else EXIT_OK


def _verify(args) -> int:
    wg = read_instance(args.input)
    xs = load_solution_vertices(Path(args.solution).read_text())
    try:
        feasible = verify_feasible(wg.graph, xs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    minimal = feasible and verify_minimal(wg.graph, xs)
    print(json.dumps({"feasible": feasible, "minimal": minimal, "cost": str(wg.cost_of(set(xs)))}))
    if not feasible or (args.require_minimal and not minimal):
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clustervd", description="Cluster vertex deletion approximation toolkit")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve one instance file")
    s.add_argument("--algo", choices=ALGORITHMS, default="lr94")
    s.add_argument("--input", required=True)
    s.add_argument("--output", choices=("json", "text"), default="json")
    s.add_argument("--trace", action="store_true", help="include the local-ratio trace")
    s.add_argument("--mode", choices=MODES, default="general", help="rule set for lr94")
    s.add_argument("--oracle-max-n", type=int, default=40, help="vertex limit for --algo exact")
    s.set_defaults(func=_solve)

    g = sub.add_parser("gen", help="generate instances")
    g.add_argument("--model", required=True, help='e.g. "gnp:n=10,p=0.3,max_weight=10"')
    g.add_argument("--seed", type=int, default=None, help="defaults to $CVD_SEED or 0")
    g.add_argument("--out", help="file, or directory when --count > 1; stdout if omitted")
    g.add_argument("--count", type=int, default=1)
    g.set_defaults(func=_gen)

    b = sub.add_parser("bench", help="run algorithms over a corpus directory")
    b.add_argument("--corpus", required=True)
    b.add_argument("--algos", default="lr94,naive3")
    b.add_argument("--oracle-max-n", type=int, default=12, help="0 disables the exact oracle")
    b.add_argument("--report", required=True, help="output directory for CSV, JSON and figures")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--no-figures", action="store_true")
    b.set_defaults(func=_bench)

    v = sub.add_parser("verify", help="check a solution against an instance")
    v.add_argument("--input", required=True)
    v.add_argument("--solution", required=True, help="solution JSON file")
    v.add_argument("--require-minimal", action="store_true")
    v.set_defaults(func=_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, OSError, ValueError) as exc:
        print(f"clustervd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WeightingInvariantError as exc:
        print(f"clustervd: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
