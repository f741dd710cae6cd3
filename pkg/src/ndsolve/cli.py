"""Command-line entry point: decompose, solve, cross-check, generate, bench."""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .decomposition import build_type_graph, compute_type_partition
from .generate import random_instance, random_template, sparse_template
from .graphs import Graph
from .ilp import format_problem
from .instances import MotifInstance, PathsInstance, PrecolorInstance, SolveReport
from .io import ParseError, parse_instance, serialize_instance
from .motif import MotifWitness, solve_motif
from .oracles import SizeGuardError, oracle_motif, oracle_paths, oracle_precolor
from .paths import PathsWitness, build_paths_ilp, solve_paths
from .precolor import (
    ColoringWitness,
    build_precolor_ilp,
    compute_color_categories,
    reduce_independent_types,
    solve_precolor,
)

_SOLVERS = {"motif": solve_motif, "paths": solve_paths, "precolor": solve_precolor}
_ORACLES = {"motif": oracle_motif, "paths": oracle_paths, "precolor": oracle_precolor}
_INSTANCE_TYPES = {
    "motif": MotifInstance,
    "paths": PathsInstance,
    "precolor": PrecolorInstance,
}

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _witness_json(witness):
    if isinstance(witness, MotifWitness):
        return [v + 1 for v in witness.vertices]
    if isinstance(witness, PathsWitness):
        return [[v + 1 for v in path] for path in witness.paths]
    if isinstance(witness, ColoringWitness):
        return {str(v + 1): c for v, c in enumerate(witness.colors)}
    if isinstance(witness, tuple):  # bare oracle witnesses
        if witness and isinstance(witness[0], tuple):
            return [[v + 1 for v in path] for path in witness]
        return [v + 1 for v in witness]
    return witness


def _emit_report(problem: str, report: SolveReport, args, check=None) -> None:
    if args.json:
        payload = {
            "problem": problem,
            "answer": "yes" if report.answer else "no",
            "stats": {
                "nd": report.nd,
                "elapsed_ms": round(report.elapsed_ms, 3),
            },
        }
        if report.ilp_vars is not None:
            payload["stats"]["ilp_vars"] = report.ilp_vars
        if args.witness and report.witness is not None:
            payload["witness"] = _witness_json(report.witness)
        if check is not None:
            payload["check"] = check
        print(json.dumps(payload))
        return
    print(f"answer: {'yes' if report.answer else 'no'}")
    print(f"nd: {report.nd}")
    if report.ilp_vars is not None:
        print(f"ilp_vars: {report.ilp_vars}")
    print(f"elapsed_ms: {report.elapsed_ms:.3f}")
    if args.witness and report.witness is not None:
        print(f"witness: {json.dumps(_witness_json(report.witness))}")
    if check is not None:
        print(f"check: oracle={check['oracle_answer']} agree={check['agree']}")


def _load(args, expected: type | None):
    text = _read_input(args.input)
    instance = parse_instance(text)
    if expected is not None and not isinstance(instance, expected):
        raise ParseError(
            f"input is a {type(instance).__name__}, expected {expected.__name__}"
        )
    return instance


def _cmd_nd(args) -> int:
    instance = _load(args, None)
    graph = instance if isinstance(instance, Graph) else instance.graph
    partition = compute_type_partition(graph)
    type_graph = build_type_graph(graph, partition)
    if args.json:
        print(
            json.dumps(
                {
                    "problem": "nd",
                    "k": partition.num_types,
                    "classes": [
                        {
                            "id": t,
                            "size": len(members),
                            "clique": partition.clique_flag[t],
                            "members": [v + 1 for v in members],
                        }
                        for t, members in enumerate(partition.classes)
                    ],
                    "h_edges": [[a, b] for a, b in type_graph.edges()],
                }
            )
        )
    else:
        print(f"k={partition.num_types}")
        for t, members in enumerate(partition.classes):
            kind = "clique" if partition.clique_flag[t] else "independent"
            ids = " ".join(str(v + 1) for v in members)
            print(f"type {t}: size={len(members)} {kind} members: {ids}")
        edges = " ".join(f"{a}-{b}" for a, b in type_graph.edges())
        print(f"H edges: {edges if edges else '(none)'}")
    return EXIT_OK


def _dump_ilp(problem_name: str, instance) -> None:
    partition = compute_type_partition(instance.graph)
    type_graph = build_type_graph(instance.graph, partition)
    if problem_name == "paths":
        ilp, _ = build_paths_ilp(instance, partition, type_graph)
    else:
        reduced = reduce_independent_types(instance, partition)
        categories = compute_color_categories(reduced)
        ilp, _ = build_precolor_ilp(reduced, categories, type_graph)
    sys.stderr.write(format_problem(ilp))


def _cmd_solve(problem_name: str, args) -> int:
    if problem_name == "paths":
        # a bare graph file is a paths instance with no terminal pairs
        instance = _load(args, None)
        if isinstance(instance, Graph):
            instance = PathsInstance(instance, ())
        elif not isinstance(instance, PathsInstance):
            raise ParseError(
                f"input is a {type(instance).__name__}, expected PathsInstance"
            )
    else:
        instance = _load(args, _INSTANCE_TYPES[problem_name])
    if getattr(args, "dump_ilp", False):
        _dump_ilp(problem_name, instance)
    report = _SOLVERS[problem_name](instance)
    check = None
    if args.check:
        answer, _ = _ORACLES[problem_name](instance)
        check = {
            "oracle_answer": "yes" if answer else "no",
            "agree": answer == report.answer,
        }
    _emit_report(problem_name, report, args, check)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    problem_name = args.problem
    instance = _load(args, _INSTANCE_TYPES[problem_name])
    start = time.perf_counter()
    answer, raw = _ORACLES[problem_name](instance)
    elapsed = (time.perf_counter() - start) * 1000.0
    partition = compute_type_partition(instance.graph)
    witness = None
    if raw is not None:
        if problem_name == "motif":
            witness = MotifWitness(tuple(raw))
        elif problem_name == "paths":
            witness = PathsWitness(tuple(raw))
        else:
            witness = ColoringWitness(tuple(raw))
    report = SolveReport(
        answer=answer, nd=partition.num_types, elapsed_ms=elapsed, witness=witness
    )
    _emit_report(f"oracle-{problem_name}", report, args)
    return EXIT_OK


def _cmd_gen(args) -> int:
    template = random_template(
        args.k, args.n, args.seed, edge_prob=args.edge_prob, clique_prob=args.clique_prob
    )
    if args.problem == "graph":
        from .generate import generate_from_template

        instance = generate_from_template(template, args.seed)
    else:
        instance = random_instance(
            args.problem,
            template,
            args.seed,
            colors=args.colors,
            motif_size=args.motif_size,
            num_pairs=args.pairs,
            num_colors=args.num_colors,
            precolor_fraction=args.precolor_fraction,
        )
    text = serialize_instance(instance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def bench_cells(
    problem: str,
    ks: list[int],
    ns: list[int],
    seeds: int,
    base_seed: int = 0,
    threads: int | None = None,
    template_kind: str = "auto",
    **params,
) -> list[dict]:
    """Run the benchmark grid; one row per (k, n) cell.

    Instance generation is deterministic per seed.  With the default
    "auto" template, cells of 1000+ vertices use the sparse template so a
    fully-joined pair of huge classes cannot blow the edge count up
    quadratically.  Cells run in parallel up to ``threads`` workers
    (default: ND_SOLVE_THREADS or the machine parallelism).
    """
    if threads is None:
        try:
            threads = int(os.environ.get("ND_SOLVE_THREADS", ""))
        except ValueError:
            threads = 0
        threads = threads or os.cpu_count() or 1

    def make_template(k: int, n: int, seed: int):
        sparse = template_kind == "sparse" or (template_kind == "auto" and n >= 1000)
        return sparse_template(k, n, seed) if sparse else random_template(k, n, seed)

    def run_cell(cell: tuple[int, int]) -> dict:
        k, n = cell
        times: list[float] = []
        ilp_vars = None
        for i in range(seeds):
            seed = base_seed + i
            template = make_template(k, n, seed)
            instance = random_instance(problem, template, seed, **params)
            report = _SOLVERS[problem](instance)
            times.append(report.elapsed_ms)
            if report.ilp_vars is not None:
                ilp_vars = report.ilp_vars
        return {
            "problem": problem,
            "k": k,
            "n": n,
            "seeds": seeds,
            "median_ms": round(statistics.median(times), 3) if times else None,
            "max_ms": round(max(times), 3) if times else None,
            "ilp_vars": ilp_vars,
        }

    cells = [(k, n) for k in ks for n in ns]
    if not cells:
        return []
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        return list(pool.map(run_cell, cells))


def _cmd_bench(args) -> int:
    rows = bench_cells(
        args.problem,
        args.k,
        args.n,
        args.seeds,
        base_seed=args.seed,
        template_kind=args.template,
        colors=args.colors,
        motif_size=args.motif_size,
        num_pairs=args.pairs,
        num_colors=args.num_colors,
        precolor_fraction=args.precolor_fraction,
    )
    if args.json:
        print(json.dumps(rows))
        return EXIT_OK
    print("problem\tk\tn\tseeds\tmedian_ms\tmax_ms\tilp_vars")
    for row in rows:
        print(
            f"{row['problem']}\t{row['k']}\t{row['n']}\t{row['seeds']}\t"
            f"{row['median_ms']}\t{row['max_ms']}\t{row['ilp_vars']}"
        )
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _add_io_args(sub, check: bool = True, dump_ilp: bool = False) -> None:
    sub.add_argument("--input", default="-", help="instance file, '-' for stdin")
    sub.add_argument("--json", action="store_true", help="emit a JSON report")
    sub.add_argument("--witness", action="store_true", help="include the witness")
    if check:
        sub.add_argument(
            "--check", action="store_true", help="cross-check against the brute-force decider"
        )
    if dump_ilp:
        sub.add_argument(
            "--dump-ilp", action="store_true", help="write the integer system to stderr"
        )


def _add_gen_args(sub) -> None:
    sub.add_argument("--k", type=int, default=3, help="number of type classes")
    sub.add_argument("--n", type=int, default=12, help="number of vertices")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--edge-prob", type=float, default=0.5)
    sub.add_argument("--clique-prob", type=float, default=0.5)
    sub.add_argument("--colors", type=int, default=4, help="motif palette size")
    sub.add_argument("--motif-size", type=int, default=None)
    sub.add_argument("--pairs", type=int, default=None, help="terminal pair count")
    sub.add_argument("--num-colors", type=int, default=4, help="color budget")
    sub.add_argument("--precolor-fraction", type=float, default=0.35)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ndsolve",
        description="Neighborhood-diversity decomposition and exact solvers",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    nd = subs.add_parser("nd", help="print the type decomposition")
    nd.add_argument("--input", default="-")
    nd.add_argument("--json", action="store_true")

    for name in ("motif", "paths", "precolor"):
        sub = subs.add_parser(name, help=f"solve a {name} instance")
        _add_io_args(sub, check=True, dump_ilp=name in ("paths", "precolor"))

    oracle = subs.add_parser("oracle", help="run a brute-force decider")
    oracle.add_argument("problem", choices=("motif", "paths", "precolor"))
    _add_io_args(oracle, check=False)

    gen = subs.add_parser("gen", help="generate a random instance")
    gen.add_argument("problem", choices=("graph", "motif", "paths", "precolor"))
    _add_gen_args(gen)
    gen.add_argument("--output", default=None, help="write to a file instead of stdout")

    bench = subs.add_parser("bench", help="timing grid over (k, n) cells")
    bench.add_argument("--problem", required=True, choices=("motif", "paths", "precolor"))
    bench.add_argument("--k", type=_int_list, default=[2, 4])
    bench.add_argument("--n", type=_int_list, default=[100])
    bench.add_argument("--seeds", type=int, default=3)
    bench.add_argument("--seed", type=int, default=0, help="base seed")
    bench.add_argument(
        "--template",
        choices=("auto", "random", "sparse"),
        default="auto",
        help="template family; auto switches to sparse at 1000+ vertices",
    )
    bench.add_argument("--json", action="store_true")
    bench.add_argument("--colors", type=int, default=4)
    bench.add_argument("--motif-size", type=int, default=None)
    bench.add_argument("--pairs", type=int, default=None)
    bench.add_argument("--num-colors", type=int, default=4)
    bench.add_argument("--precolor-fraction", type=float, default=0.35)
    return parser


def run(argv: list[str]) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "nd":
            return _cmd_nd(args)
        if args.command in _SOLVERS:
            return _cmd_solve(args.command, args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "bench":
            return _cmd_bench(args)
        parser.error(f"unknown command {args.command!r}")
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
