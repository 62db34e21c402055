import argparse
import json
import logging
import os
import sys

import pydantic

from weak_closure import (
    biclique,
    cliques,
    closure,
    datasets,
    dense,
    domination,
    graph,
    kernel,
    models,
    oracle,
)
from weak_closure.errors import ParameterError, ResourceLimitError, WeakClosureError


logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


EXIT_YES = 0
EXIT_FAILED_FILES = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_NO = 10

ENUM_FAMILIES = ("cliques", "splex", "defective", "bicliques")

# CLI problem name -> (flags it needs, oracle problem id)
PROBLEMS = {
    "is": (("k",), "independent-set"),
    "subgraph": (("k", "class_name"), "monotone-subgraph"),
    "sparsest": (("k", "t"), "sparsest"),
    "splex": (("s", "k"), "splex"),
    "defective": (("s", "k"), "defective-clique"),
    "defective-cover": (("s", "k"), "defective-clique"),
    "ni-biclique": (("k1", "k2"), "non-induced-biclique"),
    "ni-maxedge": (("k",), "non-induced-max-edge"),
    "ind-kk": (("k",), "induced-kk-biclique"),
    "ind-k1k2": (("k1", "k2"), "induced-biclique"),
    "ind-maxedge": (("k",), "induced-max-edge"),
    "ids": (("k",), "ids"),
    "dc": (("k",), "dominating-clique"),
}

ORACLE_FLAGS = {problem_id: flags for flags, problem_id in PROBLEMS.values()}

FLAG_NAMES = {"k": "-k", "class_name": "--class"}


def _require(args, problem: str, flags):
    missing = [f for f in flags if getattr(args, f) is None]
    if missing:
        names = ", ".join(FLAG_NAMES.get(f, f"--{f}") for f in missing)
        raise ParameterError(f"solve {problem} needs {names}.")


def _solve_ind_k1k2(host: models.Graph, args) -> models.ProblemAnswer:
    if min(args.k1, args.k2) >= 2:
        return biclique.solve_induced_biclique_cclosed(host, args.k1, args.k2)
    return biclique.solve_induced_biclique_2closed(host, args.k1, args.k2)


SOLVERS = {
    "is": lambda host, args: kernel.solve_independent_set(
        host, args.k, args.fixed_ordering
    ),
    "subgraph": lambda host, args: kernel.solve_monotone_subgraph(
        host, args.k, kernel.monotone_class(args.class_name, args.param), args.fixed_ordering
    ),
    "sparsest": lambda host, args: kernel.solve_sparsest_k_subgraph(
        host, args.k, args.t, args.fixed_ordering
    ),
    "splex": lambda host, args: dense.solve_splex(host, args.s, args.k),
    "defective": lambda host, args: dense.solve_defective_clique(host, args.s, args.k),
    "defective-cover": lambda host, args: dense.solve_defective_clique_via_cover(
        host, args.s, args.k
    ),
    "ni-biclique": lambda host, args: biclique.solve_non_induced_biclique(
        host, args.k1, args.k2
    ),
    "ni-maxedge": lambda host, args: biclique.solve_max_edge_non_induced_biclique(
        host, args.k
    ),
    "ind-kk": lambda host, args: biclique.solve_induced_kk_biclique(host, args.k),
    "ind-k1k2": _solve_ind_k1k2,
    "ind-maxedge": lambda host, args: biclique.solve_induced_max_edge_biclique_2closed(
        host, args.k
    ),
    "ids": lambda host, args: domination.solve_ids(host, args.k),
    "dc": lambda host, args: domination.solve_dominating_clique(host, args.k),
}


def _oracle_problem(name: str) -> str:
    """Accepts both CLI names (oracle:is) and oracle ids (oracle:independent-set)."""
    if name in PROBLEMS:
        return PROBLEMS[name][1]
    return name


def answer_to_json(host: models.Graph, answer: models.ProblemAnswer) -> dict:
    witness = None
    if answer.biclique is not None:
        witness = {
            "S": host.label_set(answer.biclique.side_s),
            "T": host.label_set(answer.biclique.side_t),
        }
    elif answer.witness is not None:
        witness = host.label_set(answer.witness)
    return {
        "problem": answer.problem,
        "params": answer.params,
        "answer": "yes" if answer.decision else "no",
        "witness": witness,
        "stats": answer.stats,
    }


def stats_row(stats: models.GraphStats) -> list[int]:
    return [stats.n, stats.m, stats.max_degree, stats.c, stats.d, stats.gamma]


def cmd_stats(args) -> int:
    host = graph.read_edge_list(args.path)
    stats = closure.graph_stats(host)
    datasets.matches_reference(datasets.dataset_name(args.path), stats)
    if args.json:
        print(stats.model_dump_json())
    else:
        print("\t".join(str(value) for value in stats_row(stats)))
    return EXIT_YES


def cmd_report(args) -> int:
    rows = []
    failed = 0
    for file_name in sorted(os.listdir(args.directory)):
        path = os.path.join(args.directory, file_name)
        if not os.path.isfile(path):
            continue
        name = datasets.dataset_name(path)
        try:
            stats = closure.graph_stats(graph.read_edge_list(path))
        except (WeakClosureError, pydantic.ValidationError, OSError, UnicodeDecodeError) as e:
            logger.error(f"Skipping {file_name}: {e}")
            failed += 1
            continue
        datasets.matches_reference(name, stats)
        rows.append((name, stats))

    logger.info(f"Report of {len(rows)} networks will be saved to {args.output_file}.")
    datasets.ReportWriter(rows, args.output_file).write_tsv()
    return EXIT_FAILED_FILES if failed else EXIT_YES


def cmd_enum(args) -> int:
    host = graph.read_edge_list(args.path)
    if args.what in ("splex", "defective") and args.s is None:
        raise ParameterError(f"enum {args.what} needs --s.")

    if args.what == "cliques":
        family = cliques.enumerate_maximal_cliques(host)
    elif args.what == "splex":
        family = dense.enumerate_maximal_splexes(host, args.s).sets
    elif args.what == "defective":
        family = dense.enumerate_maximal_defective_cliques(host, args.s).sets
    else:
        family = biclique.enumerate_maximal_non_induced_bicliques(host)

    if args.count_only:
        print(len(family))
    else:
        for members in sorted(family):
            print(json.dumps(host.label_set(members)))
    return EXIT_YES


def cmd_solve(args) -> int:
    host = graph.read_edge_list(args.path)
    if args.problem.startswith("oracle:"):
        problem_id = _oracle_problem(args.problem.removeprefix("oracle:"))
        flags = ORACLE_FLAGS.get(problem_id, ())
        _require(args, args.problem, flags)
        params = {
            "class" if f == "class_name" else f: getattr(args, f) for f in flags
        }
        if problem_id == "monotone-subgraph" and args.param is not None:
            params["param"] = args.param
        answer = oracle.oracle_decide(problem_id, host, params)
    elif args.problem in SOLVERS:
        _require(args, args.problem, PROBLEMS[args.problem][0])
        answer = SOLVERS[args.problem](host, args)
    else:
        raise ParameterError(
            f"Unknown problem {args.problem}; choose one of {', '.join(SOLVERS)} or oracle:<problem>."
        )
    print(json.dumps(answer_to_json(host, answer)))
    return EXIT_YES if answer.decision else EXIT_NO


def cmd_order(args) -> int:
    host = graph.read_edge_list(args.path)
    print(closure.format_ordering(host, closure.closure_ordering(host)), end="")
    return EXIT_YES


def cmd_fetch(args) -> int:
    for name in args.names:
        datasets.fetch_network(name, args.dest)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m weak_closure.main",
        description="Parameterized algorithms for weakly closed graphs",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    stats = subparsers.add_parser("stats", help="Print n, m, max degree, c, d and gamma.")
    stats.add_argument("path", help="Edge-list file.")
    stats.add_argument("--json", action="store_true", help="Print JSON instead of TSV.")
    stats.set_defaults(func=cmd_stats)

    report = subparsers.add_parser(
        "report", help="Parameter table for every edge-list file in a directory."
    )
    report.add_argument("directory", help="Directory of edge-list files.")
    report.add_argument(
        "--output-file",
        default="closure_report.tsv",
        help="Output path for the report in TSV format.",
    )
    report.set_defaults(func=cmd_report)

    enum = subparsers.add_parser("enum", help="Enumerate maximal dense subgraphs.")
    enum.add_argument("what", choices=ENUM_FAMILIES)
    enum.add_argument("path", help="Edge-list file.")
    enum.add_argument("--s", type=int, default=None, help="Plex or defect parameter.")
    enum.add_argument(
        "--count-only", action="store_true", help="Print the family size only."
    )
    enum.set_defaults(func=cmd_enum)

    solve = subparsers.add_parser(
        "solve",
        help=(
            "Decide a parameterized problem."
            f" Problems: {', '.join(SOLVERS)}, or oracle:<problem> for brute force."
        ),
    )
    solve.add_argument("problem")
    solve.add_argument("path", help="Edge-list file.")
    solve.add_argument("-k", type=int, default=None, help="Solution size.")
    solve.add_argument("--s", type=int, default=None, help="Plex or defect parameter.")
    solve.add_argument("--t", type=int, default=None, help="Edge budget for sparsest.")
    solve.add_argument("--k1", type=int, default=None, help="First biclique side.")
    solve.add_argument("--k2", type=int, default=None, help="Second biclique side.")
    solve.add_argument(
        "--class",
        dest="class_name",
        choices=kernel.MONOTONE_CLASS_NAMES,
        default=None,
        help="Monotone class for the subgraph problem.",
    )
    solve.add_argument("--param", type=int, default=None, help="Parameter of the class.")
    solve.add_argument(
        "--fixed-ordering",
        action="store_true",
        help=(
            "Apply Rule 1 against one closure ordering of the input graph"
            " instead of recomputing it until a fixpoint."
        ),
    )
    solve.set_defaults(func=cmd_solve)

    order = subparsers.add_parser("order", help="Print a closure ordering.")
    order.add_argument("path", help="Edge-list file.")
    order.set_defaults(func=cmd_order)

    fetch = subparsers.add_parser("fetch", help="Download reference networks from S3.")
    fetch.add_argument("names", nargs="+", help=f"Any of {', '.join(datasets.REFERENCE_TABLE)}.")
    fetch.add_argument("--dest", default=".", help="Download directory.")
    fetch.set_defaults(func=cmd_fetch)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as e:
        logger.error(f"{e} Partial state: {json.dumps(e.partial, default=str)}")
        print(json.dumps({"error": str(e), "partial": e.partial}, default=str), file=sys.stderr)
        return EXIT_RESOURCE
    except (
        WeakClosureError,
        pydantic.ValidationError,
        OSError,
        UnicodeDecodeError,
        RuntimeError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
