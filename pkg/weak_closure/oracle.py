from itertools import combinations
from typing import Iterable, Iterator
import logging

from weak_closure import config, graph, models
from weak_closure.errors import ConfigurationError, ScaleError


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


PROBLEMS = (
    "independent-set",
    "monotone-subgraph",
    "sparsest",
    "splex",
    "defective-clique",
    "non-induced-biclique",
    "non-induced-max-edge",
    "induced-kk-biclique",
    "induced-biclique",
    "induced-max-edge",
    "ids",
    "dominating-clique",
)


def _check_scale(host: models.Graph, cap: int):
    if host.n > cap:
        raise ScaleError(
            f"Brute force is limited to {cap} vertices, graph has {host.n}.",
            partial={"n": host.n, "cap": cap},
        )


def _all_subsets(n: int) -> Iterator[frozenset[int]]:
    for mask in range(1 << n):
        yield frozenset(v for v in range(n) if mask >> v & 1)


def naive_closure(host: models.Graph, within: frozenset[int], v: int) -> int:
    best = 0
    for x in within:
        if x != v and not host.has_edge(v, x):
            best = max(best, len(host.adjacency[v] & host.adjacency[x] & within))
    return best


def oracle_weak_closure(
    host: models.Graph, max_n: int = config.WEAKCLOSE_ORACLE_GAMMA_MAX_N
) -> int:
    """1 + the largest minimum closure number over all nonempty induced subgraphs."""
    _check_scale(host, max_n)
    worst = 0
    for within in _all_subsets(host.n):
        if within:
            worst = max(worst, min(naive_closure(host, within, v) for v in within))
    return 1 + worst


def oracle_c_closure(host: models.Graph) -> int:
    everything = frozenset(host.vertices())
    return 1 + max((naive_closure(host, everything, v) for v in everything), default=0)


def oracle_degeneracy(
    host: models.Graph, max_n: int = config.WEAKCLOSE_ORACLE_GAMMA_MAX_N
) -> int:
    _check_scale(host, max_n)
    worst = 0
    for within in _all_subsets(host.n):
        if within:
            worst = max(worst, min(len(host.adjacency[v] & within) for v in within))
    return worst


def oracle_is_non_induced_biclique(host: models.Graph, vertex_set: Iterable[int]) -> bool:
    """Some split of U into two nonempty sides has every cross pair adjacent."""
    members = sorted(vertex_set)
    for size in range(1, len(members)):
        for side in combinations(members, size):
            other = set(members) - set(side)
            if all(host.has_edge(x, y) for x in side for y in other):
                return True
    return False


def oracle_enumerate_maximal(
    host: models.Graph,
    property: graph.Property,
    max_n: int = config.WEAKCLOSE_ORACLE_MAX_N,
) -> list[models.VertexSet]:
    """Every inclusion-maximal vertex set with the property."""
    _check_scale(host, max_n)
    holding = [s for s in _all_subsets(host.n) if property(host, s)]
    holding.sort(key=len, reverse=True)
    maximal: list[frozenset[int]] = []
    for s in holding:
        if not any(s < m for m in maximal):
            maximal.append(s)
    return sorted(models.VertexSet.of(s) for s in maximal)


def _first_set(
    host: models.Graph, sizes: Iterable[int], check
) -> frozenset[int] | None:
    """Lexicographically smallest passing vertex tuple over all the sizes."""
    best = None
    for size in sizes:
        # combinations come in lexicographic order, so the first hit is the
        # smallest of its size
        for members in combinations(host.vertices(), size):
            if check(members):
                if best is None or members < best:
                    best = members
                break
    return None if best is None else frozenset(best)


def _first_biclique(
    host: models.Graph, pairs: Iterable[tuple[int, int]], induced: bool
) -> tuple[frozenset[int], frozenset[int]] | None:
    for a, b in pairs:
        for members in combinations(host.vertices(), a + b):
            for side in combinations(members, a):
                other = tuple(x for x in members if x not in side)
                if not all(host.has_edge(x, y) for x in side for y in other):
                    continue
                if induced and not (
                    graph.is_independent(host, side) and graph.is_independent(host, other)
                ):
                    continue
                return frozenset(side), frozenset(other)
    return None


def _class_predicate(name: str, parameter: int | None):
    if name == "edgeless":
        return graph.is_independent
    if name == "acyclic":
        return graph.is_forest
    if name == "bipartite":
        return graph.is_bipartite
    if name == "max-degree":
        return lambda host, members: graph.max_degree_within(host, members, parameter)
    if name == "max-edges":
        return lambda host, members: graph.edge_count_within(host, members, parameter)
    raise ConfigurationError(f"Unknown monotone class {name}.")


def _edge_pairs(n: int, k: int) -> list[tuple[int, int]]:
    return [(a, -(-k // a)) for a in range(1, n) if a + -(-k // a) <= n]


def oracle_decide(
    problem: str,
    host: models.Graph,
    params: dict[str, int | str],
    max_n: int = config.WEAKCLOSE_ORACLE_MAX_N,
) -> models.ProblemAnswer:
    """Definitional search; witnesses are the lexicographically smallest vertex tuple."""
    if problem not in PROBLEMS:
        raise ConfigurationError(f"Unknown oracle problem {problem}.")
    _check_scale(host, max_n)
    k = params.get("k")
    s = params.get("s")
    found = None
    sides = None

    if problem == "independent-set":
        found = _first_set(host, [k], lambda m: graph.is_independent(host, m))
    elif problem == "monotone-subgraph":
        member = _class_predicate(params["class"], params.get("param"))
        found = _first_set(host, [k], lambda m: member(host, m))
    elif problem == "sparsest":
        found = _first_set(host, [k], lambda m: graph.count_edges(host, m) <= params["t"])
    elif problem == "splex":
        found = _first_set(host, [k], lambda m: graph.check_splex(host, m, s))
    elif problem == "defective-clique":
        found = _first_set(host, [k], lambda m: graph.check_defective_clique(host, m, s))
    elif problem == "ids":
        found = _first_set(
            host, range(k + 1),
            lambda m: graph.is_independent(host, m) and graph.is_dominating(host, m),
        )
    elif problem == "dominating-clique":
        found = _first_set(
            host, range(k + 1),
            lambda m: graph.is_clique(host, m) and graph.is_dominating(host, m),
        )
    elif problem == "non-induced-biclique":
        sides = _first_biclique(host, [(params["k1"], params["k2"])], induced=False)
    elif problem == "induced-biclique":
        sides = _first_biclique(host, [(params["k1"], params["k2"])], induced=True)
    elif problem == "induced-kk-biclique":
        sides = _first_biclique(host, [(k, k)], induced=True)
    elif problem == "non-induced-max-edge":
        sides = _first_biclique(host, _edge_pairs(host.n, k), induced=False)
    elif problem == "induced-max-edge":
        sides = _first_biclique(host, _edge_pairs(host.n, k), induced=True)

    if sides is not None:
        return models.ProblemAnswer(
            problem=problem,
            params=params,
            decision=True,
            biclique=models.BicliqueWitness(
                side_s=models.VertexSet.of(sides[0]),
                side_t=models.VertexSet.of(sides[1]),
                induced=problem.startswith("induced"),
            ),
        )
    return models.ProblemAnswer(
        problem=problem,
        params=params,
        decision=found is not None,
        witness=None if found is None else models.VertexSet.of(found),
    )
