from itertools import combinations
from typing import Callable, Iterable, Iterator
import logging

import networkx as nx

from weak_closure import cliques, closure, config, graph, models
from weak_closure.errors import ContractViolation, ParameterError, ResourceLimitError


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


CandidateGenerator = Callable[
    [models.Graph, int, frozenset[int], int, int], Iterable[frozenset[int]]
]


def subsets(items: Iterable[int], max_size: int, min_size: int = 0) -> Iterator[tuple[int, ...]]:
    items = sorted(items)
    for size in range(min_size, min(max_size, len(items)) + 1):
        yield from combinations(items, size)


def power_set(items: Iterable[int], subset_cap: int) -> list[tuple[int, ...]]:
    items = sorted(items)
    if len(items) > subset_cap:
        raise ResourceLimitError(
            f"Common neighbourhood of {len(items)} vertices exceeds the subset cap {subset_cap}.",
            partial={"common_neighbors": len(items)},
        )
    return list(subsets(items, len(items)))


def _is_maximal_within(
    host: models.Graph,
    members: frozenset[int],
    alive: frozenset[int],
    property: graph.Property,
) -> bool:
    return not any(property(host, members | {w}) for w in alive - members)


def family_size_bound(kind: str, gamma: int, n: int, s: int) -> int:
    if kind == "splex":
        return 2**gamma * n ** (2 * s - 1) + 1
    if kind == "defective":
        return 2**gamma * n ** (s + 1) + 1
    if kind == "biclique":
        return 2**gamma * n**2 + 1
    raise ParameterError(f"No family size bound for kind {kind}.")


def incremental_family(
    host: models.Graph,
    kind: str,
    s: int,
    property: graph.Property,
    generate: CandidateGenerator,
    subset_cap: int = config.WEAKCLOSE_SUBSET_CAP,
) -> models.EnumFamily:
    ordering = closure.closure_ordering(host)
    alive: set[int] = set()
    family: set[frozenset[int]] = {frozenset()}

    for i in reversed(range(host.n)):
        v = ordering.order[i]
        alive.add(v)
        suffix = frozenset(alive)
        candidates = set(family)
        candidates.update(old | {v} for old in family)
        try:
            candidates.update(generate(host, v, suffix, s, subset_cap))
        except ResourceLimitError as e:
            e.partial.update(step=i, family_size=len(family))
            raise
        family = {
            c
            for c in candidates
            if property(host, c) and _is_maximal_within(host, c, suffix, property)
        }
        logger.debug(
            f"Step {i}: {len(candidates)} candidates, {len(family)} maximal {kind} sets."
        )

    # only the empty graph can leave the seed behind
    family = {c for c in family if property(host, c)}

    sets = tuple(sorted(models.VertexSet.of(c) for c in family))
    bound = family_size_bound(kind, ordering.gamma, host.n, s)
    if len(sets) > bound:
        raise ContractViolation(
            f"{len(sets)} maximal {kind} sets exceed the bound {bound}"
            f" for gamma={ordering.gamma}, n={host.n}, s={s}."
        )
    logger.info(f"Enumerated {len(sets)} maximal {kind} sets (s={s}, gamma={ordering.gamma}).")
    return models.EnumFamily(
        sets=sets, fingerprint=graph.graph_fingerprint(host), s=s, kind=kind
    )


def _rooted_candidates(
    host: models.Graph,
    v: int,
    alive: frozenset[int],
    subset_cap: int,
    outside_cap: Callable[[int], int],
    inside_cap: int,
) -> Iterator[frozenset[int]]:
    """Sets rooted at v: a few non-neighbours, a few of their non-neighbours, any common part.

    outside_cap(a) is the largest allowed |B| once |A| = a is fixed.
    """
    neighbors = host.adjacency[v] & alive
    non_neighbors = alive - neighbors - {v}

    # at least one non-neighbour of v inside the set
    for a in range(1, inside_cap + 1):
        for outside in combinations(sorted(non_neighbors), a):
            u = outside[0]
            u_neighbors = host.adjacency[u] & alive
            common = power_set(neighbors & u_neighbors, subset_cap)
            for private in subsets(neighbors - u_neighbors, outside_cap(a)):
                for shared in common:
                    yield frozenset((v, *outside, *private, *shared))

    # inside N[v], with a non-neighbour u that extends the set without v
    for u in sorted(non_neighbors):
        u_neighbors = host.adjacency[u] & alive
        common = power_set(neighbors & u_neighbors, subset_cap)
        for private in subsets(neighbors - u_neighbors, inside_cap):
            for shared in common:
                yield frozenset((v, *private, *shared))
    yield neighbors | {v}


def splex_candidates(
    host: models.Graph, v: int, alive: frozenset[int], s: int, subset_cap: int
) -> Iterator[frozenset[int]]:
    return _rooted_candidates(
        host, v, alive, subset_cap, outside_cap=lambda a: s - 1, inside_cap=s - 1
    )


def defective_candidates(
    host: models.Graph, v: int, alive: frozenset[int], s: int, subset_cap: int
) -> Iterator[frozenset[int]]:
    # v misses every vertex of A and u misses every vertex of B, so |A| + |B| <= s
    return _rooted_candidates(
        host, v, alive, subset_cap, outside_cap=lambda a: s - a, inside_cap=s
    )


def enumerate_maximal_splexes(
    host: models.Graph, s: int, subset_cap: int = config.WEAKCLOSE_SUBSET_CAP
) -> models.EnumFamily:
    if s < 2:
        raise ParameterError(
            f"s={s}: maximal 1-plexes are maximal cliques, use enumerate_maximal_cliques."
        )
    return incremental_family(
        host, "splex", s, graph.splex_property(s), splex_candidates, subset_cap
    )


def enumerate_maximal_defective_cliques(
    host: models.Graph, s: int, subset_cap: int = config.WEAKCLOSE_SUBSET_CAP
) -> models.EnumFamily:
    if s < 1:
        raise ParameterError(
            f"s={s}: maximal 0-defective cliques are maximal cliques,"
            " use enumerate_maximal_cliques."
        )
    return incremental_family(
        host, "defective", s, graph.defective_property(s), defective_candidates, subset_cap
    )


def _largest(sets: Iterable[models.VertexSet]) -> models.VertexSet | None:
    return min(sets, key=lambda S: (-len(S), S.members), default=None)


def _answer_from_family(
    problem: str, s: int, k: int, sets: list[models.VertexSet] | tuple[models.VertexSet, ...]
) -> models.ProblemAnswer:
    if k == 0:
        return models.ProblemAnswer(
            problem=problem, params={"s": s, "k": k}, decision=True,
            witness=models.VertexSet(),
        )
    largest = _largest(sets)
    decision = largest is not None and len(largest) >= k
    return models.ProblemAnswer(
        problem=problem,
        params={"s": s, "k": k},
        decision=decision,
        witness=largest if decision else None,
        stats={"family_size": len(sets)},
    )


def solve_splex(host: models.Graph, s: int, k: int) -> models.ProblemAnswer:
    if s < 1 or k < 0:
        raise ParameterError(f"s-Plex needs s >= 1 and k >= 0, got s={s}, k={k}.")
    if k == 0:
        return _answer_from_family("splex", s, k, ())
    if s == 1:
        family = cliques.enumerate_maximal_cliques(host)
    else:
        family = enumerate_maximal_splexes(host, s).sets
    return _answer_from_family("splex", s, k, family)


def solve_defective_clique(host: models.Graph, s: int, k: int) -> models.ProblemAnswer:
    if s < 0 or k < 0:
        raise ParameterError(
            f"s-Defective Clique needs s >= 0 and k >= 0, got s={s}, k={k}."
        )
    if k == 0:
        return _answer_from_family("defective-clique", s, k, ())
    if s == 0:
        family = cliques.enumerate_maximal_cliques(host)
    else:
        family = enumerate_maximal_defective_cliques(host, s).sets
    return _answer_from_family("defective-clique", s, k, family)


def chromatic_bound(s: int) -> int:
    """floor(sqrt(2s + 1/4) + 1/2): the most colours a graph with s edges can need."""
    colors = 1
    while (colors + 1) * colors <= 2 * s:
        colors += 1
    return colors


def _exact_coloring(complement: nx.Graph, limit: int) -> dict[int, int] | None:
    nodes = sorted(complement, key=lambda u: (-complement.degree(u), u))
    coloring: dict[int, int] = {}

    def assign(index: int) -> bool:
        if index == len(nodes):
            return True
        u = nodes[index]
        used = {coloring[w] for w in complement[u] if w in coloring}
        for color in range(limit):
            if color not in used:
                coloring[u] = color
                if assign(index + 1):
                    return True
                del coloring[u]
        return False

    return coloring if assign(0) else None


def clique_cover_of_defective(
    host: models.Graph, vertex_set: Iterable[int], s: int
) -> list[models.VertexSet]:
    """Partition an s-defective clique into few cliques by colouring its complement."""
    members = graph.check_vertex_set(host, vertex_set)
    if s < 1:
        raise ParameterError(f"Clique covers are defined for s >= 1, got {s}.")
    if not graph.check_defective_clique(host, members, s):
        raise ContractViolation(
            f"Vertex set {members.members} is not a {s}-defective clique."
        )
    complement = nx.complement(graph.to_networkx(host, members))
    bound = chromatic_bound(s)
    coloring = nx.greedy_color(complement, strategy="largest_first")
    if coloring and max(coloring.values()) + 1 > bound:
        logger.debug(f"Greedy colouring needs more than {bound} colours, colouring exactly.")
        coloring = _exact_coloring(complement, bound)
        if coloring is None:
            raise ContractViolation(
                f"Complement of {members.members} is not {bound}-colourable."
            )
    classes: dict[int, list[int]] = {}
    for u, color in coloring.items():
        classes.setdefault(color, []).append(u)
    return sorted(models.VertexSet.of(c) for c in classes.values())


def defective_clique_size_limit(host: models.Graph, s: int) -> int:
    return closure.c_closure(host) + s


def defective_clique_size_bound(host: models.Graph, vertex_set: Iterable[int], s: int) -> bool:
    """An s-defective clique with a non-edge has at most c + s vertices."""
    members = graph.check_vertex_set(host, vertex_set)
    if not graph.check_defective_clique(host, members, s):
        raise ContractViolation(
            f"Vertex set {members.members} is not a {s}-defective clique."
        )
    if graph.is_clique(host, members):
        raise ContractViolation(f"Vertex set {members.members} has no non-edge.")
    return len(members) <= defective_clique_size_limit(host, s)


def solve_defective_clique_via_cover(
    host: models.Graph, s: int, k: int, cover_budget: int = config.WEAKCLOSE_COVER_BUDGET
) -> models.ProblemAnswer:
    """Search unions of few maximal cliques for a large s-defective clique."""
    if s < 1 or k < 1:
        raise ParameterError(f"The cover solver needs s >= 1 and k >= 1, got s={s}, k={k}.")
    params = {"s": s, "k": k}
    all_cliques = cliques.enumerate_maximal_cliques(host)
    largest = _largest(all_cliques)
    if largest is not None and len(largest) >= k:
        return models.ProblemAnswer(
            problem="defective-clique", params=params, decision=True, witness=largest,
            stats={"cliques": len(all_cliques), "collections": 0},
        )
    if k > defective_clique_size_limit(host, s):
        # a non-clique s-defective clique this large cannot exist
        return models.ProblemAnswer(
            problem="defective-clique", params=params, decision=False,
            stats={"cliques": len(all_cliques), "collections": 0},
        )

    examined = 0
    for size in range(2, chromatic_bound(s) + 1):
        for collection in combinations(all_cliques, size):
            examined += 1
            if examined > cover_budget:
                raise ResourceLimitError(
                    f"Examined more than {cover_budget} clique collections.",
                    partial={"cliques": len(all_cliques), "collections": examined - 1,
                             "collection_size": size},
                )
            union = set().union(*collection)
            if len(union) < k:
                continue
            subgraph, mapping = graph.induced_subgraph(host, union)
            answer = solve_defective_clique(subgraph, s, k)
            if answer.decision:
                witness = models.VertexSet.of(mapping[u] for u in answer.witness)
                # larger than every clique, so it has a non-edge
                if not defective_clique_size_bound(host, witness, s):
                    raise ContractViolation(
                        f"Defective clique {witness.members} exceeds c + s vertices."
                    )
                return models.ProblemAnswer(
                    problem="defective-clique",
                    params=params,
                    decision=True,
                    witness=witness,
                    stats={"cliques": len(all_cliques), "collections": examined},
                )
    return models.ProblemAnswer(
        problem="defective-clique", params=params, decision=False,
        stats={"cliques": len(all_cliques), "collections": examined},
    )
