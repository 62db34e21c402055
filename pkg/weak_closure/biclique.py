from itertools import combinations
from typing import Iterable, Iterator
import logging
import math

import networkx as nx

from weak_closure import closure, config, dense, graph, kernel, models
from weak_closure.errors import (
    ContractViolation,
    ParameterError,
    ResourceLimitError,
)


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def is_non_induced_biclique(host: models.Graph, vertex_set: Iterable[int]) -> bool:
    """True iff |U| >= 2 and the complement of G[U] has more than one component."""
    members = frozenset(vertex_set)
    if len(members) < 2:
        return False
    return len(graph.complement_components(host, members)) >= 2


def biclique_candidates(
    host: models.Graph, v: int, alive: frozenset[int], s: int, subset_cap: int
) -> Iterator[frozenset[int]]:
    """Maximal bicliques of G_i through v.

    If the set leaves N[v], its side without v lies in the common neighbourhood
    of v and some non-neighbour u, and the side with v is everything adjacent
    to all of that side. Otherwise the set is N[v].
    """
    neighbors = host.adjacency[v] & alive
    for u in sorted(alive - neighbors - {v}):
        common = neighbors & host.adjacency[u]
        for side in dense.power_set(common, subset_cap):
            if not side:
                continue
            other = frozenset(alive)
            for w in side:
                other &= host.adjacency[w]
            yield other | frozenset(side)
    if neighbors:
        yield neighbors | {v}


def enumerate_maximal_non_induced_bicliques(
    host: models.Graph, subset_cap: int = config.WEAKCLOSE_SUBSET_CAP
) -> list[models.VertexSet]:
    family = dense.incremental_family(
        host, "biclique", 0, is_non_induced_biclique, biclique_candidates, subset_cap
    )
    return list(family.sets)


def solve_subset_sum_range(instance: models.SubsetSumInstance) -> models.SubsetSumAnswer:
    """Reachable sums with back-pointers; the empty subset reaches 0."""
    total = sum(instance.values)
    # parent[sigma] = (index of the last value used, previous sum)
    parent: list[tuple[int, int] | None] = [None] * (total + 1)
    reachable = [False] * (total + 1)
    reachable[0] = True
    for index, value in enumerate(instance.values):
        for sigma in range(total, value - 1, -1):
            if not reachable[sigma] and reachable[sigma - value]:
                reachable[sigma] = True
                parent[sigma] = (index, sigma - value)

    for sigma in range(instance.lo, min(instance.hi, total) + 1):
        if reachable[sigma]:
            indices = []
            current = sigma
            while current:
                index, current = parent[current]
                indices.append(index)
            return models.SubsetSumAnswer(
                decision=True, indices=tuple(sorted(indices)), total=sigma
            )
    return models.SubsetSumAnswer(decision=False)


class _BicliqueSearch:
    """Exact search for disjoint S, T with all S-T pairs adjacent.

    Root every biclique at its earliest vertex v in a closure ordering of the
    current vertex set. Either the side of v leaves N[v], and then the other
    side sits in a common neighbourhood of fewer than gamma vertices, or the
    whole biclique minus v lives in N(v) and the search recurses there.
    """

    def __init__(self, host: models.Graph, node_budget: int):
        self.host = host
        self.node_budget = node_budget
        self.nodes = 0

    def _common(self, vertices: Iterable[int], within: frozenset[int]) -> frozenset[int]:
        common = within
        for w in vertices:
            common = common & self.host.adjacency[w]
        return common

    def find(self, within: frozenset[int], a: int, b: int):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise ResourceLimitError(
                f"Biclique search exceeded {self.node_budget} nodes.",
                partial={"nodes": self.nodes - 1},
            )
        if a <= 0 or b <= 0:
            need = max(a, b, 0)
            if len(within) < need:
                return None
            taken = frozenset(sorted(within)[:need])
            return (frozenset(), taken) if a <= 0 else (taken, frozenset())
        if len(within) < a + b:
            return None

        subgraph, mapping = graph.induced_subgraph(self.host, within)
        order = [mapping[v] for v in closure.closure_ordering(subgraph).order]
        for i, v in enumerate(order):
            suffix = frozenset(order[i:])
            neighbors = self.host.adjacency[v] & suffix
            for p, q, swapped in ((a, b, False), (b, a, True)):
                found = self._rooted(v, suffix, neighbors, within, p, q)
                if found is not None:
                    side_v, other = found
                    return (other, side_v) if swapped else (side_v, other)
        return None

    def _rooted(self, v, suffix, neighbors, within, p, q):
        for u in sorted(suffix - neighbors - {v}):
            common = sorted(neighbors & self.host.adjacency[u])
            for side in combinations(common, q):
                others = self._common(side, within)
                if len(others) >= p:
                    return others, frozenset(side)
        if len(neighbors) >= p - 1 + q:
            found = self.find(neighbors, p - 1, q)
            if found is not None:
                return found[0] | {v}, found[1]
        return None


def _biclique_answer(problem, params, found, stats, induced=False) -> models.ProblemAnswer:
    if found is None:
        return models.ProblemAnswer(problem=problem, params=params, decision=False, stats=stats)
    side_s, side_t = found
    return models.ProblemAnswer(
        problem=problem,
        params=params,
        decision=True,
        biclique=models.BicliqueWitness(
            side_s=models.VertexSet.of(side_s),
            side_t=models.VertexSet.of(side_t),
            induced=induced,
        ),
        stats=stats,
    )


def solve_non_induced_biclique(
    host: models.Graph, k1: int, k2: int, node_budget: int = config.WEAKCLOSE_NODE_BUDGET
) -> models.ProblemAnswer:
    if k1 < 1 or k2 < 1:
        raise ParameterError(f"Biclique sides need k1, k2 >= 1, got {k1}, {k2}.")
    params = {"k1": k1, "k2": k2}
    maximal = enumerate_maximal_non_induced_bicliques(host)
    for examined, members in enumerate(maximal, start=1):
        if len(members) < k1 + k2:
            continue
        components = graph.complement_components(host, members)
        answer = solve_subset_sum_range(
            models.SubsetSumInstance(
                values=[len(c) for c in components], lo=k1, hi=len(members) - k2
            )
        )
        if answer.decision:
            side_s = set().union(*(components[i] for i in answer.indices))
            side_t = set(members) - side_s
            return _biclique_answer(
                "non-induced-biclique", params, (side_s, side_t),
                {"maximal_bicliques": len(maximal), "examined": examined},
            )

    # a biclique strictly inside a maximal one need not be a union of its components
    search = _BicliqueSearch(host, node_budget)
    found = search.find(frozenset(host.vertices()), k1, k2)
    return _biclique_answer(
        "non-induced-biclique", params, found,
        {"maximal_bicliques": len(maximal), "nodes": search.nodes},
    )


def side_size_grid(k: int) -> list[tuple[int, int]]:
    """(k1, k2) pairs with k1 <= k2 covering every biclique with at least k edges."""
    pairs = []
    for k1 in range(1, math.isqrt(k - 1) + 2):
        k2 = -(-k // k1)
        pairs.append((min(k1, k2), max(k1, k2)))
    return sorted(set(pairs))


def _best_of(problem: str, k: int, answers: list[models.ProblemAnswer]) -> models.ProblemAnswer:
    found = [a for a in answers if a.decision]
    if not found:
        return models.ProblemAnswer(
            problem=problem, params={"k": k}, decision=False,
            stats={"instances": len(answers)},
        )
    best = max(
        found,
        key=lambda a: a.biclique.edge_count,
    )
    return best.model_copy(
        update={"problem": problem, "params": {"k": k}, "stats": {"instances": len(answers)}}
    )


def solve_max_edge_non_induced_biclique(host: models.Graph, k: int) -> models.ProblemAnswer:
    if k < 1:
        raise ParameterError(f"Max-edge biclique needs k >= 1, got {k}.")
    answers = [solve_non_induced_biclique(host, k1, k2) for k1, k2 in side_size_grid(k)]
    return _best_of("non-induced-max-edge", k, answers)


def solve_induced_kk_biclique(host: models.Graph, k: int) -> models.ProblemAnswer:
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}.")
    params = {"k": k}
    if k == 0:
        return _biclique_answer("induced-kk-biclique", params, (set(), set()), {}, induced=True)
    if k == 1:
        edge = next(host.edges(), None)
        found = None if edge is None else ({edge[0]}, {edge[1]})
        return _biclique_answer("induced-kk-biclique", params, found, {}, induced=True)

    ordering = closure.closure_ordering(host)
    if k >= ordering.gamma:
        # an induced K_{gamma,gamma} is not weakly gamma-closed
        return _biclique_answer(
            "induced-kk-biclique", params, None, {"gamma": ordering.gamma}, induced=True
        )

    tested = 0
    for i, v in enumerate(ordering.order):
        suffix = frozenset(ordering.order[i:])
        v_closed = (host.adjacency[v] & suffix) | {v}
        for partner in sorted(suffix - v_closed):
            partner_closed = host.adjacency[partner] | {partner}
            common = sorted(host.adjacency[v] & host.adjacency[partner] & suffix)
            for side_t in combinations(common, k):
                if not graph.is_independent(host, side_t):
                    continue
                tested += 1
                rest = suffix
                for w in side_t:
                    rest = rest & host.adjacency[w]
                rest = rest - v_closed - partner_closed
                subgraph, mapping = graph.induced_subgraph(host, rest)
                independent = kernel.find_independent_set(subgraph, k - 2)
                if independent is not None:
                    side_s = {v, partner} | {mapping[x] for x in independent}
                    return _biclique_answer(
                        "induced-kk-biclique", params, (side_s, set(side_t)),
                        {"gamma": ordering.gamma, "tested": tested}, induced=True,
                    )
    return _biclique_answer(
        "induced-kk-biclique", params, None,
        {"gamma": ordering.gamma, "tested": tested}, induced=True,
    )


def solve_bicolored_independent_set(
    host: models.Graph,
    part_one: Iterable[int],
    part_two: Iterable[int],
    k1: int,
    k2: int,
    node_budget: int = config.WEAKCLOSE_NODE_BUDGET,
) -> models.ProblemAnswer:
    """Independent set with exactly k1 vertices from part_one and k2 from part_two."""
    part_one, part_two = frozenset(part_one), frozenset(part_two)
    if part_one & part_two or (part_one | part_two) != frozenset(host.vertices()):
        raise ContractViolation("The two parts must partition the vertex set.")
    params = {"k1": k1, "k2": k2}
    nodes = 0

    def search(alive: frozenset[int], need_one: int, need_two: int) -> frozenset[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(
                f"Bicolored independent set search exceeded {node_budget} nodes.",
                partial={"nodes": nodes - 1},
            )
        if need_one <= 0 and need_two <= 0:
            return frozenset()
        if len(alive & part_one) < need_one or len(alive & part_two) < need_two:
            return None
        x = min(alive, key=lambda u: (-len(host.adjacency[u] & alive), u))
        if not host.adjacency[x] & alive:
            return frozenset(
                sorted(alive & part_one)[: max(need_one, 0)]
                + sorted(alive & part_two)[: max(need_two, 0)]
            )
        in_one = x in part_one
        if (need_one if in_one else need_two) > 0:
            found = search(
                alive - host.adjacency[x] - {x},
                need_one - in_one,
                need_two - (not in_one),
            )
            if found is not None:
                return found | {x}
        return search(alive - {x}, need_one, need_two)

    found = search(frozenset(host.vertices()), k1, k2)
    return models.ProblemAnswer(
        problem="bicolored-independent-set",
        params=params,
        decision=found is not None,
        witness=None if found is None else models.VertexSet.of(found),
        stats={"nodes": nodes},
    )


def solve_induced_biclique_cclosed(host: models.Graph, k1: int, k2: int) -> models.ProblemAnswer:
    """Extend every induced C4 to an induced (k1, k2)-biclique through a small reduced instance."""
    k1, k2 = min(k1, k2), max(k1, k2)
    if k1 < 2:
        raise ParameterError(
            f"k1={k1}: the c-closed routine needs both sides >= 2;"
            " use solve_induced_1k_diamond_free or solve_induced_kk_biclique."
        )
    params = {"k1": k1, "k2": k2}
    c = closure.c_closure(host)
    cycles = 0

    for u_s, v_s in combinations(host.vertices(), 2):
        if host.has_edge(u_s, v_s):
            continue
        across = sorted(host.adjacency[u_s] & host.adjacency[v_s])
        for u_t, v_t in combinations(across, 2):
            if host.has_edge(u_t, v_t):
                continue
            cycles += 1
            s_closed = host.adjacency[u_s] | host.adjacency[v_s] | {u_s, v_s}
            t_closed = host.adjacency[u_t] | host.adjacency[v_t] | {u_t, v_t}
            part_s = (host.adjacency[u_t] & host.adjacency[v_t]) - s_closed
            part_t = (host.adjacency[u_s] & host.adjacency[v_s]) - t_closed
            if len(part_s) + len(part_t) > 2 * c - 2:
                raise ContractViolation(
                    f"Reduced instance has {len(part_s) + len(part_t)} vertices,"
                    f" more than 2c-2 = {2 * c - 2}."
                )
            if len(part_s) < k1 - 2 or len(part_t) < k2 - 2:
                continue

            members = sorted(part_s | part_t)
            local = {x: i for i, x in enumerate(members)}
            edges = []
            for x, y in combinations(members, 2):
                same_side = (x in part_s) == (y in part_s)
                # same side must stay independent, opposite sides must be adjacent
                if host.has_edge(x, y) == same_side:
                    edges.append((local[x], local[y]))
            reduced = graph.graph_from_edges(edges, n=len(members))
            answer = solve_bicolored_independent_set(
                reduced,
                [local[x] for x in part_s],
                [local[x] for x in part_t],
                k1 - 2,
                k2 - 2,
            )
            if answer.decision:
                chosen = {members[i] for i in answer.witness}
                return _biclique_answer(
                    "induced-biclique", params,
                    ({u_s, v_s} | (chosen & part_s), {u_t, v_t} | (chosen & part_t)),
                    {"c": c, "cycles": cycles}, induced=True,
                )
    return _biclique_answer(
        "induced-biclique", params, None, {"c": c, "cycles": cycles}, induced=True
    )


def solve_induced_1k_diamond_free(host: models.Graph, k2: int) -> models.ProblemAnswer:
    """In a diamond-free graph every neighbourhood is a disjoint union of cliques."""
    if k2 < 1:
        raise ParameterError(f"k2 must be at least 1, got {k2}.")
    diamond = graph.find_diamond(host)
    if diamond is not None:
        raise ContractViolation(
            f"Graph is not diamond-free: {diamond} induces a diamond."
        )
    params = {"k1": 1, "k2": k2}
    for v in host.vertices():
        components = list(
            nx.connected_components(graph.to_networkx(host, host.adjacency[v]))
        )
        if len(components) >= k2:
            return _biclique_answer(
                "induced-biclique", params,
                ({v}, {min(component) for component in components}),
                {}, induced=True,
            )
    return _biclique_answer("induced-biclique", params, None, {}, induced=True)


def solve_induced_biclique_2closed(host: models.Graph, k1: int, k2: int) -> models.ProblemAnswer:
    c = closure.c_closure(host)
    if c > 2:
        raise ParameterError(f"Graph is {c}-closed; this routine needs a 2-closed graph.")
    k1, k2 = min(k1, k2), max(k1, k2)
    if k1 < 1:
        raise ParameterError(f"Biclique sides need k1, k2 >= 1, got {k1}, {k2}.")
    if k1 == 1:
        if not graph.is_diamond_free(host):
            raise ContractViolation("A 2-closed graph contains a diamond.")
        answer = solve_induced_1k_diamond_free(host, k2)
    else:
        answer = solve_induced_biclique_cclosed(host, k1, k2)
    return answer.model_copy(update={"params": {"k1": k1, "k2": k2}})


def solve_induced_max_edge_biclique_2closed(host: models.Graph, k: int) -> models.ProblemAnswer:
    if k < 1:
        raise ParameterError(f"Max-edge biclique needs k >= 1, got {k}.")
    answers = [solve_induced_biclique_2closed(host, k1, k2) for k1, k2 in side_size_grid(k)]
    return _best_of("induced-max-edge", k, answers)
