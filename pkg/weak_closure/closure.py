from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence
import heapq
import logging

from weak_closure import config, models
from weak_closure.errors import DomainError


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def closure_within(adjacency: Sequence[Iterable[int]], v: int) -> int:
    """Closure number of v over an adjacency that may have had vertices removed."""
    neighbors = adjacency[v]
    shared = Counter()
    for w in neighbors:
        for x in adjacency[w]:
            if x != v and x not in neighbors:
                shared[x] += 1
    return max(shared.values(), default=0)


def closure_of_vertex(graph: models.Graph, v: int) -> int:
    if not 0 <= v < graph.n:
        raise DomainError(f"Vertex {v} is not in a graph with {graph.n} vertices.")
    return closure_within(graph.adjacency, v)


def c_closure(graph: models.Graph, threads: int = config.WEAKCLOSE_THREADS) -> int:
    """Smallest c such that every vertex has closure number below c."""
    if threads > 1 and graph.n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(
                pool.map(lambda v: closure_within(graph.adjacency, v), graph.vertices())
            )
    else:
        values = [closure_within(graph.adjacency, v) for v in graph.vertices()]
    return 1 + max(values, default=0)


def _within_two(adjacency: list[set[int]], v: int) -> set[int]:
    reach = set(adjacency[v])
    for w in adjacency[v]:
        reach |= adjacency[w]
    reach.discard(v)
    return reach


def closure_ordering(graph: models.Graph) -> models.ClosureOrdering:
    """Greedy minimum-closure peeling; ties go to the lowest vertex id.

    Deleting vertices never increases a closure number, so like min-degree
    peeling for the degeneracy this attains the smallest possible maximum over
    all orderings. gamma is one more than that maximum.
    """
    adjacency = [set(a) for a in graph.adjacency]
    current = [closure_within(adjacency, v) for v in graph.vertices()]
    heap = [(cl, v) for v, cl in enumerate(current)]
    heapq.heapify(heap)
    removed = [False] * graph.n
    order, step_closure = [], []

    while heap:
        cl, v = heapq.heappop(heap)
        if removed[v] or cl != current[v]:
            continue
        order.append(v)
        step_closure.append(cl)
        removed[v] = True
        # closure numbers only depend on the 2-neighbourhood
        affected = _within_two(adjacency, v)
        for w in adjacency[v]:
            adjacency[w].discard(v)
        adjacency[v] = set()
        for x in affected:
            updated = closure_within(adjacency, x)
            if updated != current[x]:
                current[x] = updated
                heapq.heappush(heap, (updated, x))

    ordering = models.ClosureOrdering(
        order=tuple(order),
        step_closure=tuple(step_closure),
        gamma=1 + max(step_closure, default=0),
    )
    logger.debug(f"Closure ordering of {graph.n} vertices has gamma {ordering.gamma}.")
    return ordering


def ordering_gamma(graph: models.Graph, order: Sequence[int]) -> models.ClosureOrdering:
    """Step closures of a given ordering, each taken in the suffix graph."""
    if sorted(order) != list(graph.vertices()):
        raise DomainError("Ordering is not a permutation of the graph's vertices.")
    adjacency = [set(a) for a in graph.adjacency]
    step_closure = []
    for v in order:
        step_closure.append(closure_within(adjacency, v))
        for w in adjacency[v]:
            adjacency[w].discard(v)
        adjacency[v] = set()
    return models.ClosureOrdering(
        order=tuple(order),
        step_closure=tuple(step_closure),
        gamma=1 + max(step_closure, default=0),
    )


def degeneracy_ordering(graph: models.Graph) -> models.DegeneracyOrdering:
    degree = [graph.degree(v) for v in graph.vertices()]
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    removed = [False] * graph.n
    order, step_degree = [], []

    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        order.append(v)
        step_degree.append(d)
        removed[v] = True
        for w in graph.adjacency[v]:
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))

    return models.DegeneracyOrdering(
        order=tuple(order), step_degree=tuple(step_degree), d=max(step_degree, default=0)
    )


def graph_stats(graph: models.Graph) -> models.GraphStats:
    ordering = closure_ordering(graph)
    return models.GraphStats(
        n=graph.n,
        m=graph.m,
        max_degree=max((graph.degree(v) for v in graph.vertices()), default=0),
        c=c_closure(graph),
        d=degeneracy_ordering(graph).d,
        gamma=ordering.gamma,
    )


def is_weakly_one_closed(graph: models.Graph) -> bool:
    return closure_ordering(graph).gamma == 1


def format_ordering(graph: models.Graph, ordering: models.ClosureOrdering) -> str:
    return "".join(
        f"{rank} {graph.labels[v]} {cl}\n"
        for rank, (v, cl) in enumerate(zip(ordering.order, ordering.step_closure), start=1)
    )
