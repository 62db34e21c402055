from typing import Iterator
import logging

from weak_closure import closure, models


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def _expand(
    graph: models.Graph, clique: list[int], candidates: set[int], excluded: set[int]
) -> Iterator[models.VertexSet]:
    if not candidates:
        if not excluded:
            yield models.VertexSet.of(clique)
        return
    pivot = min(candidates, key=lambda u: (-len(graph.adjacency[u] & candidates), u))
    for v in sorted(candidates - graph.adjacency[pivot]):
        clique.append(v)
        yield from _expand(
            graph,
            clique,
            candidates & graph.adjacency[v],
            excluded & graph.adjacency[v],
        )
        clique.pop()
        candidates = candidates - {v}
        excluded = excluded | {v}


def iter_maximal_cliques(
    graph: models.Graph, ordering: models.ClosureOrdering | None = None
) -> Iterator[models.VertexSet]:
    """Every maximal clique once, rooted at its earliest vertex in the closure ordering."""
    if graph.n == 0:
        yield models.VertexSet()
        return
    ordering = ordering or closure.closure_ordering(graph)
    position = ordering.positions()
    for i, v in enumerate(ordering.order):
        later = {w for w in graph.adjacency[v] if position[w] > i}
        earlier = {w for w in graph.adjacency[v] if position[w] < i}
        yield from _expand(graph, [v], later, earlier)


def enumerate_maximal_cliques(graph: models.Graph) -> list[models.VertexSet]:
    cliques = sorted(iter_maximal_cliques(graph))
    logger.debug(f"Found {len(cliques)} maximal cliques.")
    return cliques


def count_maximal_cliques(graph: models.Graph) -> int:
    return sum(1 for _ in iter_maximal_cliques(graph))
