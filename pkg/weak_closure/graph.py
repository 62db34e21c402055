from itertools import combinations
from typing import Callable, Iterable, TextIO
import functools
import hashlib
import logging
import math

import networkx as nx

from weak_closure import models
from weak_closure.errors import ContractViolation, DomainError, ParameterError, ParseError


COMMENT_PREFIXES = ("#", "%")

Property = Callable[[models.Graph, models.VertexSet], bool]


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def parse_edge_list(text: str | TextIO) -> models.Graph:
    """Read a whitespace separated edge list into a simple undirected graph.

    Labels are mapped to dense ids in first-appearance order. Self-loops are
    dropped and repeated edges are kept once, both with a warning.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    ids: dict[str, int] = {}
    adjacency: list[set[int]] = []
    self_loops = 0
    duplicates = 0

    def vertex_id(label: str) -> int:
        if label not in ids:
            ids[label] = len(ids)
            adjacency.append(set())
        return ids[label]

    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIXES):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(
                f"expected two vertex tokens, found {len(tokens)}: {stripped!r}",
                line_number,
            )
        u, v = vertex_id(tokens[0]), vertex_id(tokens[1])
        if u == v:
            self_loops += 1
            continue
        if v in adjacency[u]:
            duplicates += 1
            continue
        adjacency[u].add(v)
        adjacency[v].add(u)

    if self_loops:
        logger.warning(f"Dropped {self_loops} self-loop(s).")
    if duplicates:
        logger.warning(f"Deduplicated {duplicates} repeated edge(s).")

    return models.Graph(
        labels=tuple(ids),
        adjacency=tuple(frozenset(a) for a in adjacency),
    )


def read_edge_list(path: str) -> models.Graph:
    with open(path, "r") as f:
        return parse_edge_list(f)


def serialize_edge_list(graph: models.Graph) -> str:
    """Edges grouped by their larger id, written so that parsing the text again
    assigns every label its current id.

    A vertex without a lower neighbour is introduced together with its
    successor when the two are adjacent, and by a self-loop line otherwise.
    """
    labels = graph.labels
    lines = []
    paired = None
    for v in graph.vertices():
        lower = sorted(u for u in graph.adjacency[v] if u < v and (u, v) != paired)
        if paired is None or paired[1] != v:
            if not any(u < v for u in graph.adjacency[v]):
                if v + 1 < graph.n and graph.has_edge(v, v + 1):
                    paired = (v, v + 1)
                    lines.append(f"{labels[v]} {labels[v + 1]}\n")
                else:
                    lines.append(f"{labels[v]} {labels[v]}\n")
        lines.extend(f"{labels[u]} {labels[v]}\n" for u in lower)
    return "".join(lines)


def graph_fingerprint(graph: models.Graph) -> str:
    digest = hashlib.sha256()
    digest.update("\t".join(graph.labels).encode())
    digest.update(b"\n")
    digest.update(serialize_edge_list(graph).encode())
    return digest.hexdigest()[:16]


def graph_from_edges(
    edges: Iterable[tuple[int, int]], n: int | None = None
) -> models.Graph:
    """Graph on ids 0..n-1 labelled by their decimal id."""
    edges = list(edges)
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adjacency[u].add(v)
            adjacency[v].add(u)
    return models.Graph(
        labels=tuple(str(i) for i in range(n)),
        adjacency=tuple(frozenset(a) for a in adjacency),
    )


def from_networkx(nx_graph: nx.Graph) -> models.Graph:
    ids = {node: i for i, node in enumerate(nx_graph.nodes)}
    adjacency = [set() for _ in ids]
    for a, b in nx_graph.edges:
        if a != b:
            adjacency[ids[a]].add(ids[b])
            adjacency[ids[b]].add(ids[a])
    return models.Graph(
        labels=tuple(str(node) for node in ids),
        adjacency=tuple(frozenset(a) for a in adjacency),
    )


def to_networkx(graph: models.Graph, vertex_set: Iterable[int] | None = None) -> nx.Graph:
    nx_graph = nx.Graph()
    members = graph.vertices() if vertex_set is None else list(vertex_set)
    nx_graph.add_nodes_from(members)
    inside = set(members)
    for u in members:
        nx_graph.add_edges_from((u, v) for v in graph.adjacency[u] if v in inside and u < v)
    return nx_graph


def disjoint_cliques(sizes: Iterable[int]) -> models.Graph:
    return from_networkx(
        nx.disjoint_union_all([nx.complete_graph(size) for size in sizes])
    )


def universal_vertex_with_triangles(t: int) -> models.Graph:
    """Vertex 0 adjacent to every vertex of t disjoint triangles."""
    nx_graph = nx.disjoint_union(
        nx.empty_graph(1), nx.disjoint_union_all([nx.complete_graph(3)] * t)
    )
    nx_graph.add_edges_from((0, v) for v in range(1, 3 * t + 1))
    return from_networkx(nx_graph)


def check_vertex_set(graph: models.Graph, vertex_set: Iterable[int]) -> models.VertexSet:
    canonical = (
        vertex_set
        if isinstance(vertex_set, models.VertexSet)
        else models.VertexSet.of(vertex_set)
    )
    for v in canonical:
        if v >= graph.n:
            raise DomainError(f"Vertex {v} is not in a graph with {graph.n} vertices.")
    return canonical


def induced_subgraph(
    graph: models.Graph, vertex_set: Iterable[int]
) -> tuple[models.Graph, tuple[int, ...]]:
    """G[X] together with the mapping from new ids to ids of G."""
    members = check_vertex_set(graph, vertex_set).members
    new_id = {v: i for i, v in enumerate(members)}
    adjacency = tuple(
        frozenset(new_id[u] for u in graph.adjacency[v] if u in new_id) for v in members
    )
    # members are validated vertices of an already validated graph
    subgraph = models.Graph.model_construct(
        labels=tuple(graph.labels[v] for v in members), adjacency=adjacency
    )
    return subgraph, members


def complement_components(
    graph: models.Graph, vertex_set: Iterable[int]
) -> list[models.VertexSet]:
    members = check_vertex_set(graph, vertex_set)
    complement = nx.complement(to_networkx(graph, members))
    return sorted(
        models.VertexSet.of(component)
        for component in nx.connected_components(complement)
    )


def count_edges(graph: models.Graph, vertex_set: Iterable[int]) -> int:
    inside = set(vertex_set)
    return sum(len(graph.adjacency[v] & inside) for v in inside) // 2


def check_splex(graph: models.Graph, vertex_set: Iterable[int], s: int) -> bool:
    if s < 1:
        raise ParameterError(f"s-plexes need s >= 1, got {s}.")
    inside = set(vertex_set)
    need = len(inside) - s
    return all(len(graph.adjacency[v] & inside) >= need for v in inside)


def check_defective_clique(graph: models.Graph, vertex_set: Iterable[int], s: int) -> bool:
    if s < 0:
        raise ParameterError(f"s-defective cliques need s >= 0, got {s}.")
    inside = set(vertex_set)
    return math.comb(len(inside), 2) - count_edges(graph, inside) <= s


def is_clique(graph: models.Graph, vertex_set: Iterable[int]) -> bool:
    inside = set(vertex_set)
    return all(inside - {v} <= graph.adjacency[v] for v in inside)


def is_independent(graph: models.Graph, vertex_set: Iterable[int]) -> bool:
    inside = set(vertex_set)
    return all(not (graph.adjacency[v] & inside) for v in inside)


def is_dominating(graph: models.Graph, vertex_set: Iterable[int]) -> bool:
    dominated = set(vertex_set)
    for v in list(dominated):
        dominated |= graph.adjacency[v]
    return len(dominated) == graph.n


def is_forest(graph: models.Graph, vertex_set: Iterable[int]) -> bool:
    members = list(vertex_set)
    if not members:
        return True
    return nx.is_forest(to_networkx(graph, members))


def is_bipartite(graph: models.Graph, vertex_set: Iterable[int]) -> bool:
    return nx.is_bipartite(to_networkx(graph, vertex_set))


def max_degree_within(graph: models.Graph, vertex_set: Iterable[int], bound: int) -> bool:
    inside = set(vertex_set)
    return all(len(graph.adjacency[v] & inside) <= bound for v in inside)


def edge_count_within(graph: models.Graph, vertex_set: Iterable[int], bound: int) -> bool:
    return count_edges(graph, vertex_set) <= bound


def find_diamond(graph: models.Graph) -> tuple[int, int, int, int] | None:
    """A vertex set inducing K4 minus an edge, or None if the graph is diamond-free."""
    for u, v in graph.edges():
        common = sorted(graph.adjacency[u] & graph.adjacency[v])
        for x, y in combinations(common, 2):
            if y not in graph.adjacency[x]:
                return tuple(sorted((u, v, x, y)))
    return None


def is_diamond_free(graph: models.Graph) -> bool:
    return find_diamond(graph) is None


def has_induced_c4_or_p4(graph: models.Graph) -> bool:
    for quad in combinations(graph.vertices(), 4):
        degrees = sorted(len(graph.adjacency[v] & set(quad)) for v in quad)
        if degrees in ([2, 2, 2, 2], [1, 1, 2, 2]):
            return True
    return False


def clique_property() -> Property:
    return is_clique


def splex_property(s: int) -> Property:
    return functools.partial(check_splex, s=s)


def defective_property(s: int) -> Property:
    return functools.partial(check_defective_clique, s=s)


def check_maximal(
    graph: models.Graph, vertex_set: Iterable[int], property: Property
) -> bool:
    """True iff no single vertex outside the set can be added keeping the property."""
    members = set(vertex_set)
    if not property(graph, members):
        raise ContractViolation(
            f"Vertex set {sorted(members)} does not have the property being maximised."
        )
    for v in graph.vertices():
        if v not in members and property(graph, members | {v}):
            return False
    return True
