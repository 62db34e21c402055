from dataclasses import dataclass
from typing import Callable, Iterable
import logging

from weak_closure import closure, config, graph, models
from weak_closure.errors import ConfigurationError, ParameterError, ResourceLimitError


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class MonotoneClass:
    name: str
    membership: Callable[[models.Graph, Iterable[int]], bool]
    parameter: int | None = None


def monotone_class(name: str, parameter: int | None = None) -> MonotoneClass:
    if name == "edgeless":
        return MonotoneClass(name, graph.is_independent)
    if name == "acyclic":
        return MonotoneClass(name, graph.is_forest)
    if name == "bipartite":
        return MonotoneClass(name, graph.is_bipartite)
    if name in ("max-degree", "max-edges"):
        if parameter is None or parameter < 0:
            raise ParameterError(f"Class {name} needs a non-negative parameter.")
        check = graph.max_degree_within if name == "max-degree" else graph.edge_count_within
        return MonotoneClass(
            name, lambda host, members: check(host, members, parameter), parameter
        )
    raise ConfigurationError(f"Unknown monotone class {name}.")


MONOTONE_CLASS_NAMES = ("edgeless", "acyclic", "bipartite", "max-degree", "max-edges")


def _rule1_pass(
    alive: set[int], order: Iterable[int], adjacency: tuple[frozenset[int], ...], threshold: int
) -> list[int]:
    """One back-to-front sweep; suffix degrees only see surviving later vertices."""
    order = [v for v in order if v in alive]
    suffix: set[int] = set()
    removed = []
    for v in reversed(order):
        if len(adjacency[v] & suffix) >= threshold:
            removed.append(v)
            alive.discard(v)
        else:
            suffix.add(v)
    return removed


def apply_rule1(
    host: models.Graph, k: int, fixed_ordering: bool = False
) -> models.KernelInstance:
    if k < 1:
        raise ParameterError(f"Rule 1 needs k >= 1, got {k}.")
    alive = set(host.vertices())
    removed: list[int] = []

    if fixed_ordering:
        ordering = closure.closure_ordering(host)
        gamma = ordering.gamma
        removed += _rule1_pass(alive, ordering.order, host.adjacency, gamma * k)
    else:
        while True:
            current, mapping = graph.induced_subgraph(host, alive)
            ordering = closure.closure_ordering(current)
            gamma = ordering.gamma
            sweep = _rule1_pass(
                alive, (mapping[v] for v in ordering.order), host.adjacency, gamma * k
            )
            if not sweep:
                break
            removed += sweep

    kernel_graph, kept = graph.induced_subgraph(host, alive)
    shortcut = kernel_graph.n >= gamma * k * k
    logger.info(
        f"Rule 1 removed {len(removed)} vertices; kernel has {kernel_graph.n} vertices"
        f" (gamma={gamma}, k={k}{', shortcut' if shortcut else ''})."
    )
    return models.KernelInstance(
        graph=kernel_graph,
        k=k,
        gamma_used=gamma,
        removed=tuple(removed),
        kept=kept,
        shortcut=shortcut,
    )


def greedy_independent_set(host: models.Graph) -> list[int]:
    """Repeatedly take a minimum-degree vertex and delete its closed neighbourhood."""
    alive = set(host.vertices())
    chosen = []
    while alive:
        v = min(alive, key=lambda x: (len(host.adjacency[x] & alive), x))
        chosen.append(v)
        alive -= host.adjacency[v] | {v}
    return chosen


class _KernelSearch:
    """Exact search for k vertices inducing a member of a monotone class."""

    def __init__(self, host: models.Graph, k: int, cls: MonotoneClass, node_budget: int):
        self.host = host
        self.k = k
        self.cls = cls
        self.node_budget = node_budget
        self.nodes = 0
        self.failed: set[tuple[frozenset[int], frozenset[int]]] = set()

    def run(self) -> frozenset[int] | None:
        return self._search(frozenset(), frozenset(self.host.vertices()))

    def _search(self, chosen: frozenset[int], candidates: frozenset[int]) -> frozenset[int] | None:
        if len(chosen) == self.k:
            return chosen
        if len(chosen) + len(candidates) < self.k or (chosen, candidates) in self.failed:
            return None
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise ResourceLimitError(
                f"Kernel search exceeded {self.node_budget} nodes.",
                partial={"nodes": self.nodes - 1, "kernel_n": self.host.n},
            )
        x = min(candidates, key=lambda u: (-len(self.host.adjacency[u] & candidates), u))
        rest = candidates - {x}
        result = None
        # membership is closed under deletion, so a failing partial set cannot grow
        if self.cls.membership(self.host, chosen | {x}):
            result = self._search(chosen | {x}, rest)
        if result is None:
            result = self._search(chosen, rest)
        if result is None:
            self.failed.add((chosen, candidates))
        return result


def solve_monotone_subgraph(
    host: models.Graph,
    k: int,
    cls: MonotoneClass,
    fixed_ordering: bool = False,
    node_budget: int = config.WEAKCLOSE_NODE_BUDGET,
    problem: str = "monotone-subgraph",
) -> models.ProblemAnswer:
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}.")
    params = {"class": cls.name, "k": k}
    if cls.parameter is not None:
        params["param"] = cls.parameter
    if k == 0:
        return models.ProblemAnswer(
            problem=problem, params=params, decision=True, witness=models.VertexSet()
        )

    kernel = apply_rule1(host, k, fixed_ordering=fixed_ordering)
    stats = {"kernel_n": kernel.graph.n, "removed": len(kernel.removed)}
    if kernel.shortcut:
        independent = sorted(greedy_independent_set(kernel.graph)[:k])
        return models.ProblemAnswer(
            problem=problem,
            params=params,
            decision=True,
            witness=models.VertexSet.of(kernel.kept[v] for v in independent),
            stats=stats | {"shortcut": 1},
        )

    search = _KernelSearch(kernel.graph, k, cls, node_budget)
    found = search.run()
    stats["nodes"] = search.nodes
    return models.ProblemAnswer(
        problem=problem,
        params=params,
        decision=found is not None,
        witness=None if found is None else models.VertexSet.of(kernel.kept[v] for v in found),
        stats=stats,
    )


def solve_independent_set(
    host: models.Graph, k: int, fixed_ordering: bool = False
) -> models.ProblemAnswer:
    return solve_monotone_subgraph(
        host, k, monotone_class("edgeless"), fixed_ordering, problem="independent-set"
    )


def find_independent_set(host: models.Graph, k: int) -> models.VertexSet | None:
    return solve_independent_set(host, k).witness


def solve_sparsest_k_subgraph(
    host: models.Graph, k: int, t: int, fixed_ordering: bool = False
) -> models.ProblemAnswer:
    if t < 0:
        raise ParameterError(f"t must be non-negative, got {t}.")
    answer = solve_monotone_subgraph(
        host, k, monotone_class("max-edges", t), fixed_ordering, problem="sparsest"
    )
    return answer.model_copy(update={"params": {"k": k, "t": t}})
