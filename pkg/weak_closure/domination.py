from itertools import combinations
import logging
import math

from weak_closure import closure, models
from weak_closure.errors import ContractViolation, ParameterError


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def _restricted(host: models.Graph, alive: frozenset[int]) -> list[frozenset[int]]:
    return [host.adjacency[v] & alive if v in alive else frozenset() for v in host.vertices()]


class _IndependentDomination:
    def __init__(self, host: models.Graph, gamma: int):
        self.host = host
        self.gamma = gamma
        self.nodes = 0

    def greedy(self, alive: frozenset[int]) -> list[tuple[int, frozenset[int]]]:
        """Maximal independent set built from minimum-closure vertices.

        Each chosen vertex is paired with the vertex set it was chosen in.
        """
        chosen = []
        while alive:
            adjacency = _restricted(self.host, alive)
            v = min(alive, key=lambda x: (closure.closure_within(adjacency, x), x))
            chosen.append((v, alive))
            alive = alive - adjacency[v] - {v}
        return chosen

    def solve(self, alive: frozenset[int], k: int) -> list[int] | None:
        self.nodes += 1
        if not alive:
            return []
        if k == 0:
            return None
        independent = self.greedy(alive)
        if len(independent) <= k:
            return [v for v, _ in independent]

        # a solution of size k dominates the first k+1 greedy vertices, so one of
        # its vertices is adjacent to two of them
        head = independent[: k + 1]
        branch: set[int] = set()
        for (x, remaining), (y, _) in combinations(head, 2):
            branch |= self.host.adjacency[x] & self.host.adjacency[y] & remaining
        limit = (self.gamma - 1) * math.comb(k + 1, 2)
        if len(branch) > limit:
            raise ContractViolation(
                f"Branching set of {len(branch)} vertices exceeds (gamma-1)*C(k+1,2) = {limit}."
            )
        for u in sorted(branch):
            rest = self.solve(alive - self.host.adjacency[u] - {u}, k - 1)
            if rest is not None:
                return [u] + rest
        return None


def solve_ids(host: models.Graph, k: int) -> models.ProblemAnswer:
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}.")
    gamma = closure.closure_ordering(host).gamma
    search = _IndependentDomination(host, gamma)
    found = search.solve(frozenset(host.vertices()), k)
    return models.ProblemAnswer(
        problem="ids",
        params={"k": k},
        decision=found is not None,
        witness=None if found is None else models.VertexSet.of(found),
        stats={"gamma": gamma, "nodes": search.nodes},
    )


class _CliqueDomination:
    def __init__(self, host: models.Graph, ordering: models.ClosureOrdering):
        self.host = host
        self.gamma = ordering.gamma
        self.order = ordering.order
        self.nodes = 0

    def solve(self, alive: frozenset[int], k: int, chosen: list[int], i: int) -> list[int] | None:
        """Dominating clique through chosen whose first vertex in the ordering is v_i."""
        self.nodes += 1
        v = chosen[0]
        dominated = set(chosen)
        for x in chosen:
            dominated |= self.host.adjacency[x]
        if alive <= dominated:
            return list(chosen)
        if k == 0:
            return None

        # vertices dominated by later choices were deleted, so w is undominated
        w = min(alive - self.host.adjacency[v] - {v})
        branch = set(self.order[i:]) & alive & self.host.adjacency[w]
        for x in chosen:
            branch &= self.host.adjacency[x]
        if self.gamma >= 2 and len(branch) > self.gamma - 1:
            raise ContractViolation(
                f"Branching on {len(branch)} vertices exceeds gamma-1 = {self.gamma - 1}."
            )
        for u in sorted(branch):
            rest = alive - (self.host.adjacency[u] - self.host.adjacency[v] - {v})
            found = self.solve(rest, k - 1, chosen + [u], i)
            if found is not None:
                return found
        return None


def solve_dominating_clique(host: models.Graph, k: int) -> models.ProblemAnswer:
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}.")
    if k == 0 or host.n == 0:
        decision = host.n == 0
        return models.ProblemAnswer(
            problem="dominating-clique",
            params={"k": k},
            decision=decision,
            witness=models.VertexSet() if decision else None,
        )

    ordering = closure.closure_ordering(host)
    search = _CliqueDomination(host, ordering)
    everything = frozenset(host.vertices())
    for i, v in enumerate(ordering.order):
        found = search.solve(everything, k - 1, [v], i)
        if found is not None:
            return models.ProblemAnswer(
                problem="dominating-clique",
                params={"k": k},
                decision=True,
                witness=models.VertexSet.of(found),
                stats={"gamma": ordering.gamma, "nodes": search.nodes},
            )
    return models.ProblemAnswer(
        problem="dominating-clique",
        params={"k": k},
        decision=False,
        stats={"gamma": ordering.gamma, "nodes": search.nodes},
    )
