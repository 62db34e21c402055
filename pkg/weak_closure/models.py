from typing import Annotated, Iterable, Iterator, Literal
import logging

import pydantic


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


NonNegativeIntField = Annotated[int, pydantic.Field(ge=0)]
PositiveIntField = Annotated[int, pydantic.Field(gt=0)]


class VertexSet(pydantic.RootModel, frozen=True):
    """Canonical vertex subset: strictly ascending vertex ids."""

    root: tuple[NonNegativeIntField, ...] = ()

    @pydantic.model_validator(mode="after")
    def validate_canonical(self):
        for a, b in zip(self.root, self.root[1:]):
            if a >= b:
                raise ValueError(f"Vertex set {self.root} is not strictly ascending.")
        return self

    @classmethod
    def of(cls, members: Iterable[int]) -> "VertexSet":
        return cls(tuple(sorted(set(members))))

    @property
    def members(self) -> tuple[int, ...]:
        return self.root

    def __iter__(self) -> Iterator[int]:
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __contains__(self, v) -> bool:
        return v in self.root

    def __lt__(self, other: "VertexSet") -> bool:
        return self.root < other.root

    def __hash__(self):
        return hash(self.root)


class Graph(pydantic.BaseModel, frozen=True):
    """Simple undirected graph on vertex ids 0..n-1 with original labels."""

    labels: tuple[str, ...] = ()
    adjacency: tuple[frozenset[NonNegativeIntField], ...] = ()

    @pydantic.model_validator(mode="after")
    def validate_simple(self):
        n = len(self.adjacency)
        if len(self.labels) != n:
            raise ValueError(
                f"Graph has {n} adjacency sets but {len(self.labels)} labels."
            )
        if len(set(self.labels)) != n:
            raise ValueError("Vertex labels must be unique.")
        for v, neighbors in enumerate(self.adjacency):
            for u in neighbors:
                if u >= n:
                    raise ValueError(f"Neighbor {u} of vertex {v} is out of range.")
                if u == v:
                    raise ValueError(f"Vertex {v} has a self-loop.")
                if v not in self.adjacency[u]:
                    raise ValueError(f"Edge {v}-{u} is not symmetric.")
        return self

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield u, v

    def label_set(self, vertex_set: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in vertex_set]

    def __hash__(self):
        return hash((self.labels, self.adjacency))


class BicliqueWitness(pydantic.BaseModel):
    side_s: VertexSet
    side_t: VertexSet
    induced: bool = False

    @pydantic.model_validator(mode="after")
    def validate_disjoint(self):
        common = set(self.side_s) & set(self.side_t)
        if common:
            raise ValueError(f"Biclique sides share vertices {sorted(common)}.")
        return self

    @property
    def edge_count(self) -> int:
        return len(self.side_s) * len(self.side_t)


class ProblemAnswer(pydantic.BaseModel):
    problem: str
    params: dict[str, int | str] = {}
    decision: bool
    witness: VertexSet | None = None
    biclique: BicliqueWitness | None = None
    stats: dict[str, NonNegativeIntField] = {}

    @pydantic.model_validator(mode="after")
    def validate_witness(self):
        if self.decision and self.witness is None and self.biclique is None:
            raise ValueError(f"Yes-answer for {self.problem} carries no witness.")
        return self


class SubsetSumInstance(pydantic.BaseModel):
    values: Annotated[list[PositiveIntField], pydantic.Field(min_length=1)]
    lo: NonNegativeIntField
    hi: NonNegativeIntField

    @pydantic.model_validator(mode="after")
    def validate_range(self):
        if self.lo > self.hi:
            raise ValueError(f"Empty target range [{self.lo}, {self.hi}].")
        return self


class SubsetSumAnswer(pydantic.BaseModel):
    decision: bool
    indices: tuple[NonNegativeIntField, ...] = ()
    total: NonNegativeIntField = 0


class ClosureOrdering(pydantic.BaseModel):
    order: tuple[NonNegativeIntField, ...]
    step_closure: tuple[NonNegativeIntField, ...]
    gamma: PositiveIntField

    @pydantic.model_validator(mode="after")
    def validate_ordering(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("Closure ordering is not a permutation of the vertices.")
        if len(self.step_closure) != len(self.order):
            raise ValueError("One step closure per position is required.")
        if self.gamma != 1 + max(self.step_closure, default=0):
            raise ValueError(
                f"gamma {self.gamma} does not match step closures {self.step_closure}."
            )
        return self

    def positions(self) -> list[int]:
        """Position of every vertex in the ordering."""
        position = [0] * len(self.order)
        for i, v in enumerate(self.order):
            position[v] = i
        return position


class DegeneracyOrdering(pydantic.BaseModel):
    order: tuple[NonNegativeIntField, ...]
    step_degree: tuple[NonNegativeIntField, ...]
    d: NonNegativeIntField

    @pydantic.model_validator(mode="after")
    def validate_ordering(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("Degeneracy ordering is not a permutation of the vertices.")
        if self.d != max(self.step_degree, default=0):
            raise ValueError(f"d {self.d} does not match step degrees.")
        return self


class GraphStats(pydantic.BaseModel):
    n: NonNegativeIntField
    m: NonNegativeIntField
    max_degree: NonNegativeIntField
    c: PositiveIntField
    d: NonNegativeIntField
    gamma: PositiveIntField


class KernelInstance(pydantic.BaseModel):
    graph: Graph
    k: NonNegativeIntField
    gamma_used: PositiveIntField
    removed: tuple[NonNegativeIntField, ...] = ()
    # kernel vertex id -> input vertex id
    kept: tuple[NonNegativeIntField, ...] = ()
    shortcut: bool = False

    @pydantic.model_validator(mode="after")
    def validate_size(self):
        if len(self.kept) != self.graph.n:
            raise ValueError("Every kernel vertex needs an input vertex id.")
        if not self.shortcut and self.graph.n >= self.gamma_used * self.k**2:
            raise ValueError(
                f"Kernel has {self.graph.n} vertices, not below"
                f" gamma*k^2 = {self.gamma_used * self.k**2}."
            )
        return self


class EnumFamily(pydantic.BaseModel):
    sets: tuple[VertexSet, ...]
    fingerprint: str
    s: NonNegativeIntField
    kind: Literal["clique", "splex", "defective", "biclique"]

    @pydantic.model_validator(mode="after")
    def validate_unique(self):
        if len(set(self.sets)) != len(self.sets):
            logger.error(f"Duplicate sets in {self.kind} family {self.fingerprint}.")
            raise ValueError("Enumerated family contains duplicates.")
        return self

    def __len__(self) -> int:
        return len(self.sets)
