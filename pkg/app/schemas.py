"""
Pydantic models for the domain objects, solver results, reports and the
HTTP request/response bodies.
"""

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    ValidationInfo,
    field_serializer,
    field_validator,
    model_validator,
)

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _canonical_edges(raw: Any) -> Tuple[Edge, ...]:
    pairs = set()
    for pair in raw:
        u, v = pair
        pairs.add(canonical_edge(int(u), int(v)))
    return tuple(sorted(pairs))


# ============================================
# Graphs
# ============================================

class Graph(BaseModel):
    """
    Undirected simple graph over vertices 0..n-1.

    Edges are stored canonically: each pair as (min, max), the whole set sorted
    lexicographically, so equality of two graphs is equality of edge sets.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    edges: Tuple[Edge, ...] = Field(default=(), description="Edges as (u, v) pairs, u < v")

    _adjacency: Tuple[frozenset, ...] = PrivateAttr(default=())
    _masks: Tuple[int, ...] = PrivateAttr(default=())

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, value: Any, info: ValidationInfo) -> Tuple[Edge, ...]:
        n = info.data.get("n", 0)
        edges = _canonical_edges(value)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        return edges

    def model_post_init(self, __context: Any) -> None:
        neighbors: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        self._adjacency = tuple(frozenset(s) for s in neighbors)
        self._masks = tuple(sum(1 << w for w in s) for s in neighbors)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> Tuple[frozenset, ...]:
        return self._adjacency

    @property
    def masks(self) -> Tuple[int, ...]:
        """Neighborhoods as bitmasks, bit w set iff w is a neighbor."""
        return self._masks

    def neighbors(self, v: int) -> frozenset:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self._adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adjacency[u]

    def vertices(self) -> range:
        return range(self.n)

    def to_networkx(self):
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


class Bipartition(BaseModel):
    """The (X, Y) split of a bipartite graph; both sides sorted."""

    model_config = ConfigDict(frozen=True)

    X: Tuple[int, ...] = ()
    Y: Tuple[int, ...] = ()

    @field_validator("X", "Y", mode="before")
    @classmethod
    def _sorted(cls, value: Any) -> Tuple[int, ...]:
        return tuple(sorted(int(v) for v in value))


class TotalGraphNode(BaseModel):
    """Origin of one vertex of T(G): an original vertex or an original edge."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["vertex", "edge"]
    vertex: Optional[int] = None
    edge: Optional[Edge] = None

    def label(self) -> str:
        if self.kind == "vertex":
            return f"v{self.vertex}"
        u, v = self.edge
        return f"e{u}-{v}"


class TotalGraphMap(BaseModel):
    """Back-mapping from T(G) vertex indices to vertices and edges of G."""

    model_config = ConfigDict(frozen=True)

    origin: Tuple[TotalGraphNode, ...] = ()

    def __len__(self) -> int:
        return len(self.origin)

    def index_of_vertex(self, v: int) -> int:
        return v

    def index_of_edge(self, edge: Edge) -> int:
        target = canonical_edge(*edge)
        for index, node in enumerate(self.origin):
            if node.kind == "edge" and node.edge == target:
                return index
        raise KeyError(edge)


# ============================================
# Colorings, matchings, extended cliques
# ============================================

class Coloring(BaseModel):
    """
    Vertex coloring with colors 1..k; `colors[v]` is the color of vertex v.
    A coloring shorter than the graph's vertex count is partial.
    """

    model_config = ConfigDict(frozen=True)

    colors: Tuple[int, ...] = ()

    @field_validator("colors")
    @classmethod
    def _positive(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for v, c in enumerate(value):
            if c < 1:
                raise ValueError(f"vertex {v} has color {c}; colors start at 1")
        return value

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def color_of(self, v: int) -> int:
        return self.colors[v]


class EdgeSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    edges: Tuple[Edge, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize(cls, value: Any) -> Tuple[Edge, ...]:
        return _canonical_edges(value)

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> frozenset:
        return frozenset(v for edge in self.edges for v in edge)


class Matching(EdgeSet):
    """Edge set whose members pairwise share no endpoint."""


class EdgeDominatingSet(EdgeSet):
    """Edge set touching every edge of its host graph."""


class ExtendedClique(BaseModel):
    """
    Extended clique of complement(b) given in terms of the bipartite host b:
    an independent vertex set I of b and a matching M of b avoiding I.
    """

    model_config = ConfigDict(frozen=True)

    independent: Tuple[int, ...] = Field(default=(), description="I: independent vertices of b")
    matching: Tuple[Edge, ...] = Field(default=(), description="M: matching edges of b")

    @field_validator("independent", mode="before")
    @classmethod
    def _sorted_vertices(cls, value: Any) -> Tuple[int, ...]:
        return tuple(sorted(set(int(v) for v in value)))

    @field_validator("matching", mode="before")
    @classmethod
    def _sorted_edges(cls, value: Any) -> Tuple[Edge, ...]:
        return _canonical_edges(value)

    @property
    def size(self) -> int:
        return len(self.independent) + len(self.matching)

    def covered(self) -> frozenset:
        return frozenset(self.independent) | frozenset(v for e in self.matching for v in e)


# ============================================
# Solver results
# ============================================

class GrundyResult(BaseModel):
    """Grundy number with a witness coloring achieving it."""

    model_config = ConfigDict(frozen=True)

    gamma: int
    witness: Coloring
    extended_clique: Optional[ExtendedClique] = None


class ApproxBounds(BaseModel):
    """Polynomial sandwich lower <= Gamma <= upper for complements of bipartite graphs."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lower: int
    upper: Fraction

    @field_serializer("upper")
    def _serialize_upper(self, value: Fraction) -> str:
        return format_fraction(value)

    @property
    def upper_floor(self) -> int:
        return self.upper.numerator // self.upper.denominator

    def contains(self, gamma: int) -> bool:
        return self.lower <= gamma <= self.upper


def format_fraction(value: Fraction) -> str:
    """Reduced fraction as "p/q", or "p" when q == 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ============================================
# Reduction instances and reports
# ============================================

class GrundyInstance(BaseModel):
    """GRUNDY NUMBER instance: is Gamma(graph) >= threshold? graph is a complement of a bipartite graph."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    threshold: int


class EdsInstance(BaseModel):
    """EDGE DOMINATING SET instance: does graph have an EDS with at most budget edges?"""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    budget: int = Field(..., ge=0)


class ReductionReport(BaseModel):
    """Outcome of checking one (b, k) pair of the EDS -> Grundy reduction."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int
    k: int
    gamma_prime: int = Field(..., description="minimum maximal matching size of b")
    gamma: int = Field(..., alias="Gamma", description="n - gamma_prime via extended cliques")
    gamma_oracle: int = Field(..., alias="Gamma_oracle", description="Grundy number of complement(b) by exact order search")
    lhs: bool = Field(..., description="gamma_prime <= k")
    rhs: bool = Field(..., description="Gamma >= n - k")
    verdict: Literal["PASS", "FAIL"]


REPORTED_QUANTITIES = frozenset(
    {"Gamma", "chi", "alpha_total", "gamma_prime", "mu", "lower", "upper", "verdict"}
)


class IdentityResult(BaseModel):
    """Pass count of one identity of the verification suite."""

    name: str
    checked: int = 0
    passed: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed


class VerifyReport(BaseModel):
    """Outcome of the identity suite; identical flags give an identical report."""

    max_n: int
    count: int
    seeds: List[int] = Field(default_factory=list)
    lemma_trials: int = 0
    identities: List[IdentityResult] = Field(default_factory=list)
    verdict: Literal["PASS", "FAIL"] = "PASS"


class RunReport(BaseModel):
    """Result of one CLI run, printed as text or as a single JSON document."""

    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    results: Dict[str, Any] = Field(default_factory=dict)
    parameters: Dict[str, Any] = Field(default_factory=dict)
    witness: Optional[str] = None
    elapsed_ms: Optional[float] = None
    identities: Optional[List[IdentityResult]] = None

    @model_validator(mode="after")
    def _known_quantities(self) -> "RunReport":
        unknown = set(self.results) - REPORTED_QUANTITIES
        if unknown:
            raise ValueError(f"unknown reported quantities: {sorted(unknown)}")
        return self


# ============================================
# HTTP request bodies
# ============================================

class GraphPayload(BaseModel):
    """Graph given as a vertex count and an edge list."""

    n: int = Field(..., ge=0, description="Number of vertices", examples=[4])
    edges: List[Tuple[int, int]] = Field(
        default_factory=list,
        description="Edges as [u, v] pairs with 0-based endpoints",
        examples=[[[0, 1], [1, 2], [2, 3]]],
    )


class GrundyRequest(GraphPayload):
    method: Literal["exact", "structural", "approx"] = Field(
        "structural",
        description="exact: exact search on the given graph; structural/approx: the graph is the bipartite b",
    )


class ReduceRequest(GraphPayload):
    k: int = Field(..., ge=0, description="EDS budget", examples=[1])


class VerifyRequest(BaseModel):
    max_n: int = Field(4, ge=0, le=6, description="Exhaustive corpus bound")
    count: int = Field(10, ge=0, le=200, description="Random instances")
    seeds: List[int] = Field(default_factory=lambda: [0], description="Seeds for the random corpora")


class ReduceResponse(BaseModel):
    complement: Graph
    threshold: int
    report: Optional[ReductionReport] = None


class EdsResponse(BaseModel):
    gamma_prime: int
    edge_dominating_set: EdgeDominatingSet
    min_maximal_matching: Matching


class TotalGraphResponse(BaseModel):
    total: Graph
    origin: List[str]
    alpha_total: Optional[int] = None
