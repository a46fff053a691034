"""
Core graph operations: construction, complement, bipartition, total graph
and random generators.
Every function is pure; graphs are immutable pydantic models.
"""

import logging
from collections import deque
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from app.errors import (
    BipartitionError,
    GenerationError,
    GraphError,
    OddCycleError,
    SelfLoopError,
    VertexRangeError,
)
from app.schemas import Bipartition, Edge, Graph, TotalGraphMap, TotalGraphNode

logger = logging.getLogger(__name__)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph on vertices 0..n-1.

    Duplicate edges collapse; self-loops and out-of-range endpoints raise.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    pairs: List[Edge] = []
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexRangeError(w, n)
        if u == v:
            raise SelfLoopError(u)
        pairs.append((u, v))
    return Graph(n=n, edges=pairs)


def empty_graph(n: int) -> Graph:
    return Graph(n=n)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def graph_from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph whose nodes are exactly 0..n-1."""
    n = graph.number_of_nodes()
    if set(graph.nodes()) != set(range(n)):
        raise GraphError("networkx graph nodes must be the integers 0..n-1")
    return build_graph(n, graph.edges())


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Rename vertex v to permutation[v]."""
    if sorted(permutation) != list(range(g.n)):
        raise GraphError(f"not a permutation of 0..{g.n - 1}: {list(permutation)}")
    return Graph(n=g.n, edges=[(permutation[u], permutation[v]) for u, v in g.edges])


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    masks = g.masks
    edges = []
    for u in range(g.n):
        missing = full & ~masks[u] & ~((1 << (u + 1)) - 1)
        while missing:
            low = missing & -missing
            edges.append((u, low.bit_length() - 1))
            missing ^= low
    return Graph(n=g.n, edges=edges)


# ============================================
# Bipartiteness
# ============================================

def _odd_cycle(parent: dict, u: int, w: int) -> List[int]:
    """Cycle closed by the edge u-w between two BFS-tree vertices of equal depth parity."""
    path_u = [u]
    while parent[path_u[-1]] is not None:
        path_u.append(parent[path_u[-1]])
    ancestors_u = {v: i for i, v in enumerate(path_u)}

    path_w = [w]
    while path_w[-1] not in ancestors_u:
        path_w.append(parent[path_w[-1]])
    lca = path_w.pop()

    up = path_u[: ancestors_u[lca] + 1]
    return list(reversed(up)) + path_w


def find_bipartition(g: Graph) -> Bipartition:
    """
    Two-color g by breadth-first search.

    Components are processed in ascending order of their least vertex, which
    goes to X; neighbors are scanned in ascending order. Raises OddCycleError
    with a witness cycle when g is not bipartite.
    """
    side = [-1] * g.n
    parent: dict = {}
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    raise OddCycleError(_odd_cycle(parent, u, w))
    return Bipartition(
        X=[v for v in range(g.n) if side[v] == 0],
        Y=[v for v in range(g.n) if side[v] == 1],
    )


def is_bipartite(g: Graph) -> bool:
    try:
        find_bipartition(g)
    except OddCycleError:
        return False
    return True


def validate_bipartition(g: Graph, part: Bipartition) -> None:
    """Raise BipartitionError unless part splits V(g) with every edge crossing."""
    xs, ys = set(part.X), set(part.Y)
    if xs & ys:
        raise BipartitionError(f"X and Y overlap on {sorted(xs & ys)}")
    if xs | ys != set(range(g.n)):
        raise BipartitionError("X and Y do not cover the vertex set")
    for u, v in g.edges:
        if (u in xs) == (v in xs):
            raise BipartitionError(f"edge ({u}, {v}) does not cross the bipartition")


def max_degree_filter(g: Graph, d: int) -> bool:
    """True iff every vertex of g has degree at most d."""
    return g.max_degree <= d


# ============================================
# Total graph
# ============================================

def total_graph(g: Graph) -> Tuple[Graph, TotalGraphMap]:
    """
    Total graph T(g) on V(g) followed by E(g).

    Vertex v of g keeps index v; the i-th edge in lexicographic order gets
    index n + i. Two vertices of T(g) are adjacent when the original vertices
    are adjacent, the original edges share an endpoint, or the vertex is an
    endpoint of the edge.
    """
    n = g.n
    index = {edge: n + i for i, edge in enumerate(g.edges)}
    edges = list(g.edges)
    for (u, v), i in index.items():
        edges.append((u, i))
        edges.append((v, i))
    for w in range(n):
        incident = sorted(index[(min(w, x), max(w, x))] for x in g.neighbors(w))
        edges.extend(combinations(incident, 2))

    origin = [TotalGraphNode(kind="vertex", vertex=v) for v in range(n)]
    origin += [TotalGraphNode(kind="edge", edge=edge) for edge in g.edges]
    return Graph(n=n + g.m, edges=edges), TotalGraphMap(origin=origin)


# ============================================
# Generators
# ============================================

def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GenerationError(f"probability must lie in [0, 1], got {p}")


def random_bipartite(n1: int, n2: int, p: float, seed: int) -> Tuple[Graph, Bipartition]:
    """
    Random bipartite graph with X = 0..n1-1 and Y = n1..n1+n2-1; each cross
    pair is an edge independently with probability p. Deterministic per seed.
    """
    _check_probability(p)
    sample = nx.bipartite.random_graph(n1, n2, p, seed=seed)
    graph = build_graph(n1 + n2, sample.edges())
    return graph, Bipartition(X=range(n1), Y=range(n1, n1 + n2))


def random_bipartite_bounded(
    n1: int,
    n2: int,
    p: float,
    seed: int,
    max_degree: int,
    retries: int,
) -> Tuple[Graph, Bipartition]:
    """Rejection-sample random_bipartite until every degree is at most max_degree."""
    _check_probability(p)
    for attempt in range(retries):
        graph, part = random_bipartite(n1, n2, p, seed + attempt)
        if max_degree_filter(graph, max_degree):
            logger.debug("[gen] accepted after %d attempt(s)", attempt + 1)
            return graph, part
    raise GenerationError(
        f"no graph with max degree <= {max_degree} after {retries} attempts"
    )


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) random graph, deterministic per seed."""
    _check_probability(p)
    return graph_from_networkx(nx.gnp_random_graph(n, p, seed=seed))
