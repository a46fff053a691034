"""
Matchings and edge dominating sets: bipartite maximum matching, the
maximality / domination checks, exact minimum edge dominating sets and
minimum maximal matchings, and the conversion of an edge dominating set
into a dominating matching that is no larger.
"""

import logging
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from app.config import resolve_limit
from app.errors import ForeignEdgeError, NotDominatingError, NotMatchingError, SizeLimitError
from app.graph_core import validate_bipartition
from app.schemas import Bipartition, Edge, EdgeDominatingSet, EdgeSet, Graph, Matching, canonical_edge

logger = logging.getLogger(__name__)

EdgesLike = Union[EdgeSet, Iterable[Sequence[int]]]


def _edges_of(edges: EdgesLike) -> Tuple[Edge, ...]:
    if isinstance(edges, EdgeSet):
        return edges.edges
    return tuple(sorted({canonical_edge(int(u), int(v)) for u, v in edges}))


def _require_subset(g: Graph, edges: Tuple[Edge, ...]) -> None:
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ForeignEdgeError((u, v))


def _covered(edges: Iterable[Edge]) -> set:
    return {v for edge in edges for v in edge}


def _dominates(g: Graph, edges: Iterable[Edge]) -> bool:
    covered = _covered(edges)
    return all(u in covered or v in covered for u, v in g.edges)


def _pairwise_disjoint(edges: Sequence[Edge]) -> bool:
    return len(_covered(edges)) == 2 * len(edges)


def matched_vertices(m: EdgeSet) -> Tuple[int, ...]:
    return tuple(sorted(m.covered()))


def maximum_matching(b: Graph, part: Bipartition) -> Matching:
    """Maximum matching of a bipartite graph (Hopcroft-Karp)."""
    validate_bipartition(b, part)
    mate = nx.bipartite.hopcroft_karp_matching(b.to_networkx(), top_nodes=part.X)
    return Matching(edges=[(u, mate[u]) for u in part.X if u in mate])


def is_matching(g: Graph, edges: EdgesLike) -> bool:
    members = _edges_of(edges)
    return all(g.has_edge(u, v) for u, v in members) and _pairwise_disjoint(members)


def is_edge_dominating(g: Graph, d: EdgesLike) -> bool:
    """Every edge of g outside d shares an endpoint with a member of d."""
    members = _edges_of(d)
    _require_subset(g, members)
    return _dominates(g, members)


def is_maximal_matching(g: Graph, m: EdgesLike) -> bool:
    """No edge of g can be added to m keeping it a matching."""
    members = _edges_of(m)
    _require_subset(g, members)
    if not _pairwise_disjoint(members):
        raise NotMatchingError(f"edges {list(members)} share endpoints")
    return _dominates(g, members)


def greedy_maximal_matching(g: Graph, order: Optional[Sequence[Edge]] = None) -> Matching:
    """Scan edges in the given order (lexicographic by default), keeping each one still free."""
    scan = g.edges if order is None else [canonical_edge(u, v) for u, v in order]
    _require_subset(g, tuple(scan))
    taken: List[Edge] = []
    used = set()
    for u, v in scan:
        if u not in used and v not in used:
            taken.append((u, v))
            used.update((u, v))
    return Matching(edges=taken)


# ============================================
# Exact minimizers
# ============================================

def _domination_masks(g: Graph) -> List[int]:
    """Bit j of masks[i] is set when edge j shares an endpoint with edge i (or j == i)."""
    incident = [0] * g.n
    for j, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << j
        incident[v] |= 1 << j
    return [incident[u] | incident[v] for u, v in g.edges]


def _size_floor(g: Graph) -> int:
    """An edge dominates itself and at most 2(max degree - 1) others."""
    if g.m == 0:
        return 0
    reach = 2 * g.max_degree - 1
    return -(-g.m // reach)


def _check_cap(g: Graph, operation: str, limit: Optional[int]) -> None:
    cap = resolve_limit(limit, "max_eds_edges")
    if g.m > cap:
        raise SizeLimitError(operation, g.m, cap)


def min_edge_dominating_exact(g: Graph, limit: Optional[int] = None) -> EdgeDominatingSet:
    """
    Minimum edge dominating set, lexicographically least among the minimum ones.
    Subset sizes are tried in ascending order starting from the covering bound.
    """
    _check_cap(g, "min_edge_dominating_exact", limit)
    masks = _domination_masks(g)
    full = (1 << g.m) - 1
    for size in range(_size_floor(g), g.m + 1):
        for chosen in combinations(range(g.m), size):
            seen = 0
            for i in chosen:
                seen |= masks[i]
            if seen == full:
                logger.debug("[eds] m=%d minimum edge dominating set has %d edges", g.m, size)
                return EdgeDominatingSet(edges=[g.edges[i] for i in chosen])
    return EdgeDominatingSet()


def _matchings_of_size(g: Graph, size: int) -> Iterator[Tuple[int, ...]]:
    """Matchings with `size` edges as ascending edge-index tuples, in lexicographic order."""
    chosen: List[int] = []

    def extend(start: int, used: int) -> Iterator[Tuple[int, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, g.m - (size - len(chosen)) + 1):
            u, v = g.edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append(i)
            yield from extend(i + 1, used | 1 << u | 1 << v)
            chosen.pop()

    yield from extend(0, 0)


def min_maximal_matching_exact(g: Graph, limit: Optional[int] = None) -> Matching:
    """Smallest maximal matching, lexicographically least among the smallest ones."""
    _check_cap(g, "min_maximal_matching_exact", limit)
    masks = _domination_masks(g)
    full = (1 << g.m) - 1
    for size in range(_size_floor(g), g.m + 1):
        for chosen in _matchings_of_size(g, size):
            seen = 0
            for i in chosen:
                seen |= masks[i]
            if seen == full:
                return Matching(edges=[g.edges[i] for i in chosen])
    return Matching()


# ============================================
# Edge dominating set -> matching
# ============================================

def _first_adjacent_pair(members: Sequence[Edge]) -> Optional[Tuple[Edge, Edge]]:
    for e1, e2 in combinations(members, 2):
        if set(e1) & set(e2):
            return e1, e2
    return None


def eds_to_matching(g: Graph, d: EdgesLike) -> Matching:
    """
    Turn an edge dominating set into a dominating matching with at most as
    many edges.

    Repeatedly take the first pair of members sharing an endpoint u. If either
    member can simply be dropped, drop it (the first one preferred). Otherwise
    drop the second member uw: every edge it alone dominated is wx with x
    uncovered, so adding the least such wx restores domination and the new
    edge touches no remaining member. Each round lowers the number of
    adjacent member pairs.
    """
    members = list(_edges_of(d))
    _require_subset(g, tuple(members))
    if not _dominates(g, members):
        raise NotDominatingError(f"edge set {members} does not dominate the graph")

    while True:
        pair = _first_adjacent_pair(members)
        if pair is None:
            break
        e1, e2 = pair
        for dropped in (e1, e2):
            rest = [e for e in members if e != dropped]
            if _dominates(g, rest):
                members = rest
                break
        else:
            rest = [e for e in members if e != e2]
            shared = (set(e1) & set(e2)).pop()
            w = e2[1] if e2[0] == shared else e2[0]
            covered = _covered(rest)
            replacement = min(canonical_edge(w, x) for x in g.neighbors(w) if x not in covered)
            members = sorted(rest + [replacement])
            logger.debug("[eds] replaced %s by %s", e2, replacement)

    return Matching(edges=members)
