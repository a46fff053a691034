"""
Brute-force reference solvers and small-graph enumeration.

These deliberately avoid the search code of the fast implementations so the
verification suite compares two independent computations of each quantity.
"""

from itertools import combinations, permutations
from typing import Dict, Iterator, List, Optional, Tuple

from app.config import resolve_limit
from app.errors import SizeLimitError
from app.graph_core import find_bipartition
from app.schemas import Bipartition, Graph


def _cap(operation: str, size: int, limit: Optional[int], field: str) -> None:
    cap = resolve_limit(limit, field)
    if size > cap:
        raise SizeLimitError(operation, size, cap)


def _popcount(x: int) -> int:
    return bin(x).count("1")


# ============================================
# Independence and matchings
# ============================================

def max_independent_set_exact(g: Graph, limit: Optional[int] = None) -> Tuple[int, ...]:
    """
    Maximum independent set by include/exclude branching on the least
    candidate vertex, include first. Only strictly larger sets replace the
    incumbent, so the result is the lexicographically least maximum set.
    """
    _cap("max_independent_set_exact", g.n, limit, "max_mis_n")
    masks = g.masks
    best: List[Tuple[int, ...]] = [()]
    chosen: List[int] = []

    def search(candidates: int) -> None:
        if len(chosen) + _popcount(candidates) <= len(best[0]):
            return
        if candidates == 0:
            best[0] = tuple(chosen)
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        chosen.append(v)
        search(candidates & ~low & ~masks[v])
        chosen.pop()
        search(candidates & ~low)

    search((1 << g.n) - 1)
    return best[0]


def _matching_number(masks: Tuple[int, ...], allowed: int, memo: Dict[int, int]) -> int:
    """Largest matching inside the vertex set `allowed`: the least vertex stays single or pairs with a neighbor."""
    if allowed == 0:
        return 0
    if allowed in memo:
        return memo[allowed]
    low = allowed & -allowed
    v = low.bit_length() - 1
    rest = allowed & ~low
    best = _matching_number(masks, rest, memo)
    partners = masks[v] & rest
    while partners:
        bit = partners & -partners
        best = max(best, 1 + _matching_number(masks, rest & ~bit, memo))
        partners ^= bit
    memo[allowed] = best
    return best


def maximum_matching_brute(g: Graph, limit: Optional[int] = None) -> int:
    _cap("maximum_matching_brute", g.n, limit, "max_brute_n")
    return _matching_number(g.masks, (1 << g.n) - 1, {})


def max_extended_clique_brute(b: Graph, limit: Optional[int] = None) -> int:
    """Max |I| + |M| over every independent I of b and every matching M of b avoiding I."""
    _cap("max_extended_clique_brute", b.n, limit, "max_brute_n")
    masks = b.masks
    everything = (1 << b.n) - 1
    memo: Dict[int, int] = {}
    best = 0
    for subset in range(1 << b.n):
        if any(subset >> v & 1 and masks[v] & subset for v in range(b.n)):
            continue
        best = max(best, _popcount(subset) + _matching_number(masks, everything & ~subset, memo))
    return best


def min_edge_dominating_brute(g: Graph, limit: Optional[int] = None) -> int:
    """Smallest edge set touching every edge, by plain subset scan."""
    _cap("min_edge_dominating_brute", g.m, limit, "max_eds_edges")
    for size in range(g.m + 1):
        for chosen in combinations(g.edges, size):
            touched = {v for edge in chosen for v in edge}
            if all(u in touched or v in touched for u, v in g.edges):
                return size
    return 0


# ============================================
# Coloring oracles
# ============================================

def grundy_exact_by_orderings(g: Graph, limit: Optional[int] = None) -> int:
    """Largest first-fit color count over all n! vertex orders."""
    _cap("grundy_exact_by_orderings", g.n, limit, "max_orderings_n")
    if g.n == 0:
        return 0
    adjacency = g.adjacency
    ceiling = min(g.n, g.max_degree + 1)
    best = 0
    for order in permutations(range(g.n)):
        colors = [0] * g.n
        top = 0
        for v in order:
            used = {colors[w] for w in adjacency[v]}
            color = 1
            while color in used:
                color += 1
            colors[v] = color
            top = max(top, color)
        if top > best:
            best = top
            if best == ceiling:
                break
    return best


def grundy_exact_by_colorings(g: Graph, limit: Optional[int] = None) -> int:
    """
    Largest k over all total colorings with colors 1..n that are Grundy
    colorings. Vertices are assigned in index order; a vertex is checked as
    soon as it and all its neighbors carry colors.
    """
    _cap("grundy_exact_by_colorings", g.n, limit, "max_colorings_n")
    n = g.n
    if n == 0:
        return 0
    adjacency = g.adjacency
    # vertices whose closed neighborhood is complete once vertex i is colored
    ready: List[List[int]] = [[] for _ in range(n)]
    for v in range(n):
        ready[max([v, *adjacency[v]])].append(v)

    # a vertex colored c needs neighbors in c - 1 distinct classes
    palette = [range(1, min(n, len(adjacency[v]) + 1) + 1) for v in range(n)]

    colors = [0] * n
    best = [0]

    def grundy_at(v: int) -> bool:
        seen = {colors[w] for w in adjacency[v]}
        if colors[v] in seen:
            return False
        return all(i in seen for i in range(1, colors[v]))

    def assign(i: int) -> None:
        if i == n:
            k = max(colors)
            if k > best[0] and set(colors) == set(range(1, k + 1)):
                best[0] = k
            return
        for color in palette[i]:
            colors[i] = color
            if all(grundy_at(v) for v in ready[i]):
                assign(i + 1)
        colors[i] = 0

    assign(0)
    return best[0]


def chromatic_number_brute(g: Graph, limit: Optional[int] = None) -> int:
    """Least k admitting a proper k-coloring, by backtracking for k = 1, 2, ..."""
    _cap("chromatic_number_brute", g.n, limit, "max_brute_n")
    if g.n == 0:
        return 0
    adjacency = g.adjacency

    def colorable(k: int) -> bool:
        colors = [0] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            used = {colors[w] for w in adjacency[v] if w < v}
            for color in range(1, k + 1):
                if color not in used:
                    colors[v] = color
                    if place(v + 1):
                        return True
            colors[v] = 0
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


# ============================================
# Enumeration
# ============================================

def _two_colorable(n: int, pairs: List[Tuple[int, int]], mask: int) -> bool:
    neighbors: List[List[int]] = [[] for _ in range(n)]
    for j, (u, v) in enumerate(pairs):
        if mask >> j & 1:
            neighbors[u].append(v)
            neighbors[v].append(u)
    side = [-1] * n
    for root in range(n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in neighbors[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def enumerate_graphs(max_n: int, limit: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled graph on 1..max_n vertices; n ascending, then edge subsets in bitmask order."""
    _cap("enumerate_graphs", max_n, limit, "max_enum_n")
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(n=n, edges=[pair for j, pair in enumerate(pairs) if mask >> j & 1])


def enumerate_bipartite_graphs(max_n: int, limit: Optional[int] = None) -> Iterator[Tuple[Graph, Bipartition]]:
    """Every labeled bipartite graph on 1..max_n vertices, exactly once, in enumerate_graphs order."""
    _cap("enumerate_bipartite_graphs", max_n, limit, "max_enum_n")
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            if not _two_colorable(n, pairs, mask):
                continue
            graph = Graph(n=n, edges=[pair for j, pair in enumerate(pairs) if mask >> j & 1])
            yield graph, find_bipartition(graph)
