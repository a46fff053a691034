"""
Proper and Grundy coloring checks, first-fit coloring, the exact Grundy
number of small graphs, and the chromatic number of complements of
bipartite graphs.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from app.config import resolve_limit
from app.errors import InvalidPermutationError, PartialColoringError, SizeLimitError
from app.graph_core import validate_bipartition
from app.matching_domination import maximum_matching
from app.schemas import Bipartition, Coloring, Graph, GrundyResult

logger = logging.getLogger(__name__)


def _require_total(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise PartialColoringError(len(c.colors), g.n)


def color_classes(c: Coloring) -> List[List[int]]:
    """classes[i] lists the vertices colored i + 1, ascending."""
    classes: List[List[int]] = [[] for _ in range(c.k)]
    for v, color in enumerate(c.colors):
        classes[color - 1].append(v)
    return classes


def is_proper(g: Graph, c: Coloring) -> bool:
    _require_total(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges)


def is_grundy(g: Graph, c: Coloring) -> bool:
    """
    Proper, every class 1..k non-empty, and every vertex colored j has a
    neighbor in each class i < j.
    """
    if not is_proper(g, c):
        return False
    if len(set(c.colors)) != c.k:
        return False
    for v in range(g.n):
        seen = {c.colors[w] for w in g.neighbors(v)}
        if any(i not in seen for i in range(1, c.colors[v])):
            return False
    return True


def _smallest_missing(used: Set[int]) -> int:
    color = 1
    while color in used:
        color += 1
    return color


def greedy_color(g: Graph, order: Sequence[int]) -> Coloring:
    """First-fit: each vertex in turn takes the smallest color absent among its colored neighbors."""
    if sorted(order) != list(range(g.n)):
        raise InvalidPermutationError(f"order {list(order)} is not a permutation of 0..{g.n - 1}")
    colors = [0] * g.n
    for v in order:
        colors[v] = _smallest_missing({colors[w] for w in g.neighbors(v)})
    return Coloring(colors=colors)


def _maximal_independent_sets(masks: Sequence[int], allowed: int) -> Iterator[int]:
    """
    Maximal independent sets of the subgraph induced by `allowed`, as
    bitmasks: Bron-Kerbosch with pivoting, run on non-adjacency.
    """

    def expand(chosen: int, candidates: int, excluded: int) -> Iterator[int]:
        if candidates == 0 and excluded == 0:
            yield chosen
            return
        pool = candidates | excluded
        pivot = (pool & -pool).bit_length() - 1
        branch = candidates & (masks[pivot] | 1 << pivot)
        while branch:
            bit = branch & -branch
            v = bit.bit_length() - 1
            keep = ~(masks[v] | bit)
            yield from expand(chosen | bit, candidates & keep, excluded & keep)
            candidates &= ~bit
            excluded |= bit
            branch ^= bit

    yield from expand(0, allowed, 0)


def grundy_number_exact(g: Graph, limit: Optional[int] = None) -> GrundyResult:
    """
    Grundy number by search over color classes.

    Class 1 of a Grundy coloring is a maximal independent set S, and colors
    2.. form a Grundy coloring of g - S, so Gamma(H) is the maximum of
    1 + Gamma(H - S) over maximal independent sets S of H, memoized on vertex
    subsets. The witness takes, class by class, the first maximizing set in
    search order (least vertex first), so it is deterministic.
    """
    cap = resolve_limit(limit, "max_exact_n")
    if g.n > cap:
        raise SizeLimitError("grundy_number_exact", g.n, cap)

    masks = g.masks
    memo: Dict[int, Tuple[int, int]] = {0: (0, 0)}

    def best(allowed: int) -> int:
        if allowed in memo:
            return memo[allowed][0]
        top, choice = 0, 0
        for s in _maximal_independent_sets(masks, allowed):
            k = 1 + best(allowed & ~s)
            if k > top:
                top, choice = k, s
        memo[allowed] = (top, choice)
        return top

    gamma = best((1 << g.n) - 1)
    colors = [0] * g.n
    allowed, color = (1 << g.n) - 1, 1
    while allowed:
        s = memo[allowed][1]
        for v in range(g.n):
            if s >> v & 1:
                colors[v] = color
        allowed &= ~s
        color += 1
    logger.debug("[grundy] n=%d explored %d vertex subsets, Gamma=%d", g.n, len(memo), gamma)
    return GrundyResult(gamma=gamma, witness=Coloring(colors=colors))


# ============================================
# Complements of bipartite graphs
# ============================================

def chromatic_number_cobipartite(b: Graph, part: Bipartition) -> int:
    """
    Chromatic number of complement(b): color classes there are single
    vertices or edges of b, so it is n minus a maximum matching of b.
    """
    validate_bipartition(b, part)
    return b.n - maximum_matching(b, part).size


def optimal_coloring_cobipartite(b: Graph, part: Bipartition) -> Coloring:
    """
    Minimum coloring of complement(b): one class per maximum-matching edge,
    singletons for the rest, classes numbered by ascending least vertex.
    """
    validate_bipartition(b, part)
    matching = maximum_matching(b, part)
    classes = [list(edge) for edge in matching.edges]
    matched = matching.covered()
    classes += [[v] for v in range(b.n) if v not in matched]
    classes.sort(key=min)

    colors = [0] * b.n
    for color, members in enumerate(classes, start=1):
        for v in members:
            colors[v] = color
    return Coloring(colors=colors)
