"""
Extended cliques of complements of bipartite graphs.

An extended clique of G = complement(b) is described by its bipartite host b:
a set I of vertices independent in b and a matching M of b avoiding I. Its
size |I| + |M| is the number of colors of the Grundy coloring it induces, and
the largest size equals the Grundy number of G.
"""

import logging
from fractions import Fraction
from typing import List, Optional

from app.coloring import chromatic_number_cobipartite, color_classes, is_grundy
from app.errors import (
    ColorClassError,
    ExtendedCliqueError,
    ForeignEdgeError,
    NotGrundyError,
    PartialColoringError,
)
from app.graph_core import complement, find_bipartition
from app.matching_domination import min_maximal_matching_exact
from app.schemas import ApproxBounds, Coloring, ExtendedClique, Graph, GrundyResult

logger = logging.getLogger(__name__)


def validate(b: Graph, ec: ExtendedClique) -> bool:
    """
    True iff I is independent in b, M is a matching of b, and no edge of M
    touches I. Vertices out of range or M-edges missing from b raise.
    """
    for v in ec.independent:
        if not 0 <= v < b.n:
            raise ExtendedCliqueError(f"vertex {v} is not a vertex of the graph (n={b.n})")
    for u, v in ec.matching:
        if not b.has_edge(u, v):
            raise ForeignEdgeError((u, v), "extended clique matching")

    independent = set(ec.independent)
    if any(u in independent and v in independent for u, v in b.edges):
        return False
    matched = [v for edge in ec.matching for v in edge]
    if len(set(matched)) != len(matched):
        return False
    return not independent.intersection(matched)


def size(ec: ExtendedClique) -> int:
    return ec.size


def max_extended_clique(b: Graph, limit: Optional[int] = None) -> ExtendedClique:
    """
    Largest extended clique: a minimum maximal matching M of b together with
    every vertex M leaves unmatched. Maximality of M makes those vertices
    independent, and the size is n - |M|.
    """
    find_bipartition(b)
    matching = min_maximal_matching_exact(b, limit=limit)
    matched = matching.covered()
    return ExtendedClique(
        independent=[v for v in range(b.n) if v not in matched],
        matching=matching.edges,
    )


def coloring_from_extended_clique(b: Graph, ec: ExtendedClique) -> Coloring:
    """
    Grundy coloring of complement(b) with at least size(ec) colors.

    The i-th matching pair (lexicographic order) gets color i, then the
    vertices of I in ascending order get |M| + 1, |M| + 2, ...; any vertex left
    over is first-fit colored on top, in ascending order.
    """
    find_bipartition(b)
    if not validate(b, ec):
        raise ExtendedCliqueError(f"not an extended clique of the graph: {ec}")

    colors = [0] * b.n
    for color, (u, v) in enumerate(ec.matching, start=1):
        colors[u] = colors[v] = color
    for color, v in enumerate(ec.independent, start=len(ec.matching) + 1):
        colors[v] = color

    leftovers = [v for v in range(b.n) if colors[v] == 0]
    if leftovers:
        co_adjacency = complement(b).adjacency
        for v in leftovers:
            used = {colors[w] for w in co_adjacency[v]}
            color = 1
            while color in used:
                color += 1
            colors[v] = color
    return Coloring(colors=colors)


def extended_clique_from_coloring(b: Graph, c: Coloring) -> ExtendedClique:
    """
    Read an extended clique off a Grundy coloring of complement(b): singleton
    classes form I, two-vertex classes form M. The size equals the number of
    colors.
    """
    if len(c.colors) != b.n:
        raise PartialColoringError(len(c.colors), b.n)
    classes = color_classes(c)
    for color, members in enumerate(classes, start=1):
        if len(members) > 2:
            raise ColorClassError(color, members)
    if not is_grundy(complement(b), c):
        raise NotGrundyError("coloring is not a Grundy coloring of the complement")

    ec = ExtendedClique(
        independent=[members[0] for members in classes if len(members) == 1],
        matching=[tuple(members) for members in classes if len(members) == 2],
    )
    if not validate(b, ec):
        raise ExtendedCliqueError(f"color classes do not form an extended clique: {ec}")
    return ec


def grundy_number_cobipartite(b: Graph, limit: Optional[int] = None) -> GrundyResult:
    """Grundy number of complement(b) as n minus a minimum maximal matching of b, with witnesses."""
    ec = max_extended_clique(b, limit=limit)
    witness = coloring_from_extended_clique(b, ec)
    logger.debug("[ec] n=%d Gamma=%d via |I|=%d, |M|=%d", b.n, ec.size, len(ec.independent), len(ec.matching))
    return GrundyResult(gamma=ec.size, witness=witness, extended_clique=ec)


def approx_grundy(b: Graph) -> ApproxBounds:
    """
    Polynomial bounds chi <= Gamma <= 3 chi / 2 for complement(b), where chi
    is its chromatic number n - (maximum matching of b).
    """
    part = find_bipartition(b)
    lower = chromatic_number_cobipartite(b, part)
    return ApproxBounds(lower=lower, upper=Fraction(3 * lower, 2))


def peel_pairs(b: Graph, ec: ExtendedClique) -> List[ExtendedClique]:
    """
    The inductive form of an extended clique: remove matching pairs one at a
    time, last pair first, down to the ordinary clique I of complement(b).
    """
    if not validate(b, ec):
        raise ExtendedCliqueError(f"not an extended clique of the graph: {ec}")
    chain = [ec]
    pairs = list(ec.matching)
    while pairs:
        pairs.pop()
        chain.append(ExtendedClique(independent=ec.independent, matching=pairs))
    return chain
