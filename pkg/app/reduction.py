"""
Reduction from EDGE DOMINATING SET on bipartite graphs to GRUNDY NUMBER on
their complements: (b, k) maps to (complement(b), n - k). Includes the two
witness transformations and an end-to-end checker.
"""

import logging
import random
from typing import List, Optional, Tuple

from app.coloring import grundy_number_exact
from app.config import get_limits
from app.errors import ExtendedCliqueError, NotDominatingError
from app.extended_clique import grundy_number_cobipartite, validate
from app.graph_core import complement, find_bipartition, random_bipartite_bounded
from app.matching_domination import eds_to_matching, is_edge_dominating, min_maximal_matching_exact
from app.schemas import (
    Bipartition,
    EdgeDominatingSet,
    EdsInstance,
    ExtendedClique,
    Graph,
    GrundyInstance,
    ReductionReport,
    canonical_edge,
)

logger = logging.getLogger(__name__)


def reduce_eds_to_grundy(inst: EdsInstance) -> GrundyInstance:
    """(b, k) -> (complement(b), n - k)."""
    find_bipartition(inst.graph)
    return GrundyInstance(graph=complement(inst.graph), threshold=inst.graph.n - inst.budget)


def extended_clique_from_eds(b: Graph, d: EdgeDominatingSet) -> ExtendedClique:
    """
    Convert an edge dominating set of b into an extended clique of
    complement(b) of size n - |M| >= n - |d|: M is a dominating matching no
    larger than d, I the vertices M leaves unmatched.
    """
    find_bipartition(b)
    if not is_edge_dominating(b, d):
        raise NotDominatingError(f"edge set {list(d.edges)} does not dominate the graph")
    matching = eds_to_matching(b, d)
    matched = matching.covered()
    ec = ExtendedClique(
        independent=[v for v in range(b.n) if v not in matched],
        matching=matching.edges,
    )
    if not validate(b, ec):
        raise ExtendedCliqueError(f"dominating matching produced an invalid extended clique: {ec}")
    return ec


def eds_from_extended_clique(b: Graph, ec: ExtendedClique) -> EdgeDominatingSet:
    """
    Convert an extended clique of complement(b) of size s into an edge
    dominating set of b with at most n - s edges.

    Uncovered isolated vertices first join I. Then D is M plus, for every
    vertex still outside I and V(M), its lexicographically least incident edge.
    """
    find_bipartition(b)
    if not validate(b, ec):
        raise ExtendedCliqueError(f"not an extended clique of the graph: {ec}")

    covered = ec.covered()
    leftovers = [v for v in range(b.n) if v not in covered]
    isolated = [v for v in leftovers if b.degree(v) == 0]
    if isolated:
        ec = ExtendedClique(independent=list(ec.independent) + isolated, matching=ec.matching)

    edges = set(ec.matching)
    for v in leftovers:
        if b.degree(v):
            edges.add(canonical_edge(v, min(b.neighbors(v))))
    return EdgeDominatingSet(edges=edges)


def _report(n: int, k: int, gamma_prime: int, gamma: int, gamma_oracle: int) -> ReductionReport:
    lhs = gamma_prime <= k
    rhs = gamma >= n - k
    verdict = "PASS" if lhs == rhs and gamma == gamma_oracle else "FAIL"
    return ReductionReport(
        n=n, k=k, gamma_prime=gamma_prime, Gamma=gamma, Gamma_oracle=gamma_oracle,
        lhs=lhs, rhs=rhs, verdict=verdict,
    )


def _quantities(b: Graph) -> Tuple[int, int, int]:
    find_bipartition(b)
    gamma_prime = min_maximal_matching_exact(b).size
    gamma = grundy_number_cobipartite(b).gamma
    gamma_oracle = grundy_number_exact(complement(b)).gamma
    return gamma_prime, gamma, gamma_oracle


def verify_reduction(inst: EdsInstance) -> ReductionReport:
    """
    Check one instance: is (minimum EDS <= k) equivalent to
    (Gamma(complement(b)) >= n - k)? Gamma is computed both through extended
    cliques and by exact search over color classes; a disagreement between
    them is a FAIL too.
    """
    gamma_prime, gamma, gamma_oracle = _quantities(inst.graph)
    report = _report(inst.graph.n, inst.budget, gamma_prime, gamma, gamma_oracle)
    if report.verdict == "FAIL":
        logger.warning("[reduce] FAIL %s", report.model_dump(by_alias=True))
    return report


def verify_reduction_all(b: Graph) -> List[ReductionReport]:
    """verify_reduction for every k in 0..n, computing the quantities once."""
    gamma_prime, gamma, gamma_oracle = _quantities(b)
    return [_report(b.n, k, gamma_prime, gamma, gamma_oracle) for k in range(b.n + 1)]


def degree_three_corpus(
    count: int,
    seed: int,
    max_n: int = 10,
    max_degree: int = 3,
    retries: Optional[int] = None,
) -> List[Tuple[Graph, Bipartition]]:
    """Random bipartite graphs with at most max_n vertices and maximum degree at most max_degree."""
    retries = retries if retries is not None else get_limits().gen_retries
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        n1 = rng.randint(1, n)
        p = rng.uniform(0.1, 0.6)
        corpus.append(
            random_bipartite_bounded(n1, n - n1, p, rng.randrange(2 ** 31), max_degree, retries)
        )
    return corpus
