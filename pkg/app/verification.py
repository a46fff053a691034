"""
Identity suite: cross-checks every structural computation against the
brute-force oracles over an exhaustive corpus of small bipartite graphs and
seeded random corpora.
Reports are deterministic for fixed flags; instances may be spread over a
process pool, results are always merged in instance order.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.coloring import (
    chromatic_number_cobipartite,
    color_classes,
    grundy_number_exact,
    is_grundy,
    optimal_coloring_cobipartite,
)
from app.extended_clique import (
    approx_grundy,
    coloring_from_extended_clique,
    extended_clique_from_coloring,
    grundy_number_cobipartite,
    peel_pairs,
    validate,
)
from app.graph_core import (
    complement,
    find_bipartition,
    path_graph,
    random_bipartite,
    random_graph,
    relabel,
    total_graph,
)
from app.matching_domination import (
    eds_to_matching,
    greedy_maximal_matching,
    is_edge_dominating,
    is_matching,
    is_maximal_matching,
    maximum_matching,
    min_edge_dominating_exact,
    min_maximal_matching_exact,
)
from app.oracles import (
    chromatic_number_brute,
    enumerate_bipartite_graphs,
    enumerate_graphs,
    grundy_exact_by_colorings,
    grundy_exact_by_orderings,
    max_extended_clique_brute,
    max_independent_set_exact,
    maximum_matching_brute,
    min_edge_dominating_brute,
)
from app.reduction import degree_three_corpus, eds_from_extended_clique, extended_clique_from_eds, verify_reduction_all
from app.schemas import EdgeDominatingSet, Graph, IdentityResult, VerifyReport

logger = logging.getLogger(__name__)

IDENTITIES = (
    "chromatic",
    "eds_equals_min_maximal",
    "four_way",
    "matching_lemma",
    "maximal_iff_dominating",
    "maximum_matching",
    "oracle_cross",
    "permutation_invariance",
    "reduction",
    "round_trip",
    "sandwich",
    "tightness",
    "witnesses",
)

MAX_FAILURES_KEPT = 5
RANDOM_MAX_N = 9
LEMMA_MAX_N = 12
ORACLE_CROSS_MAX_N = 6
BRUTE_CHECK_MAX_N = 7

# (identity, passed, description of the failing instance)
Check = Tuple[str, bool, str]


def _describe(g: Graph) -> str:
    return f"n={g.n} edges={[list(e) for e in g.edges]}"


class _Recorder:
    def __init__(self, g: Graph):
        self.label = _describe(g)
        self.checks: List[Check] = []

    def __call__(self, identity: str, ok: bool, detail: str = "") -> None:
        self.checks.append((identity, bool(ok), "" if ok else f"{self.label}: {detail}"))


# ============================================
# Per-instance checks (top-level so a process pool can pickle them)
# ============================================

def check_bipartite(b: Graph) -> List[Check]:
    """Every identity that holds for a single bipartite host b."""
    record = _Recorder(b)
    co = complement(b)
    part = find_bipartition(b)

    reports = verify_reduction_all(b)
    first = reports[0]
    gamma_prime, gamma, by_search = first.gamma_prime, first.gamma, first.gamma_oracle
    by_orderings = grundy_exact_by_orderings(co)
    total, _ = total_graph(b)
    alpha_total = len(max_independent_set_exact(total, limit=total.n))
    brute = max_extended_clique_brute(b)
    values = (by_orderings, by_search, alpha_total, brute, b.n - gamma_prime, gamma)
    record(
        "four_way",
        len(set(values)) == 1,
        f"orderings, exact search, alpha_total, brute, n - gamma', structural = {values}",
    )

    bounds = approx_grundy(b)
    record(
        "sandwich",
        bounds.lower <= gamma <= bounds.upper_floor,
        f"lower={bounds.lower} Gamma={gamma} upper={bounds.upper}",
    )

    structural = grundy_number_cobipartite(b)
    ec = structural.extended_clique
    eds = min_edge_dominating_exact(b)
    mmm = min_maximal_matching_exact(b)
    optimal = optimal_coloring_cobipartite(b, part)
    record(
        "witnesses",
        is_grundy(co, structural.witness)
        and structural.witness.k == gamma
        and validate(b, ec)
        and is_edge_dominating(b, eds)
        and is_maximal_matching(b, mmm)
        and all(len(members) <= 2 for members in color_classes(structural.witness))
        and all(len(members) <= 2 for members in color_classes(optimal)),
        "a witness failed its checker",
    )
    record(
        "eds_equals_min_maximal",
        eds.size == mmm.size == min_edge_dominating_brute(b) == gamma_prime,
        f"eds={eds.size} min maximal matching={mmm.size} gamma'={gamma_prime}",
    )

    ec_from_eds = extended_clique_from_eds(b, eds)
    eds_back = eds_from_extended_clique(b, ec)
    record(
        "reduction",
        all(report.verdict == "PASS" for report in reports)
        and validate(b, ec_from_eds)
        and ec_from_eds.size == b.n - gamma_prime
        and is_edge_dominating(b, eds_back)
        and eds_back.size == gamma_prime,
        f"verdicts={[r.verdict for r in reports]} ec_from_eds={ec_from_eds.size} eds_back={eds_back.size}",
    )

    shrunk = []
    for sub in peel_pairs(b, ec):
        back = extended_clique_from_coloring(b, coloring_from_extended_clique(b, sub))
        if back.size < sub.size:
            shrunk.append(sub.size)
    record("round_trip", not shrunk, f"sizes lost for extended cliques of size {shrunk}")

    if b.n <= BRUTE_CHECK_MAX_N:
        chi = chromatic_number_cobipartite(b, part)
        record("chromatic", chi == chromatic_number_brute(co) == optimal.k, f"chi={chi} optimal={optimal.k}")
        mu = maximum_matching(b, part).size
        record("maximum_matching", mu == maximum_matching_brute(b), f"mu={mu}")
    return record.checks


def check_reduction(b: Graph) -> List[Check]:
    """The reduction and its witness transformations, for hosts too large for the brute-force oracles."""
    record = _Recorder(b)
    reports = verify_reduction_all(b)
    ec = grundy_number_cobipartite(b).extended_clique
    eds = min_edge_dominating_exact(b)
    ec_from_eds = extended_clique_from_eds(b, eds)
    eds_back = eds_from_extended_clique(b, ec)
    record(
        "reduction",
        all(report.verdict == "PASS" for report in reports)
        and ec_from_eds.size == ec.size
        and is_edge_dominating(b, eds_back)
        and eds_back.size == eds.size,
        f"verdicts={[r.verdict for r in reports]} ec_from_eds={ec_from_eds.size} eds_back={eds_back.size}",
    )
    return record.checks


def check_relabeling(task: Tuple[Graph, Sequence[int]]) -> List[Check]:
    """Cardinalities are unchanged when the vertices of b are renamed."""
    b, permutation = task
    record = _Recorder(b)
    renamed = relabel(b, permutation)

    def quantities(g: Graph) -> Tuple[int, int, int, int]:
        total, _ = total_graph(g)
        return (
            grundy_number_cobipartite(g).gamma,
            len(max_independent_set_exact(total, limit=total.n)),
            max_extended_clique_brute(g),
            maximum_matching_brute(g),
        )

    before, after = quantities(b), quantities(renamed)
    record("permutation_invariance", before == after, f"permutation {list(permutation)}: {before} != {after}")
    return record.checks


def check_graph(g: Graph) -> List[Check]:
    """Oracle cross-validation on an arbitrary small graph."""
    record = _Recorder(g)
    by_orderings = grundy_exact_by_orderings(g)
    by_colorings = grundy_exact_by_colorings(g)
    exact = grundy_number_exact(g)
    chi = chromatic_number_brute(g)
    record(
        "oracle_cross",
        by_orderings == by_colorings == exact.gamma
        and is_grundy(g, exact.witness)
        and exact.witness.k == exact.gamma
        and chi <= exact.gamma,
        f"orderings={by_orderings} colorings={by_colorings} exact={exact.gamma} chi={chi}",
    )

    agree = True
    for size in range(g.n // 2 + 1):
        for edges in combinations(g.edges, size):
            if is_matching(g, edges) and is_maximal_matching(g, edges) != is_edge_dominating(g, edges):
                agree = False
    record("maximal_iff_dominating", agree, "a matching is maximal but not dominating or vice versa")
    return record.checks


def check_lemma(seed: int) -> List[Check]:
    """eds_to_matching on a random edge dominating set: a maximal matching plus random extra edges."""
    rng = random.Random(seed)
    n = rng.randint(2, LEMMA_MAX_N)
    g = random_graph(n, rng.uniform(0.1, 0.7), rng.randrange(2 ** 31))
    order = list(g.edges)
    rng.shuffle(order)
    base = greedy_maximal_matching(g, order)
    extra = [edge for edge in g.edges if edge not in base.edges and rng.random() < 0.3]
    dominating = EdgeDominatingSet(edges=list(base.edges) + extra)

    record = _Recorder(g)
    result = eds_to_matching(g, dominating)
    record(
        "matching_lemma",
        is_matching(g, result) and is_edge_dominating(g, result) and result.size <= dominating.size,
        f"D={list(dominating.edges)} -> M={list(result.edges)}",
    )
    return record.checks


def check_tightness() -> List[Check]:
    """P4 attains Gamma = 3 = (3/2) chi."""
    p4 = path_graph(4)
    record = _Recorder(p4)
    gamma = grundy_number_cobipartite(p4).gamma
    bounds = approx_grundy(p4)
    record("tightness", gamma == 3 == bounds.upper, f"Gamma={gamma} bounds=({bounds.lower}, {bounds.upper})")
    return record.checks


# ============================================
# Suite driver
# ============================================

class VerificationSuite:
    """Runs every identity over the exhaustive and random corpora."""

    def __init__(
        self,
        max_n: int,
        count: int,
        seeds: Sequence[int] = (0,),
        workers: int = 1,
        lemma_trials: Optional[int] = None,
        random_max_n: int = RANDOM_MAX_N,
    ):
        self.max_n = max_n
        self.count = count
        self.seeds = list(seeds)
        self.workers = workers
        self.lemma_trials = 2 * count if lemma_trials is None else lemma_trials
        self.random_max_n = random_max_n
        self.results: Dict[str, IdentityResult] = {name: IdentityResult(name=name) for name in IDENTITIES}

    def _merge(self, batches: Iterable[List[Check]]) -> None:
        for checks in batches:
            for identity, ok, detail in checks:
                result = self.results[identity]
                result.checked += 1
                if ok:
                    result.passed += 1
                elif len(result.failures) < MAX_FAILURES_KEPT:
                    result.failures.append(detail)

    def _map(self, fn: Callable, items: List, executor: Optional[ProcessPoolExecutor]) -> Iterable[List[Check]]:
        if executor is None:
            return map(fn, items)
        return executor.map(fn, items, chunksize=max(1, len(items) // (4 * self.workers)))

    def random_bipartite_corpus(self) -> Tuple[List[Graph], List[Tuple[Graph, List[int]]]]:
        hosts, relabelings = [], []
        for seed in self.seeds:
            rng = random.Random(seed)
            for _ in range(self.count):
                n = rng.randint(1, self.random_max_n)
                n1 = rng.randint(1, n)
                b, _ = random_bipartite(n1, n - n1, rng.uniform(0.2, 0.8), rng.randrange(2 ** 31))
                hosts.append(b)
                relabelings.append((b, rng.sample(range(n), n)))
        return hosts, relabelings

    def run(self) -> VerifyReport:
        logger.info("[verify] corpus: exhaustive n <= %d, %d random per seed, seeds %s", self.max_n, self.count, self.seeds)

        exhaustive = [b for b, _ in enumerate_bipartite_graphs(self.max_n)] if self.max_n >= 1 else []
        all_graphs = list(enumerate_graphs(min(self.max_n, ORACLE_CROSS_MAX_N))) if self.max_n >= 1 else []
        hosts, relabelings = self.random_bipartite_corpus()
        shaped = [b for seed in self.seeds for b, _ in degree_three_corpus(self.count, seed)]
        lemma_seeds = [seed * 1_000_003 + i for seed in self.seeds for i in range(self.lemma_trials)]

        executor = ProcessPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            steps = [
                ("exhaustive bipartite corpus", check_bipartite, exhaustive),
                ("random bipartite corpus", check_bipartite, hosts),
                ("degree-3 bipartite corpus", check_reduction, shaped),
                ("relabeled corpus", check_relabeling, relabelings),
                ("all small graphs", check_graph, all_graphs),
                ("random edge dominating sets", check_lemma, lemma_seeds),
            ]
            for index, (title, fn, items) in enumerate(steps, start=1):
                logger.info("[verify] [Step %d/%d] %s: %d instance(s)", index, len(steps), title, len(items))
                self._merge(self._map(fn, items, executor))
            self._merge([check_tightness()])
        finally:
            if executor is not None:
                executor.shutdown()

        identities = [self.results[name] for name in IDENTITIES]
        for result in identities:
            logger.info("[verify] %s: %d/%d passed", result.name, result.passed, result.checked)
        verdict = "PASS" if all(result.ok for result in identities) else "FAIL"
        return VerifyReport(
            max_n=self.max_n,
            count=self.count,
            seeds=self.seeds,
            lemma_trials=self.lemma_trials,
            identities=identities,
            verdict=verdict,
        )


def run_suite(
    max_n: int,
    count: int,
    seeds: Sequence[int] = (0,),
    workers: int = 1,
    lemma_trials: Optional[int] = None,
    random_max_n: int = RANDOM_MAX_N,
) -> VerifyReport:
    return VerificationSuite(max_n, count, seeds, workers, lemma_trials, random_max_n).run()
