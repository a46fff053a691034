import pytest
from hypothesis import given

from app.errors import SizeLimitError
from app.graph_core import complement, complete_graph, cycle_graph, path_graph, relabel, total_graph
from app.matching_domination import min_edge_dominating_exact
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
from app.schemas import Graph
from tests.strategies import PROPERTY_SETTINGS, bipartite_graphs, graphs


class TestIndependentSet:
    def test_lexicographically_least(self, p4):
        assert max_independent_set_exact(p4) == (0, 2)

    def test_values(self, c6, k3):
        assert len(max_independent_set_exact(c6)) == 3
        assert len(max_independent_set_exact(k3)) == 1
        assert max_independent_set_exact(Graph(n=0)) == ()
        assert max_independent_set_exact(Graph(n=3)) == (0, 1, 2)

    def test_total_graph_of_p4(self, p4):
        total, _ = total_graph(p4)
        assert len(max_independent_set_exact(total)) == 3

    @PROPERTY_SETTINGS
    @given(graphs(max_n=8))
    def test_result_is_independent(self, g):
        chosen = max_independent_set_exact(g)
        assert all(not g.has_edge(u, v) for u in chosen for v in chosen)

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            max_independent_set_exact(Graph(n=25))


class TestMatchingOracles:
    def test_maximum_matching(self, p4, c6, k3):
        assert maximum_matching_brute(p4) == 2
        assert maximum_matching_brute(c6) == 3
        assert maximum_matching_brute(k3) == 1
        assert maximum_matching_brute(Graph(n=4)) == 0

    def test_min_edge_dominating(self, c6, p4):
        assert min_edge_dominating_brute(c6) == 2
        assert min_edge_dominating_brute(p4) == 1
        assert min_edge_dominating_brute(Graph(n=2)) == 0

    @PROPERTY_SETTINGS
    @given(graphs(max_n=7))
    def test_eds_oracles_agree(self, g):
        assert min_edge_dominating_brute(g) == min_edge_dominating_exact(g).size


class TestExtendedCliqueBrute:
    @pytest.mark.parametrize(
        "b, expected",
        [(path_graph(4), 3), (cycle_graph(6), 4), (Graph(n=3), 3), (Graph(n=1), 1)],
        ids=["P4", "C6", "edgeless", "single"],
    )
    def test_values(self, b, expected):
        assert max_extended_clique_brute(b) == expected

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            max_extended_clique_brute(Graph(n=11))

    def test_equals_independence_of_total_graph(self):
        for b, _ in enumerate_bipartite_graphs(5):
            total, _ = total_graph(b)
            assert len(max_independent_set_exact(total)) == max_extended_clique_brute(b)


class TestGrundyOracles:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (complete_graph(3), 3),
            (path_graph(4), 3),
            (cycle_graph(4), 2),
            (complement(path_graph(4)), 3),
            (Graph(n=0), 0),
            (Graph(n=2), 1),
        ],
        ids=["K3", "P4", "C4", "P4-complement", "null", "edgeless"],
    )
    def test_values(self, g, expected):
        assert grundy_exact_by_orderings(g) == expected
        assert grundy_exact_by_colorings(g) == expected

    def test_caps(self):
        with pytest.raises(SizeLimitError):
            grundy_exact_by_orderings(Graph(n=10))
        with pytest.raises(SizeLimitError):
            grundy_exact_by_colorings(Graph(n=7))
        assert grundy_exact_by_colorings(Graph(n=7), limit=7) == 1

    @PROPERTY_SETTINGS
    @given(graphs(max_n=6))
    def test_orderings_equal_colorings(self, g):
        assert grundy_exact_by_orderings(g) == grundy_exact_by_colorings(g)

    @PROPERTY_SETTINGS
    @given(graphs(max_n=6), bipartite_graphs(max_n=6))
    def test_permutation_invariance(self, g, b):
        reverse = list(range(g.n))[::-1]
        assert grundy_exact_by_orderings(relabel(g, reverse)) == grundy_exact_by_orderings(g)
        shifted = [(v + 1) % b.n for v in range(b.n)]
        assert max_extended_clique_brute(relabel(b, shifted)) == max_extended_clique_brute(b)


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "g, expected",
        [(cycle_graph(5), 3), (complete_graph(4), 4), (path_graph(4), 2), (Graph(n=3), 1), (Graph(n=0), 0)],
        ids=["C5", "K4", "P4", "edgeless", "null"],
    )
    def test_values(self, g, expected):
        assert chromatic_number_brute(g) == expected


class TestEnumeration:
    def test_all_graphs(self):
        assert len(list(enumerate_graphs(3))) == 1 + 2 + 8

    def test_order(self):
        graphs_ = list(enumerate_graphs(2))
        assert graphs_ == [Graph(n=1), Graph(n=2), Graph(n=2, edges=[(0, 1)])]

    def test_bipartite_counts(self):
        # labeled bipartite graphs on 1..4 vertices: 1, 2, 7, 41
        assert len(list(enumerate_bipartite_graphs(4))) == 51

    def test_bipartite_subset_of_all(self):
        bipartite = [b for b, _ in enumerate_bipartite_graphs(4)]
        assert len(set(g.edges for g in bipartite if g.n == 4)) == 41
        assert complete_graph(3) not in bipartite

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            list(enumerate_bipartite_graphs(8))
        with pytest.raises(SizeLimitError):
            list(enumerate_graphs(8))
