from itertools import permutations

import pytest
from hypothesis import given

from app.coloring import (
    chromatic_number_cobipartite,
    color_classes,
    greedy_color,
    grundy_number_exact,
    is_grundy,
    is_proper,
    optimal_coloring_cobipartite,
)
from app.errors import BipartitionError, InvalidPermutationError, PartialColoringError, SizeLimitError
from app.graph_core import complement, complete_graph, cycle_graph, find_bipartition, path_graph
from app.oracles import chromatic_number_brute
from app.schemas import Bipartition, Coloring, Graph
from tests.strategies import PROPERTY_SETTINGS, bipartite_graphs, graphs


class TestChecks:
    def test_color_classes(self):
        assert color_classes(Coloring(colors=[2, 1, 1, 3])) == [[1, 2], [0], [3]]

    def test_proper(self, p4):
        assert is_proper(p4, Coloring(colors=[1, 2, 1, 2]))
        assert not is_proper(p4, Coloring(colors=[1, 1, 2, 1]))

    def test_partial_coloring_raises(self, p4):
        with pytest.raises(PartialColoringError):
            is_grundy(p4, Coloring(colors=[1, 2]))

    def test_grundy_on_complement_of_p4(self, p4):
        co = complement(p4)
        assert is_grundy(co, Coloring(colors=[2, 1, 1, 3]))

    def test_grundy_needs_lower_neighbors(self, p4):
        # vertex 3 colored 3 has neighbors only in class 2
        assert not is_grundy(p4, Coloring(colors=[1, 2, 1, 3]))
        assert is_grundy(p4, Coloring(colors=[1, 2, 1, 2]))

    def test_grundy_needs_every_class(self):
        assert not is_grundy(Graph(n=2), Coloring(colors=[1, 3]))

    def test_improper_is_not_grundy(self, k3):
        assert not is_grundy(k3, Coloring(colors=[1, 1, 2]))


class TestGreedyColor:
    def test_path_order(self, p4):
        assert greedy_color(p4, [0, 3, 1, 2]).colors == (1, 2, 3, 1)

    def test_identity_order(self, c6):
        assert greedy_color(c6, range(6)).colors == (1, 2, 1, 2, 1, 2)

    def test_empty_graph(self):
        assert greedy_color(Graph(n=0), []).colors == ()

    def test_not_a_permutation(self, p4):
        with pytest.raises(InvalidPermutationError):
            greedy_color(p4, [0, 1, 1, 2])

    @PROPERTY_SETTINGS
    @given(graphs())
    def test_first_fit_is_grundy(self, g):
        assert is_grundy(g, greedy_color(g, range(g.n)))


class TestGrundyNumberExact:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (complete_graph(3), 3),
            (path_graph(4), 3),
            (cycle_graph(4), 2),
            (cycle_graph(5), 3),
            (Graph(n=0), 0),
            (Graph(n=3), 1),
        ],
        ids=["K3", "P4", "C4", "C5", "null", "edgeless"],
    )
    def test_known_values(self, g, expected):
        result = grundy_number_exact(g)
        assert result.gamma == expected
        if g.n:
            assert is_grundy(g, result.witness)
            assert result.witness.k == expected

    def test_complement_of_p4(self, p4):
        assert grundy_number_exact(complement(p4)).gamma == 3

    def test_witness_is_deterministic(self, k3):
        assert grundy_number_exact(k3).witness.colors == (1, 2, 3)

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            grundy_number_exact(Graph(n=13))
        assert grundy_number_exact(Graph(n=5), limit=5).gamma == 1

    @PROPERTY_SETTINGS
    @given(graphs(max_n=6))
    def test_matches_all_orders(self, g):
        best = max((greedy_color(g, order).k for order in permutations(range(g.n))), default=0)
        assert grundy_number_exact(g).gamma == best

    @PROPERTY_SETTINGS
    @given(graphs(min_n=1, max_n=7))
    def test_at_least_chromatic_number(self, g):
        assert grundy_number_exact(g).gamma >= chromatic_number_brute(g)


class TestCobipartite:
    def test_p4(self, p4):
        part = find_bipartition(p4)
        assert chromatic_number_cobipartite(p4, part) == 2
        assert chromatic_number_brute(complement(p4)) == 2

    @pytest.mark.parametrize("b, expected", [(cycle_graph(6), 3), (Graph(n=3), 3)], ids=["C6", "edgeless"])
    def test_known_values(self, b, expected):
        assert chromatic_number_cobipartite(b, find_bipartition(b)) == expected

    def test_wrong_bipartition(self, p4):
        with pytest.raises(BipartitionError):
            chromatic_number_cobipartite(p4, Bipartition(X=[0, 1], Y=[2, 3]))

    def test_optimal_coloring_p4(self, p4):
        c = optimal_coloring_cobipartite(p4, find_bipartition(p4))
        assert c.colors == (1, 1, 2, 2)
        assert is_proper(complement(p4), c)

    @PROPERTY_SETTINGS
    @given(bipartite_graphs(max_n=7))
    def test_matches_brute_force(self, b):
        part = find_bipartition(b)
        chi = chromatic_number_cobipartite(b, part)
        optimal = optimal_coloring_cobipartite(b, part)
        assert chi == chromatic_number_brute(complement(b))
        assert optimal.k == chi
        assert is_proper(complement(b), optimal)
        assert all(len(members) <= 2 for members in color_classes(optimal))
