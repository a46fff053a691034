from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given

from app.errors import (
    BipartitionError,
    GenerationError,
    GraphError,
    OddCycleError,
    SelfLoopError,
    VertexRangeError,
)
from app.graph_core import (
    build_graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    find_bipartition,
    graph_from_networkx,
    is_bipartite,
    max_degree_filter,
    path_graph,
    random_bipartite,
    random_bipartite_bounded,
    random_graph,
    relabel,
    total_graph,
    validate_bipartition,
)
from app.oracles import enumerate_graphs
from app.schemas import Bipartition, Graph
from tests.strategies import PROPERTY_SETTINGS, bipartite_graphs, graphs


class TestBuildGraph:
    def test_duplicates_collapse_and_edges_are_canonical(self):
        g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.m == 2

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            build_graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VertexRangeError) as info:
            build_graph(3, [(0, 3)])
        assert info.value.vertex == 3

    def test_negative_vertex_count(self):
        with pytest.raises(GraphError):
            build_graph(-1, [])

    def test_accessors(self, p4):
        assert p4.neighbors(1) == frozenset({0, 2})
        assert p4.degree(0) == 1
        assert p4.max_degree == 2
        assert p4.has_edge(2, 1)
        assert not p4.has_edge(0, 2)
        assert p4.masks[1] == 0b101

    def test_named_builders(self):
        assert cycle_graph(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert complete_graph(4).m == 6
        assert complete_bipartite(2, 3).m == 6
        assert empty_graph(5).m == 0
        with pytest.raises(GraphError):
            cycle_graph(2)


class TestComplement:
    def test_p4(self, p4):
        assert complement(p4).edges == ((0, 2), (0, 3), (1, 3))

    def test_empty_and_trivial(self):
        assert complement(empty_graph(3)) == complete_graph(3)
        assert complement(Graph(n=0)) == Graph(n=0)
        assert complement(Graph(n=1)) == Graph(n=1)

    @PROPERTY_SETTINGS
    @given(graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g

    @PROPERTY_SETTINGS
    @given(graphs())
    def test_edges_partition_the_pairs(self, g):
        co = complement(g)
        assert g.m + co.m == comb(g.n, 2)
        assert not set(g.edges) & set(co.edges)

    def test_agrees_with_networkx(self, c6):
        expected = graph_from_networkx(nx.complement(c6.to_networkx()))
        assert complement(c6) == expected


class TestBipartition:
    def test_path(self, p4):
        part = find_bipartition(p4)
        assert part.X == (0, 2)
        assert part.Y == (1, 3)

    def test_edgeless_goes_to_x(self, empty3):
        part = find_bipartition(empty3)
        assert part.X == (0, 1, 2)
        assert part.Y == ()

    def test_triangle_cycle(self, k3):
        with pytest.raises(OddCycleError) as info:
            find_bipartition(k3)
        assert info.value.cycle == [0, 1, 2]

    def test_odd_cycle_is_a_real_cycle(self):
        g = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
        with pytest.raises(OddCycleError) as info:
            find_bipartition(g)
        cycle = info.value.cycle
        assert len(cycle) % 2 == 1
        assert len(set(cycle)) == len(cycle)
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            assert g.has_edge(u, v)

    @PROPERTY_SETTINGS
    @given(bipartite_graphs())
    def test_every_edge_crosses(self, b):
        part = find_bipartition(b)
        validate_bipartition(b, part)
        assert is_bipartite(b)

    def test_validate_rejects_bad_partitions(self, p4):
        with pytest.raises(BipartitionError):
            validate_bipartition(p4, Bipartition(X=[0, 1], Y=[2, 3]))
        with pytest.raises(BipartitionError):
            validate_bipartition(p4, Bipartition(X=[0, 2], Y=[1]))
        with pytest.raises(BipartitionError):
            validate_bipartition(p4, Bipartition(X=[0, 2], Y=[1, 2, 3]))

    def test_is_bipartite(self, k3, c6):
        assert not is_bipartite(k3)
        assert is_bipartite(c6)

    def test_sides_are_sorted_tuples(self):
        part = Bipartition(X=[3, 0], Y={2, 1})
        assert (part.X, part.Y) == ((0, 3), (1, 2))
        assert set(Bipartition.model_fields) == {"X", "Y"}


class TestTotalGraph:
    def test_p4(self, p4):
        total, origin = total_graph(p4)
        assert total.n == 7
        assert total.m == 3 + 2 + 6
        assert origin.origin[4].label() == "e0-1"
        assert origin.index_of_edge((2, 1)) == 5
        assert origin.index_of_vertex(3) == 3

    def test_edgeless(self, empty3):
        total, origin = total_graph(empty3)
        assert total == empty3
        assert len(origin) == 3

    def test_adjacency_rule_on_all_small_graphs(self):
        for g in enumerate_graphs(5):
            self._check_adjacency(g)

    @staticmethod
    def _check_adjacency(g):
        total, origin = total_graph(g)
        assert total.n == g.n + g.m
        assert total.m == 3 * g.m + sum(comb(g.degree(v), 2) for v in g.vertices())

        def adjacent(a, b):
            if a.kind == "vertex" and b.kind == "vertex":
                return g.has_edge(a.vertex, b.vertex)
            if a.kind == "edge" and b.kind == "edge":
                return bool(set(a.edge) & set(b.edge))
            vertex, edge = (a, b) if a.kind == "vertex" else (b, a)
            return vertex.vertex in edge.edge

        expected = {
            (i, j)
            for (i, a), (j, b) in combinations(enumerate(origin.origin), 2)
            if adjacent(a, b)
        }
        assert set(total.edges) == expected


class TestRelabel:
    def test_relabel(self, p4):
        assert relabel(p4, [3, 2, 1, 0]) == p4
        assert relabel(p4, [1, 0, 2, 3]).edges == ((0, 1), (0, 2), (2, 3))

    def test_not_a_permutation(self, p4):
        with pytest.raises(GraphError):
            relabel(p4, [0, 0, 1, 2])


class TestNetworkxInterop:
    def test_round_trip(self, c6):
        assert graph_from_networkx(c6.to_networkx()) == c6

    def test_foreign_labels(self):
        with pytest.raises(GraphError):
            graph_from_networkx(nx.path_graph(["a", "b"]))


class TestGenerators:
    def test_full_probability_is_complete_bipartite(self):
        b, part = random_bipartite(2, 2, 1.0, 7)
        assert b == complete_bipartite(2, 2)
        assert part.X == (0, 1)
        assert part.Y == (2, 3)

    def test_zero_probability_is_edgeless(self):
        b, _ = random_bipartite(2, 2, 0.0, 3)
        assert b == empty_graph(4)

    def test_deterministic(self):
        assert random_bipartite(3, 3, 0.5, 42) == random_bipartite(3, 3, 0.5, 42)

    @pytest.mark.parametrize("seed", range(10))
    def test_sides_hold(self, seed):
        b, part = random_bipartite(4, 5, 0.5, seed)
        validate_bipartition(b, part)
        validate_bipartition(b, find_bipartition(b))

    def test_bad_probability(self):
        with pytest.raises(GenerationError):
            random_bipartite(2, 2, 1.5, 0)

    def test_bounded_degree(self):
        b, _ = random_bipartite_bounded(4, 4, 0.9, 1, max_degree=3, retries=100000)
        assert max_degree_filter(b, 3)

    def test_bounded_degree_gives_up(self):
        with pytest.raises(GenerationError):
            random_bipartite_bounded(3, 3, 1.0, 0, max_degree=2, retries=5)

    def test_random_graph_deterministic(self):
        assert random_graph(8, 0.4, 5) == random_graph(8, 0.4, 5)
        assert random_graph(8, 0.0, 5) == empty_graph(8)
