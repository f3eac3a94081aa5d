"""Unit tests for graph models and graph surgeries."""

import random
import sys
import os

import pytest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from constructions.generator import complete, cycle, matching
from graphs.graph6 import upper_triangle_pairs
from graphs.models import Graph, VertexSet
from graphs.operations import (
    complement,
    connected_components,
    delete_closed_neighborhood,
    disjoint_union,
    disjoint_union_all,
    induced_subgraph,
)
from metrics.service import is_maximal_independent
from mis_engine.service import count_mis, enumerate_mis, enumerate_mis_containing
from shared.exceptions import InvalidGraphError, ValidationError, VertexLimitError


class TestGraphModel:
    """Test cases for Graph and VertexSet."""

    def test_rejects_asymmetric_rows(self):
        """Test a one-sided edge is refused."""
        with pytest.raises(InvalidGraphError, match="not symmetric"):
            Graph(n=2, adj=(0b10, 0))

    def test_rejects_loops(self):
        """Test self-adjacency is refused."""
        with pytest.raises(InvalidGraphError):
            Graph(n=2, adj=(0b01, 0))
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range_neighbors(self):
        """Test rows naming vertices outside [0, n)."""
        with pytest.raises(InvalidGraphError):
            Graph(n=2, adj=(0b100, 0))
        with pytest.raises(ValidationError):
            Graph.from_edges(2, [(0, 2)])

    def test_vertex_cap(self):
        """Test graphs above the configured cap are refused."""
        with pytest.raises(VertexLimitError):
            Graph.empty(257)

    def test_accessors(self):
        """Test edges, degrees and neighborhoods."""
        c5 = cycle(5)

        assert c5.edges == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        assert c5.edge_count == 5
        assert c5.degree(0) == 2
        assert c5.neighbors(0).to_list() == [1, 4]
        assert c5.closed_neighborhood(0).to_list() == [0, 1, 4]

    def test_vertex_set(self):
        """Test VertexSet container behavior and text form."""
        s = VertexSet.of([2, 0])

        assert len(s) == 2
        assert 0 in s and 1 not in s
        assert list(s) == [0, 2]
        assert str(s) == "{0,2}"

    def test_vertex_set_outside_graph(self):
        """Test sets naming missing vertices are refused."""
        with pytest.raises(ValidationError):
            Graph.empty(3).check_vertex_set(VertexSet.of([3]))


class TestGraphOperations:
    """Test cases for unions, deletions, restrictions and complements."""

    def test_disjoint_union(self):
        """Test K3 + K2 has components K3 and K2."""
        union = disjoint_union(complete(3), complete(2))

        assert union.n == 5
        assert connected_components(union) == [0b00111, 0b11000]
        assert union.edges == [(0, 1), (0, 2), (1, 2), (3, 4)]

    def test_union_with_empty_graph(self):
        """Test G + empty(0) == G."""
        c5 = cycle(5)

        assert disjoint_union(c5, Graph.empty(0)) == c5
        assert disjoint_union_all([]) == Graph.empty(0)

    def test_union_of_edges(self):
        """Test K2 + K2 has four maximal independent sets."""
        assert count_mis(disjoint_union(complete(2), complete(2))) == 4

    def test_union_cap(self):
        """Test unions above the cap are refused."""
        with pytest.raises(VertexLimitError):
            disjoint_union(Graph.empty(200), Graph.empty(100))

    def test_delete_closed_neighborhood_cycle(self):
        """Test C5 - N[0] is K2 on {2, 3}."""
        sub = delete_closed_neighborhood(cycle(5), 0)

        assert sub.graph == complete(2)
        assert sub.labels == (2, 3)

    def test_delete_closed_neighborhood_complete(self):
        """Test K_n - N[v] is empty."""
        assert delete_closed_neighborhood(complete(4), 2).graph == Graph.empty(0)

    def test_delete_closed_neighborhood_path(self):
        """Test P4 - N[0] is K2 on {2, 3}."""
        path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        sub = delete_closed_neighborhood(path, 0)

        assert sub.graph == complete(2)
        assert sub.lift(VertexSet.of([0])).to_list() == [2]

    def test_delete_bad_vertex(self):
        """Test out-of-range vertices are refused."""
        with pytest.raises(ValidationError):
            delete_closed_neighborhood(cycle(5), 5)

    def test_induced_subgraph(self):
        """Test restrictions of K4, C5 and C6."""
        assert induced_subgraph(complete(4), VertexSet.of([0, 2, 3])).graph == complete(3)
        assert induced_subgraph(cycle(5), VertexSet.of([0, 2])).graph == Graph.empty(2)
        assert induced_subgraph(cycle(6), VertexSet.of([0, 1, 3, 4])).graph == matching(2)

    def test_complement(self):
        """Test complements of K3, C5 and empty graphs."""
        assert complement(complete(3)) == Graph.empty(3)
        assert complement(Graph.empty(4)) == complete(4)

        c5_bar = complement(cycle(5))
        assert c5_bar.edge_count == 5
        assert all(c5_bar.degree(v) == 2 for v in range(5))
        assert len(connected_components(c5_bar)) == 1

    def test_components_ordered_by_smallest_vertex(self):
        """Test component masks come out in vertex order."""
        graph = Graph.from_edges(5, [(3, 4), (0, 2)])

        assert connected_components(graph) == [0b00101, 0b00010, 0b11000]

def random_graph(rng, n, density):
    """Random labeled graph with the given edge probability."""
    return Graph.from_edges(n, [p for p in upper_triangle_pairs(n) if rng.random() < density])


def revalidated(graph):
    """Rebuild a graph through the validating constructor."""
    return Graph(n=graph.n, adj=graph.adj)


class TestSurgeryInvariants:
    """Seeded random checks of the surgeries on graphs with n <= 12."""

    @pytest.fixture
    def graphs(self):
        """200 random graphs with mixed densities."""
        rng = random.Random(31)
        return [
            random_graph(rng, rng.randint(0, 12), rng.choice([0.1, 0.3, 0.5, 0.8]))
            for _ in range(200)
        ]

    def test_complement_is_an_involution(self, graphs):
        """Test complement(complement(g)) == g and the edge count of the complement."""
        for graph in graphs:
            bar = revalidated(complement(graph))

            assert complement(bar) == graph
            assert bar.edge_count == graph.n * (graph.n - 1) // 2 - graph.edge_count

    def test_delete_closed_neighborhood_size(self, graphs):
        """Test |V(G - N[v])| == n - |N[v]| and that N[v] is gone."""
        for graph in graphs:
            for v in range(graph.n):
                closed = graph.closed_neighborhood(v)
                rest = delete_closed_neighborhood(graph, v)

                assert revalidated(rest.graph).n == graph.n - len(closed)
                assert not set(rest.labels) & set(closed)
                assert list(rest.labels) == sorted(rest.labels)

    def test_induced_subgraph_keeps_edges(self, graphs):
        """Test an induced subgraph has exactly the parent's edges between kept vertices."""
        rng = random.Random(32)
        for graph in graphs:
            keep = VertexSet(bits=rng.getrandbits(graph.n) if graph.n else 0)
            sub = induced_subgraph(graph, keep)
            lifted = {tuple(sorted((sub.labels[u], sub.labels[v]))) for u, v in revalidated(sub.graph).edges}

            assert lifted == {(u, v) for u, v in graph.edges if u in keep and v in keep}

    def test_disjoint_union_is_associative(self, graphs):
        """Test (a + b) + c == a + (b + c) and that the result is a valid graph."""
        for a, b, c in zip(graphs[0::3], graphs[1::3], graphs[2::3]):
            left = disjoint_union(disjoint_union(a, b), c)
            right = disjoint_union(a, disjoint_union(b, c))

            assert left == right
            assert revalidated(left).edge_count == a.edge_count + b.edge_count + c.edge_count

    def test_enumerated_sets_are_maximal(self, graphs):
        """Test every enumerated set is maximal independent."""
        for graph in graphs:
            assert all(is_maximal_independent(graph, s) for s in enumerate_mis(graph))

    def test_lifted_sets_through_a_vertex(self, graphs):
        """Test sets through v are the enumerated sets that contain v."""
        for graph in graphs:
            everything = enumerate_mis(graph)
            for v in range(graph.n):
                assert enumerate_mis_containing(graph, v) == {s for s in everything if v in s}

    def test_lift_rejects_foreign_vertices(self):
        """Test lifting a set outside the subgraph is refused."""
        rest = delete_closed_neighborhood(cycle(6), 0)

        with pytest.raises(ValidationError):
            rest.lift(VertexSet.of([3]))


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
