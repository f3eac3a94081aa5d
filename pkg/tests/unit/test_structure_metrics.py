"""Unit tests for structure metrics."""

import random
import sys
import os

import pytest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from constructions.generator import complete, cycle, hujter_tuza, matching
from graphs.bitset import iter_bits, popcount
from graphs.graph6 import upper_triangle_pairs
from graphs.models import Graph, VertexSet
from graphs.operations import disjoint_union, disjoint_union_all, induced_subgraph
from metrics.service import (
    induced_matching_number,
    is_maximal_independent,
    is_triangle_free,
    structure_profile,
    triangle_matching_number,
)
from shared.exceptions import ValidationError
from sweeps.service import labeled_graph


def brute_induced_packing(graph, block):
    """Largest k such that some k*block vertices induce k disjoint K_block."""
    closed = graph.closed_rows()
    best = 0
    for bits in range(1 << graph.n):
        size = popcount(bits)
        if size % block or size // block <= best:
            continue
        members = list(iter_bits(bits))
        if all(popcount(closed[v] & bits) == block for v in members) and all(
            closed[u] & bits == closed[v] & bits for v in members for u in iter_bits(graph.adj[v] & bits)
        ):
            best = size // block
    return best


def random_graph(rng, n, density):
    """Random labeled graph with the given edge probability."""
    return Graph.from_edges(n, [p for p in upper_triangle_pairs(n) if rng.random() < density])


class TestStructureMetrics:
    """Test cases for triangle and matching parameters."""

    @pytest.fixture
    def path4(self):
        """Path 0-1-2-3."""
        return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])

    def test_triangle_free(self):
        """Test C5, K3 and K4."""
        assert is_triangle_free(cycle(5)) is True
        assert is_triangle_free(complete(3)) is False
        assert is_triangle_free(complete(4)) is False

    def test_triangle_matching_number(self):
        """Test K4, 2K3 and C5."""
        assert triangle_matching_number(complete(4)) == 1
        assert triangle_matching_number(disjoint_union(complete(3), complete(3))) == 2
        assert triangle_matching_number(cycle(5)) == 0

    def test_touching_triangles_do_not_pack(self):
        """Test two triangles joined by an edge count once."""
        graph = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])

        assert triangle_matching_number(graph) == 1

    def test_induced_matching_number(self, path4):
        """Test P4, C6 and 4K2."""
        assert induced_matching_number(path4) == 1
        assert induced_matching_number(cycle(6)) == 2
        assert induced_matching_number(matching(4)) == 4

    def test_five_cycle_has_one_induced_edge(self):
        """Test C5 + kK2 witnesses have induced matching number k + 1."""
        assert induced_matching_number(cycle(5)) == 1
        assert induced_matching_number(hujter_tuza(9)) == 3

    def test_agrees_with_brute_force(self):
        """Test both packings against subset enumeration on random graphs."""
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(1, 9)
            density = rng.choice([0.3, 0.5, 0.7])
            graph = Graph.from_edges(n, [p for p in upper_triangle_pairs(n) if rng.random() < density])

            assert induced_matching_number(graph) == brute_induced_packing(graph, 2)
            assert triangle_matching_number(graph) == brute_induced_packing(graph, 3)

    def test_is_maximal_independent(self):
        """Test maximal, non-maximal and dependent sets."""
        c5 = cycle(5)

        assert is_maximal_independent(c5, VertexSet.of([0, 2])) is True
        assert is_maximal_independent(c5, VertexSet.of([0])) is False
        assert is_maximal_independent(complete(2), VertexSet.of([0, 1])) is False

    def test_is_maximal_independent_rejects_foreign_vertices(self):
        """Test sets outside the graph are refused."""
        with pytest.raises(ValidationError):
            is_maximal_independent(complete(2), VertexSet.of([2]))

    def test_structure_profile(self):
        """Test the bundled profile of K3 + C5."""
        profile = structure_profile(disjoint_union_all([complete(3), cycle(5)]))

        assert profile.n == 8
        assert profile.triangle_free is False
        assert profile.triangle_matching_number == 1
        assert profile.induced_matching_number == 2

class TestParameterProperties:
    """Exhaustive and seeded random checks of the matching parameters."""

    @pytest.mark.parametrize("n", range(1, 7))
    def test_all_labeled_graphs_against_naive_packing(self, n):
        """Test both parameters on every labeled graph with n <= 6."""
        for index in range(1 << (n * (n - 1) // 2)):
            graph = labeled_graph(n, index)

            assert triangle_matching_number(graph) == brute_induced_packing(graph, 3)
            assert induced_matching_number(graph) == brute_induced_packing(graph, 2)

    def test_additive_over_disjoint_union(self):
        """Test both parameters add over g + h for random sides with n <= 8."""
        rng = random.Random(41)
        for _ in range(150):
            g = random_graph(rng, rng.randint(0, 8), rng.choice([0.3, 0.5, 0.7]))
            h = random_graph(rng, rng.randint(0, 8), rng.choice([0.3, 0.5, 0.7]))
            union = disjoint_union(g, h)

            assert triangle_matching_number(union) == triangle_matching_number(g) + triangle_matching_number(h)
            assert induced_matching_number(union) == induced_matching_number(g) + induced_matching_number(h)

    def test_monotone_under_induced_subgraphs(self):
        """Test restricting to an induced subgraph never increases either parameter."""
        rng = random.Random(42)
        for _ in range(150):
            n = rng.randint(1, 10)
            graph = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
            sub = induced_subgraph(graph, VertexSet(bits=rng.getrandbits(n))).graph

            assert triangle_matching_number(sub) <= triangle_matching_number(graph)
            assert induced_matching_number(sub) <= induced_matching_number(graph)

    @pytest.mark.parametrize("t", range(5))
    @pytest.mark.parametrize("m", range(5))
    def test_triangles_plus_edges(self, t, m):
        """Test tK3 + mK2 has triangle matching number t and induced matching number t + m."""
        graph = disjoint_union_all([complete(3)] * t + [matching(m)])

        assert triangle_matching_number(graph) == t
        assert induced_matching_number(graph) == t + m


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
