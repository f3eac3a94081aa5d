"""Unit tests for construction families."""

import sys
import os

import pytest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from bounds.formulas import g_bound, mis_max, mis_triangle_free_max
from constructions.generator import build, complete, cycle, g_extremal, hujter_tuza, matching, moon_moser
from constructions.models import FamilyKind, FamilySpec
from graphs.graph6 import encode_graph6
from graphs.operations import connected_components
from metrics.service import induced_matching_number, is_triangle_free, triangle_matching_number
from mis_engine.service import count_mis
from shared.exceptions import DomainError


def component_sizes(graph):
    """Sizes of the connected components, in vertex order."""
    return [bin(mask).count("1") for mask in connected_components(graph)]


class TestBasicFamilies:
    """Test cases for cycle, complete and matching."""

    def test_basic_counts(self):
        """Test C5, K4 and 3K2."""
        assert count_mis(cycle(5)) == 5
        assert count_mis(complete(4)) == 4
        assert count_mis(matching(3)) == 8

    def test_cycle_domain(self):
        """Test cycles need three vertices."""
        with pytest.raises(DomainError):
            cycle(2)

    def test_degenerate_sizes(self):
        """Test K0 and 0K2 are the empty graph."""
        assert complete(0).n == 0
        assert matching(0).n == 0


class TestExtremalFamilies:
    """Test cases for the extremal witnesses."""

    def test_moon_moser_examples(self):
        """Test 2K3, K3 + K4 and K3 + K2."""
        assert component_sizes(moon_moser(6)) == [3, 3]
        assert component_sizes(moon_moser(7)) == [4, 3]
        assert component_sizes(moon_moser(5)) == [3, 2]
        assert count_mis(moon_moser(7)) == 12

    def test_moon_moser_attains_maximum(self):
        """Test moon_moser(n) attains mis_max(n) for 3 <= n <= 24."""
        for n in range(3, 25):
            assert count_mis(moon_moser(n)) == mis_max(n)

    def test_moon_moser_alternative(self):
        """Test ((n-4)/3)K3 + 2K2 ties for n = 1 mod 3."""
        for n in range(4, 25, 3):
            graph = moon_moser(n, alternative=True)
            assert count_mis(graph) == mis_max(n)
            assert component_sizes(graph)[-2:] == [2, 2]

    def test_moon_moser_alternative_needs_residue_one(self):
        """Test the alternative is refused for other residues."""
        with pytest.raises(DomainError):
            moon_moser(6, alternative=True)

    def test_hujter_tuza_examples(self):
        """Test 4K2, C5 + K2 and C5."""
        assert count_mis(hujter_tuza(8)) == 16
        assert count_mis(hujter_tuza(7)) == 10
        assert count_mis(hujter_tuza(5)) == 5
        assert component_sizes(hujter_tuza(7)) == [5, 2]

    def test_hujter_tuza_attains_maximum(self):
        """Test triangle-free witnesses for 4 <= n <= 24."""
        for n in range(4, 25):
            graph = hujter_tuza(n)
            assert is_triangle_free(graph)
            assert count_mis(graph) == mis_triangle_free_max(n)

    def test_hujter_tuza_induced_matching(self):
        """Test the induced matching number is n/2, or (n-3)/2 with the C5."""
        for n in range(4, 17):
            expected = n // 2 if n % 2 == 0 else (n - 3) // 2
            assert induced_matching_number(hujter_tuza(n)) == expected

    def test_g_extremal_examples(self):
        """Test 2K3 + 2K2, 3K2 and C5 + 2K2."""
        assert component_sizes(g_extremal(2, 10)) == [3, 3, 2, 2]
        assert component_sizes(g_extremal(1, 6)) == [2, 2, 2]
        assert component_sizes(g_extremal(0, 9)) == [5, 2, 2]
        assert count_mis(g_extremal(2, 10)) == 36
        assert count_mis(g_extremal(1, 6)) == 8
        assert count_mis(g_extremal(0, 9)) == 20

    def test_g_extremal_attains_bound(self):
        """Test witness equality and admissibility for n <= 24."""
        for n in range(25):
            for t in range(n // 3 + 1):
                if t == 0 and n % 2 and n < 5:
                    continue
                graph = g_extremal(t, n)
                assert graph.n == n
                assert count_mis(graph) == g_bound(t, n)
                assert triangle_matching_number(graph) <= t

    def test_g_extremal_domain(self):
        """Test out-of-domain parameters."""
        with pytest.raises(DomainError):
            g_extremal(3, 8)
        with pytest.raises(DomainError):
            g_extremal(0, 3)


class TestFamilySpec:
    """Test cases for FamilySpec validation and build()."""

    def test_build_dispatch(self):
        """Test build() matches the direct generators."""
        assert build(FamilySpec(kind=FamilyKind.CYCLE, n=6)) == cycle(6)
        assert build(FamilySpec(kind="matching", n=6)) == matching(3)
        assert build(FamilySpec(kind="g_extremal", n=10, t=2)) == g_extremal(2, 10)

    def test_matching_needs_even_n(self):
        """Test odd vertex counts are refused for matchings."""
        with pytest.raises(DomainError):
            FamilySpec(kind=FamilyKind.MATCHING, n=5)

    def test_t_only_for_g_extremal(self):
        """Test t is required by g_extremal and refused elsewhere."""
        with pytest.raises(DomainError):
            FamilySpec(kind=FamilyKind.G_EXTREMAL, n=6)
        with pytest.raises(DomainError):
            FamilySpec(kind=FamilyKind.CYCLE, n=6, t=1)

    def test_deterministic_output(self):
        """Test repeated builds encode identically."""
        spec = FamilySpec(kind=FamilyKind.MOON_MOSER, n=13)

        assert encode_graph6(build(spec)) == encode_graph6(build(spec))


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
