"""Triangle-freeness, induced triangle matchings and induced matchings."""

import logging
from typing import List, Sequence, Tuple

from graphs.bitset import iter_bits, popcount
from graphs.models import Graph, VertexSet
from graphs.operations import connected_components

from .models import StructureProfile

logger = logging.getLogger(__name__)

# A packing piece: (vertex mask, closed neighborhood of the piece)
Piece = Tuple[int, int]


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent."""
    adj = g.adj
    for u in range(g.n):
        for v in iter_bits(adj[u] >> (u + 1) << (u + 1)):
            if adj[u] & adj[v]:
                return False
    return True


def triangle_matching_number(g: Graph) -> int:
    """
    Largest k such that some 3k vertices induce exactly kK3.

    Args:
        g: Graph

    Returns:
        Size of a maximum induced triangle matching
    """
    return _max_induced_packing(g, _triangles(g), 3)


def induced_matching_number(g: Graph) -> int:
    """
    Largest k such that some 2k vertices induce exactly kK2.

    Args:
        g: Graph

    Returns:
        Size of a maximum induced matching
    """
    closed = g.closed_rows()
    pieces = [((1 << u) | (1 << v), closed[u] | closed[v]) for u, v in g.edges]
    return _max_induced_packing(g, pieces, 2)


def is_maximal_independent(g: Graph, s: VertexSet) -> bool:
    """
    True iff s is independent and every vertex outside s has a neighbor in s.

    Raises:
        ValidationError: If s names a vertex outside g
    """
    g.check_vertex_set(s)
    return is_maximal_independent_bits(g.adj, s.bits)


def is_maximal_independent_bits(adj: Sequence[int], bits: int) -> bool:
    """Maximal-independence predicate on raw adjacency rows and a mask."""
    dominated = bits
    for v in iter_bits(bits):
        if adj[v] & bits:
            return False
        dominated |= adj[v]
    return dominated == (1 << len(adj)) - 1


def structure_profile(g: Graph) -> StructureProfile:
    """Compute all structure parameters of a graph."""
    triangles = triangle_matching_number(g)
    logger.debug(f"Profiling graph on {g.n} vertices with {g.edge_count} edges")
    return StructureProfile(
        n=g.n,
        triangle_free=triangles == 0,
        triangle_matching_number=triangles,
        induced_matching_number=induced_matching_number(g),
    )


def _triangles(g: Graph) -> List[Piece]:
    """Every triangle u < v < w with its closed neighborhood."""
    adj = g.adj
    closed = g.closed_rows()
    pieces = []
    for u in range(g.n):
        for v in iter_bits(adj[u] >> (u + 1) << (u + 1)):
            for w in iter_bits(adj[u] & adj[v] & ~((2 << v) - 1)):
                pieces.append((
                    (1 << u) | (1 << v) | (1 << w),
                    closed[u] | closed[v] | closed[w],
                ))
    return pieces


def _max_induced_packing(g: Graph, pieces: List[Piece], piece_size: int) -> int:
    """
    Maximum number of pieces whose union induces exactly their disjoint union.

    Two pieces are compatible iff one misses the closed neighborhood of the
    other. The parameter is additive over connected components, so each
    component is searched separately.
    """
    if not pieces:
        return 0

    total = 0
    for component in connected_components(g):
        inside = [piece for piece in pieces if piece[0] & component == piece[0]]
        if inside:
            total += _branch(inside, piece_size, 0, 0)
    return total


def _branch(candidates: List[Piece], piece_size: int, size: int, best: int) -> int:
    if not candidates:
        return max(size, best)

    covered = 0
    for mask, _ in candidates:
        covered |= mask
    if size + min(len(candidates), popcount(covered) // piece_size) <= best:
        return best

    # Branch on the lowest covered vertex: some piece through it, or none.
    pivot = covered & -covered
    through = [piece for piece in candidates if piece[0] & pivot]
    avoiding = [piece for piece in candidates if not piece[0] & pivot]

    for _, blocked in through:
        compatible = [piece for piece in avoiding if not piece[0] & blocked]
        best = _branch(compatible, piece_size, size + 1, best)

    return _branch(avoiding, piece_size, size, best)
