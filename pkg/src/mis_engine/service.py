"""Enumeration and counting of maximal independent sets."""

import logging
from typing import List, Optional, Sequence, Set

from graphs.bitset import iter_bits, popcount
from graphs.models import Graph, VertexSet
from graphs.operations import connected_components, delete_closed_neighborhood
from shared.exceptions import ResourceLimitError

logger = logging.getLogger(__name__)

# Exact unbounded nonnegative integer
BigCount = int


def enumerate_mis(g: Graph, limit: Optional[int] = None) -> Set[VertexSet]:
    """
    Enumerate the maximal independent sets of a graph.

    Pivoting maximal-clique recursion run directly on independent sets:
    the candidates are the vertices non-adjacent to everything chosen so
    far, and each step branches only on the closed neighborhood of a
    pivot that eliminates the most candidates.

    Args:
        g: Graph
        limit: Optional cap on the number of sets; exceeding it discards
            the partial output

    Returns:
        Every maximal independent set exactly once (the empty set for n = 0)

    Raises:
        ResourceLimitError: If more than limit sets exist
    """
    found: List[int] = []
    _expand(g.closed_rows(), 0, g.vertex_mask, 0, found, limit)
    logger.debug(f"Enumerated {len(found)} maximal independent sets on {g.n} vertices")
    return {VertexSet(bits=bits) for bits in found}


def enumerate_mis_containing(g: Graph, v: int, limit: Optional[int] = None) -> Set[VertexSet]:
    """
    Enumerate the maximal independent sets that contain v.

    These are exactly {v} plus a maximal independent set of g - N[v],
    mapped back to the labels of g.

    Args:
        g: Graph
        v: Vertex every returned set contains
        limit: Optional cap on the number of sets

    Returns:
        Every maximal independent set of g containing v

    Raises:
        ValidationError: If v is out of range
        ResourceLimitError: If more than limit sets exist
    """
    rest = delete_closed_neighborhood(g, v)
    bit = 1 << v
    return {
        VertexSet(bits=rest.lift(s).bits | bit)
        for s in enumerate_mis(rest.graph, limit=limit)
    }


def count_mis(g: Graph) -> BigCount:
    """
    Count maximal independent sets without materializing them.

    The count is multiplicative over connected components, so each
    component is counted separately by the enumeration recursion.

    Args:
        g: Graph

    Returns:
        mis(g); 1 for the empty graph
    """
    closed = g.closed_rows()
    total = 1
    for component in connected_components(g):
        total *= _count(closed, component, 0)
    return total


def _choose_pivot(closed: Sequence[int], p: int, x: int) -> int:
    """Vertex of p | x whose closed neighborhood meets the fewest candidates."""
    best_vertex = -1
    best_size = -1
    for u in iter_bits(p | x):
        size = popcount(p & closed[u])
        if best_vertex < 0 or size < best_size:
            best_vertex, best_size = u, size
            if size == 0:
                break
    return best_vertex


def _expand(
    closed: Sequence[int],
    chosen: int,
    candidates: int,
    excluded: int,
    found: List[int],
    limit: Optional[int],
) -> None:
    if not candidates:
        if not excluded:
            found.append(chosen)
            if limit is not None and len(found) > limit:
                raise ResourceLimitError(
                    f"More than {limit} maximal independent sets; output discarded"
                )
        return

    pivot = _choose_pivot(closed, candidates, excluded)
    for v in iter_bits(candidates & closed[pivot]):
        bit = 1 << v
        _expand(
            closed,
            chosen | bit,
            candidates & ~closed[v],
            excluded & ~closed[v],
            found,
            limit,
        )
        candidates &= ~bit
        excluded |= bit


def _count(closed: Sequence[int], candidates: int, excluded: int) -> int:
    if not candidates:
        return 0 if excluded else 1

    pivot = _choose_pivot(closed, candidates, excluded)
    total = 0
    for v in iter_bits(candidates & closed[pivot]):
        bit = 1 << v
        total += _count(closed, candidates & ~closed[v], excluded & ~closed[v])
        candidates &= ~bit
        excluded |= bit
    return total
