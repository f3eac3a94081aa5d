"""Brute-force maximal independent set oracle."""

from typing import Optional, Set

from graphs.models import Graph, VertexSet
from metrics.service import is_maximal_independent_bits
from shared.exceptions import VertexLimitError
from shared.settings import get_settings


def brute_force_mis(g: Graph, max_vertices: Optional[int] = None) -> Set[VertexSet]:
    """
    Find maximal independent sets by scanning all 2^n vertex subsets.

    Independent of the enumeration engine; used to verify it.

    Args:
        g: Graph
        max_vertices: Oracle cap (default: the configured oracle cap)

    Returns:
        Every subset that is independent and dominating

    Raises:
        VertexLimitError: If g has more vertices than the cap
    """
    cap = max_vertices if max_vertices is not None else get_settings().oracle_max_vertices
    if g.n > cap:
        raise VertexLimitError(
            f"Brute-force oracle refuses {g.n} vertices (cap {cap}, 2^n subsets)"
        )

    adj = g.adj
    return {
        VertexSet(bits=bits)
        for bits in range(1 << g.n)
        if is_maximal_independent_bits(adj, bits)
    }
