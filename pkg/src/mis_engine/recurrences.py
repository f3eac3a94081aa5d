"""Wood's branching upper bound and the cycle recurrence."""

import logging
from typing import Dict, Sequence

from graphs.bitset import iter_bits, popcount
from graphs.models import Graph
from shared.exceptions import DomainError

from .service import BigCount

logger = logging.getLogger(__name__)


def wood_bound(g: Graph) -> BigCount:
    """
    Recursive upper bound mis(G) <= sum over w in N[v] of mis(G - N[w]).

    Every maximal independent set meets N[v], so recursing on G - N[w]
    for each w in N[v] over-counts. The branch vertex v is a vertex of
    minimum degree in the current graph, ties broken by lowest index.
    Subgraphs are tracked as masks of remaining vertices; since relabeling
    preserves vertex order, the branch choices match the recursion over
    relabeled induced subgraphs.

    Args:
        g: Graph

    Returns:
        An upper bound on count_mis(g); 1 for the empty graph
    """
    memo: Dict[int, int] = {}
    bound = _wood(g.adj, g.vertex_mask, memo)
    logger.debug(f"Wood bound {bound} on {g.n} vertices ({len(memo)} subproblems)")
    return bound


def _wood(adj: Sequence[int], alive: int, memo: Dict[int, int]) -> int:
    if not alive:
        return 1
    if alive in memo:
        return memo[alive]

    branch_vertex = -1
    smallest = -1
    for u in iter_bits(alive):
        degree = popcount(adj[u] & alive)
        if branch_vertex < 0 or degree < smallest:
            branch_vertex, smallest = u, degree

    total = 0
    for w in iter_bits((adj[branch_vertex] | 1 << branch_vertex) & alive):
        total += _wood(adj, alive & ~(adj[w] | 1 << w), memo)

    memo[alive] = total
    return total


def mis_cycle(n: int) -> BigCount:
    """
    mis(C_n) from mis(C3)=3, mis(C4)=2, mis(C5)=5 and
    mis(C_n) = mis(C_{n-2}) + mis(C_{n-3}).

    Raises:
        DomainError: If n < 3
    """
    if n < 3:
        raise DomainError(f"Cycles need at least 3 vertices (got {n})")

    values = [3, 2, 5]
    while len(values) < n - 2:
        values.append(values[-2] + values[-3])
    return values[n - 3]
