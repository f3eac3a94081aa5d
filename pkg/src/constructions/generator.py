"""Generators for extremal witnesses and basic graphs.

Components are laid out in a fixed order (special component first, then K3
blocks, then K2 blocks) so the graph6 output is deterministic.
"""

import logging
from typing import List, Optional

from graphs.models import Graph
from graphs.operations import disjoint_union_all
from shared.validators import validate_nonnegative_int

from .models import FamilyKind, FamilySpec

logger = logging.getLogger(__name__)


def cycle(n: int) -> Graph:
    """C_n with edges i ~ i+1 mod n."""
    spec = FamilySpec(kind=FamilyKind.CYCLE, n=validate_nonnegative_int(n, "n"))
    return Graph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])


def complete(n: int) -> Graph:
    """K_n."""
    n = validate_nonnegative_int(n, "n")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def matching(k: int) -> Graph:
    """kK_2 with edges 2i ~ 2i+1."""
    k = validate_nonnegative_int(k, "k")
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def _blocks(special: Optional[Graph], triangles: int, edges: int) -> Graph:
    parts: List[Graph] = [] if special is None else [special]
    parts += [complete(3)] * triangles
    if edges:
        parts.append(matching(edges))
    return disjoint_union_all(parts)


def moon_moser(n: int, alternative: bool = False) -> Graph:
    """
    Graph on n vertices with the largest number of maximal independent sets.

    Args:
        n: Vertex count, at least 3
        alternative: For n = 1 mod 3, build ((n-4)/3)K3 + 2K2 instead of
            ((n-4)/3)K3 + K4

    Returns:
        (n/3)K3, ((n-4)/3)K3 + K4 or ((n-2)/3)K3 + K2 by the residue of n

    Raises:
        DomainError: If n < 3, or alternative is set for another residue
    """
    spec = FamilySpec(
        kind=FamilyKind.MOON_MOSER, n=validate_nonnegative_int(n, "n"), alternative=alternative
    )
    n = spec.n
    residue = n % 3
    if residue == 0:
        return _blocks(None, n // 3, 0)
    if residue == 1:
        if spec.alternative:
            return _blocks(None, (n - 4) // 3, 2)
        return _blocks(complete(4), (n - 4) // 3, 0)
    return _blocks(None, (n - 2) // 3, 1)


def hujter_tuza(n: int) -> Graph:
    """
    Triangle-free graph on n vertices with the most maximal independent sets.

    Args:
        n: Vertex count, at least 4

    Returns:
        (n/2)K2 for even n, C5 + ((n-5)/2)K2 for odd n
    """
    spec = FamilySpec(kind=FamilyKind.HUJTER_TUZA, n=validate_nonnegative_int(n, "n"))
    if spec.n % 2 == 0:
        return matching(spec.n // 2)
    return _blocks(cycle(5), 0, (spec.n - 5) // 2)


def g_extremal(t: int, n: int) -> Graph:
    """
    Witness attaining g_t(n) among graphs with triangle matching number at most t.

    With m = n - 3t: tK3 + (m/2)K2 for even m, (t-1)K3 + ((m+3)/2)K2 for
    odd m and t > 0, and C5 + ((n-5)/2)K2 for odd m and t = 0.

    Raises:
        DomainError: Unless 0 <= 3t <= n, and n >= 5 for t = 0 with odd n
    """
    spec = FamilySpec(
        kind=FamilyKind.G_EXTREMAL,
        n=validate_nonnegative_int(n, "n"),
        t=validate_nonnegative_int(t, "t"),
    )
    t, n = spec.t, spec.n
    m = n - 3 * t
    if m % 2 == 0:
        return _blocks(None, t, m // 2)
    if t > 0:
        return _blocks(None, t - 1, (m + 3) // 2)
    return _blocks(cycle(5), 0, (n - 5) // 2)


def build(spec: FamilySpec) -> Graph:
    """Build the family member a spec describes."""
    logger.debug(f"Building {spec.kind.value} with n={spec.n} t={spec.t}")

    if spec.kind is FamilyKind.MOON_MOSER:
        return moon_moser(spec.n, alternative=spec.alternative)
    if spec.kind is FamilyKind.HUJTER_TUZA:
        return hujter_tuza(spec.n)
    if spec.kind is FamilyKind.G_EXTREMAL:
        return g_extremal(spec.t, spec.n)
    if spec.kind is FamilyKind.CYCLE:
        return cycle(spec.n)
    if spec.kind is FamilyKind.COMPLETE:
        return complete(spec.n)
    return matching(spec.n // 2)
