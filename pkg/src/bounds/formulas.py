"""Closed-form maxima for the number of maximal independent sets."""

import logging

from shared.exceptions import DomainError
from shared.validators import validate_nonnegative_int

from .models import BoundQuery, GBoundEvaluation

logger = logging.getLogger(__name__)


def mis_max(n: int) -> int:
    """
    Largest number of maximal independent sets over all graphs on n vertices.

    Args:
        n: Vertex count, at least 3

    Returns:
        3^(n/3), 4*3^((n-4)/3) or 2*3^((n-2)/3) by the residue of n mod 3

    Raises:
        DomainError: If n < 3
    """
    n = validate_nonnegative_int(n, "n")
    if n < 3:
        raise DomainError(f"mis_max is defined for n >= 3 (got n={n})")

    residue = n % 3
    if residue == 0:
        return 3 ** (n // 3)
    if residue == 1:
        return 4 * 3 ** ((n - 4) // 3)
    return 2 * 3 ** ((n - 2) // 3)


def mis_triangle_free_max(n: int) -> int:
    """
    Largest number of maximal independent sets over triangle-free graphs.

    Args:
        n: Vertex count, at least 4

    Returns:
        2^(n/2) for even n, 5*2^((n-5)/2) for odd n

    Raises:
        DomainError: If n < 4
    """
    n = validate_nonnegative_int(n, "n")
    if n < 4:
        raise DomainError(f"mis_triangle_free_max is defined for n >= 4 (got n={n})")

    if n % 2 == 0:
        return 2 ** (n // 2)
    return 5 * 2 ** ((n - 5) // 2)


def evaluate_g(t: int, n: int) -> GBoundEvaluation:
    """
    Evaluate g_t(n) and record which case produced the value.

    When n < 3t the parameter is clamped to floor(n/3), so g_t(n - k)
    always means the bound for the largest feasible triangle count.

    Args:
        t: Triangle matching parameter
        n: Vertex count

    Returns:
        Evaluation trace

    Raises:
        DomainError: For t = 0 with n odd and n < 5
    """
    t = validate_nonnegative_int(t, "t")
    n = validate_nonnegative_int(n, "n")
    query = BoundQuery(kind="g", t=t, n=n)
    effective = query.clamped()
    t_eff, m = effective.t, effective.m

    if m % 2 == 0:
        case = "even"
        value = 3 ** t_eff * 2 ** (m // 2)
    elif t_eff > 0:
        case = "odd"
        value = 3 ** (t_eff - 1) * 2 ** ((m + 3) // 2)
    else:
        if n < 5:
            raise DomainError(f"g_0({n}) is undefined for odd n below 5")
        case = "odd-triangle-free"
        value = 5 * 2 ** ((n - 5) // 2)

    if query.needs_clamp:
        logger.debug(f"g_{t}({n}) clamped to t={t_eff}")

    return GBoundEvaluation(
        query=query,
        effective_t=t_eff,
        m=m,
        case=case,
        clamped=query.needs_clamp,
        value=value,
    )


def g_bound(t: int, n: int) -> int:
    """Largest mis(G) over graphs on n vertices with triangle matching number at most t."""
    return evaluate_g(t, n).value
