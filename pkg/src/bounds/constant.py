"""The constant c, largest real root of x^6 - 2x^2 - 2x - 1, and the h bound."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, TypeVar, Union

from shared.settings import get_settings
from shared.validators import validate_nonnegative_int, validate_positive_fraction

from .models import BoundQuery, HBoundEvaluation, RealInterval

logger = logging.getLogger(__name__)

# p(7/5) < 0 < p(3/2) and p is increasing on [1, inf)
ROOT_BRACKET = (Fraction(7, 5), Fraction(3, 2))

Precision = Union[Fraction, int, str]
Value = TypeVar("Value", Fraction, RealInterval)


def root_polynomial(x: Value) -> Value:
    """Evaluate x^6 - 2x^2 - 2x - 1 exactly at a rational or over an interval."""
    return x ** 6 - 2 * x ** 2 - 2 * x - 1


def root_c(width: Precision) -> RealInterval:
    """
    Certified enclosure of c by exact rational bisection.

    Args:
        width: Largest acceptable interval width, a positive rational

    Returns:
        Interval [lo, hi] inside (7/5, 3/2) with hi - lo <= width,
        p(lo) < 0 < p(hi) and hi^2 < 2

    Raises:
        ValidationError: If width is not a positive rational
    """
    return _bisect(validate_positive_fraction(width, "width"))


@lru_cache(maxsize=128)
def _bisect(width: Fraction) -> RealInterval:
    lo, hi = ROOT_BRACKET
    steps = 0
    while hi - lo > width or lo <= ROOT_BRACKET[0] or hi * hi >= 2:
        mid = (lo + hi) / 2
        if root_polynomial(mid) < 0:
            lo = mid
        else:
            hi = mid
        steps += 1

    if not root_polynomial(lo) < 0 < root_polynomial(hi):
        raise ArithmeticError("bisection lost the sign change of the root polynomial")

    logger.debug(f"Enclosed c to width {float(hi - lo):.3g} in {steps} bisection steps")
    return RealInterval(lo=lo, hi=hi)


def evaluate_h(t: int, n: int, precision: Optional[Precision] = None) -> HBoundEvaluation:
    """
    Certified enclosure of h_t(n) = 2^t * c^(n - 2t).

    When n < 2t the parameter is clamped to floor(n/2). The enclosure of c
    is refined until the result is no wider than the requested precision.

    Args:
        t: Induced matching parameter
        n: Vertex count
        precision: Largest acceptable width; defaults to the configured one

    Returns:
        Evaluation trace holding the interval
    """
    t = validate_nonnegative_int(t, "t")
    n = validate_nonnegative_int(n, "n")
    if precision is None:
        precision = get_settings().h_precision_value
    precision = validate_positive_fraction(precision, "precision")

    query = BoundQuery(kind="h", t=t, n=n)
    effective = query.clamped()
    t_eff, exponent = effective.t, effective.m
    scale = 2 ** t_eff

    if exponent == 0:
        interval = RealInterval.exact(scale)
    else:
        c_width = precision / (scale * exponent * Fraction(3, 2) ** (exponent - 1))
        while True:
            interval = scale * root_c(c_width) ** exponent
            if interval.width <= precision:
                break
            c_width /= 2

    if query.needs_clamp:
        logger.debug(f"h_{t}({n}) clamped to t={t_eff}")

    return HBoundEvaluation(
        query=query,
        effective_t=t_eff,
        exponent=exponent,
        clamped=query.needs_clamp,
        precision=precision,
        interval=interval,
    )


def h_bound(t: int, n: int, precision: Optional[Precision] = None) -> RealInterval:
    """Enclosure of the triangle-free bound 2^t c^(n-2t), clamped when n < 2t."""
    return evaluate_h(t, n, precision).interval
