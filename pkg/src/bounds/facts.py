"""Certified checks of the numeric facts behind the branching arguments."""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from shared.exceptions import DomainError
from shared.models import Report
from shared.settings import get_settings
from shared.validators import validate_minimum

from .constant import Precision, root_c, root_polynomial
from .formulas import evaluate_g, g_bound
from .models import RealInterval

logger = logging.getLogger(__name__)

# (k, multiplier of g_t(n - k), multiplier of g_t(n), equality expected when unclamped)
FACT1_RATIOS: Tuple[Tuple[int, int, int, bool], ...] = (
    (3, 8, 3, False),
    (2, 2, 1, True),
    (4, 4, 1, True),
)

# Degrees checked one by one; beyond this c >= (d+2)/(d+1) carries the induction
DEGREE_RANGE = (4, 64)


def check_fact1(t_max: int, span: int) -> Report:
    """
    Check the ratio facts g_t(n-3)/g_t(n) <= 3/8, g_t(n-2)/g_t(n) = 1/2 and
    g_t(n-4)/g_t(n) = 1/4 by exact cross-multiplication.

    Instances where g_t(n - k) is clamped are checked as inequalities only.
    Instances where n - k is negative or g is undefined are skipped.

    Args:
        t_max: Largest t, at least 1
        span: Range of n above 3t, at least 4

    Returns:
        Report with per-ratio instance and equality counts
    """
    t_max = validate_minimum(t_max, 1, "t_max")
    span = validate_minimum(span, 4, "span")

    counterexamples: List[str] = []
    skipped: List[str] = []
    checked = {k: 0 for k, _, _, _ in FACT1_RATIOS}
    equalities = {k: 0 for k, _, _, _ in FACT1_RATIOS}
    clamped = {k: 0 for k, _, _, _ in FACT1_RATIOS}

    for t in range(1, t_max + 1):
        for n in range(3 * t, 3 * t + span + 1):
            full = g_bound(t, n)
            for k, left, right, exact in FACT1_RATIOS:
                if n - k < 0:
                    skipped.append(f"t={t} n={n} k={k}: n-k is negative")
                    continue
                try:
                    smaller = evaluate_g(t, n - k)
                except DomainError as e:
                    skipped.append(f"t={t} n={n} k={k}: {e.message}")
                    continue

                lhs, rhs = left * smaller.value, right * full
                checked[k] += 1
                if smaller.clamped:
                    clamped[k] += 1

                if lhs > rhs:
                    counterexamples.append(
                        f"t={t} n={n} k={k}: {left}*g(n-k)={lhs} > {right}*g(n)={rhs}"
                    )
                elif lhs == rhs:
                    equalities[k] += 1
                elif exact and not smaller.clamped:
                    counterexamples.append(
                        f"t={t} n={n} k={k}: expected equality, "
                        f"{left}*g(n-k)={lhs} < {right}*g(n)={rhs}"
                    )

    evidence = []
    for k, left, right, exact in FACT1_RATIOS:
        relation = "=" if exact else "<="
        evidence.append(
            f"g_t(n-{k})/g_t(n) {relation} {right}/{left}: {checked[k]} instances, "
            f"{equalities[k]} equalities, {clamped[k]} clamped"
        )

    logger.info(f"Fact check ratios: {sum(checked.values())} instances, {len(counterexamples)} violations")
    return Report.conclude(
        check="fact1",
        counterexamples=counterexamples,
        inconclusive=[],
        evidence=evidence,
        skipped=skipped,
        instances_checked=sum(checked.values()),
        notes=[f"t in 1..{t_max}, n in 3t..3t+{span}"],
    )


def check_fact2(precision: Optional[Precision] = None) -> Report:
    """
    Certify the inequalities in c used by the triangle-free branching.

    Each inequality lhs <= rhs is certified when the enclosure of lhs lies
    entirely below the enclosure of rhs, refuted when it lies entirely
    above, and reported inconclusive otherwise.

    Args:
        precision: Width of the enclosure of c; defaults to the configured one

    Returns:
        Report itemizing every inequality
    """
    if precision is None:
        precision = get_settings().h_precision_value
    c = root_c(precision)

    items: List[Tuple[str, RealInterval, RealInterval]] = [
        ("2+c <= 2c^2", 2 + c, 2 * c ** 2),
    ]
    low, high = DEGREE_RANGE
    for d in range(low, high + 1):
        items.append((f"{d + 1} <= c^{d + 1}", RealInterval.exact(d + 1), c ** (d + 1)))
    items += [
        ("3c+1 <= c^5", 3 * c + 1, c ** 5),
        ("2c+1 <= c^4", 2 * c + 1, c ** 4),
        ("5 <= c^5 (cycle factor)", RealInterval.exact(5), c ** 5),
    ]

    evidence: List[str] = []
    counterexamples: List[str] = []
    inconclusive: List[str] = []
    for name, lhs, rhs in items:
        if lhs.certainly_le(rhs):
            evidence.append(f"{name}: certified, {lhs} <= {rhs}")
        elif lhs.certainly_gt(rhs):
            counterexamples.append(f"{name}: refuted, {lhs} > {rhs}")
        else:
            inconclusive.append(f"{name}: unresolved at precision {precision}; retry tighter")

    tail_ratio = Fraction(high + 2, high + 1)
    if c.certainly_gt(tail_ratio):
        evidence.append(
            f"d+1 <= c^(d+1) for d > {high}: c > {tail_ratio} >= (d+2)/(d+1)"
        )
    else:
        inconclusive.append(f"tail beyond d={high}: c not separated from {tail_ratio}")

    identity = root_polynomial(c)
    if identity.contains(0):
        evidence.append(f"c^6-2c^2-2c-1 enclosed in {identity} (width {float(identity.width):.3g})")
    else:
        counterexamples.append(f"c^6-2c^2-2c-1 enclosure {identity} excludes 0")

    notes = [
        f"c in {c}",
        "twin-vertex branching reduces to 3c+1 <= c^5",
        "branching 2h(n-4)+2h(n-5)+h(n-6) <= h(n) reduces to 2c^2+2c+1 = c^6",
    ]
    return Report.conclude(
        check="fact2",
        counterexamples=counterexamples,
        inconclusive=inconclusive,
        evidence=evidence,
        notes=notes,
        instances_checked=len(items) + 2,
    )


def check_cycle_factor_envelope(t_max: int, span: int) -> Report:
    """
    Check 3^t * 5^(m/5) <= g_t(3t + m) as 3^(5t) * 5^m <= g_t(3t + m)^5.

    This is the disjoint-union-of-cycles step of the triangle bound; m
    starts at 3 since the inequality fails for m = 1.
    """
    t_max = validate_minimum(t_max, 0, "t_max")
    span = validate_minimum(span, 3, "span")

    counterexamples: List[str] = []
    skipped: List[str] = []
    checked = 0
    for t in range(t_max + 1):
        for m in range(3, span + 1):
            n = 3 * t + m
            try:
                bound = g_bound(t, n)
            except DomainError as e:
                skipped.append(f"t={t} m={m}: {e.message}")
                continue
            checked += 1
            if 3 ** (5 * t) * 5 ** m > bound ** 5:
                counterexamples.append(f"t={t} n={n}: 3^(5t)*5^m exceeds g_t(n)^5={bound ** 5}")

    return Report.conclude(
        check="cycle-factor",
        counterexamples=counterexamples,
        inconclusive=[],
        evidence=[f"{checked} instances with t <= {t_max}, 3 <= m <= {span}"],
        skipped=skipped,
        instances_checked=checked,
    )
