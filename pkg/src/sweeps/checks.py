"""Per-graph evaluation against a theorem's bound."""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional

from bounds.constant import h_bound
from bounds.formulas import g_bound, mis_max, mis_triangle_free_max
from bounds.models import RealInterval
from graphs.models import Graph
from metrics.service import induced_matching_number, is_triangle_free, triangle_matching_number
from mis_engine.service import count_mis
from shared.exceptions import ValidationError
from shared.validators import validate_minimum

from .models import OVERALL, Bound, Theorem

logger = logging.getLogger(__name__)


class Status(str, Enum):
    """Outcome of checking one graph."""

    SKIPPED = "skipped"
    OK = "ok"
    VIOLATION = "violation"
    INCONCLUSIVE = "inconclusive"


class Outcome(NamedTuple):
    """Result of checking one graph; parameter is OVERALL for mm/ht."""

    status: Status
    parameter: int = OVERALL
    mis: int = 0
    bound: Optional[Bound] = None


class GraphChecker:
    """
    Checks graphs on a fixed vertex count against one theorem.

    For kp2 the h enclosure is tried at the base precision and then at
    successively squared precisions; a graph passes only when its count is
    at most the lower endpoint and fails only when it exceeds the upper one.
    """

    def __init__(
        self,
        theorem: Theorem,
        n: int,
        precision: Fraction = Fraction(1, 10 ** 8),
        tightenings: int = 2,
    ):
        """
        Initialize the checker and precompute integer bounds.

        Args:
            theorem: Theorem to check
            n: Vertex count of every graph
            precision: Base width of h enclosures
            tightenings: How many times the precision may be squared

        Raises:
            ValidationError: If n is below the theorem's minimum
        """
        self.theorem = Theorem(theorem)
        self.n = validate_minimum(n, self.theorem.minimum_vertices, "n")
        self.precisions: List[Fraction] = [precision ** (2 ** i) for i in range(tightenings + 1)]
        self._intervals: Dict[int, List[RealInterval]] = {}

        if self.theorem is Theorem.MM:
            self._overall = mis_max(self.n)
        elif self.theorem is Theorem.HT:
            self._overall = mis_triangle_free_max(self.n)
        elif self.theorem is Theorem.MAIN:
            self._by_t = {t: g_bound(t, self.n) for t in range(self.n // 3 + 1)}

    def bound_for(self, parameter: int) -> Bound:
        """Bound reported for a parameter value (base-precision interval for kp2)."""
        if self.theorem is Theorem.KP2:
            return self._interval(parameter, 0)
        if self.theorem is Theorem.MAIN:
            return self._by_t[parameter]
        return self._overall

    def _interval(self, t: int, level: int) -> RealInterval:
        levels = self._intervals.setdefault(t, [])
        while len(levels) <= level:
            levels.append(h_bound(t, self.n, self.precisions[len(levels)]))
        return levels[level]

    def check(self, graph: Graph) -> Outcome:
        """
        Check one graph.

        Args:
            graph: Graph on self.n vertices

        Returns:
            Outcome; SKIPPED when the graph is not admissible for the theorem
        """
        if graph.n != self.n:
            raise ValidationError(f"Expected a graph on {self.n} vertices, got {graph.n}")

        if self.theorem.triangle_free_only and not is_triangle_free(graph):
            return Outcome(Status.SKIPPED)

        mis = count_mis(graph)

        if self.theorem is Theorem.KP2:
            return self._check_h(graph, mis)

        parameter = OVERALL
        if self.theorem is Theorem.MAIN:
            parameter = triangle_matching_number(graph)
        bound = self.bound_for(parameter)
        status = Status.OK if mis <= bound else Status.VIOLATION
        return Outcome(status, parameter, mis, bound)

    def _check_h(self, graph: Graph, mis: int) -> Outcome:
        t = induced_matching_number(graph)
        for level in range(len(self.precisions)):
            interval = self._interval(t, level)
            if mis <= interval.lo:
                return Outcome(Status.OK, t, mis, interval)
            if mis > interval.hi:
                return Outcome(Status.VIOLATION, t, mis, interval)
            logger.debug(f"mis={mis} undecided against h_{t}({self.n}) at level {level}")
        return Outcome(Status.INCONCLUSIVE, t, mis, interval)


@lru_cache(maxsize=16)
def cached_checker(theorem: Theorem, n: int, precision: Fraction, tightenings: int) -> GraphChecker:
    """Per-process checker shared by every chunk with the same parameters."""
    return GraphChecker(theorem, n, precision, tightenings)
