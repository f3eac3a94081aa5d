"""Sweep service: chunked, pooled verification over labeled graphs or corpora."""

import logging
import time
from fractions import Fraction
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from bounds.formulas import g_bound, mis_max, mis_triangle_free_max
from constructions.generator import g_extremal, hujter_tuza, moon_moser
from graphs.bitset import iter_bits
from graphs.graph6 import encode_graph6, upper_triangle_pairs
from graphs.models import Graph
from metrics.service import induced_matching_number, is_triangle_free, triangle_matching_number
from mis_engine.service import count_mis, enumerate_mis
from shared.exceptions import DomainError, SweepLimitError
from shared.models import Report
from shared.settings import Settings, get_settings
from shared.validators import validate_minimum

from .checks import Outcome, Status, cached_checker
from .corpus import read_corpus
from .models import (
    OVERALL,
    Bound,
    InconclusiveCase,
    ParameterMaximum,
    SweepReport,
    Theorem,
    Violation,
)

logger = logging.getLogger(__name__)

# (line number, graph6, adjacency rows)
CorpusItem = Tuple[int, str, Tuple[int, ...]]


class BestSoFar(BaseModel):
    """Running maximum for one parameter value."""

    max_mis: int
    key: int
    witness: str
    bound: Bound
    graphs: int = 1


class SweepTally(BaseModel):
    """
    Partial sweep result for a set of graphs.

    merge() is associative and commutative: counts add, the larger maximum
    wins and ties go to the smaller key.
    """

    scanned: int = 0
    checked: int = 0
    best: Dict[int, BestSoFar] = Field(default_factory=dict)
    violations: List[Violation] = Field(default_factory=list)
    inconclusive: List[InconclusiveCase] = Field(default_factory=list)

    def record(self, key: int, graph: Graph, outcome: Outcome, precision: Fraction) -> None:
        """Fold one checked graph into the tally."""
        self.scanned += 1
        if outcome.status is Status.SKIPPED:
            return
        self.checked += 1

        current = self.best.get(outcome.parameter)
        if current is None:
            self.best[outcome.parameter] = BestSoFar(
                max_mis=outcome.mis, key=key, witness=encode_graph6(graph), bound=outcome.bound
            )
        else:
            current.graphs += 1
            if outcome.mis > current.max_mis or (
                outcome.mis == current.max_mis and key < current.key
            ):
                current.max_mis, current.key = outcome.mis, key
                current.witness = encode_graph6(graph)

        if outcome.status is Status.VIOLATION:
            self.violations.append(
                Violation(
                    key=key,
                    graph6=encode_graph6(graph),
                    mis=outcome.mis,
                    bound=outcome.bound,
                    parameter=None if outcome.parameter == OVERALL else outcome.parameter,
                )
            )
        elif outcome.status is Status.INCONCLUSIVE:
            self.inconclusive.append(
                InconclusiveCase(
                    key=key,
                    graph6=encode_graph6(graph),
                    mis=outcome.mis,
                    parameter=outcome.parameter,
                    interval=outcome.bound,
                    precision=precision,
                )
            )

    def merge(self, other: "SweepTally") -> "SweepTally":
        """Combine two tallies into a new one."""
        best = {t: b.model_copy() for t, b in self.best.items()}
        for t, theirs in other.best.items():
            mine = best.get(t)
            if mine is None:
                best[t] = theirs.model_copy()
                continue
            graphs = mine.graphs + theirs.graphs
            if theirs.max_mis > mine.max_mis or (
                theirs.max_mis == mine.max_mis and theirs.key < mine.key
            ):
                mine = theirs.model_copy()
            mine.graphs = graphs
            best[t] = mine

        return SweepTally(
            scanned=self.scanned + other.scanned,
            checked=self.checked + other.checked,
            best=best,
            violations=sorted(self.violations + other.violations, key=lambda v: v.key),
            inconclusive=sorted(self.inconclusive + other.inconclusive, key=lambda c: c.key),
        )


def labeled_graph(n: int, index: int) -> Graph:
    """Labeled graph whose edge set is the set bits of index in graph6 pair order."""
    pairs = upper_triangle_pairs(n)
    adj = [0] * n
    for bit in iter_bits(index):
        u, v = pairs[bit]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.trusted(n, adj)


def _scan_labeled_chunk(task: Tuple[Theorem, int, Fraction, int, int, int]) -> SweepTally:
    theorem, n, precision, tightenings, start, stop = task
    checker = cached_checker(theorem, n, precision, tightenings)
    tally = SweepTally()
    for index in range(start, stop):
        graph = labeled_graph(n, index)
        tally.record(index, graph, checker.check(graph), precision)
    logger.debug(f"Scanned labeled graphs [{start}, {stop}) on {n} vertices")
    return tally


def _scan_corpus_chunk(task: Tuple[Theorem, int, Fraction, int, List[CorpusItem]]) -> SweepTally:
    theorem, n, precision, tightenings, items = task
    checker = cached_checker(theorem, n, precision, tightenings)
    tally = SweepTally()
    for line, _, adj in items:
        graph = Graph.trusted(n, adj)
        tally.record(line, graph, checker.check(graph), precision)
    if items:
        logger.debug(f"Scanned corpus lines {items[0][0]}..{items[-1][0]}")
    return tally


class SweepService:
    """Service for running verification sweeps."""

    def __init__(self, settings: Optional[Settings] = None, workers: Optional[int] = None):
        """
        Initialize sweep service.

        Args:
            settings: Settings to use; defaults to the process-wide settings
            workers: Worker process count; overrides settings.workers
        """
        self.settings = settings or get_settings()
        self.workers = workers if workers is not None else self.settings.workers

    def sweep_labeled(self, n: int, theorem: Union[Theorem, str]) -> SweepReport:
        """
        Check every labeled graph on n vertices against a theorem.

        Args:
            n: Vertex count, at most the labeled exhaustion cap
            theorem: mm, ht, main or kp2

        Returns:
            Sweep report over all 2^(n(n-1)/2) labeled graphs

        Raises:
            SweepLimitError: If n is above the exhaustion cap
            ValidationError: If n is below the theorem's minimum
        """
        theorem = Theorem(theorem)
        n = validate_minimum(n, theorem.minimum_vertices, "n")
        cap = self.settings.labeled_sweep_max_vertices
        if n > cap:
            raise SweepLimitError(n, cap)

        total = 1 << (n * (n - 1) // 2)
        size = self.settings.chunk_size
        precision, tightenings = self._precision()
        tasks = [
            (theorem, n, precision, tightenings, start, min(start + size, total))
            for start in range(0, total, size)
        ]

        logger.info(f"Sweeping {total} labeled graphs on {n} vertices for {theorem.value}")
        return self._run(theorem, n, "labeled", True, _scan_labeled_chunk, tasks)

    def sweep_corpus(self, path: Union[str, Path], theorem: Union[Theorem, str], n: int) -> SweepReport:
        """
        Check every graph of a graph6 corpus against a theorem.

        Args:
            path: Corpus file, one graph6 per line
            theorem: mm, ht, main or kp2
            n: Vertex count of every corpus graph

        Returns:
            Sweep report; never marked exhaustive

        Raises:
            CorpusError: On unreadable files, bad lines or vertex-count mismatches
        """
        theorem = Theorem(theorem)
        n = validate_minimum(n, theorem.minimum_vertices, "n")
        precision, tightenings = self._precision()

        items: List[CorpusItem] = [
            (entry.line, entry.graph6, entry.graph.adj) for entry in read_corpus(path, n)
        ]
        size = self.settings.chunk_size
        tasks = [
            (theorem, n, precision, tightenings, items[start:start + size])
            for start in range(0, len(items), size)
        ]

        logger.info(f"Sweeping {len(items)} corpus graphs from {path} for {theorem.value}")
        return self._run(theorem, n, str(path), False, _scan_corpus_chunk, tasks)

    def _precision(self) -> Tuple[Fraction, int]:
        return self.settings.h_precision_value, self.settings.precision_tightenings

    def _run(
        self,
        theorem: Theorem,
        n: int,
        source: str,
        exhaustive: bool,
        worker: Callable[[tuple], SweepTally],
        tasks: Sequence[tuple],
    ) -> SweepReport:
        started = time.perf_counter()
        tally = SweepTally()

        if self.workers <= 1 or len(tasks) <= 1:
            for task in tasks:
                tally = tally.merge(worker(task))
        else:
            with Pool(processes=self.workers) as pool:
                for part in pool.imap_unordered(worker, tasks):
                    tally = tally.merge(part)

        report = self._build_report(theorem, n, source, exhaustive, tally)
        report.elapsed = time.perf_counter() - started

        if report.violations:
            logger.warning(f"{len(report.violations)} violations of {theorem.value} on {n} vertices")
        if report.inconclusive:
            logger.warning(f"{len(report.inconclusive)} inconclusive h comparisons on {n} vertices")
        logger.info(
            f"Sweep {theorem.value} n={n}: {report.graphs_scanned} scanned, "
            f"{report.graphs_checked} checked, verdict {report.verdict.value}"
        )
        return report

    @staticmethod
    def _build_report(
        theorem: Theorem, n: int, source: str, exhaustive: bool, tally: SweepTally
    ) -> SweepReport:
        maxima: Dict[int, ParameterMaximum] = {}
        for t, best in tally.best.items():
            maxima[t] = ParameterMaximum(
                parameter=None if t == OVERALL else t,
                max_mis=best.max_mis,
                bound=best.bound,
                witness=best.witness,
                attained=isinstance(best.bound, int) and best.max_mis == best.bound,
                graphs=best.graphs,
            )

        return SweepReport(
            theorem=theorem,
            n=n,
            source=source,
            exhaustive=exhaustive,
            per_parameter={t: maxima[t] for t in sorted(maxima)} if theorem.per_parameter else {},
            overall=None if theorem.per_parameter else maxima.get(OVERALL),
            violations=tally.violations,
            inconclusive=tally.inconclusive,
            graphs_scanned=tally.scanned,
            graphs_checked=tally.checked,
        )

    def verify_constructions(self, n_max: int) -> Report:
        """
        Recompute every extremal witness and compare it with its formula.

        Args:
            n_max: Largest vertex count, at least 5

        Returns:
            Report with one evidence line per instance
        """
        n_max = validate_minimum(n_max, 5, "n_max")
        limit = self.settings.construction_enumeration_limit
        evidence: List[str] = []
        counterexamples: List[str] = []

        def compare(name: str, graph: Graph, expected: int, extra: Iterable[Tuple[str, bool]] = ()) -> None:
            count = count_mis(graph)
            problems = [] if count == expected else [f"mis={count} != {expected}"]
            if expected <= limit:
                enumerated = len(enumerate_mis(graph))
                if enumerated != expected:
                    problems.append(f"enumerated {enumerated} sets")
            problems += [label for label, ok in extra if not ok]

            line = f"{name} = {encode_graph6(graph)}: mis={count}"
            if problems:
                counterexamples.append(f"{line}; " + "; ".join(problems))
            else:
                evidence.append(f"{line} == {expected}")

        for n in range(n_max + 1):
            for t in range(n // 3 + 1):
                try:
                    graph = g_extremal(t, n)
                except DomainError:
                    continue
                triangles = triangle_matching_number(graph)
                compare(
                    f"g_extremal({t},{n})",
                    graph,
                    g_bound(t, n),
                    [(f"triangle matching number {triangles} > t", triangles <= t)],
                )

        for n in range(3, n_max + 1):
            compare(f"moon_moser({n})", moon_moser(n), mis_max(n))
            if n % 3 == 1:
                compare(f"moon_moser({n}, alternative)", moon_moser(n, alternative=True), mis_max(n))

        for n in range(4, n_max + 1):
            graph = hujter_tuza(n)
            expected_matching = n // 2 if n % 2 == 0 else (n - 3) // 2
            matching = induced_matching_number(graph)
            compare(
                f"hujter_tuza({n})",
                graph,
                mis_triangle_free_max(n),
                [
                    ("not triangle-free", is_triangle_free(graph)),
                    (f"induced matching number {matching} != {expected_matching}",
                     matching == expected_matching),
                ],
            )

        logger.info(f"Verified {len(evidence) + len(counterexamples)} constructions up to n={n_max}")
        return Report.conclude(
            check="constructions",
            counterexamples=counterexamples,
            inconclusive=[],
            evidence=evidence,
            instances_checked=len(evidence) + len(counterexamples),
            notes=[f"n <= {n_max}; families enumerated set by set when the formula is <= {limit}"],
        )
