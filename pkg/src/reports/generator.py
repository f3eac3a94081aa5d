"""Report generation utilities."""

import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd

from bounds.models import RealInterval
from shared.models import Report
from shared.response import to_json
from sweeps.models import ParameterMaximum, SweepReport

logger = logging.getLogger(__name__)

# Decimal places for interval endpoints in CSV and text output
DECIMAL_PLACES = 12

CSV_COLUMNS = [
    "theorem",
    "n",
    "source",
    "parameter",
    "graphs",
    "max_mis",
    "bound",
    "bound_lo",
    "bound_hi",
    "attained",
    "witness",
    "verdict",
]


class ReportGenerator:
    """Service for exporting and summarizing sweep and check reports."""

    def generate_json(self, report: Union[SweepReport, Report]) -> str:
        """Full report structure as JSON."""
        return to_json(report)

    def generate_rows(self, report: SweepReport) -> List[Dict[str, Any]]:
        """
        Flatten a sweep report into one row per recorded maximum.

        Args:
            report: Sweep report

        Returns:
            Rows keyed by CSV_COLUMNS
        """
        rows = []
        for maximum in report.maxima():
            lo, hi = self._endpoints(maximum.bound)
            rows.append({
                "theorem": report.theorem.value,
                "n": report.n,
                "source": report.source,
                "parameter": "" if maximum.parameter is None else maximum.parameter,
                "graphs": maximum.graphs,
                "max_mis": maximum.max_mis,
                "bound": self.format_bound(maximum.bound),
                "bound_lo": lo,
                "bound_hi": hi,
                "attained": maximum.attained,
                "witness": maximum.witness,
                "verdict": report.verdict.value,
            })
        return rows

    def export_to_csv(self, report: SweepReport) -> str:
        """
        Export the per-parameter maxima as CSV.

        Args:
            report: Sweep report

        Returns:
            CSV content as string
        """
        frame = pd.DataFrame(self.generate_rows(report), columns=CSV_COLUMNS)
        return frame.to_csv(index=False)

    def write(self, report: Union[SweepReport, Report], path: Union[str, Path], fmt: str) -> Path:
        """
        Write a report file.

        Args:
            report: Report to write
            path: Destination file
            fmt: 'json' or 'csv' (csv needs a sweep report)

        Returns:
            The written path
        """
        path = Path(path)
        if fmt == "json":
            content = self.generate_json(report)
        elif fmt == "csv" and isinstance(report, SweepReport):
            content = self.export_to_csv(report)
        else:
            raise ValueError(f"Unsupported report format {fmt!r} for {type(report).__name__}")

        path.write_text(content, encoding="utf-8")
        logger.info(f"Wrote {fmt} report to {path}")
        return path

    def summarize_sweep(self, report: SweepReport) -> List[str]:
        """Human-readable lines for a sweep report."""
        kind = "exhaustive" if report.exhaustive else "corpus, not exhaustive"
        lines = [
            f"theorem {report.theorem.value}, n={report.n}, source {report.source} ({kind})",
            f"graphs scanned {report.graphs_scanned}, checked {report.graphs_checked}, "
            f"elapsed {report.elapsed:.2f}s",
        ]
        for maximum in report.maxima():
            lines.append(self._maximum_line(maximum))
        for violation in report.violations:
            lines.append(
                f"VIOLATION {violation.graph6}: mis={violation.mis} > "
                f"{self.format_bound(violation.bound)}"
            )
        for case in report.inconclusive:
            lines.append(f"INCONCLUSIVE {case.graph6}: mis={case.mis} within {case.interval}")
        lines.append(f"verdict: {report.verdict.value}")
        return lines

    def summarize_check(self, report: Report) -> List[str]:
        """Human-readable lines for a check report."""
        lines = [f"{report.check}: {report.instances_checked} instances"]
        lines += [f"  {line}" for line in report.evidence]
        lines += [f"  FAIL {line}" for line in report.counterexamples]
        lines += [f"  INCONCLUSIVE {line}" for line in report.inconclusive]
        if report.skipped:
            lines.append(f"  skipped {len(report.skipped)} out-of-domain instances")
        lines += [f"  note: {line}" for line in report.notes]
        lines.append(f"verdict: {report.verdict.value}")
        return lines

    @staticmethod
    def format_bound(bound: Union[int, RealInterval]) -> str:
        if isinstance(bound, RealInterval):
            lo, hi = bound.to_decimal(DECIMAL_PLACES)
            return f"[{lo}, {hi}]"
        return str(bound)

    @staticmethod
    def _endpoints(bound: Union[int, RealInterval]) -> tuple:
        if isinstance(bound, RealInterval):
            return bound.to_decimal(DECIMAL_PLACES)
        return str(bound), str(bound)

    def _maximum_line(self, maximum: ParameterMaximum) -> str:
        label = "overall" if maximum.parameter is None else f"t={maximum.parameter}"
        status = "attained" if maximum.attained else "below bound"
        return (
            f"{label}: max mis {maximum.max_mis}, bound {self.format_bound(maximum.bound)}, "
            f"{status}, {maximum.graphs} graphs, witness {maximum.witness}"
        )
