"""Command line handler for the toolkit.

Handles:
- count / enumerate / metrics / wood-bound on graph6 input
- bound, construct
- verify, verify-constructions, check-facts
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError as PydanticValidationError

from bounds.constant import evaluate_h
from bounds.facts import check_cycle_factor_envelope, check_fact1, check_fact2
from bounds.formulas import evaluate_g, mis_max, mis_triangle_free_max
from constructions.generator import build
from constructions.models import FamilyKind, FamilySpec
from graphs.graph6 import encode_graph6, parse_graph6
from graphs.models import Graph
from metrics.service import structure_profile
from mis_engine.recurrences import wood_bound
from mis_engine.service import count_mis, enumerate_mis, enumerate_mis_containing
from reports.generator import ReportGenerator
from shared.exceptions import ExitCode, ParseError, ToolkitException, ValidationError
from shared.logging_config import configure_logging
from shared.models import combine_verdicts
from shared.response import error_response, parse_error_response, success_response, usage_error_response
from shared.settings import get_settings
from shared.validators import sanitize_graph6_line
from sweeps.models import Theorem
from sweeps.service import SweepService

logger = logging.getLogger(__name__)

# (rendered output, exit code)
Result = Tuple[str, int]

report_generator = ReportGenerator()


class UsageArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ValidationError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand."""
    parser = UsageArgumentParser(
        prog="miskit",
        description="Maximal independent set counting and extremal bound verification",
    )
    parser.add_argument("--output", choices=["text", "json"], default="text")
    parser.add_argument("--workers", type=int, help="worker processes for sweeps")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")

    commands = parser.add_subparsers(dest="command", parser_class=UsageArgumentParser)
    commands.required = True

    for name, text in [
        ("count", "number of maximal independent sets"),
        ("metrics", "triangle-freeness, triangle and induced matching numbers"),
        ("wood-bound", "recursive upper bound on the MIS count"),
    ]:
        sub = commands.add_parser(name, help=text)
        sub.add_argument("graph6", nargs="?", help="graph6 string; read stdin when omitted")

    sub = commands.add_parser("enumerate", help="list maximal independent sets")
    sub.add_argument("graph6", nargs="?")
    sub.add_argument("--limit", type=int, help="refuse to print more sets than this")
    sub.add_argument("--containing", type=int, metavar="V", help="only sets that contain vertex V")

    sub = commands.add_parser("bound", help="evaluate an extremal bound")
    sub.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("-t", type=int)
    sub.add_argument("--precision", help="interval width for kp2, e.g. 1e-8")

    sub = commands.add_parser("construct", help="generate a family member as graph6")
    sub.add_argument("--family", required=True, choices=[k.value for k in FamilyKind])
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("-t", type=int)
    sub.add_argument("--alternative", action="store_true", help="moon_moser with 2K2 for n = 1 mod 3")

    sub = commands.add_parser("verify", help="sweep labeled graphs or a corpus")
    sub.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--corpus", help="graph6 corpus file")
    sub.add_argument("--json", dest="json_out", help="write the JSON report here")
    sub.add_argument("--csv", dest="csv_out", help="write the CSV report here")

    sub = commands.add_parser("check-facts", help="certify the numeric facts")
    sub.add_argument("--precision", help="width of the enclosure of c")
    sub.add_argument("--t-max", type=int, default=40)
    sub.add_argument("--span", type=int, default=100)

    sub = commands.add_parser("verify-constructions", help="recompute every extremal witness")
    sub.add_argument("--n-max", type=int, default=24)

    return parser


def main(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        stdin: Graph6 input stream when no graph is given on argv
        stdout: Result stream
        stderr: Error stream

    Returns:
        Process exit code
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    output = _requested_output(sys.argv[1:] if argv is None else argv)

    try:
        args = build_parser().parse_args(argv)
        output = args.output

        settings = get_settings()
        configure_logging(args.log_level or settings.log_level, settings.log_json)
        logger.debug(f"Command: {args.command}")

        rendered, code = ROUTES[args.command](args, stdin)
        print(rendered, file=stdout)
        return code

    except ParseError as e:
        logger.error(f"Parse error: {e.message}")
        _print_error(parse_error_response(e.message, output=output), output, stdout, stderr)
        return e.exit_code
    except ValidationError as e:
        _print_error(usage_error_response(e.message, output=output), output, stdout, stderr)
        return e.exit_code
    except PydanticValidationError as e:
        message = "; ".join(error["msg"] for error in e.errors())
        _print_error(usage_error_response(message, output=output), output, stdout, stderr)
        return ExitCode.USAGE
    except ToolkitException as e:
        logger.error(f"Application error: {e.message}")
        _print_error(error_response(e.message, exit_code=e.exit_code, output=output), output, stdout, stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected error: {str(e)}", exc_info=True)
        _print_error(error_response("Internal error", output=output), output, stdout, stderr)
        return ExitCode.INTERNAL


def _requested_output(argv: Sequence[str]) -> str:
    """Output mode for errors raised before argument parsing finishes."""
    for i, arg in enumerate(argv):
        if arg == "--output=json" or (arg == "--output" and argv[i + 1 : i + 2] == ["json"]):
            return "json"
    return "text"


def _print_error(rendered: str, output: str, stdout: TextIO, stderr: TextIO) -> None:
    print(rendered, file=stdout if output == "json" else stderr)


def read_graphs(args: argparse.Namespace, stdin: TextIO) -> List[Graph]:
    """
    Graphs from the positional argument, or one per stdin line.

    Raises:
        ValidationError: If no graph is given
        ParseError: If a graph6 string does not decode
    """
    if args.graph6 not in (None, "-"):
        return [parse_graph6(args.graph6)]

    graphs = []
    for line in stdin:
        value = sanitize_graph6_line(line)
        if value is not None:
            graphs.append(parse_graph6(value))
    if not graphs:
        raise ValidationError("No graph6 input on the command line or stdin")
    return graphs


def handle_count(args: argparse.Namespace, stdin: TextIO) -> Result:
    counts = [count_mis(g) for g in read_graphs(args, stdin)]
    if args.output == "json":
        return success_response(data=[str(c) for c in counts], output="json"), ExitCode.PASS
    return success_response(data=counts), ExitCode.PASS


def handle_enumerate(args: argparse.Namespace, stdin: TextIO) -> Result:
    families = []
    for graph in read_graphs(args, stdin):
        if args.containing is None:
            sets = enumerate_mis(graph, limit=args.limit)
        else:
            sets = enumerate_mis_containing(graph, args.containing, limit=args.limit)
        families.append(sorted(sets, key=lambda s: s.to_list()))

    if args.output == "json":
        data = [[s.to_list() for s in family] for family in families]
        return success_response(data=data, output="json"), ExitCode.PASS

    blocks = ["\n".join(str(s) for s in family) for family in families]
    return "\n\n".join(blocks), ExitCode.PASS


def handle_metrics(args: argparse.Namespace, stdin: TextIO) -> Result:
    profiles = [structure_profile(g) for g in read_graphs(args, stdin)]
    if args.output == "json":
        return success_response(data=profiles, output="json"), ExitCode.PASS

    lines = [
        f"triangle_free={str(p.triangle_free).lower()} "
        f"triangle_matching_number={p.triangle_matching_number} "
        f"induced_matching_number={p.induced_matching_number}"
        for p in profiles
    ]
    return success_response(data=lines), ExitCode.PASS


def handle_wood_bound(args: argparse.Namespace, stdin: TextIO) -> Result:
    bounds = [wood_bound(g) for g in read_graphs(args, stdin)]
    if args.output == "json":
        return success_response(data=[str(b) for b in bounds], output="json"), ExitCode.PASS
    return success_response(data=bounds), ExitCode.PASS


def handle_bound(args: argparse.Namespace, stdin: TextIO) -> Result:
    theorem = Theorem(args.theorem)
    if theorem.per_parameter and args.t is None:
        raise ValidationError(f"--theorem {theorem.value} needs -t")
    if not theorem.per_parameter and args.t is not None:
        raise ValidationError(f"--theorem {theorem.value} takes no -t")

    trace: Any
    if theorem is Theorem.MM:
        value = trace = mis_max(args.n)
    elif theorem is Theorem.HT:
        value = trace = mis_triangle_free_max(args.n)
    elif theorem is Theorem.MAIN:
        trace = evaluate_g(args.t, args.n)
        value = trace.value
    else:
        trace = evaluate_h(args.t, args.n, args.precision)
        value = trace.interval

    if args.output == "json":
        data = str(trace) if isinstance(trace, int) else trace
        return success_response(data=data, output="json"), ExitCode.PASS
    return report_generator.format_bound(value), ExitCode.PASS


def handle_construct(args: argparse.Namespace, stdin: TextIO) -> Result:
    spec = FamilySpec(kind=args.family, n=args.n, t=args.t, alternative=args.alternative)
    graph6 = encode_graph6(build(spec))
    if args.output == "json":
        return success_response(data={"spec": spec, "graph6": graph6}, output="json"), ExitCode.PASS
    return graph6, ExitCode.PASS


def handle_verify(args: argparse.Namespace, stdin: TextIO) -> Result:
    service = SweepService(workers=args.workers)
    if args.corpus:
        report = service.sweep_corpus(args.corpus, args.theorem, args.n)
    else:
        report = service.sweep_labeled(args.n, args.theorem)

    if args.json_out:
        report_generator.write(report, args.json_out, "json")
    if args.csv_out:
        report_generator.write(report, args.csv_out, "csv")

    if args.output == "json":
        return success_response(data=report, output="json"), report.verdict.exit_code
    return success_response(data=report_generator.summarize_sweep(report)), report.verdict.exit_code


def handle_check_facts(args: argparse.Namespace, stdin: TextIO) -> Result:
    reports = [
        check_fact1(args.t_max, args.span),
        check_fact2(args.precision),
        check_cycle_factor_envelope(args.t_max, args.span),
    ]
    return _render_checks(args, reports)


def handle_verify_constructions(args: argparse.Namespace, stdin: TextIO) -> Result:
    report = SweepService(workers=args.workers).verify_constructions(args.n_max)
    return _render_checks(args, [report])


def _render_checks(args: argparse.Namespace, reports: list) -> Result:
    verdict = combine_verdicts([r.verdict for r in reports])
    if args.output == "json":
        return success_response(data=reports, output="json"), verdict.exit_code

    lines: List[str] = []
    for report in reports:
        lines += report_generator.summarize_check(report)
    return success_response(data=lines), verdict.exit_code


ROUTES: Dict[str, Callable[[argparse.Namespace, TextIO], Result]] = {
    "count": handle_count,
    "enumerate": handle_enumerate,
    "metrics": handle_metrics,
    "wood-bound": handle_wood_bound,
    "bound": handle_bound,
    "construct": handle_construct,
    "verify": handle_verify,
    "check-facts": handle_check_facts,
    "verify-constructions": handle_verify_constructions,
}
