"""Integration tests for the command line front end."""

import io
import json
import sys
import os

import pytest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from cli.handler import main
from graphs.graph6 import parse_graph6
from mis_engine.service import count_mis
from sweeps.models import ParameterMaximum, SweepReport, Theorem, Violation

TRIANGLE = "Bw"
PENTAGON = "Dhc"


def run(*argv, stdin=""):
    """Run the CLI and return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue().strip(), err.getvalue().strip()


class TestGraphCommands:
    """Test cases for count, enumerate, metrics and wood-bound."""

    def test_count(self):
        """Test counting from the command line."""
        assert run("count", TRIANGLE) == (0, "3", "")

    def test_count_stdin(self):
        """Test one count per stdin line, skipping comments."""
        code, out, _ = run("count", stdin=f"{TRIANGLE}\n# comment\n\n{PENTAGON}\n")

        assert code == 0
        assert out.splitlines() == ["3", "5"]

    def test_count_json(self):
        """Test counts are strings in JSON output."""
        code, out, _ = run("--output", "json", "count", PENTAGON)

        assert code == 0
        assert json.loads(out) == {"success": True, "data": ["5"]}

    def test_enumerate(self):
        """Test sets are printed one per line in ascending order."""
        code, out, _ = run("enumerate", TRIANGLE)

        assert code == 0
        assert out.splitlines() == ["{0}", "{1}", "{2}"]

    def test_enumerate_containing(self):
        """Test only the sets through the given vertex are printed."""
        code, out, _ = run("enumerate", "--containing", "0", PENTAGON)

        assert code == 0
        assert out.splitlines() == ["{0,2}", "{0,3}"]

    def test_enumerate_containing_bad_vertex(self):
        """Test a vertex outside the graph is a usage error."""
        code, _, _ = run("enumerate", "--containing", "7", PENTAGON)

        assert code == 64

    def test_enumerate_over_limit(self):
        """Test exceeding --limit discards the output."""
        code, out, err = run("enumerate", "--limit", "2", PENTAGON)

        assert code == 70
        assert out == ""
        assert "More than 2" in err

    def test_metrics(self):
        """Test the structure profile of a 5-cycle."""
        code, out, _ = run("metrics", PENTAGON)

        assert code == 0
        assert out == "triangle_free=true triangle_matching_number=0 induced_matching_number=1"

    def test_wood_bound(self):
        """Test the recursive bound is at least the count."""
        code, out, _ = run("wood-bound", PENTAGON)

        assert code == 0
        assert int(out) >= 5

    def test_parse_error(self):
        """Test undecodable graph6 exits 65 with the byte offset."""
        code, out, err = run("count", "D!!")

        assert code == 65
        assert out == ""
        assert "byte offset" in err

    def test_non_shortest_size_field(self):
        """Test a padded size field is a parse error, not a graph."""
        code, out, err = run("count", "~??Bw")

        assert code == 65
        assert out == ""
        assert "Non-canonical size field" in err

    def test_parse_error_json(self):
        """Test JSON errors go to stdout."""
        code, out, _ = run("--output", "json", "count", "D!!")

        assert code == 65
        assert json.loads(out)["error"]["code"] == "PARSE_ERROR"

    def test_missing_input(self):
        """Test an empty stdin is a usage error."""
        code, _, err = run("count", stdin="")

        assert code == 64
        assert "No graph6 input" in err


class TestBoundCommands:
    """Test cases for bound and construct."""

    @pytest.mark.parametrize("argv,expected", [
        (["--theorem", "mm", "-n", "7"], "12"),
        (["--theorem", "ht", "-n", "9"], "20"),
        (["--theorem", "main", "-n", "10", "-t", "2"], "36"),
        (["--theorem", "main", "-n", "4", "-t", "5"], "4"),
    ])
    def test_integer_bounds(self, argv, expected):
        """Test closed-form bounds, including a clamped t."""
        assert run("bound", *argv) == (0, expected, "")

    def test_h_bound(self):
        """Test the h bound prints an outward-rounded interval."""
        code, out, _ = run("bound", "--theorem", "kp2", "-n", "4", "-t", "1")

        assert code == 0
        assert out.startswith("[3.96261")
        assert out.endswith("]")

    def test_h_bound_json(self):
        """Test the JSON trace records the evaluation."""
        code, out, _ = run("--output", "json", "bound", "--theorem", "kp2", "-n", "6", "-t", "3")

        data = json.loads(out)["data"]
        assert code == 0
        assert data["exponent"] == 0
        assert data["interval"] == {"lo": "8/1", "hi": "8/1"}

    @pytest.mark.parametrize("argv", [
        ["--theorem", "main", "-n", "6"],
        ["--theorem", "mm", "-n", "2"],
        ["--theorem", "main", "-n", "3", "-t", "0"],
        ["--theorem", "other", "-n", "6"],
        ["--theorem", "mm", "-n", "7", "-t", "3"],
        ["--theorem", "ht", "-n", "8", "-t", "1"],
    ])
    def test_usage_errors(self, argv):
        """Test missing parameters and out-of-domain requests exit 64."""
        code, _, err = run("bound", *argv)

        assert code == 64
        assert err.startswith("error:")

    def test_parameter_rejected_for_closed_forms(self):
        """Test -t is refused for theorems without a parameter."""
        code, out, err = run("bound", "--theorem", "mm", "-n", "7", "-t", "3")

        assert code == 64
        assert out == ""
        assert "takes no -t" in err

    def test_construct(self):
        """Test the constructed witness attains its formula."""
        code, out, _ = run("construct", "--family", "g_extremal", "-n", "10", "-t", "2")

        assert code == 0
        assert count_mis(parse_graph6(out)) == 36

    def test_construct_alternative(self):
        """Test the 2K2 variant of the Moon-Moser graph."""
        code, out, _ = run("construct", "--family", "moon_moser", "-n", "7", "--alternative")

        assert code == 0
        assert count_mis(parse_graph6(out)) == 12

    def test_construct_out_of_domain(self):
        """Test odd matchings are refused."""
        code, _, _ = run("construct", "--family", "matching", "-n", "5")

        assert code == 64


class TestVerificationCommands:
    """Test cases for verify, check-facts and verify-constructions."""

    @pytest.fixture
    def failing_report(self):
        """Sweep report with one violation."""
        return SweepReport(
            theorem=Theorem.MAIN,
            n=4,
            source="labeled",
            exhaustive=True,
            per_parameter={
                0: ParameterMaximum(parameter=0, max_mis=5, bound=4, witness="C~", attained=False, graphs=64),
            },
            violations=[Violation(key=63, graph6="C~", mis=5, bound=4, parameter=0)],
            graphs_scanned=64,
            graphs_checked=64,
        )

    def test_verify_labeled(self, tmp_path):
        """Test a labeled sweep passes and writes both reports."""
        json_path, csv_path = tmp_path / "mm.json", tmp_path / "mm.csv"

        code, out, _ = run(
            "--workers", "1", "verify", "--theorem", "mm", "-n", "5",
            "--json", str(json_path), "--csv", str(csv_path),
        )

        assert code == 0
        assert out.splitlines()[-1] == "verdict: pass"
        assert json.loads(json_path.read_text())["overall"]["max_mis"] == 6
        assert csv_path.read_text().splitlines()[0].startswith("theorem,n,source")

    def test_verify_violation_exit_code(self, mocker, failing_report):
        """Test a failing sweep exits 1."""
        service = mocker.patch('cli.handler.SweepService')
        service.return_value.sweep_labeled.return_value = failing_report

        code, out, _ = run("verify", "--theorem", "main", "-n", "4")

        assert code == 1
        assert "VIOLATION C~: mis=5 > 4" in out
        service.return_value.sweep_labeled.assert_called_once_with(4, "main")

    def test_verify_corpus(self, mocker, failing_report):
        """Test --corpus routes to the corpus sweep."""
        service = mocker.patch('cli.handler.SweepService')
        service.return_value.sweep_corpus.return_value = failing_report

        code, out, _ = run("--output", "json", "verify", "--theorem", "main", "-n", "4", "--corpus", "g4.g6")

        assert code == 1
        assert json.loads(out)["data"]["verdict"] == "fail"
        service.return_value.sweep_corpus.assert_called_once_with("g4.g6", "main", 4)
        service.return_value.sweep_labeled.assert_not_called()

    def test_verify_above_cap(self):
        """Test labeled sweeps above the cap are usage errors."""
        code, _, err = run("verify", "--theorem", "main", "-n", "8")

        assert code == 64
        assert "corpus" in err

    def test_verify_missing_corpus(self, tmp_path):
        """Test an unreadable corpus exits 65."""
        code, _, _ = run("verify", "--theorem", "mm", "-n", "5", "--corpus", str(tmp_path / "none.g6"))

        assert code == 65

    def test_check_facts(self):
        """Test the fact checks pass on a small range."""
        code, out, _ = run("check-facts", "--t-max", "3", "--span", "12")

        assert code == 0
        assert any(line.startswith("fact1:") for line in out.splitlines())
        assert out.splitlines()[-1] == "verdict: pass"

    def test_check_facts_json(self):
        """Test one report per check in JSON output."""
        code, out, _ = run("--output", "json", "check-facts", "--t-max", "2", "--span", "6")

        checks = [report["check"] for report in json.loads(out)["data"]]
        assert code == 0
        assert checks == ["fact1", "fact2", "cycle-factor"]

    def test_verify_constructions(self):
        """Test every witness up to 9 vertices attains its formula."""
        code, out, _ = run("verify-constructions", "--n-max", "9")

        assert code == 0
        assert out.splitlines()[0].startswith("constructions:")
        assert out.splitlines()[-1] == "verdict: pass"

    def test_unknown_command(self):
        """Test unknown subcommands exit 64."""
        code, _, _ = run("frobnicate")

        assert code == 64


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
