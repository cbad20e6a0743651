import io
import json
import os
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from unittest import mock

from arith.exact_arith import gw_genus_coeff, parse_rational
from checks.difference_checker import DifferenceChecker
from cli.commands import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, run
from cli.main import main
from cli.run_config import DEFAULT_GENUS, RunConfig
from errors import DomainError

DATASET = b'{"classes": [{"label": "a", "n0": 1}, {"label": "b", "n0": 5}]}'


def run_main(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(argv)
    return status, out.getvalue()


class TestRun(unittest.TestCase):
    """Command handlers behind the CLI"""

    def test_bernoulli(self):
        """Test the Bernoulli command as plain text"""
        result = run(RunConfig("bernoulli", index=4))
        self.assertEqual(result.status, EXIT_OK)
        self.assertEqual(result.output, "-1/30")

    def test_bernoulli_json(self):
        """Test the Bernoulli command as JSON"""
        result = run(RunConfig("bernoulli", index=4, output_format="json"))
        self.assertEqual(json.loads(result.output), {"n": 4, "bernoulli": "-1/30"})

    def test_polylog(self):
        """Test polylogarithm coefficients as JSON strings"""
        result = run(RunConfig("polylog", order=-1, q_cut=3, output_format="json"))
        self.assertEqual(json.loads(result.output)["coeffs"], {"1": "1", "2": "2", "3": "3"})

    def test_polylog_closed(self):
        """Test the closed rational form of a negative order"""
        result = run(RunConfig("polylog", order=-2, closed=True))
        self.assertEqual(result.status, EXIT_OK)
        self.assertIn("q", result.output)

    def test_potential_table(self):
        """Test the potential table output"""
        result = run(RunConfig("potential", genus_cut=2, q_cut=3))
        self.assertEqual(result.status, EXIT_OK)
        self.assertIn("1/240", result.output)

    def test_potential_json_rationals(self):
        """Rationals in JSON output parse back to the exact values"""
        result = run(RunConfig("potential", genus_cut=3, q_cut=4, output_format="json"))
        coeffs = json.loads(result.output)["coeffs"]
        self.assertEqual(parse_rational(coeffs["1"]["4"]), gw_genus_coeff(3))
        self.assertEqual(parse_rational(coeffs["2"]["0"]), Fraction(1, 24))

    def test_sin_expansion(self):
        """Test the (2 sin)^-2 expansion as JSON"""
        result = run(RunConfig("sin-expansion", genus_cut=2, output_format="json"))
        self.assertEqual(json.loads(result.output), {"-2": "1", "0": "1/12", "2": "1/240"})

    def test_checks_pass(self):
        """Test that every conifold check passes with exit status 0"""
        for command in ("check-identity", "check-theorem", "check-recursion"):
            result = run(RunConfig(command, genus_cut=4, q_cut=10, output_format="json"))
            self.assertEqual(result.status, EXIT_OK, msg=command)
            self.assertTrue(json.loads(result.output)["passed"])

    def test_check_theorem_json(self):
        """Test the report name and orders of check-theorem"""
        data = json.loads(run(RunConfig("check-theorem", genus_cut=5, q_cut=20, output_format="json")).output)
        self.assertEqual(data["check"], "theorem_3_1")
        self.assertEqual(data["lambda_order"], 10)
        self.assertEqual(data["q_order"], 20)

    def test_corrupted_check_fails(self):
        """Test that a corrupted coefficient gives exit status 1"""
        corrupted = DifferenceChecker({2: gw_genus_coeff(2) + Fraction(1, 10 ** 6)})
        with mock.patch("cli.commands.DifferenceChecker", return_value=corrupted):
            result = run(RunConfig("check-theorem", genus_cut=3, q_cut=5, output_format="json"))
        self.assertEqual(result.status, EXIT_CHECK_FAILED)
        failure = json.loads(result.output)["first_failure"]
        self.assertEqual(failure["lambda_exp"], 4)

    def test_solve_recursion(self):
        """Test the recursion solver output"""
        result = run(RunConfig("solve-recursion", genus_cut=2, q_cut=3, output_format="json"))
        data = json.loads(result.output)
        self.assertEqual(data["1"], {"1": "1/12", "2": "1/24", "3": "1/36"})
        self.assertEqual(data["2"]["3"], "1/80")

    def test_gv_check_from_stdin(self):
        """Test gv-check with the dataset on stdin"""
        config = RunConfig("gv-check", genus_cut=3, k_cut=6, alpha="b", output_format="json")
        result = run(config, stdin=io.BytesIO(DATASET))
        self.assertEqual(result.status, EXIT_OK)
        self.assertTrue(json.loads(result.output)["passed"])

    def test_gv_resum_from_stdin(self):
        """Test gv-resum with the dataset on stdin"""
        config = RunConfig("gv-resum", genus_cut=1, k_cut=2, output_format="json")
        data = json.loads(run(config, stdin=io.BytesIO(DATASET)).output)
        self.assertEqual(sorted(data), ["a", "b"])
        self.assertEqual(data["b"]["1"]["-2"], "5")


class TestUsageErrors(unittest.TestCase):
    """Invalid input ends with status 2"""

    def test_missing_arguments(self):
        """Test missing or invalid arguments per command"""
        for config in (
            RunConfig("bernoulli"),
            RunConfig("polylog"),
            RunConfig("polylog", order=3, closed=True),
            RunConfig("gv-check"),
            RunConfig("potential", genus_cut=0),
            RunConfig("potential", output_format="xml"),
        ):
            self.assertEqual(run(config).status, EXIT_USAGE, msg=repr(config))

    def test_bad_dataset(self):
        """Test malformed JSON and non-integer invariants"""
        config = RunConfig("gv-check", alpha="a")
        self.assertEqual(run(config, stdin=io.BytesIO(b"{nope")).status, EXIT_USAGE)
        self.assertEqual(run(config, stdin=io.BytesIO(b'{"classes": [{"label": "a", "n0": 1.5}]}')).status, EXIT_USAGE)

    def test_unknown_alpha(self):
        """Test an alpha outside the dataset"""
        config = RunConfig("gv-check", alpha="zz", output_format="json")
        result = run(config, stdin=io.BytesIO(DATASET))
        self.assertEqual(result.status, EXIT_USAGE)
        self.assertIn("error", json.loads(result.output))

    def test_missing_input_file(self):
        """Test an unreadable input file"""
        config = RunConfig("gv-resum", input_path="/nonexistent/classes.json")
        self.assertEqual(run(config).status, EXIT_USAGE)

    def test_usage_error_logged(self):
        """Test that a usage error is logged at ERROR on its way to status 2"""
        with self.assertLogs("cli.commands", level="ERROR") as logs:
            status = run(RunConfig("potential", genus_cut=0)).status
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(len(logs.records), 1)
        self.assertIn("Error running potential", logs.output[0])


class TestMain(unittest.TestCase):
    """Argument parsing and environment configuration"""

    def test_bernoulli(self):
        """Test the Bernoulli subcommand end to end"""
        status, out = run_main(["bernoulli", "--n", "4"])
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "-1/30")

    def test_check_theorem(self):
        """Test check-theorem flags end to end"""
        status, out = run_main(["check-theorem", "--genus", "3", "--qdeg", "5", "--format", "json"])
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out)["lambda_order"], 6)

    def test_check_theorem_name(self):
        """Test the report name printed by check-theorem"""
        status, out = run_main(["check-theorem", "--genus", "5", "--qdeg", "20", "--format", "json"])
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out)["check"], "theorem_3_1")

    def test_unknown_command(self):
        """Test that argparse rejects an unknown command"""
        with self.assertRaises(SystemExit) as raised:
            run_main(["frobnicate"])
        self.assertEqual(raised.exception.code, 2)

    def test_non_integer_flag(self):
        """Test that argparse rejects a non-integer flag"""
        with self.assertRaises(SystemExit) as raised:
            run_main(["potential", "--genus", "two"])
        self.assertEqual(raised.exception.code, 2)

    def test_env_override(self):
        """Test settings taken from the environment"""
        with mock.patch.dict(os.environ, {"GWDIFF_GENUS": "2", "GWDIFF_FORMAT": "json"}):
            status, out = run_main(["potential", "--qdeg", "1"])
        self.assertEqual(status, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["genus_cut"], 2)
        self.assertEqual(data["q_cut"], 1)

    def test_flags_beat_env(self):
        """Test that flags override environment variables"""
        with mock.patch.dict(os.environ, {"GWDIFF_GENUS": "2"}):
            config = RunConfig.from_env("potential").with_overrides(genus_cut=4, q_cut=None)
        self.assertEqual(config.genus_cut, 4)

    def test_bad_env(self):
        """Test a non-integer environment variable"""
        with mock.patch.dict(os.environ, {"GWDIFF_QDEG": "many"}):
            status, _ = run_main(["potential"])
            with self.assertRaises(DomainError):
                RunConfig.from_env("potential")
        self.assertEqual(status, EXIT_USAGE)

    def test_defaults(self):
        """Test the defaults with a clean environment"""
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(RunConfig.from_env("potential").genus_cut, DEFAULT_GENUS)


if __name__ == "__main__":
    unittest.main()
