"""Command-line tests: golden outputs, exit codes and output formats."""

import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from typer.testing import CliRunner

from src.ui.cli import app

GOLDEN_DIR = Path(__file__).parent / "golden"


class CliTestCase(unittest.TestCase):
    """Runs the app with no config file in reach."""

    def setUp(self):
        self.runner = CliRunner()
        env = mock.patch.dict(os.environ, {}, clear=True)
        dotenv = mock.patch("src.config.load_dotenv")
        env.start()
        dotenv.start()
        self.addCleanup(env.stop)
        self.addCleanup(dotenv.stop)

    def invoke(self, *args):
        return self.runner.invoke(app, list(args))

    def assertGolden(self, result, name):
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.stdout, (GOLDEN_DIR / name).read_text(encoding="utf-8"))


class TestGoldenOutputs(CliTestCase):
    """Test JSON output against the stored golden documents."""

    def test_and_or_truth_table(self):
        result = self.invoke("truth-table", "--gate", "and-or")
        self.assertGolden(result, "truth_table_and_or.json")

    def test_full_adder_truth_table(self):
        result = self.invoke("truth-table", "--gate", "full-adder", "--impl", "memristor")
        self.assertGolden(result, "truth_table_full_adder.json")

    def test_compare_with_network(self):
        result = self.invoke("compare", "--gate", "and-or", "--a", "memristor", "--b", "network")
        self.assertGolden(result, "compare_and_or_network.json")

    def test_compare_with_single_perceptron(self):
        result = self.invoke(
            "compare", "--gate", "and-or", "--a", "memristor", "--b", "single-perceptron"
        )
        self.assertGolden(result, "compare_and_or_single_perceptron.json")

    def test_printed_delta_matches_printed_numerics(self):
        result = self.invoke(
            "compare", "--gate", "and-or", "--a", "memristor", "--b", "single-perceptron"
        )
        for row in json.loads(result.stdout)["rows"]:
            self.assertEqual(
                row["abs_delta"], round(abs(row["numeric_a"] - row["numeric_b"]), 4) + 0.0
            )

    def test_output_is_byte_stable(self):
        """Two runs of the same command print identical bytes."""
        for args in (
            ("truth-table", "--gate", "full-adder"),
            ("compare", "--gate", "and-or", "--a", "memristor", "--b", "network", "-f", "csv"),
            ("trace", "--gate", "full-adder", "--inputs", "1,0,1", "-f", "text"),
        ):
            first = self.invoke(*args)
            second = self.invoke(*args)
            self.assertEqual(first.exit_code, 0, first.output)
            self.assertEqual(first.stdout, second.stdout)


class TestExitCodes(CliTestCase):
    """Test exit statuses for each failure class."""

    def test_unknown_gate(self):
        self.assertEqual(self.invoke("truth-table", "--gate", "xor").exit_code, 2)

    def test_unknown_implementation(self):
        result = self.invoke("truth-table", "--gate", "and-or", "--impl", "optical")
        self.assertEqual(result.exit_code, 2)

    def test_unavailable_implementation_for_gate(self):
        result = self.invoke("truth-table", "--gate", "and-or", "--impl", "closed-form")
        self.assertEqual(result.exit_code, 2)

    def test_unknown_override_key(self):
        result = self.invoke("truth-table", "--gate", "and-or", "--set", "voltage=3")
        self.assertEqual(result.exit_code, 2)

    def test_invalid_override_value(self):
        result = self.invoke("truth-table", "--gate", "full-adder", "--set", "x_zero=1.0")
        self.assertEqual(result.exit_code, 2)

    def test_trace_wrong_arity(self):
        result = self.invoke("trace", "--gate", "full-adder", "--inputs", "1,0")
        self.assertEqual(result.exit_code, 2)

    def test_trace_bad_symbol(self):
        result = self.invoke("trace", "--gate", "and-or", "--inputs", "1,x")
        self.assertEqual(result.exit_code, 2)

    def test_trace_empty_symbol(self):
        result = self.invoke("trace", "--gate", "and-or", "--inputs", "1,,0")
        self.assertEqual(result.exit_code, 2)

    def test_nan_override(self):
        for override in ("unit_scale=nan", "c2=nan", "detect_level=nan", "and_level=inf"):
            result = self.invoke("truth-table", "--gate", "full-adder", "--set", override)
            self.assertEqual(result.exit_code, 2, override)
            self.assertNotIn("NaN", result.stdout)

    def test_unavailable_pair_lists_alternatives(self):
        result = self.invoke("truth-table", "--gate", "and-or", "--impl", "binary-fa")
        self.assertEqual(result.exit_code, 2)
        self.assertIn("single-perceptron", result.output)

    def test_missing_config_file(self):
        result = self.invoke("truth-table", "--gate", "and-or", "--config", "/nonexistent.yaml")
        self.assertEqual(result.exit_code, 2)

    def test_compare_success(self):
        result = self.invoke(
            "compare", "--gate", "and-or", "--a", "memristor", "--b", "network", "--expect", "numeric"
        )
        self.assertEqual(result.exit_code, 0)

    def test_unmet_expectation(self):
        result = self.invoke(
            "compare", "--gate", "and-or", "--a", "memristor", "--b", "single-perceptron",
            "--expect", "numeric",
        )
        self.assertEqual(result.exit_code, 1)

    def test_logical_expectation_met(self):
        result = self.invoke(
            "compare", "--gate", "and-or", "--a", "memristor", "--b", "single-perceptron",
            "--expect", "logical",
        )
        self.assertEqual(result.exit_code, 0)

    def test_mismatch(self):
        result = self.invoke(
            "compare", "--gate", "full-adder", "--a", "memristor", "--b", "binary-fa",
            "--set", "detect_level=-20",
        )
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(json.loads(result.stdout)["verdict"], "MISMATCH")

    def test_reference_table_default_tolerance(self):
        result = self.invoke("compare", "--gate", "full-adder", "--a", "memristor", "--b", "reference")
        self.assertEqual(result.exit_code, 0)
        report = json.loads(result.stdout)
        self.assertEqual(report["tolerance"], 0.25)
        self.assertEqual(report["verdict"], "NUMERIC_EQUIVALENT")


class TestFormats(CliTestCase):
    """Test CSV, text and trace output."""

    def test_full_adder_csv(self):
        result = self.invoke("truth-table", "--gate", "full-adder", "--format", "csv")
        self.assertEqual(result.exit_code, 0, result.output)
        lines = [line for line in result.stdout.splitlines() if not line.startswith("#")]
        header = lines[0].split(",")
        self.assertEqual(header[:3], ["P", "Q", "R"])
        self.assertIn("readout", header)
        self.assertIn("max_positive", header)
        self.assertEqual(len(lines), 9)
        last = dict(zip(header, lines[-1].split(",")))
        self.assertEqual(last["readout"], "-0.1000")
        self.assertEqual((last["P"], last["Q"], last["R"]), ("0", "0", "0"))

    def test_csv_comment_header(self):
        result = self.invoke("truth-table", "--gate", "and-or", "-f", "csv")
        comments = [line for line in result.stdout.splitlines() if line.startswith("#")]
        self.assertIn("# gate: \"and-or\"", comments)
        self.assertIn("# unit_scale_amps: 1e-07", comments)

    def test_trace_json_events(self):
        result = self.invoke("trace", "--gate", "full-adder", "--inputs", "1,0,1")
        self.assertEqual(result.exit_code, 0, result.output)
        document = json.loads(result.stdout)
        self.assertEqual(document["implementation"], "memristor")
        steps = document["steps"]
        self.assertEqual([s["i_measured"] for s in steps], [-18.0, 9.05, -15.0])
        self.assertEqual([s["events"] for s in steps], [["NONE"], ["BOUNCE_BACK"], ["FRICTION"]])
        self.assertAlmostEqual(document["readout"], 10.4667, places=3)

    def test_trace_text_uses_glyphs(self):
        result = self.invoke("trace", "--gate", "and-or", "--inputs", "|,○", "-f", "text")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("○", result.stdout)
        self.assertIn("readout: 3.9994 u", result.stdout)

    def test_config_file_applies(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "params.yaml"
            path.write_text("x_zero: 0.001\n", encoding="utf-8")
            result = self.invoke("trace", "--gate", "and-or", "--inputs", "0,0", "-c", str(path))
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertAlmostEqual(json.loads(result.stdout)["readout"], -0.001, places=6)

    def test_set_beats_config_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "params.yaml"
            path.write_text("and_level: 7.0\n", encoding="utf-8")
            result = self.invoke(
                "truth-table", "--gate", "and-or", "-c", str(path), "-s", "and_level=5.0"
            )
        self.assertEqual(json.loads(result.stdout)["thresholds"]["and_level"], 5.0)


class TestNetworkCommand(CliTestCase):
    """Test the network command."""

    def test_builtin_evaluation(self):
        result = self.invoke("network", "--builtin", "spmlg", "--inputs=-8,0")
        self.assertEqual(result.exit_code, 0, result.output)
        document = json.loads(result.stdout)
        self.assertEqual(document["results"]["a_B"], 4.0)
        self.assertEqual(document["results"]["B"], 1)
        self.assertEqual(document["results"]["C"], 0)

    def test_export_then_evaluate(self):
        exported = self.invoke("network", "--builtin", "binary-fa")
        self.assertEqual(exported.exit_code, 0, exported.output)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "binary_fa.json"
            path.write_text(exported.stdout, encoding="utf-8")
            result = self.invoke("network", "--file", str(path), "--inputs", "1,1,0")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.stdout)["inputs"], [1.0, 1.0, 0.0])

    def test_needs_one_source(self):
        self.assertEqual(self.invoke("network").exit_code, 2)
        both = self.invoke("network", "--builtin", "fa", "--file", "x.yaml")
        self.assertEqual(both.exit_code, 2)

    def test_wrong_input_count(self):
        result = self.invoke("network", "--builtin", "fa", "--inputs=-18,0.05")
        self.assertEqual(result.exit_code, 2)

    def test_non_finite_current(self):
        result = self.invoke("network", "--builtin", "spmlg", "--inputs", "nan,0")
        self.assertEqual(result.exit_code, 2)


if __name__ == "__main__":
    unittest.main()
