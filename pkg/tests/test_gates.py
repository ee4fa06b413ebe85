"""Unit tests for the AND/OR gate and the arithmetical full adder."""

import itertools
import unittest

from src.errors import InvalidArgumentError
from src.gates import REFERENCE_TABLES, classify_sum, closed_form_readout, spmafa, spmlg
from src.device.memristor import evaluate_sequence
from src.models.params import GateParams, Thresholds
from src.models.symbols import LogicSymbol, count_ones

ONE = LogicSymbol.ONE
ZERO = LogicSymbol.ZERO
PAIRS = list(itertools.product((ONE, ZERO), repeat=2))
TRIPLES = list(itertools.product((ONE, ZERO), repeat=3))


class TestSpmlg(unittest.TestCase):
    """Test the AND/OR gate against the printed truth table."""

    def test_both_ones(self):
        out = spmlg(ONE, ONE)
        self.assertAlmostEqual(out.readout, 6.0, places=9)
        self.assertIs(out.and_bit, ONE)
        self.assertIs(out.or_bit, ONE)

    def test_both_zeros(self):
        out = spmlg(ZERO, ZERO)
        self.assertAlmostEqual(out.readout, 0.0, delta=0.01)
        self.assertIs(out.and_bit, ZERO)
        self.assertIs(out.or_bit, ZERO)

    def test_zero_then_one(self):
        out = spmlg(ZERO, ONE)
        self.assertAlmostEqual(out.readout, 4.0, delta=0.01)
        self.assertIs(out.and_bit, ZERO)
        self.assertIs(out.or_bit, ONE)

    def test_reproduces_table(self):
        for inputs, row in REFERENCE_TABLES[2].items():
            out = spmlg(*inputs)
            self.assertAlmostEqual(out.readout, row.readout, delta=0.01)
            for got, want in zip(out.a_values, row.a_values):
                self.assertAlmostEqual(got, want, delta=0.01)
            self.assertEqual(out.and_bit.bit, row.logical["and"])
            self.assertEqual(out.or_bit.bit, row.logical["or"])

    def test_boolean_truth(self):
        for p, q in PAIRS:
            out = spmlg(p, q)
            self.assertEqual(out.and_bit.bit, p.bit & q.bit)
            self.assertEqual(out.or_bit.bit, p.bit | q.bit)
            if out.and_bit is ONE:
                self.assertIs(out.or_bit, ONE)

    def test_rejects_adder_params(self):
        with self.assertRaises(InvalidArgumentError):
            spmlg(ONE, ONE, params=GateParams.spmafa())


class TestSpmafa(unittest.TestCase):
    """Test the arithmetical full adder."""

    def test_three_ones(self):
        out = spmafa(ONE, ONE, ONE)
        self.assertEqual(out.sum, 3)
        self.assertIs(out.carry_bit, ONE)
        self.assertIs(out.exists_one, ONE)
        self.assertAlmostEqual(out.readout, 12.5, delta=0.01)

    def test_double_crossing_row(self):
        out = spmafa(ONE, ZERO, ONE)
        self.assertEqual(out.sum, 2)
        self.assertIs(out.carry_bit, ONE)
        for got, want in zip(out.trace, (-18.0, 9.05, -15.0)):
            self.assertAlmostEqual(got, want, delta=0.01)
        self.assertAlmostEqual(out.max_positive, 10.47, delta=0.01)

    def test_all_zeros(self):
        out = spmafa(ZERO, ZERO, ZERO)
        self.assertEqual(out.sum, 0)
        self.assertIs(out.carry_bit, ZERO)
        self.assertIs(out.exists_one, ZERO)
        self.assertAlmostEqual(out.readout, -0.1, delta=0.01)

    def test_last_one_only(self):
        out = spmafa(ZERO, ZERO, ONE)
        self.assertEqual(out.sum, 1)
        self.assertIs(out.carry_bit, ZERO)
        self.assertIs(out.exists_one, ONE)

    def test_reproduces_table(self):
        for inputs, row in REFERENCE_TABLES[3].items():
            out = spmafa(*inputs)
            for got, want in zip(out.trace, row.a_values):
                self.assertAlmostEqual(got, want, delta=0.05)
            self.assertAlmostEqual(out.readout, row.readout, delta=0.25)
            self.assertEqual(out.sum, row.logical["sum"])
            self.assertEqual(out.carry_bit.bit, row.logical["carry"])
            self.assertEqual(out.exists_one.bit, row.logical["exists_one"])

    def test_adder_truth(self):
        for triple in TRIPLES:
            out = spmafa(*triple)
            ones = count_ones(triple)
            self.assertEqual(out.sum, ones)
            self.assertEqual(out.carry_bit is ONE, ones >= 2)
            self.assertEqual(out.exists_one is ONE, ones >= 1)

    def test_logical_outputs_permutation_invariant(self):
        for triple in TRIPLES:
            outputs = {
                (o.sum, o.carry_bit, o.exists_one)
                for o in (spmafa(*perm) for perm in itertools.permutations(triple))
            }
            self.assertEqual(len(outputs), 1)

    def test_readouts_clear_of_band_edges(self):
        """Readouts keep at least half a unit away from every cut point."""
        bands = Thresholds().sum_bands
        for triple in TRIPLES:
            readout = spmafa(*triple).readout
            self.assertGreaterEqual(min(abs(readout - cut) for cut in bands), 0.5)

    def test_rejects_and_or_params(self):
        with self.assertRaises(InvalidArgumentError):
            spmafa(ONE, ONE, ONE, params=GateParams.spmlg())


class TestClosedForm(unittest.TestCase):
    """Test the closed-form readout."""

    def test_three_ones(self):
        self.assertAlmostEqual(closed_form_readout((-18.0, -9.0, -6.0)), 12.5, places=9)

    def test_all_zeros(self):
        self.assertAlmostEqual(closed_form_readout((0.05, 0.05, 0.05)), -0.1, places=9)

    def test_two_ones(self):
        self.assertAlmostEqual(closed_form_readout((-18.0, -9.0, 0.05)), 10.467, delta=0.001)

    def test_agrees_with_state_machine(self):
        params = GateParams.spmafa()
        for triple in TRIPLES:
            result = evaluate_sequence(params, triple)
            self.assertAlmostEqual(closed_form_readout(result.a_values), result.readout, delta=0.05)

    def test_needs_three_values(self):
        with self.assertRaises(InvalidArgumentError):
            closed_form_readout((-8.0, -4.0))


class TestClassifySum(unittest.TestCase):
    """Test banded classification of the maximum positive current."""

    def test_levels(self):
        self.assertEqual(classify_sum(12.5), 3)
        self.assertEqual(classify_sum(10.5), 2)
        self.assertEqual(classify_sum(8.9), 1)
        self.assertEqual(classify_sum(0.0), 0)

    def test_band_edges_inclusive(self):
        self.assertEqual(classify_sum(11.5), 3)
        self.assertEqual(classify_sum(4.0), 1)


if __name__ == "__main__":
    unittest.main()
