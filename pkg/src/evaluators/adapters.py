"""Concrete evaluators wrapping the gates, networks, closed form and tables."""

from typing import Optional, Tuple

from ..device.memristor import evaluate_sequence
from ..gates.logic_gates import classify_sum, closed_form_readout, spmafa, spmlg
from ..gates.reference_tables import REFERENCE_TABLES
from ..models.params import GateParams, Thresholds
from ..models.symbols import LogicSymbol
from ..perceptron.networks import and_single, binary_full_adder, fa_network, spmlg_network
from .base import BaseGateEvaluator, GateRow

ONE = LogicSymbol.ONE


class _ParamsEvaluator(BaseGateEvaluator):
    """Evaluator configured by gate parameters and thresholds."""

    _arity = 2

    def __init__(self, params: Optional[GateParams] = None, thresholds: Optional[Thresholds] = None):
        self.params = params or GateParams.for_arity(self._arity)
        self.thresholds = thresholds or Thresholds()

    @property
    def arity(self) -> int:
        return self._arity

    def currents(self, inputs: Tuple[LogicSymbol, ...]) -> Tuple[float, ...]:
        """Zeroed-device currents for each input symbol."""
        return tuple(self.params.x_one if s is ONE else self.params.x_zero for s in inputs)


class MemristorAndOr(_ParamsEvaluator):
    name = "memristor"

    def _evaluate(self, inputs):
        out = spmlg(*inputs, params=self.params, thresholds=self.thresholds)
        return GateRow(
            inputs=inputs,
            logical={"and": out.and_bit.bit, "or": out.or_bit.bit},
            numeric=out.readout,
            a_values=out.a_values,
            trace=out.trace,
        )


class NetworkAndOr(_ParamsEvaluator):
    name = "network"

    def _evaluate(self, inputs):
        out = spmlg_network(*self.currents(inputs), and_level=self.thresholds.and_level)
        return GateRow(
            inputs=inputs,
            logical={"and": out.results["and"].bit, "or": out.results["or"].bit},
            numeric=out.results["selected_a"],
            a_values=out.activations[0],
        )


class SinglePerceptronAnd(_ParamsEvaluator):
    name = "single-perceptron"

    def _evaluate(self, inputs):
        out = and_single(*self.currents(inputs), bias=-self.thresholds.and_level)
        return GateRow(
            inputs=inputs,
            logical={"and": out.results["and"].bit},
            numeric=out.results["a"],
            a_values=(out.results["a"],),
        )


class MemristorFullAdder(_ParamsEvaluator):
    name = "memristor"
    _arity = 3

    def _evaluate(self, inputs):
        out = spmafa(*inputs, params=self.params, thresholds=self.thresholds)
        return GateRow(
            inputs=inputs,
            logical={"sum": out.sum, "carry": out.carry_bit.bit, "exists_one": out.exists_one.bit},
            numeric=out.readout,
            a_values=out.a_values,
            trace=out.trace,
            extras={"max_positive": out.max_positive},
        )


class ClosedFormFullAdder(_ParamsEvaluator):
    """Closed-form readout on effective a-values; logic decoded from the readout alone."""

    name = "closed-form"
    _arity = 3

    def _evaluate(self, inputs):
        a_values = evaluate_sequence(self.params, inputs).a_values
        readout = closed_form_readout(a_values)
        total = classify_sum(max(readout, 0.0), self.thresholds.sum_bands)
        return GateRow(
            inputs=inputs,
            logical={"sum": total, "carry": int(total >= 2), "exists_one": int(total >= 1)},
            numeric=readout,
            a_values=a_values,
        )


class NetworkFullAdder(_ParamsEvaluator):
    name = "network"
    _arity = 3

    def __init__(self, params=None, thresholds=None, hybrid: bool = True):
        super().__init__(params, thresholds)
        self.hybrid = hybrid

    def _evaluate(self, inputs):
        out = fa_network(*self.currents(inputs), hybrid=self.hybrid)
        return GateRow(
            inputs=inputs,
            logical={
                "sum": out.results["sum"],
                "carry": out.results["carry"].bit,
                "exists_one": out.results["exists_one"].bit,
            },
            numeric=out.results.get("value"),
            a_values=out.activations[0],
        )


class BinaryFullAdder(_ParamsEvaluator):
    name = "binary-fa"
    _arity = 3

    def _evaluate(self, inputs):
        sum_bit, carry_bit = binary_full_adder(*inputs, params=self.params)
        return GateRow(inputs=inputs, logical={"sum_bit": sum_bit.bit, "carry": carry_bit.bit})


class ReferenceTable(BaseGateEvaluator):
    """The printed measurements, looked up row by row."""

    name = "reference"

    def __init__(self, arity: int):
        self._arity = arity
        self.table = REFERENCE_TABLES[arity]

    @property
    def arity(self) -> int:
        return self._arity

    def _evaluate(self, inputs):
        row = self.table[inputs]
        return GateRow(
            inputs=inputs,
            logical=dict(row.logical),
            numeric=row.readout,
            a_values=row.a_values,
        )
