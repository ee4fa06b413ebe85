"""Lookup of evaluators by gate and implementation name."""

from enum import Enum
from typing import Dict, Optional, Tuple

from ..errors import InvalidArgumentError
from ..models.params import GateParams, Thresholds
from .adapters import (
    BinaryFullAdder,
    ClosedFormFullAdder,
    MemristorAndOr,
    MemristorFullAdder,
    NetworkAndOr,
    NetworkFullAdder,
    ReferenceTable,
    SinglePerceptronAnd,
)
from .base import BaseGateEvaluator


class Gate(str, Enum):
    AND_OR = "and-or"
    FULL_ADDER = "full-adder"

    @property
    def arity(self) -> int:
        return 2 if self is Gate.AND_OR else 3


class Implementation(str, Enum):
    MEMRISTOR = "memristor"
    NETWORK = "network"
    SINGLE_PERCEPTRON = "single-perceptron"
    CLOSED_FORM = "closed-form"
    BINARY_FA = "binary-fa"
    REFERENCE = "reference"


_EVALUATORS: Dict[Tuple[Gate, Implementation], type] = {
    (Gate.AND_OR, Implementation.MEMRISTOR): MemristorAndOr,
    (Gate.AND_OR, Implementation.NETWORK): NetworkAndOr,
    (Gate.AND_OR, Implementation.SINGLE_PERCEPTRON): SinglePerceptronAnd,
    (Gate.FULL_ADDER, Implementation.MEMRISTOR): MemristorFullAdder,
    (Gate.FULL_ADDER, Implementation.NETWORK): NetworkFullAdder,
    (Gate.FULL_ADDER, Implementation.CLOSED_FORM): ClosedFormFullAdder,
    (Gate.FULL_ADDER, Implementation.BINARY_FA): BinaryFullAdder,
}


def supported_implementations(gate: Gate) -> Tuple[Implementation, ...]:
    found = tuple(impl for g, impl in _EVALUATORS if g is gate)
    return found + (Implementation.REFERENCE,)


def build_evaluator(
    gate: Gate,
    implementation: Implementation,
    params: Optional[GateParams] = None,
    thresholds: Optional[Thresholds] = None,
) -> BaseGateEvaluator:
    """Instantiate the evaluator for a gate/implementation pair.

    Raises:
        InvalidArgumentError: If the pair has no implementation or the params
            are calibrated for the other gate
    """
    gate = Gate(gate)
    implementation = Implementation(implementation)
    if implementation is Implementation.REFERENCE:
        return ReferenceTable(gate.arity)
    try:
        evaluator_cls = _EVALUATORS[(gate, implementation)]
    except KeyError:
        available = ", ".join(impl.value for impl in supported_implementations(gate))
        raise InvalidArgumentError(
            f"{implementation.value} is not available for the {gate.value} gate "
            f"(choose from: {available})"
        ) from None
    if params is not None and params.max_inputs != gate.arity:
        raise InvalidArgumentError(
            f"{gate.value} needs max_inputs={gate.arity}, params have {params.max_inputs}"
        )
    return evaluator_cls(params=params, thresholds=thresholds)
