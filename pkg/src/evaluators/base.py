"""Abstract base class for gate evaluators."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from ..errors import InvalidArgumentError
from ..models.symbols import LogicSymbol


@dataclass(frozen=True)
class GateRow:
    """One truth-table row as produced by an evaluator."""

    inputs: Tuple[LogicSymbol, ...]
    logical: Dict[str, int]
    numeric: Optional[float] = None
    a_values: Optional[Tuple[float, ...]] = None
    trace: Optional[Tuple[float, ...]] = None
    extras: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        """Row record in the truth-table layout (numbers unrounded)."""
        row = {
            "inputs": [s.bit for s in self.inputs],
            "a_values": list(self.a_values) if self.a_values is not None else None,
            "trace": list(self.trace) if self.trace is not None else None,
            "readout": self.numeric,
        }
        row.update(self.extras)
        row.update(self.logical)
        return row


class BaseGateEvaluator(ABC):
    """Common interface for anything that maps a symbol tuple to gate outputs.

    This interface lets the equivalence harness and the command line treat
    the device model, the perceptron networks, the closed form and the
    printed tables alike.
    """

    name: str = "evaluator"

    @property
    @abstractmethod
    def arity(self) -> int:
        """Number of sequential inputs the gate takes."""

    @abstractmethod
    def _evaluate(self, inputs: Tuple[LogicSymbol, ...]) -> GateRow:
        """Evaluate one already validated input combination."""

    def evaluate(self, inputs: Sequence[LogicSymbol]) -> GateRow:
        """Evaluate one input combination.

        Raises:
            InvalidArgumentError: If the number of inputs differs from the arity
        """
        inputs = tuple(inputs)
        if len(inputs) != self.arity:
            raise InvalidArgumentError(
                f"{self.name} takes {self.arity} inputs, got {len(inputs)}"
            )
        return self._evaluate(inputs)

    def __call__(self, inputs: Sequence[LogicSymbol]) -> GateRow:
        return self.evaluate(inputs)
