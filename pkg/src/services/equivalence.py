"""Exhaustive truth-table comparison between two gate implementations.

Two implementations are logically equivalent when every shared logical
output agrees on every input row, and numerically equivalent when, in
addition, their primary continuous outputs agree within a tolerance.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..errors import InvalidArgumentError
from ..evaluators.base import BaseGateEvaluator, GateRow
from ..models.symbols import LogicSymbol

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 0.01
REFERENCE_TOLERANCE = 0.25  # printed full-adder rows disagree among themselves by ~0.23


class Verdict(str, Enum):
    NUMERIC_EQUIVALENT = "NUMERIC_EQUIVALENT"
    LOGICAL_EQUIVALENT = "LOGICAL_EQUIVALENT"
    MISMATCH = "MISMATCH"


@dataclass(frozen=True)
class RowComparison:
    inputs: Tuple[LogicSymbol, ...]
    logical_a: Dict[str, int]
    logical_b: Dict[str, int]
    numeric_a: Optional[float]
    numeric_b: Optional[float]
    abs_delta: Optional[float]
    logical_match: bool

    def to_dict(self) -> dict:
        return {
            "inputs": [s.bit for s in self.inputs],
            "logical_a": dict(self.logical_a),
            "logical_b": dict(self.logical_b),
            "numeric_a": self.numeric_a,
            "numeric_b": self.numeric_b,
            "abs_delta": self.abs_delta,
            "logical_match": self.logical_match,
        }


@dataclass(frozen=True)
class ComparisonReport:
    implementation_a: str
    implementation_b: str
    arity: int
    tolerance: float
    compared_outputs: Tuple[str, ...]
    rows: Tuple[RowComparison, ...]
    verdict: Verdict

    @property
    def deltas(self) -> Tuple[Optional[float], ...]:
        return tuple(row.abs_delta for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "a": self.implementation_a,
            "b": self.implementation_b,
            "arity": self.arity,
            "tolerance": self.tolerance,
            "compared_outputs": list(self.compared_outputs),
            "verdict": self.verdict.value,
            "rows": [row.to_dict() for row in self.rows],
        }


def enumerate_inputs(arity: int) -> List[Tuple[LogicSymbol, ...]]:
    """Every input combination, | as the high bit: all-| first, all-○ last."""
    if arity not in (2, 3):
        raise InvalidArgumentError(f"arity must be 2 or 3, got {arity}")
    return list(itertools.product((LogicSymbol.ONE, LogicSymbol.ZERO), repeat=arity))


def table_dump(impl: BaseGateEvaluator, arity: int) -> List[GateRow]:
    """Evaluate an implementation on every row, in table order."""
    if impl.arity != arity:
        raise InvalidArgumentError(f"{impl.name} takes {impl.arity} inputs, not {arity}")
    return [impl.evaluate(inputs) for inputs in enumerate_inputs(arity)]


def _shared_outputs(row_a: GateRow, row_b: GateRow) -> Tuple[str, ...]:
    return tuple(key for key in row_a.logical if key in row_b.logical)


def _verdict(rows: List[RowComparison], tolerance: float) -> Verdict:
    if not all(row.logical_match for row in rows):
        return Verdict.MISMATCH
    deltas = [row.abs_delta for row in rows if row.abs_delta is not None]
    if deltas and all(delta <= tolerance for delta in deltas):
        return Verdict.NUMERIC_EQUIVALENT
    return Verdict.LOGICAL_EQUIVALENT


def compare_gate(
    impl_a: BaseGateEvaluator,
    impl_b: BaseGateEvaluator,
    arity: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ComparisonReport:
    """Compare two implementations over the full truth table.

    Logical outputs are compared on the output names both implementations
    report; the numeric key is each implementation's primary continuous
    output. Without any numeric pair the best verdict is LOGICAL_EQUIVALENT.

    Raises:
        InvalidArgumentError: If the arities differ or no logical output is shared
    """
    if impl_a.arity != arity or impl_b.arity != arity:
        raise InvalidArgumentError(
            f"cannot compare {impl_a.name} ({impl_a.arity} inputs) with "
            f"{impl_b.name} ({impl_b.arity} inputs) at arity {arity}"
        )
    if tolerance < 0:
        raise InvalidArgumentError("tolerance must be non-negative")

    rows: List[RowComparison] = []
    shared: Tuple[str, ...] = ()
    for inputs in enumerate_inputs(arity):
        row_a = impl_a.evaluate(inputs)
        row_b = impl_b.evaluate(inputs)
        shared = _shared_outputs(row_a, row_b)
        if not shared:
            raise InvalidArgumentError(
                f"{impl_a.name} and {impl_b.name} share no logical outputs"
            )
        delta = None
        if row_a.numeric is not None and row_b.numeric is not None:
            delta = abs(row_a.numeric - row_b.numeric)
        rows.append(
            RowComparison(
                inputs=inputs,
                logical_a=dict(row_a.logical),
                logical_b=dict(row_b.logical),
                numeric_a=row_a.numeric,
                numeric_b=row_b.numeric,
                abs_delta=delta,
                logical_match=all(row_a.logical[k] == row_b.logical[k] for k in shared),
            )
        )

    verdict = _verdict(rows, tolerance)
    logger.info("compare %s vs %s: %s", impl_a.name, impl_b.name, verdict.value)
    return ComparisonReport(
        implementation_a=impl_a.name,
        implementation_b=impl_b.name,
        arity=arity,
        tolerance=tolerance,
        compared_outputs=shared,
        rows=tuple(rows),
        verdict=verdict,
    )
