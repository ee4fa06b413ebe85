"""AND/OR gate and arithmetical full adder built on the device model."""

import logging
from typing import Optional, Sequence

from ..device.memristor import evaluate_sequence, readout_from_a_values
from ..errors import InvalidArgumentError
from ..models.params import GateParams, Thresholds
from ..models.records import SpmafaOutput, SpmlgOutput
from ..models.symbols import LogicSymbol

logger = logging.getLogger(__name__)


def _require_arity(params: GateParams, arity: int, gate: str) -> None:
    if params.max_inputs != arity:
        raise InvalidArgumentError(
            f"{gate} needs params with max_inputs={arity}, got {params.max_inputs}"
        )


def spmlg(
    p: LogicSymbol,
    q: LogicSymbol,
    params: Optional[GateParams] = None,
    thresholds: Optional[Thresholds] = None,
) -> SpmlgOutput:
    """Evaluate the AND/OR gate on (P, Q).

    AND fires when the bounce-back readout is above ``and_level``; OR fires
    when any step current is below ``or_level``.
    """
    params = params or GateParams.spmlg()
    thresholds = thresholds or Thresholds()
    _require_arity(params, 2, "spmlg")

    result = evaluate_sequence(params, (p, q))
    and_bit = LogicSymbol.from_bool(result.readout > thresholds.and_level)
    or_bit = LogicSymbol.from_bool(any(i < thresholds.or_level for i in result.trace))
    return SpmlgOutput(
        and_bit=and_bit,
        or_bit=or_bit,
        readout=result.readout,
        a_values=result.a_values,
        trace=result.trace,
    )


def closed_form_readout(a_values: Sequence[float]) -> float:
    """Full-adder readout from three a-values, without running the device.

    Half the sum plus a third of the median magnitude plus a sixth of the
    minimum magnitude, sign-flipped so |-containing inputs read positive.
    """
    if len(a_values) != 3:
        raise InvalidArgumentError(f"closed form needs three a-values, got {len(a_values)}")
    return readout_from_a_values(a_values, max_inputs=3)


def classify_sum(max_positive: float, bands: Sequence[float] = (4.0, 9.7, 11.5)) -> int:
    """Map the largest positive current onto the arithmetic sum 0..3."""
    low, mid, high = bands
    if max_positive >= high:
        return 3
    if max_positive >= mid:
        return 2
    if max_positive >= low:
        return 1
    return 0


def spmafa(
    p: LogicSymbol,
    q: LogicSymbol,
    r: LogicSymbol,
    params: Optional[GateParams] = None,
    thresholds: Optional[Thresholds] = None,
) -> SpmafaOutput:
    """Evaluate the arithmetical full adder on (P, Q, R).

    The sum is read from the maximum positive current seen over the whole
    computation. Carry and ∃| count the |-driven negative spikes.
    """
    params = params or GateParams.spmafa()
    thresholds = thresholds or Thresholds()
    _require_arity(params, 3, "spmafa")

    result = evaluate_sequence(params, (p, q, r))
    max_positive = max(*result.trace, result.readout, 0.0)
    spikes = sum(1 for i in result.trace if i <= thresholds.detect_level)
    total = classify_sum(max_positive, thresholds.sum_bands)
    logger.debug("spmafa %s%s%s max=%.4f spikes=%d sum=%d",
                 p.glyph, q.glyph, r.glyph, max_positive, spikes, total)
    return SpmafaOutput(
        sum=total,
        carry_bit=LogicSymbol.from_bool(spikes >= 2),
        exists_one=LogicSymbol.from_bool(spikes >= 1),
        readout=result.readout,
        a_values=result.a_values,
        trace=result.trace,
        max_positive=max_positive,
    )
