"""Memristor state machine: symbol sequence in, a-values, trace and readout out.

Rules applied per step:

* a fresh | arriving after k earlier |'s contributes ``x_one / (k + 1)``
  and is absorbed into the memory;
* a ○ contributes ``x_zero`` and leaves the memory untouched;
* the measured trace equals the effective values, except when an energetic
  memory sees a ○ that is later followed by a |. The ○ then releases part of
  the memory as a positive bounce-back spike and the next | loses a fraction
  of its magnitude to friction;
* the readout is computed from the effective values only.
"""

import logging
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import InvalidArgumentError
from ..models.params import GateParams
from ..models.records import EvalResult, MemristorState, StepRecord
from ..models.symbols import EventTag, LogicSymbol, count_ones

logger = logging.getLogger(__name__)


def zero_state(params: GateParams) -> MemristorState:
    """State of a device that has fully decayed between tests."""
    return MemristorState()


def diminishing_weight(n: int) -> Fraction:
    """Weight of the n-th | absorbed since zeroing, exactly 1/n.

    Returned as a ``Fraction`` so callers can divide instead of multiplying
    by a rounded reciprocal.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"diminishing_weight needs n >= 1, got {n!r}")
    return Fraction(1, n)


def readout_from_a_values(a_values: Sequence[float], max_inputs: int) -> float:
    """Bounce-back current at voltage-off, computed from effective a-values.

    Two-input gates read out half the accumulated sum with its sign flipped.
    Three-input gates add a third of the median magnitude and a sixth of the
    smallest magnitude before the flip.

    For (|,○,|) this gives 10.4667 u; the fixed-correction form, carried as
    ``EvalResult.corrected_readout``, gives 10.475 u on the same row.
    """
    values = np.asarray(a_values, dtype=float)
    inner = 0.5 * math.fsum(values)
    if max_inputs == 3:
        magnitudes = np.abs(values)
        inner += float(np.median(magnitudes)) / 3 + float(np.min(magnitudes)) / 6
    return -inner + 0.0


def correction_readout(
    params: GateParams,
    inputs: Sequence[LogicSymbol],
    a_values: Sequence[float],
) -> float:
    """Readout using the fixed corrections keyed to the | count.

    Tracks ``readout_from_a_values`` to within a few hundredths of a u on
    every row of a calibrated gate.
    """
    readout = -0.5 * math.fsum(a_values)
    if params.max_inputs == 3:
        ones = count_ones(inputs)
        if ones >= 2:
            readout -= params.c2
        if ones == 3:
            readout -= params.c3
    return readout + 0.0


def _validate_inputs(params: GateParams, inputs: Sequence[LogicSymbol]) -> None:
    if not 1 <= len(inputs) <= params.max_inputs:
        raise InvalidArgumentError(
            f"sequence length must be between 1 and {params.max_inputs}, got {len(inputs)}"
        )
    for symbol in inputs:
        if not isinstance(symbol, LogicSymbol):
            raise InvalidArgumentError(f"not a logic symbol: {symbol!r}")


def evaluate_sequence(params: GateParams, inputs: Sequence[LogicSymbol]) -> EvalResult:
    """Run one zeroed device over an ordered input sequence.

    Args:
        params: Gate calibration
        inputs: Symbols in arrival order, P first

    Returns:
        EvalResult with one StepRecord per input

    Raises:
        InvalidArgumentError: If the sequence is empty or longer than max_inputs
    """
    inputs = tuple(inputs)
    _validate_inputs(params, inputs)

    state = zero_state(params)
    records = []
    friction_pending = False

    for position, symbol in enumerate(inputs):
        state = state.advance()
        events = frozenset({EventTag.NONE})

        if symbol is LogicSymbol.ONE:
            weight = diminishing_weight(state.k + 1)
            a_eff = params.x_one * weight.numerator / weight.denominator
            i_measured = a_eff
            if friction_pending:
                i_measured = params.x_one * (1 - params.friction_fraction)
                events = frozenset({EventTag.FRICTION})
                friction_pending = False
            state = state.absorb(a_eff)
        else:
            a_eff = params.x_zero
            i_measured = a_eff
            later_one = LogicSymbol.ONE in inputs[position + 1:]
            if state.energetic and later_one and not friction_pending:
                # double zero-crossing with a charged memory
                i_measured = params.x_zero + params.release_fraction * abs(params.x_one)
                events = frozenset({EventTag.BOUNCE_BACK})
                friction_pending = True

        logger.debug(
            "step %d input=%s a_eff=%.4f i=%.4f m=%.4f k=%d",
            state.step_index, symbol.glyph, a_eff, i_measured, state.m, state.k,
        )
        records.append(
            StepRecord(
                step_index=state.step_index,
                input=symbol,
                a_eff=a_eff,
                i_measured=i_measured,
                events=events,
            )
        )

    a_values = [r.a_eff for r in records]
    return EvalResult(
        records=tuple(records),
        readout=readout_from_a_values(a_values, params.max_inputs),
        corrected_readout=correction_readout(params, inputs, a_values),
    )
