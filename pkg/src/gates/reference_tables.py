"""Printed truth tables of the measured gates, used as a comparison target.

Values are in u exactly as printed; the full-adder a-values for {|,○,|}
are the measured trace, not the effective contributions.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from ..models.symbols import LogicSymbol

ONE = LogicSymbol.ONE
ZERO = LogicSymbol.ZERO


@dataclass(frozen=True)
class ReferenceRow:
    inputs: Tuple[LogicSymbol, ...]
    a_values: Tuple[float, ...]
    readout: float
    logical: Mapping[str, int]


def _and_or(p, q, a_values, readout) -> ReferenceRow:
    bits = (p.bit, q.bit)
    return ReferenceRow(
        inputs=(p, q),
        a_values=a_values,
        readout=readout,
        logical={"and": int(all(bits)), "or": int(any(bits))},
    )


def _adder(p, q, r, a_values, readout) -> ReferenceRow:
    ones = p.bit + q.bit + r.bit
    return ReferenceRow(
        inputs=(p, q, r),
        a_values=a_values,
        readout=readout,
        logical={"sum": ones, "carry": int(ones >= 2), "exists_one": int(ones >= 1)},
    )


AND_OR_TABLE: Dict[Tuple[LogicSymbol, ...], ReferenceRow] = {
    row.inputs: row
    for row in (
        _and_or(ONE, ONE, (-8.0, -4.0), 6.0),
        _and_or(ONE, ZERO, (-8.0, 0.0), 4.0),
        _and_or(ZERO, ONE, (0.0, -8.0), 4.0),
        _and_or(ZERO, ZERO, (0.0, 0.0), 0.0),
    )
}

FULL_ADDER_TABLE: Dict[Tuple[LogicSymbol, ...], ReferenceRow] = {
    row.inputs: row
    for row in (
        _adder(ONE, ONE, ONE, (-18.0, -9.0, -6.0), 12.5),
        _adder(ONE, ONE, ZERO, (-18.0, -9.0, 0.05), 10.5),
        _adder(ONE, ZERO, ONE, (-18.0, 9.05, -15.0), 10.47),
        _adder(ZERO, ONE, ONE, (0.05, -18.0, -9.0), 10.7),
        _adder(ONE, ZERO, ZERO, (-18.0, 0.05, 0.05), 8.9),
        _adder(ZERO, ONE, ZERO, (0.05, -18.0, 0.05), 8.9),
        _adder(ZERO, ZERO, ONE, (0.05, 0.05, -18.0), 8.9),
        _adder(ZERO, ZERO, ZERO, (0.05, 0.05, 0.05), -0.1),
    )
}

REFERENCE_TABLES = {2: AND_OR_TABLE, 3: FULL_ADDER_TABLE}
