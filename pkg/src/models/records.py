"""Records produced by evaluating a gate on a symbol sequence."""

from dataclasses import dataclass, field, replace
from typing import FrozenSet, Tuple

from .symbols import EventTag, LogicSymbol


@dataclass(frozen=True)
class MemristorState:
    """Short-term memory of the device between two steps."""

    m: float = 0.0  # signed sum of effective | contributions, in u
    k: int = 0  # | inputs absorbed since last zeroing
    step_index: int = 0

    @property
    def energetic(self) -> bool:
        """True when the memory holds at least one |."""
        return self.k >= 1

    def absorb(self, a_eff: float) -> "MemristorState":
        return replace(self, m=self.m + a_eff, k=self.k + 1)

    def advance(self) -> "MemristorState":
        return replace(self, step_index=self.step_index + 1)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "step_index": self.step_index,
            "energetic": self.energetic,
        }


@dataclass(frozen=True)
class StepRecord:
    """One time-step of an evaluation."""

    step_index: int  # 1-based, t_1 is the first input
    input: LogicSymbol
    a_eff: float  # contribution used by the readout
    i_measured: float  # current seen on the trace
    events: FrozenSet[EventTag] = field(default_factory=lambda: frozenset({EventTag.NONE}))

    def to_dict(self) -> dict:
        return {
            "step_index": self.step_index,
            "input": self.input.bit,
            "a_eff": self.a_eff,
            "i_measured": self.i_measured,
            "events": sorted(tag.value for tag in self.events),
        }


@dataclass(frozen=True)
class EvalResult:
    """Per-step records plus the readout at voltage-off."""

    records: Tuple[StepRecord, ...]
    readout: float
    corrected_readout: float  # correction form, kept for comparison

    @property
    def inputs(self) -> Tuple[LogicSymbol, ...]:
        return tuple(r.input for r in self.records)

    @property
    def a_values(self) -> Tuple[float, ...]:
        return tuple(r.a_eff for r in self.records)

    @property
    def trace(self) -> Tuple[float, ...]:
        return tuple(r.i_measured for r in self.records)

    def to_dict(self) -> dict:
        return {
            "inputs": [s.bit for s in self.inputs],
            "steps": [r.to_dict() for r in self.records],
            "a_values": list(self.a_values),
            "readout": self.readout,
            "corrected_readout": self.corrected_readout,
        }


@dataclass(frozen=True)
class SpmlgOutput:
    """AND/OR gate result; AND reads the bounce-back, OR the negative spikes."""

    and_bit: LogicSymbol
    or_bit: LogicSymbol
    readout: float
    a_values: Tuple[float, float]
    trace: Tuple[float, float]

    def to_dict(self) -> dict:
        return {
            "a_values": list(self.a_values),
            "trace": list(self.trace),
            "readout": self.readout,
            "and": self.and_bit.bit,
            "or": self.or_bit.bit,
        }


@dataclass(frozen=True)
class SpmafaOutput:
    """Arithmetical full adder result."""

    sum: int
    carry_bit: LogicSymbol
    exists_one: LogicSymbol
    readout: float
    a_values: Tuple[float, float, float]
    trace: Tuple[float, float, float]
    max_positive: float

    def to_dict(self) -> dict:
        return {
            "a_values": list(self.a_values),
            "trace": list(self.trace),
            "readout": self.readout,
            "max_positive": self.max_positive,
            "sum": self.sum,
            "carry": self.carry_bit.bit,
            "exists_one": self.exists_one.bit,
        }
