"""Data models for symbols, parameters and evaluation records."""

from .symbols import LogicSymbol, EventTag
from .params import GateParams, Thresholds
from .records import (
    MemristorState,
    StepRecord,
    EvalResult,
    SpmlgOutput,
    SpmafaOutput,
)

__all__ = [
    "LogicSymbol",
    "EventTag",
    "GateParams",
    "Thresholds",
    "MemristorState",
    "StepRecord",
    "EvalResult",
    "SpmlgOutput",
    "SpmafaOutput",
]
