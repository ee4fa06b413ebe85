"""Gate evaluators: one interface over every gate implementation."""

from .base import BaseGateEvaluator, GateRow
from .registry import Gate, Implementation, build_evaluator, supported_implementations

__all__ = [
    "BaseGateEvaluator",
    "GateRow",
    "Gate",
    "Implementation",
    "build_evaluator",
    "supported_implementations",
]
