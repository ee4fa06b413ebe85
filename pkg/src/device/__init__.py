"""Discrete-time memristor device model."""

from .memristor import (
    zero_state,
    diminishing_weight,
    evaluate_sequence,
    readout_from_a_values,
    correction_readout,
)

__all__ = [
    "zero_state",
    "diminishing_weight",
    "evaluate_sequence",
    "readout_from_a_values",
    "correction_readout",
]
