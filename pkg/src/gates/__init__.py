"""Calibrated single-memristor gates."""

from .logic_gates import spmlg, spmafa, closed_form_readout, classify_sum
from .reference_tables import REFERENCE_TABLES, ReferenceRow

__all__ = [
    "spmlg",
    "spmafa",
    "closed_form_readout",
    "classify_sum",
    "REFERENCE_TABLES",
    "ReferenceRow",
]
