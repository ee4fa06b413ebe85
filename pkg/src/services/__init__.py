"""Business logic services."""

from .equivalence import (
    ComparisonReport,
    RowComparison,
    Verdict,
    compare_gate,
    enumerate_inputs,
    table_dump,
)

__all__ = [
    "ComparisonReport",
    "RowComparison",
    "Verdict",
    "compare_gate",
    "enumerate_inputs",
    "table_dump",
]
