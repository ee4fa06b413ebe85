"""Render truth tables, traces and comparison reports as JSON, CSV or text.

Currents stay in u, rounded to 4 decimals; the unit scale in amps travels
alongside. JSON key order is fixed by construction so output is byte-stable.

CSV columns, in order:

* truth table: P, Q[, R], a_1..a_n, i_1..i_n (memristor only), readout,
  max_positive (full adder only), then the logical outputs
* trace: step_index, input, a_eff, i_measured, events
* compare: P, Q[, R], <output>_a, <output>_b per compared output,
  numeric_a, numeric_b, abs_delta, logical_match
"""

import json
from typing import List, Sequence

import pandas as pd

from ..config import OutputFormat, RunConfig
from ..evaluators.base import GateRow
from ..models.params import to_amps
from ..models.records import EvalResult
from ..services.equivalence import ComparisonReport

INPUT_NAMES = ("P", "Q", "R")
DECIMALS = 4


def round_u(value):
    """Round currents (and nested lists/dicts of them) to 4 decimals."""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, float):
        return round(value, DECIMALS) + 0.0
    if isinstance(value, (list, tuple)):
        return [round_u(v) for v in value]
    if isinstance(value, dict):
        return {k: round_u(v) for k, v in value.items()}
    return value


def _header(config: RunConfig) -> dict:
    return {
        "gate": config.gate.value,
        "implementation": config.implementation.value,
        "unit_scale_amps": config.params.unit_scale,
        "params": config.params.model_dump(),
        "thresholds": config.thresholds.model_dump(),
    }


def to_json(document: dict) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _comment_lines(document: dict) -> str:
    lines = []
    for key, value in document.items():
        lines.append(f"# {key}: {json.dumps(value, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


def _to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=f"%.{DECIMALS}f", lineterminator="\n")


def _to_text(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False, float_format=lambda v: f"{v:.{DECIMALS}f}") + "\n"


def _input_columns(inputs, text: bool) -> dict:
    return {
        INPUT_NAMES[i]: (s.glyph if text else s.bit)
        for i, s in enumerate(inputs)
    }


def _table_frame(rows: Sequence[GateRow], text: bool) -> pd.DataFrame:
    records = []
    for row in rows:
        record = _input_columns(row.inputs, text)
        for i, value in enumerate(row.a_values or (), start=1):
            record[f"a_{i}"] = value
        for i, value in enumerate(row.trace or (), start=1):
            record[f"i_{i}"] = value
        record["readout"] = row.numeric
        record.update(row.extras)
        for key, bit in row.logical.items():
            if text and key != "sum":
                record[key] = "|" if bit else "○"
            else:
                record[key] = bit
        records.append(record)
    return pd.DataFrame(records)


def render_truth_table(config: RunConfig, rows: List[GateRow]) -> str:
    header = _header(config)
    if config.output_format is OutputFormat.JSON:
        header["rows"] = [round_u(row.to_dict()) for row in rows]
        return to_json(header)
    if config.output_format is OutputFormat.CSV:
        return _comment_lines(header) + _to_csv(_table_frame(rows, text=False))
    return (
        f"{config.gate.value} / {config.implementation.value}  "
        f"(currents in u, 1 u = {config.params.unit_scale:g} A)\n"
        + _to_text(_table_frame(rows, text=True))
    )


def render_trace(config: RunConfig, result: EvalResult) -> str:
    header = _header(config)
    if config.output_format is OutputFormat.JSON:
        header.update(round_u(result.to_dict()))
        return to_json(header)

    text = config.output_format is OutputFormat.TEXT
    frame = pd.DataFrame([
        {
            "step_index": r.step_index,
            "input": r.input.glyph if text else r.input.bit,
            "a_eff": r.a_eff,
            "i_measured": r.i_measured,
            "events": "+".join(sorted(tag.value for tag in r.events)),
        }
        for r in result.records
    ])
    if not text:
        header["readout"] = round_u(result.readout)
        return _comment_lines(header) + _to_csv(frame)
    return (
        _to_text(frame)
        + f"readout: {result.readout:.{DECIMALS}f} u "
        f"({to_amps(result.readout, config.params):.3e} A)\n"
    )


def _display_delta(numeric_a, numeric_b):
    """Delta between the two numerics as printed, so the columns add up."""
    if numeric_a is None or numeric_b is None:
        return None
    return round_u(abs(round_u(numeric_a) - round_u(numeric_b)))


def _compare_frame(report: ComparisonReport, text: bool) -> pd.DataFrame:
    records = []
    for row in report.rows:
        record = _input_columns(row.inputs, text)
        for key in report.compared_outputs:
            record[f"{key}_a"] = row.logical_a[key]
            record[f"{key}_b"] = row.logical_b[key]
        record["numeric_a"] = row.numeric_a
        record["numeric_b"] = row.numeric_b
        record["abs_delta"] = _display_delta(row.numeric_a, row.numeric_b)
        record["logical_match"] = int(row.logical_match)
        records.append(record)
    return pd.DataFrame(records)


def render_comparison(config: RunConfig, report: ComparisonReport) -> str:
    header = _header(config)
    header.pop("implementation")
    document = round_u(report.to_dict())
    for row, raw in zip(document["rows"], report.rows):
        row["abs_delta"] = _display_delta(raw.numeric_a, raw.numeric_b)
    header.update(document)
    if config.output_format is OutputFormat.JSON:
        return to_json(header)
    if config.output_format is OutputFormat.CSV:
        header.pop("rows")
        return _comment_lines(header) + _to_csv(_compare_frame(report, text=False))
    return (
        f"{config.gate.value}: {report.implementation_a} vs {report.implementation_b} "
        f"(tolerance {report.tolerance:g} u)\n"
        + _to_text(_compare_frame(report, text=True))
        + f"verdict: {report.verdict.value}\n"
    )
