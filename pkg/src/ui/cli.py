"""Command-line front end.

Exit codes: 0 success, 1 comparison mismatch (or unmet --expect),
2 invalid configuration or arguments.
"""

import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import List, Optional

import typer

from ..config import OutputFormat, RunConfig, build_run_config
from ..device.memristor import evaluate_sequence
from ..errors import SpikeGateError
from ..evaluators.registry import Gate, Implementation, build_evaluator
from ..perceptron.networks import (
    build_and_single,
    build_binary_full_adder,
    build_fa_network,
    build_spmlg_network,
)
from ..perceptron.document import load_network, network_to_document
from ..services.equivalence import (
    DEFAULT_TOLERANCE,
    REFERENCE_TOLERANCE,
    Verdict,
    compare_gate,
    table_dump,
)
from .formatters import render_comparison, render_trace, render_truth_table, round_u, to_json

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Simulate single-memristor spiking logic gates and their perceptron equivalents.",
    add_completion=False,
    no_args_is_help=True,
)

EXIT_MISMATCH = 1
EXIT_INVALID = 2


class Expectation(str, Enum):
    ANY = "any"
    NUMERIC = "numeric"
    LOGICAL = "logical"


class BuiltinNetwork(str, Enum):
    AND_SINGLE = "and-single"
    SPMLG = "spmlg"
    FA = "fa"
    FA_THRESHOLDED = "fa-thresholded"
    BINARY_FA = "binary-fa"


_BUILTINS = {
    BuiltinNetwork.AND_SINGLE: build_and_single,
    BuiltinNetwork.SPMLG: build_spmlg_network,
    BuiltinNetwork.FA: lambda: build_fa_network(hybrid=True),
    BuiltinNetwork.FA_THRESHOLDED: lambda: build_fa_network(hybrid=False),
    BuiltinNetwork.BINARY_FA: build_binary_full_adder,
}

GateOption = typer.Option(..., "--gate", "-g", help="Gate to evaluate.")
FormatOption = typer.Option(OutputFormat.JSON, "--format", "-f", help="Output format.")
ConfigOption = typer.Option(
    None, "--config", "-c", help="Flat YAML/JSON parameter file (default: $SPIKEGATE_CONFIG)."
)
SetOption = typer.Option([], "--set", "-s", help="Parameter override, key=value. Repeatable.")


def _fail(error: Exception) -> None:
    typer.echo(f"❌ {error}", err=True)
    raise typer.Exit(code=EXIT_INVALID)


def _emit(text: str) -> None:
    typer.echo(text, nl=False)


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr.")):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


@app.command("truth-table")
def truth_table(
    gate: Gate = GateOption,
    implementation: Implementation = typer.Option(
        Implementation.MEMRISTOR, "--impl", "-i", help="Implementation to tabulate."
    ),
    output_format: OutputFormat = FormatOption,
    config_path: Optional[Path] = ConfigOption,
    overrides: List[str] = SetOption,
):
    """Dump the full truth table of one implementation."""
    try:
        config = build_run_config(gate, implementation, output_format, config_path, overrides)
        evaluator = build_evaluator(gate, implementation, config.params, config.thresholds)
        rows = table_dump(evaluator, gate.arity)
    except SpikeGateError as e:
        _fail(e)
    _emit(render_truth_table(config, rows))


@app.command("trace")
def trace(
    gate: Gate = GateOption,
    inputs: str = typer.Option(..., "--inputs", help="Comma separated symbols, e.g. 1,0,1."),
    output_format: OutputFormat = FormatOption,
    config_path: Optional[Path] = ConfigOption,
    overrides: List[str] = SetOption,
):
    """Per-step currents of the memristor model, with event tags."""
    try:
        config = build_run_config(
            gate, Implementation.MEMRISTOR, output_format, config_path, overrides, inputs
        )
        if len(config.inputs) != gate.arity:
            raise SpikeGateError(
                f"{gate.value} takes {gate.arity} inputs, got {len(config.inputs)}"
            )
        result = evaluate_sequence(config.params, config.inputs)
    except SpikeGateError as e:
        _fail(e)
    _emit(render_trace(config, result))


def _default_tolerance(gate: Gate, impl_a: Implementation, impl_b: Implementation) -> float:
    against_table = Implementation.REFERENCE in (impl_a, impl_b)
    if against_table and gate is Gate.FULL_ADDER:
        return REFERENCE_TOLERANCE
    return DEFAULT_TOLERANCE


def _exit_code(verdict: Verdict, expect: Expectation) -> int:
    if verdict is Verdict.MISMATCH:
        return EXIT_MISMATCH
    if expect is Expectation.NUMERIC and verdict is not Verdict.NUMERIC_EQUIVALENT:
        return EXIT_MISMATCH
    if expect is Expectation.LOGICAL and verdict is not Verdict.LOGICAL_EQUIVALENT:
        return EXIT_MISMATCH
    return 0


@app.command("compare")
def compare(
    gate: Gate = GateOption,
    impl_a: Implementation = typer.Option(..., "--a", help="First implementation."),
    impl_b: Implementation = typer.Option(..., "--b", help="Second implementation."),
    tolerance: Optional[float] = typer.Option(None, "--tolerance", "-t", help="Numeric tolerance in u."),
    expect: Expectation = typer.Option(Expectation.ANY, "--expect", help="Verdict required for exit 0."),
    output_format: OutputFormat = FormatOption,
    config_path: Optional[Path] = ConfigOption,
    overrides: List[str] = SetOption,
):
    """Compare two implementations over every input combination."""
    try:
        config: RunConfig = build_run_config(gate, impl_a, output_format, config_path, overrides)
        evaluator_a = build_evaluator(gate, impl_a, config.params, config.thresholds)
        evaluator_b = build_evaluator(gate, impl_b, config.params, config.thresholds)
        if tolerance is None:
            tolerance = _default_tolerance(gate, impl_a, impl_b)
        report = compare_gate(evaluator_a, evaluator_b, gate.arity, tolerance)
    except SpikeGateError as e:
        _fail(e)
    _emit(render_comparison(config, report))
    raise typer.Exit(code=_exit_code(report.verdict, expect))


@app.command("network")
def network(
    document: Optional[Path] = typer.Option(None, "--file", help="Network document (YAML or JSON)."),
    builtin: Optional[BuiltinNetwork] = typer.Option(None, "--builtin", help="Reference network."),
    inputs: Optional[str] = typer.Option(
        None, "--inputs", help="Comma separated input currents in u. Omit to print the document."
    ),
):
    """Evaluate a perceptron network document, or export a reference one."""
    try:
        if (document is None) == (builtin is None):
            raise SpikeGateError("give exactly one of --file or --builtin")
        net = load_network(document) if document is not None else _BUILTINS[builtin]()
        if inputs is None:
            _emit(json.dumps(network_to_document(net), indent=2) + "\n")
            return
        try:
            currents = [float(x) for x in inputs.split(",")]
        except ValueError as e:
            raise SpikeGateError(f"inputs must be numbers: {e}") from e
        if not all(math.isfinite(x) for x in currents):
            raise SpikeGateError(f"inputs must be finite: {inputs}")
        out = net.evaluate(currents)
    except SpikeGateError as e:
        _fail(e)
    _emit(to_json({"network": net.name, "inputs": currents, **round_u(out.to_dict())}))
