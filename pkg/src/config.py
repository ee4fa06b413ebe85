"""Configuration loading: built-in presets < config file < command-line overrides."""

import logging
import os
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, ValidationError

from .errors import ConfigError
from .evaluators.registry import Gate, Implementation
from .models.params import PARAM_FIELDS, THRESHOLD_FIELDS, GateParams, Thresholds
from .models.symbols import LogicSymbol

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "SPIKEGATE_CONFIG"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class RunConfig(BaseModel):
    """Everything one command needs, already validated."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    gate: Gate
    implementation: Implementation = Implementation.MEMRISTOR
    output_format: OutputFormat = OutputFormat.JSON
    params: GateParams
    thresholds: Thresholds
    inputs: Optional[Tuple[LogicSymbol, ...]] = None


def resolve_config_path(path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """Explicit path, else the SPIKEGATE_CONFIG variable (``.env`` honoured)."""
    if path:
        return Path(path)
    load_dotenv()
    env_path = os.getenv(CONFIG_ENV_VAR)
    return Path(env_path) if env_path else None


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, object]:
    """Load the flat key-value config file, or {} when none is configured.

    Raises:
        ConfigError: If the file is missing, unparsable or not a flat mapping
    """
    config_path = resolve_config_path(path)
    if config_path is None:
        return {}
    if not config_path.exists():
        raise ConfigError(f"Config file not found: {config_path}")

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid config file {config_path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"Config file {config_path} must be a key-value mapping")
    logger.info("Loaded %d parameter(s) from %s", len(data), config_path)
    return data


def parse_overrides(pairs: Iterable[str]) -> Dict[str, str]:
    """Turn ``key=value`` strings into a dict."""
    overrides = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"Override must look like key=value, got {pair!r}")
        overrides[key.strip()] = value.strip()
    return overrides


def resolve_parameters(
    gate: Gate,
    file_values: Optional[Dict[str, object]] = None,
    overrides: Optional[Dict[str, object]] = None,
) -> Tuple[GateParams, Thresholds]:
    """Merge presets, file values and overrides, then validate.

    Raises:
        ConfigError: On unknown keys or values breaking a parameter invariant
    """
    merged = {**(file_values or {}), **(overrides or {})}
    unknown = sorted(set(merged) - PARAM_FIELDS - THRESHOLD_FIELDS)
    if unknown:
        raise ConfigError(f"Unknown parameter(s): {', '.join(unknown)}")

    preset = GateParams.for_arity(Gate(gate).arity)
    param_values = {k: v for k, v in merged.items() if k in PARAM_FIELDS}
    threshold_values = {k: v for k, v in merged.items() if k in THRESHOLD_FIELDS}
    try:
        params = GateParams.model_validate({**preset.model_dump(), **param_values})
        thresholds = Thresholds.model_validate({**Thresholds().model_dump(), **threshold_values})
    except ValidationError as e:
        raise ConfigError(f"Invalid parameters: {e}") from e

    if params.max_inputs != Gate(gate).arity:
        raise ConfigError(f"max_inputs={params.max_inputs} does not fit the {Gate(gate).value} gate")
    return params, thresholds


def build_run_config(
    gate: Gate,
    implementation: Implementation = Implementation.MEMRISTOR,
    output_format: OutputFormat = OutputFormat.JSON,
    config_path: Optional[Union[str, Path]] = None,
    overrides: Iterable[str] = (),
    inputs: Optional[str] = None,
) -> RunConfig:
    """Resolve a RunConfig from command-line level values."""
    params, thresholds = resolve_parameters(
        gate, load_config(config_path), parse_overrides(overrides)
    )
    symbols = None
    if inputs is not None:
        try:
            symbols = LogicSymbol.parse_sequence(inputs)
        except ValueError as e:
            raise ConfigError(str(e)) from e
    return RunConfig(
        gate=gate,
        implementation=implementation,
        output_format=output_format,
        params=params,
        thresholds=thresholds,
        inputs=symbols,
    )
