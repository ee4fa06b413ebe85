"""Declarative network documents (YAML or JSON), schema version 1.

    version: 1
    name: spmlg-network
    inputs: 2
    layers:
      - - {name: A, weights: [-0.375, -0.375], bias: -3, activation: step}
    taps:
      - {name: a_A, layer: 0, unit: 0, stage: pre}
"""

from pathlib import Path
from typing import List, Literal, Union

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError

from ..errors import ConfigError, InvalidArgumentError
from .perceptron import Activation, Network, Perceptron, Tap


class UnitSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    name: str = ""
    weights: List[float]
    bias: float = 0.0
    activation: Activation = Activation.STEP


class TapSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    name: str
    layer: int
    unit: int
    stage: Literal["pre", "post"] = "post"


class NetworkDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    version: Literal[1] = 1
    name: str = ""
    inputs: int
    layers: List[List[UnitSpec]]
    taps: List[TapSpec] = []


def network_from_document(data: dict) -> Network:
    """Build a Network from a parsed document.

    Raises:
        ConfigError: If the document does not match the schema or the
            resulting network is inconsistent
    """
    try:
        doc = NetworkDocument.model_validate(data)
        return Network(
            input_arity=doc.inputs,
            layers=tuple(
                tuple(
                    Perceptron(tuple(u.weights), bias=u.bias, activation=u.activation, name=u.name)
                    for u in layer
                )
                for layer in doc.layers
            ),
            taps=tuple(Tap(t.name, t.layer, t.unit, t.stage) for t in doc.taps),
            name=doc.name,
        )
    except ValidationError as e:
        raise ConfigError(f"Invalid network document: {e}") from e
    except InvalidArgumentError as e:
        raise ConfigError(f"Inconsistent network document: {e}") from e


def network_to_document(network: Network) -> dict:
    """Serialize a Network into the version 1 document layout."""
    return NetworkDocument(
        name=network.name,
        inputs=network.input_arity,
        layers=[
            [
                UnitSpec(name=u.name, weights=list(u.weights), bias=u.bias, activation=u.activation)
                for u in layer
            ]
            for layer in network.layers
        ],
        taps=[TapSpec(name=t.name, layer=t.layer, unit=t.unit, stage=t.stage) for t in network.taps],
    ).model_dump(mode="json")


def load_network(path: Union[str, Path]) -> Network:
    """Read a network document from disk."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Network file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid network file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Network file {path} must contain a mapping")
    return network_from_document(data)
