"""Standard perceptrons and layered networks of them.

A perceptron sums its weighted inputs into an a-value. A STEP unit fires a |
only when ``a + bias`` is strictly positive; an IDENTITY unit passes ``a``
through unthresholded. Inside a network, a STEP output feeds the next layer
as 1.0 or 0.0.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from ..errors import InvalidArgumentError
from ..models.symbols import LogicSymbol

logger = logging.getLogger(__name__)

UnitOutput = Union[LogicSymbol, float]


class Activation(str, Enum):
    STEP = "step"
    IDENTITY = "identity"


@dataclass(frozen=True)
class Perceptron:
    weights: Tuple[float, ...]
    bias: float = 0.0
    activation: Activation = Activation.STEP
    name: str = ""

    def __post_init__(self):
        if len(self.weights) == 0:
            raise InvalidArgumentError("a perceptron needs at least one weight")
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))


def perceptron_fire(p: Perceptron, inputs: Sequence[float]) -> Tuple[float, UnitOutput]:
    """Weighted sum and response of a single unit.

    Returns:
        (a, out) where out is a LogicSymbol for STEP units and a for IDENTITY

    Raises:
        InvalidArgumentError: If the number of inputs differs from the weights
    """
    if len(inputs) != len(p.weights):
        raise InvalidArgumentError(
            f"unit {p.name or '?'} expects {len(p.weights)} inputs, got {len(inputs)}"
        )
    a = float(np.dot(np.asarray(p.weights, dtype=float), np.asarray(inputs, dtype=float))) + 0.0
    if p.activation is Activation.IDENTITY:
        return a, a
    return a, LogicSymbol.from_bool(a + p.bias > 0)


def _as_signal(out: UnitOutput) -> float:
    if isinstance(out, LogicSymbol):
        return float(out.bit)
    return float(out)


@dataclass(frozen=True)
class Tap:
    """A named output: one unit's a-value ("pre") or response ("post")."""

    name: str
    layer: int
    unit: int
    stage: str = "post"


@dataclass(frozen=True)
class NetworkOutput:
    activations: Tuple[Tuple[float, ...], ...]
    spikes: Tuple[Tuple[UnitOutput, ...], ...]
    results: Dict[str, UnitOutput] = field(default_factory=dict)

    def to_dict(self) -> dict:
        def encode(value):
            return value.bit if isinstance(value, LogicSymbol) else value

        return {
            "activations": [list(layer) for layer in self.activations],
            "spikes": [[encode(v) for v in layer] for layer in self.spikes],
            "results": {name: encode(v) for name, v in self.results.items()},
        }


@dataclass(frozen=True)
class Network:
    """Feed-forward layers of perceptrons with named taps.

    Immutable once built; arities and taps are checked at construction.
    """

    input_arity: int
    layers: Tuple[Tuple[Perceptron, ...], ...]
    taps: Tuple[Tap, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(tuple(layer) for layer in self.layers))
        object.__setattr__(self, "taps", tuple(self.taps))
        if not self.layers:
            raise InvalidArgumentError("a network needs at least one layer")
        fan_in = self.input_arity
        for index, layer in enumerate(self.layers):
            if not layer:
                raise InvalidArgumentError(f"layer {index} is empty")
            for unit in layer:
                if len(unit.weights) != fan_in:
                    raise InvalidArgumentError(
                        f"unit {unit.name or '?'} in layer {index} has "
                        f"{len(unit.weights)} weights, layer fan-in is {fan_in}"
                    )
            fan_in = len(layer)
        for tap in self.taps:
            if tap.stage not in ("pre", "post"):
                raise InvalidArgumentError(f"tap {tap.name} has unknown stage {tap.stage!r}")
            if not 0 <= tap.layer < len(self.layers) or not 0 <= tap.unit < len(self.layers[tap.layer]):
                raise InvalidArgumentError(f"tap {tap.name} does not resolve to a unit")

    def evaluate(self, inputs: Sequence[float]) -> NetworkOutput:
        """Propagate input currents through every layer and collect taps."""
        if len(inputs) != self.input_arity:
            raise InvalidArgumentError(
                f"network {self.name or '?'} expects {self.input_arity} inputs, got {len(inputs)}"
            )
        activations: List[Tuple[float, ...]] = []
        spikes: List[Tuple[UnitOutput, ...]] = []
        signal = [float(x) for x in inputs]
        for layer in self.layers:
            fired = [perceptron_fire(unit, signal) for unit in layer]
            activations.append(tuple(a for a, _ in fired))
            spikes.append(tuple(out for _, out in fired))
            signal = [_as_signal(out) for _, out in fired]

        results: Dict[str, UnitOutput] = {}
        for tap in self.taps:
            source = activations if tap.stage == "pre" else spikes
            results[tap.name] = source[tap.layer][tap.unit]
        logger.debug("network %s a=%s", self.name, activations)
        return NetworkOutput(activations=tuple(activations), spikes=tuple(spikes), results=results)
