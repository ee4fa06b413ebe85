"""Time-invariant perceptrons and the reference networks."""

from .perceptron import (
    Activation,
    Perceptron,
    Tap,
    Network,
    NetworkOutput,
    perceptron_fire,
)
from .networks import (
    and_single,
    spmlg_network,
    fa_network,
    binary_full_adder,
    build_and_single,
    build_spmlg_network,
    build_fa_network,
    build_binary_full_adder,
)
from .document import load_network, network_to_document, network_from_document

__all__ = [
    "Activation",
    "Perceptron",
    "Tap",
    "Network",
    "NetworkOutput",
    "perceptron_fire",
    "and_single",
    "spmlg_network",
    "fa_network",
    "binary_full_adder",
    "build_and_single",
    "build_spmlg_network",
    "build_fa_network",
    "build_binary_full_adder",
    "load_network",
    "network_to_document",
    "network_from_document",
]
