"""Reference perceptron networks that mirror the memristor gates.

Network inputs are zeroed-device currents (in u), so the a-values inside the
networks can be set against the currents the device produces.
"""

from dataclasses import replace
from typing import Optional, Tuple

from ..models.params import GateParams
from ..models.symbols import LogicSymbol
from .perceptron import Activation, Network, NetworkOutput, Perceptron, Tap

ONE = LogicSymbol.ONE

# count detectors for -18u inputs: each | adds +3 to a, so biases sit halfway
# between consecutive counts
_DETECTOR_WEIGHT = -1 / 6
_DETECTOR_BIASES = (-1.5, -4.5, -7.5)
_VALUE_WEIGHTS = (9.0, 1.5, 2.0)


def build_and_single(bias: float = -5.5) -> Network:
    """One perceptron computing AND from two currents."""
    return Network(
        input_arity=2,
        layers=((Perceptron((-3 / 8, -3 / 8), bias=bias, name="AND"),),),
        taps=(Tap("a", 0, 0, "pre"), Tap("and", 0, 0, "post")),
        name="and-single",
    )


def build_spmlg_network() -> Network:
    """Three perceptrons: a symmetric sum and the two ordered sums."""
    return Network(
        input_arity=2,
        layers=((
            Perceptron((-3 / 8, -3 / 8), bias=-3.0, name="A"),
            Perceptron((-1 / 2, -1 / 4), bias=-3.0, name="B"),
            Perceptron((-1 / 4, -1 / 2), bias=-3.0, name="C"),
        ),),
        taps=(
            Tap("a_A", 0, 0, "pre"),
            Tap("a_B", 0, 1, "pre"),
            Tap("a_C", 0, 2, "pre"),
            Tap("B", 0, 1, "post"),
            Tap("C", 0, 2, "post"),
        ),
        name="spmlg-network",
    )


def _detector_layer() -> Tuple[Perceptron, ...]:
    return tuple(
        Perceptron((_DETECTOR_WEIGHT,) * 3, bias=bias, name=f"ge{count}")
        for count, bias in enumerate(_DETECTOR_BIASES, start=1)
    )


def build_fa_network(hybrid: bool = True) -> Network:
    """Thermometer-coded count detectors feeding the sum output.

    With ``hybrid`` the output is an unthresholded value unit reproducing the
    measured sum currents; otherwise three step units report the sum class.
    """
    if hybrid:
        output_layer = (
            Perceptron(_VALUE_WEIGHTS, activation=Activation.IDENTITY, name="value"),
        )
        value_taps = (Tap("value", 1, 0, "post"),)
    else:
        output_layer = tuple(
            Perceptron(tuple(1.0 if j == i else 0.0 for j in range(3)), bias=-0.5, name=f"sum_ge{i + 1}")
            for i in range(3)
        )
        value_taps = ()
    return Network(
        input_arity=3,
        layers=(_detector_layer(), output_layer),
        taps=(Tap("exists_one", 0, 0, "post"), Tap("carry", 0, 1, "post")) + value_taps,
        name="fa-network-hybrid" if hybrid else "fa-network",
    )


def build_binary_full_adder() -> Network:
    """Count detectors followed by a parity unit and a carry unit."""
    return Network(
        input_arity=3,
        layers=(
            _detector_layer(),
            (
                Perceptron((1.0, -1.0, 1.0), bias=-0.5, name="sum"),
                Perceptron((0.0, 1.0, 0.0), bias=-0.5, name="carry"),
            ),
        ),
        taps=(Tap("sum", 1, 0, "post"), Tap("carry", 1, 1, "post")),
        name="binary-full-adder",
    )


def and_single(p_current: float, q_current: float, bias: float = -5.5) -> NetworkOutput:
    """Single perceptron AND: right logic, wrong a-value on single-| rows."""
    return build_and_single(bias).evaluate((p_current, q_current))


def spmlg_network(p_current: float, q_current: float, and_level: float = 5.5) -> NetworkOutput:
    """Three-perceptron network reproducing every output of the AND/OR gate.

    The selected a-value is the larger ordered sum, which matches the device
    readout whatever order the | arrived in.
    """
    out = build_spmlg_network().evaluate((p_current, q_current))
    results = dict(out.results)
    results["and"] = LogicSymbol.from_bool(results["a_A"] > and_level)
    results["or"] = LogicSymbol.from_bool(results["B"] is ONE or results["C"] is ONE)
    results["selected_a"] = max(results["a_B"], results["a_C"])
    return replace(out, results=results)


def fa_network(
    p_current: float,
    q_current: float,
    r_current: float,
    hybrid: bool = True,
) -> NetworkOutput:
    """Full-adder network; the sum class is decoded from the detector code."""
    out = build_fa_network(hybrid).evaluate((p_current, q_current, r_current))
    results = dict(out.results)
    results["sum"] = sum(1 for spike in out.spikes[0] if spike is ONE)
    return replace(out, results=results)


def binary_full_adder(
    p: LogicSymbol,
    q: LogicSymbol,
    r: LogicSymbol,
    params: Optional[GateParams] = None,
) -> Tuple[LogicSymbol, LogicSymbol]:
    """Binary (sum bit, carry bit) of three symbols."""
    params = params or GateParams.spmafa()
    currents = [params.x_one if s is ONE else params.x_zero for s in (p, q, r)]
    out = build_binary_full_adder().evaluate(currents)
    return out.results["sum"], out.results["carry"]
