"""Calibration constants for the two memristor gates.

All currents are in the internal unit u; ``unit_scale`` converts u to amps
and is applied only at presentation time.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class GateParams(BaseModel):
    """Device calibration for one gate."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    unit_scale: float  # amps per u
    x_one: float  # current of | in a zeroed device
    x_zero: float  # current of ○ in a zeroed device
    friction_fraction: float = 1 / 6
    release_fraction: float = 0.5
    c2: float = 0.0
    c3: float = 0.0
    max_inputs: int  # 2 or 3

    @model_validator(mode="after")
    def _check_invariants(self) -> "GateParams":
        if not self.x_one < 0 < self.x_zero:
            raise ValueError("x_one must be negative and x_zero positive")
        if abs(self.x_zero) >= 0.01 * abs(self.x_one):
            raise ValueError("x_zero must stay below 1% of |x_one|")
        if self.c2 < 0 or self.c3 < 0:
            raise ValueError("corrections c2 and c3 must be non-negative")
        for name in ("friction_fraction", "release_fraction"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{name} must lie in (0, 1), got {value}")
        if self.max_inputs not in (2, 3):
            raise ValueError(f"max_inputs must be 2 or 3, got {self.max_inputs}")
        if self.unit_scale <= 0:
            raise ValueError("unit_scale must be positive")
        return self

    @classmethod
    def spmlg(cls) -> "GateParams":
        """AND/OR gate: u = 1e-7 A, | = -8u, ○ = +1.2e-10 A."""
        return cls(
            unit_scale=1e-7,
            x_one=-8.0,
            x_zero=0.0012,
            c2=0.0,
            c3=0.0,
            max_inputs=2,
        )

    @classmethod
    def spmafa(cls) -> "GateParams":
        """Arithmetical full adder: u = 1e-9 A, | = -18u, ○ = +0.05u."""
        x_one = -18.0
        return cls(
            unit_scale=1e-9,
            x_one=x_one,
            x_zero=0.05,
            c2=abs(x_one) / 6,
            c3=abs(x_one) / 18,
            max_inputs=3,
        )

    @classmethod
    def for_arity(cls, arity: int) -> "GateParams":
        return cls.spmlg() if arity == 2 else cls.spmafa()


class Thresholds(BaseModel):
    """Readout thresholds shared by both gates."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    and_level: float = 5.5
    or_level: float = -5.5
    detect_level: float = -5.0
    sum_bands: Tuple[float, float, float] = (4.0, 9.7, 11.5)

    @field_validator("sum_bands", mode="before")
    @classmethod
    def _split_bands(cls, value):
        # accepts "4,9.7,11.5" from the command line
        if isinstance(value, str):
            return tuple(part.strip() for part in value.split(",") if part.strip())
        return value

    @model_validator(mode="after")
    def _check_order(self) -> "Thresholds":
        low, mid, high = self.sum_bands
        if not low < mid < high:
            raise ValueError("sum_bands cut points must be strictly ascending")
        if not self.and_level > 0 > self.or_level:
            raise ValueError("and_level must be positive and or_level negative")
        return self


PARAM_FIELDS = frozenset(GateParams.model_fields)
THRESHOLD_FIELDS = frozenset(Thresholds.model_fields)


def to_amps(value_u: float, params: GateParams) -> float:
    """Convert a current in u to amps."""
    return value_u * params.unit_scale
