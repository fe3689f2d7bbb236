"""Gate descriptions: kinds, angle bindings, unitaries and their derivatives."""

import math
from dataclasses import dataclass

from ..errors import ConfigError

ROTATIONS = ("RX", "RY", "RZ")
KINDS = ("H", "CNOT") + ROTATIONS
TRANSFORMS = ("identity", "arctan", "arctan_sq")

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class GateOp:
    """One gate in a circuit program.

    Rotations carry exactly one angle binding: a constant angle, a trainable
    slot, or an input slot with a scalar transform applied before use.
    H and CNOT carry none.
    """

    kind: str
    target: int
    control: int | None = None
    const: float | None = None
    param: int | None = None
    input: int | None = None
    transform: str = "identity"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown gate kind {self.kind!r}")
        if self.kind == "CNOT":
            if self.control is None or self.control == self.target:
                raise ConfigError("CNOT needs a control wire distinct from the target")
        elif self.control is not None:
            raise ConfigError(f"{self.kind} takes no control wire")
        n_bindings = sum(x is not None for x in (self.const, self.param, self.input))
        if self.kind in ROTATIONS:
            if n_bindings != 1:
                raise ConfigError(f"{self.kind} needs exactly one angle binding, got {n_bindings}")
        elif n_bindings:
            raise ConfigError(f"{self.kind} carries no angle binding")
        if self.transform not in TRANSFORMS:
            raise ConfigError(f"unknown input transform {self.transform!r}")
        if self.transform != "identity" and self.input is None:
            raise ConfigError("transforms apply to input bindings only")


def transform_value(transform: str, x: float) -> float:
    if transform == "identity":
        return x
    if transform == "arctan":
        return math.atan(x)
    return math.atan(x * x)


def transform_deriv(transform: str, x: float) -> float:
    if transform == "identity":
        return 1.0
    if transform == "arctan":
        return 1.0 / (1.0 + x * x)
    return 2.0 * x / (1.0 + x ** 4)


def gate_matrix(kind: str, angle: float):
    """2x2 unitary entries (m00, m01, m10, m11)."""
    if kind == "H":
        return (_INV_SQRT2, _INV_SQRT2, _INV_SQRT2, -_INV_SQRT2)
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle)
    if kind == "RY":
        return (c, -s, s, c)
    if kind == "RX":
        return (c, -1j * s, -1j * s, c)
    if kind == "RZ":
        return (complex(c, -s), 0.0, 0.0, complex(c, s))
    raise ConfigError(f"no one-wire matrix for {kind}")


def gate_matrix_deriv(kind: str, angle: float):
    """Entrywise derivative of the rotation unitary with respect to the angle."""
    c = 0.5 * math.cos(0.5 * angle)
    s = 0.5 * math.sin(0.5 * angle)
    if kind == "RY":
        return (-s, -c, c, -s)
    if kind == "RX":
        return (-s, -1j * c, -1j * c, -s)
    if kind == "RZ":
        return (complex(-s, -c), 0.0, 0.0, complex(-s, c))
    raise ConfigError(f"{kind} has no angle derivative")
