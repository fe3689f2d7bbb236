"""Two-point shift-rule gradients: an independent oracle for the reverse sweep."""

import math

import numpy as np

from ..errors import UnsupportedGateError
from .circuit import CircuitTemplate, expect_z, run_circuit
from .gates import ROTATIONS

_SHIFT = 0.5 * math.pi


def param_shift_grad(tpl: CircuitTemplate, params, inputs, wire: int) -> np.ndarray:
    """d<Z_wire>/d(trainable slots) via two evaluations per bound gate.

    Valid for Pauli rotations only; slots bound to several gates sum the
    per-gate shift contributions.
    """
    params = np.asarray(params, dtype=np.float64)
    inputs = np.asarray(inputs, dtype=np.float64)
    grad = np.zeros(tpl.n_trainable)
    for gi, gate in enumerate(tpl.gates):
        if gate.param is None:
            continue
        if gate.kind not in ROTATIONS:
            raise UnsupportedGateError(f"shift rule needs a rotation, got {gate.kind}")
        plus = expect_z(run_circuit(tpl, params, inputs, angle_shifts={gi: +_SHIFT}), [wire])[0]
        minus = expect_z(run_circuit(tpl, params, inputs, angle_shifts={gi: -_SHIFT}), [wire])[0]
        grad[gate.param] += 0.5 * (plus - minus)
    return grad
