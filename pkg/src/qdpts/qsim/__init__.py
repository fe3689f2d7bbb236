"""Exact statevector simulation with two independent differentiation paths."""

from .circuit import (
    CircuitTemplate,
    EncodingSpec,
    Statevector,
    apply_gate,
    encode,
    expect_z,
    measure_template,
    run_circuit,
    zero_state,
)
from .gates import GateOp
from .adjoint import adjoint_vjp
from .shift import param_shift_grad
from .kernels import BACKEND
from . import templates

__all__ = [
    "BACKEND",
    "CircuitTemplate",
    "EncodingSpec",
    "GateOp",
    "Statevector",
    "adjoint_vjp",
    "apply_gate",
    "encode",
    "expect_z",
    "measure_template",
    "param_shift_grad",
    "run_circuit",
    "templates",
    "zero_state",
]
