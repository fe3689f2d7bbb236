"""Statevector simulation of small gate programs.

Conventions, frozen here and pinned by tests:

* little-endian basis ordering: wire ``i`` is bit ``i`` of the basis index;
* expectations are exact (no shot sampling);
* double precision throughout.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, ContractError, DegenerateInputError, NumericError
from .gates import GateOp, ROTATIONS, gate_matrix, transform_value
from . import kernels

MAX_QUBITS = 16
AMPLITUDE_NORM_FLOOR = 1e-8

ENCODINGS = ("amplitude", "qlstm-angle", "rx-angle")


@dataclass(frozen=True)
class EncodingSpec:
    kind: str
    n_qubits: int

    def __post_init__(self):
        if self.kind not in ENCODINGS:
            raise ConfigError(f"unknown encoding kind {self.kind!r}")
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ConfigError(f"encoding qubit count {self.n_qubits} out of range")


@dataclass
class Statevector:
    n_qubits: int
    amps: np.ndarray

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@dataclass
class CircuitTemplate:
    """Ordered gate program with parameter/input bindings and measured wires.

    ``amplitude_encoding`` set means the input vector prepares the initial
    state directly; otherwise the initial state is |0...0> and any data
    dependence lives in input-bound gates.
    """

    n_qubits: int
    gates: list
    measured_wires: list
    n_trainable: int
    n_inputs: int
    amplitude_encoding: EncodingSpec | None = None
    _sign_rows: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ConfigError(f"qubit count {self.n_qubits} out of range 1..{MAX_QUBITS}")
        seen_params, seen_inputs = set(), set()
        for g in self.gates:
            wires = (g.target,) if g.control is None else (g.target, g.control)
            for w in wires:
                if not 0 <= w < self.n_qubits:
                    raise ConfigError(f"gate wire {w} outside 0..{self.n_qubits - 1}")
            if g.param is not None:
                if not 0 <= g.param < self.n_trainable:
                    raise ConfigError(f"trainable slot {g.param} out of range")
                seen_params.add(g.param)
            if g.input is not None:
                if not 0 <= g.input < self.n_inputs:
                    raise ConfigError(f"input slot {g.input} out of range")
                seen_inputs.add(g.input)
        if self.amplitude_encoding is not None:
            if self.amplitude_encoding.kind != "amplitude":
                raise ConfigError("template-level encoding must be the amplitude kind")
            if self.amplitude_encoding.n_qubits != self.n_qubits:
                raise ConfigError("encoding qubit count must match the template")
            if self.n_inputs > (1 << self.n_qubits):
                raise ConfigError("amplitude encoding needs input dim <= 2^n")
            seen_inputs = set(range(self.n_inputs))  # inputs feed the initial state
        if seen_params != set(range(self.n_trainable)):
            raise ConfigError("every trainable slot must be referenced at least once")
        if seen_inputs != set(range(self.n_inputs)):
            raise ConfigError("every input slot must be referenced at least once")
        if len(set(self.measured_wires)) != len(self.measured_wires):
            raise ConfigError("duplicate measured wire")
        for w in self.measured_wires:
            if not 0 <= w < self.n_qubits:
                raise ConfigError(f"measured wire {w} out of range")

    def sign_rows(self) -> np.ndarray:
        """(n_measured, 2^n) matrix of Z eigenvalue signs per measured wire."""
        if self._sign_rows is None:
            idx = np.arange(1 << self.n_qubits)
            rows = [1.0 - 2.0 * ((idx >> w) & 1) for w in self.measured_wires]
            self._sign_rows = np.array(rows, dtype=np.float64)
        return self._sign_rows


def zero_state(n: int) -> Statevector:
    """|0...0> on n qubits."""
    if not 1 <= n <= MAX_QUBITS:
        raise ConfigError(f"qubit count {n} out of range 1..{MAX_QUBITS}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(n, amps)


def apply_gate(state: Statevector, gate: GateOp, angle: float | None = None) -> Statevector:
    """Return a new state with one gate applied; the input state is untouched."""
    out = Statevector(state.n_qubits, state.amps.copy())
    _apply_inplace(out.amps, gate, angle)
    return out


def _apply_inplace(amps: np.ndarray, gate: GateOp, angle: float | None):
    if gate.kind == "CNOT":
        kernels.apply_cnot(amps, gate.control, gate.target)
        return
    if gate.kind in ROTATIONS:
        if angle is None or not math.isfinite(angle):
            raise NumericError(f"non-finite or missing angle for {gate.kind}")
    m00, m01, m10, m11 = gate_matrix(gate.kind, angle if angle is not None else 0.0)
    kernels.apply_1q(amps, gate.target, complex(m00), complex(m01), complex(m10), complex(m11))


def encode(spec: EncodingSpec, x: np.ndarray) -> Statevector:
    """Prepare a state from a classical vector under the given encoding."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ContractError(f"encoding input must be a vector, got shape {x.shape}")
    n = spec.n_qubits
    if spec.kind == "amplitude":
        if x.size > (1 << n):
            raise ContractError(f"amplitude input dim {x.size} exceeds 2^{n}")
        nrm = float(np.linalg.norm(x))
        if nrm < AMPLITUDE_NORM_FLOOR:
            raise DegenerateInputError(
                f"amplitude encoding needs a non-degenerate vector (norm {nrm:.3e})"
            )
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[: x.size] = x / nrm
        return Statevector(n, amps)
    if x.size != n:
        raise ContractError(f"angle encoding needs dim == n_qubits ({x.size} != {n})")
    state = zero_state(n)
    if spec.kind == "qlstm-angle":
        for i in range(n):
            _apply_inplace(state.amps, GateOp("H", i), None)
            _apply_inplace(state.amps, GateOp("RY", i, const=0.0), math.atan(x[i]))
            _apply_inplace(state.amps, GateOp("RZ", i, const=0.0), math.atan(x[i] ** 2))
    else:  # rx-angle
        for i in range(n):
            _apply_inplace(state.amps, GateOp("RX", i, const=0.0), float(x[i]))
    return state


def resolve_angles(tpl: CircuitTemplate, params: np.ndarray, inputs: np.ndarray) -> list:
    """Angle per gate, in program order (None for H/CNOT)."""
    angles = []
    for g in tpl.gates:
        if g.kind not in ROTATIONS:
            angles.append(None)
        elif g.const is not None:
            angles.append(float(g.const))
        elif g.param is not None:
            angles.append(float(params[g.param]))
        else:
            angles.append(transform_value(g.transform, float(inputs[g.input])))
    return angles


def _check_arity(tpl: CircuitTemplate, params: np.ndarray, inputs: np.ndarray):
    if params.shape != (tpl.n_trainable,):
        raise ContractError(
            f"expected {tpl.n_trainable} trainable parameters, got shape {params.shape}"
        )
    if inputs.shape != (tpl.n_inputs,):
        raise ContractError(f"expected {tpl.n_inputs} inputs, got shape {inputs.shape}")


def initial_state(tpl: CircuitTemplate, inputs: np.ndarray) -> Statevector:
    if tpl.amplitude_encoding is not None:
        return encode(tpl.amplitude_encoding, inputs)
    return zero_state(tpl.n_qubits)


def run_circuit(tpl: CircuitTemplate, params, inputs, angle_shifts: dict | None = None) -> Statevector:
    """Apply the template's gates with bindings resolved.

    ``angle_shifts`` maps gate index -> additive angle offset; used by the
    two-point shift rule to move one gate occurrence at a time.
    """
    params = np.asarray(params, dtype=np.float64)
    inputs = np.asarray(inputs, dtype=np.float64)
    _check_arity(tpl, params, inputs)
    state = initial_state(tpl, inputs)
    angles = resolve_angles(tpl, params, inputs)
    if angle_shifts:
        for gi, delta in angle_shifts.items():
            angles[gi] = angles[gi] + delta
    for g, a in zip(tpl.gates, angles):
        _apply_inplace(state.amps, g, a)
    nrm = state.norm()
    if abs(nrm - 1.0) > 1e-10:
        raise NumericError(f"statevector norm drifted to {nrm!r}")
    return state


def expect_z(state: Statevector, wires) -> np.ndarray:
    """<Z_w> per requested wire: signed sum of basis probabilities."""
    probs = state.amps.real ** 2 + state.amps.imag ** 2
    idx = np.arange(probs.size)
    out = np.empty(len(wires), dtype=np.float64)
    for k, w in enumerate(wires):
        if not 0 <= w < state.n_qubits:
            raise ContractError(f"wire {w} out of range for {state.n_qubits} qubits")
        signs = 1.0 - 2.0 * ((idx >> w) & 1)
        out[k] = float(signs @ probs)
    return out


def measure_template(tpl: CircuitTemplate, state: Statevector) -> np.ndarray:
    """<Z> over the template's measured wires using the cached sign rows."""
    probs = state.amps.real ** 2 + state.amps.imag ** 2
    return tpl.sign_rows() @ probs
