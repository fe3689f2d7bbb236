"""Builders for the three circuit families used by the forecasting models.

Layer convention (frozen; the dense-simulation tests pin it): within each
trainable block the entangler comes first, then the rotation column(s).
Trainable slots are numbered block-major, then column, then wire.
"""

from .circuit import CircuitTemplate, EncodingSpec
from .gates import GateOp


def _ring_cnots(n: int) -> list:
    if n < 2:
        return []
    gates = [GateOp("CNOT", target=i + 1, control=i) for i in range(n - 1)]
    gates.append(GateOp("CNOT", target=0, control=n - 1))
    return gates


def _brick_cnots(n: int) -> list:
    gates = [GateOp("CNOT", target=i + 1, control=i) for i in range(0, n - 1, 2)]
    gates += [GateOp("CNOT", target=i + 1, control=i) for i in range(1, n - 1, 2)]
    return gates


def qasa_vqc(n_qubits: int = 9, n_layers: int = 2, n_inputs: int = 16) -> CircuitTemplate:
    """Amplitude-encoded ansatz: per layer a CNOT ring then one RY per wire.

    All wires are measured; the input vector (zero-padded to 2^n) prepares
    the initial state.
    """
    gates = []
    slot = 0
    for _ in range(n_layers):
        gates += _ring_cnots(n_qubits)
        for i in range(n_qubits):
            gates.append(GateOp("RY", target=i, param=slot))
            slot += 1
    return CircuitTemplate(
        n_qubits=n_qubits,
        gates=gates,
        measured_wires=list(range(n_qubits)),
        n_trainable=slot,
        n_inputs=n_inputs,
        amplitude_encoding=EncodingSpec("amplitude", n_qubits),
    )


def qrwkv_vqc(n_qubits: int = 4, n_layers: int = 2) -> CircuitTemplate:
    """RX-angle encoded ansatz: per layer a CNOT ring, an RZ column, an RY column."""
    gates = [GateOp("RX", target=i, input=i) for i in range(n_qubits)]
    slot = 0
    for _ in range(n_layers):
        gates += _ring_cnots(n_qubits)
        for i in range(n_qubits):
            gates.append(GateOp("RZ", target=i, param=slot))
            slot += 1
        for i in range(n_qubits):
            gates.append(GateOp("RY", target=i, param=slot))
            slot += 1
    return CircuitTemplate(
        n_qubits=n_qubits,
        gates=gates,
        measured_wires=list(range(n_qubits)),
        n_trainable=slot,
        n_inputs=n_qubits,
    )


def qlstm_qnn(n_qubits: int = 11, n_blocks: int = 5, n_measured: int = 4) -> CircuitTemplate:
    """Gate network for the quantum LSTM cell.

    Per wire: H, RY(arctan x), RZ(arctan x^2); then ``n_blocks`` repeats of a
    brick CNOT pattern followed by one trainable RY per wire. The first
    ``n_measured`` wires are read out.
    """
    gates = []
    for i in range(n_qubits):
        gates.append(GateOp("H", target=i))
        gates.append(GateOp("RY", target=i, input=i, transform="arctan"))
        gates.append(GateOp("RZ", target=i, input=i, transform="arctan_sq"))
    slot = 0
    for _ in range(n_blocks):
        gates += _brick_cnots(n_qubits)
        for i in range(n_qubits):
            gates.append(GateOp("RY", target=i, param=slot))
            slot += 1
    return CircuitTemplate(
        n_qubits=n_qubits,
        gates=gates,
        measured_wires=list(range(min(n_measured, n_qubits))),
        n_trainable=slot,
        n_inputs=n_qubits,
    )
