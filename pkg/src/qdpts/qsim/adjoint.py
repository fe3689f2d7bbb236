"""Reverse gradient sweep over a circuit: one backward pass yields the
vector-Jacobian product with respect to every trainable angle and every
input, including the chain rule through input transforms and, for
amplitude-encoded templates, through the input normalization.
"""

import numpy as np

from ..errors import ContractError
from .gates import ROTATIONS, gate_matrix, gate_matrix_deriv, transform_deriv
from .circuit import CircuitTemplate, resolve_angles, run_circuit
from . import kernels


def _unapply(amps, gate, angle):
    if gate.kind == "CNOT":
        kernels.apply_cnot(amps, gate.control, gate.target)
        return
    inv_angle = -angle if gate.kind in ROTATIONS else 0.0
    m00, m01, m10, m11 = gate_matrix(gate.kind, inv_angle)
    kernels.apply_1q(amps, gate.target, complex(m00), complex(m01), complex(m10), complex(m11))


def adjoint_vjp(tpl: CircuitTemplate, params, inputs, upstream, *, final_state=None):
    """VJP of ``upstream . <Z_measured>`` with respect to (params, inputs).

    ``final_state`` lets a caller that already ran the circuit skip the
    forward pass; it is copied, not consumed.
    """
    params = np.asarray(params, dtype=np.float64)
    inputs = np.asarray(inputs, dtype=np.float64)
    upstream = np.asarray(upstream, dtype=np.float64)
    if upstream.shape != (len(tpl.measured_wires),):
        raise ContractError(
            f"upstream must cover the {len(tpl.measured_wires)} measured wires, "
            f"got shape {upstream.shape}"
        )

    if final_state is None:
        phi = run_circuit(tpl, params, inputs).amps
    else:
        phi = final_state.amps.copy()
    angles = resolve_angles(tpl, params, inputs)

    # environment state: the weighted-Z observable applied to the final state
    diag = upstream @ tpl.sign_rows()
    lam = diag.astype(np.complex128) * phi

    d_params = np.zeros(tpl.n_trainable)
    d_inputs = np.zeros(tpl.n_inputs)

    for gate, angle in zip(reversed(tpl.gates), reversed(angles)):
        _unapply(phi, gate, angle)
        if gate.kind in ROTATIONS and gate.const is None:
            d00, d01, d10, d11 = gate_matrix_deriv(gate.kind, angle)
            g = kernels.deriv_overlap(
                lam, phi, gate.target, complex(d00), complex(d01), complex(d10), complex(d11)
            )
            if gate.param is not None:
                d_params[gate.param] += g
            else:
                x = float(inputs[gate.input])
                d_inputs[gate.input] += g * transform_deriv(gate.transform, x)
        _unapply(lam, gate, angle)

    if tpl.amplitude_encoding is not None:
        # lam now holds U^dag O U |psi_0>; for real initial amplitudes the
        # state-space gradient is its doubled real part, pushed through the
        # normalization Jacobian (I - xhat xhat^T) / ||x||.
        g_amp = 2.0 * lam.real[: tpl.n_inputs]
        nrm = float(np.linalg.norm(inputs))
        xhat = inputs / nrm
        d_inputs += (g_amp - xhat * float(xhat @ g_amp)) / nrm

    return d_params, d_inputs
